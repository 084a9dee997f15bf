#pragma once

#include "partlab/enumerate.hpp"
#include "partlab/family_id.hpp"
#include "partlab/integer.hpp"
#include "partlab/partition.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace partlab {

// Partition class the family is defined over (distinct parts, bounded
// multiplicities, or all partitions).
enum_kind base_kind(const family_id& f);

// Contribution of one partition of the base class: 0/1 for class counts,
// the per-partition count for statistics, -1/0/+1 for signed counts.
std::int64_t contribution(const family_id& f, const partition& p);

// Class membership: contribution nonzero and p in the base class.
bool belongs(const family_id& f, const partition& p);

integer count_enum(const family_id& f, int n, int max_n = default_max_n);

// Coefficient of q^n in the family's closed form.
integer count_series(const family_id& f, int n);

// d_e(n) from the pentagonal recurrence with the divisor correction at
// multiples of 4; d_e(m) = 0 for m <= 0. The table holds d_e(0..n).
std::vector<std::int64_t> recurrence_d_e_table(int n);
std::int64_t recurrence_d_e(int n);

// Sum over j >= 0 with j(j+1)/2 <= n of d_o(n - j(j+1)/2), reduced mod 2.
int d_o_parity_lhs(int n, const std::function<integer(int)>& d_o);
int d_o_parity_lhs(int n);

// Expected value of the parity sum: 0 for odd n, sigma0 of the odd part of n mod 2 otherwise.
int d_o_parity_rhs(int n);

} // namespace partlab
