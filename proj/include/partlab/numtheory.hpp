#pragma once

#include <cstdint>
#include <vector>

namespace partlab {

// Number of positive divisors; sigma0(0) is 0.
std::int64_t sigma0(std::int64_t n);

// 2-adic valuation; throws domain_error for n <= 0.
int v2(std::int64_t n);

struct pentagonal_term {
    std::int64_t j;
    std::int64_t exponent_plus;  // j(3j+1)/2
    std::int64_t exponent_minus; // j(3j-1)/2
    int sign;                    // (-1)^j
};

// Terms j >= 1 whose smaller exponent j(3j-1)/2 is <= limit.
std::vector<pentagonal_term> pentagonal_terms(std::int64_t limit);

struct ab_sets {
    std::vector<std::int64_t> a; // j with 2j(3j+1) = r mod 4 and 2j(3j+1) <= r
    std::vector<std::int64_t> b; // j with 2j(3j-1) = r mod 4 and 2j(3j-1) <= r
};

ab_sets sets_ab(std::int64_t r);

// Divisor-sum correction term of the d_e recurrence; n must be a positive multiple of 4.
std::int64_t gamma_term(std::int64_t n);

} // namespace partlab
