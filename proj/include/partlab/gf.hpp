#pragma once

#include "partlab/family_id.hpp"
#include "partlab/series.hpp"

namespace partlab {

bool has_closed_form(const family_id& f);

// Generating function of a family, built from Pochhammer products, inverses
// and Lambert-type sums, truncated at `order`. Throws unsupported_family for
// families without a closed form.
series gf_family(const family_id& f, int order);

// sum_{k=1}^{p-1} k x^k divided by sum_{k=0}^{p-1} x^k, as a power series in x.
series weighted_ratio(int p, int order);

// Closed form (x(1 - x^p) - p(1 - x)x^p) / (1 - x)^2 of sum_{k=1}^{p-1} k x^k.
series weighted_sum_closed(int p, int order);

// sum_{k=1}^{p-1} k x^k built term by term.
series weighted_sum_direct(int p, int order);

// Right-hand generating function of the signed g-count identity:
// (q^k;q^k)/(q;q) * sum_{m>=0} q^(alpha+pm) / (1 + q^(alpha+pm)).
series g_signed_lambert_form(int alpha, int k, int p, int order);

// Reduced form of the a(n,p) generating function:
// (q^p;q^p)/(q;q) * (sum q^(pn)/(1-q^(pn)) - p sum q^(p^2 n)/(1-q^(p^2 n))).
series a_np_reduced_form(int p, int order);

} // namespace partlab
