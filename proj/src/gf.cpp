#include "partlab/gf.hpp"

#include "partlab/errors.hpp"

namespace partlab {

namespace {

using fk = family_kind;

// 1/(q;q)_inf
series euler_inverse(int order) { return inverse(pochhammer(1, 1, order)); }

// (-q;q)_inf written as 1/(q;q^2)_inf
series distinct_parts(int order) { return inverse(pochhammer(1, 2, order)); }

// (q^a;q^a)_inf / (q;q)_inf
series quotient(int a, int order) { return pochhammer(a, a, order) * euler_inverse(order); }

// 1 / prod over residues c != skip (mod m), c in 1..m, of (q^c; q^m)_inf:
// partitions into parts outside the residue class `skip`.
series avoiding_class(int m, int skip, int order)
{
    series prod = series::one(order);
    for (int c = 1; c <= m; ++c)
        if (c % m != skip % m)
            prod *= pochhammer(c, m, order);
    return inverse(prod);
}

// Herden-style a(n,p) series: (q^p;q^p)/(q;q) * sum_n R(q^(pn)), with
// R(x) = (x + 2x^2 + ... + (p-1)x^(p-1)) / (1 + x + ... + x^(p-1)).
series a_np_series(int p, int order)
{
    series inner(order);
    for (int n = 1; p * n <= order; ++n) {
        int step = p * n;
        series r = weighted_ratio(p, order / step);
        inner += dilate(r, step, order);
    }
    return quotient(p, order) * inner;
}

int heavy_offset(const family_params& q) { return q.r == 0 ? q.k * q.p : q.k * q.r; }

} // namespace

series weighted_sum_direct(int p, int order)
{
    series s(order);
    for (int k = 1; k <= p - 1 && k <= order; ++k)
        s[k] = k;
    return s;
}

series weighted_ratio(int p, int order)
{
    series den(order);
    for (int k = 0; k <= p - 1 && k <= order; ++k)
        den[k] = 1;
    return weighted_sum_direct(p, order) * inverse(den);
}

series weighted_sum_closed(int p, int order)
{
    // numerator x(1 - x^p) - p(1 - x)x^p = x - x^(p+1) - p x^p + p x^(p+1)
    series num(order);
    auto put = [&](int e, long c) {
        if (e <= order)
            num[e] += c;
    };
    put(1, 1);
    put(p + 1, -1);
    put(p, -p);
    put(p + 1, p);
    series one_minus = series::one(order);
    if (order >= 1)
        one_minus[1] = -1;
    series inv = inverse(one_minus);
    return num * inv * inv;
}

series g_signed_lambert_form(int alpha, int k, int p, int order)
{
    return quotient(k, order) * lambert(alpha, p, -1, order);
}

series a_np_reduced_form(int p, int order)
{
    series bracket = lambert(p, p, 1, order);
    series scaled = lambert(p * p, p * p, 1, order);
    for (int i = 0; i <= order; ++i)
        bracket[i] -= p * scaled[i];
    return quotient(p, order) * bracket;
}

bool has_closed_form(const family_id& f) { return info(f.kind).closed_form; }

series gf_family(const family_id& f, int order)
{
    validate(f);
    if (!has_closed_form(f))
        throw unsupported_family("family " + describe(f) + " has no closed-form generating function");
    const auto& q = f.params;
    const int N = order;
    switch (f.kind) {
    case fk::s:
        return euler_inverse(N);
    case fk::a:
        return distinct_parts(N) * lambert(2, 2, -1, N);
    case fk::a_r:
        return distinct_parts(N) * lambert(q.p - q.r, q.p, -1, N);
    case fk::c:
        return distinct_parts(N) * geometric_multiples(2, 2, index_filter::alternating, N);
    case fk::c_o:
        return distinct_parts(N) * geometric_multiples(2, 2, index_filter::odd, N);
    case fk::c_e:
        return distinct_parts(N) * geometric_multiples(2, 2, index_filter::even, N);
    case fk::g_r:
        return distinct_parts(N) * geometric_multiples(q.p - q.r, q.p, index_filter::alternating, N);
    case fk::g_r_odd:
        return distinct_parts(N) * geometric_multiples(q.p - q.r, q.p, index_filter::odd, N);
    case fk::g_r_even:
        return distinct_parts(N) * geometric_multiples(q.p - q.r, q.p, index_filter::even, N);
    case fk::b_prime:
        return quotient(2, N) * lambert(2, 2, 1, N);
    case fk::a_np:
        return a_np_series(q.p, N);
    case fk::o_p:
        return quotient(q.p, N) * lambert(q.p, q.p, 1, N);
    case fk::o_p_odd:
        return quotient(q.p, N) * lambert(q.p, 2 * q.p, 1, N);
    case fk::o_p_even:
        return quotient(q.p, N) * lambert(2 * q.p, 2 * q.p, 1, N);
    case fk::h: {
        // parts outside 0 (mod p) free, times the singleton class i (mod 2p)
        int lead = q.i == 0 ? 2 * q.p : q.p;
        return avoiding_class(q.p, 0, N) * lambert(lead, 2 * q.p, 1, N);
    }
    case fk::d_e:
        return quotient(4, N) * lambert(4, 4, 1, N);
    case fk::d_o:
        return pochhammer(2, 4, N) * euler_inverse(N) * lambert(2, 4, 1, N);
    case fk::f0:
        return avoiding_class(4, 0, N) * lambert(4, 4, 1, N);
    case fk::f2:
        return avoiding_class(4, 2, N) * lambert(2, 4, 1, N);
    case fk::d_pkr: {
        int c = heavy_offset(q);
        return pochhammer(c, q.p * q.k, N) * euler_inverse(N) * lambert(c, q.p * q.k, 1, N);
    }
    case fk::f_pkr: {
        int c = heavy_offset(q);
        return avoiding_class(q.p * q.k, c, N) * lambert(c, q.p * q.k, 1, N);
    }
    case fk::g_alpha:
        return quotient(q.k, N) * geometric_multiples(q.alpha, q.p, index_filter::alternating, N);
    case fk::g_alpha_odd:
        return quotient(q.k, N) * geometric_multiples(q.alpha, q.p, index_filter::odd, N);
    case fk::g_alpha_even:
        return quotient(q.k, N) * geometric_multiples(q.alpha, q.p, index_filter::even, N);
    case fk::glaisher_left:
        return quotient(q.t, N);
    case fk::glaisher_right:
        return avoiding_class(q.t, 0, N);
    default:
        break;
    }
    throw unsupported_family("family " + describe(f) + " has no closed-form generating function");
}

} // namespace partlab
