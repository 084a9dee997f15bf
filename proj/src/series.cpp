#include "partlab/series.hpp"

#include "partlab/errors.hpp"

#include <string>

namespace partlab {

namespace {

void require_order(int order)
{
    if (order < 0)
        throw domain_error("series order must be nonnegative");
}

void require_same(const series& a, const series& b)
{
    if (a.order() != b.order())
        throw order_mismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
}

} // namespace

series::series(int order)
{
    require_order(order);
    coeffs_.resize(std::size_t(order) + 1);
}

series::series(int order, std::initializer_list<long> head)
    : series(order)
{
    int i = 0;
    for (long c : head) {
        if (i > order)
            break;
        coeffs_[std::size_t(i++)] = c;
    }
}

series series::one(int order)
{
    series s(order);
    s.coeffs_[0] = 1;
    return s;
}

series series::monomial(int order, int exponent, long coefficient)
{
    series s(order);
    if (exponent >= 0 && exponent <= order)
        s.coeffs_[std::size_t(exponent)] = coefficient;
    return s;
}

const integer& series::coefficient(int n) const
{
    if (n < 0 || n > order())
        throw resource_limit("coefficient index " + std::to_string(n) + " outside series order " +
                             std::to_string(order()));
    return coeffs_[std::size_t(n)];
}

series series::truncated(int new_order) const
{
    if (new_order > order())
        throw order_mismatch("cannot extend a truncated series from order " +
                             std::to_string(order()) + " to " + std::to_string(new_order));
    series s(new_order);
    for (int i = 0; i <= new_order; ++i)
        s.coeffs_[std::size_t(i)] = coeffs_[std::size_t(i)];
    return s;
}

bool series::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

series& series::operator+=(const series& rhs)
{
    require_same(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

series& series::operator-=(const series& rhs)
{
    require_same(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

series operator*(const series& a, const series& b)
{
    require_same(a, b);
    const int n = a.order();
    series out(n);
    for (int i = 0; i <= n; ++i) {
        const integer& ai = a.coeffs_[std::size_t(i)];
        if (sgn(ai) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            const integer& bj = b.coeffs_[std::size_t(j)];
            if (sgn(bj) != 0)
                out.coeffs_[std::size_t(i + j)] += ai * bj;
        }
    }
    return out;
}

series& series::operator*=(const series& rhs)
{
    *this = *this * rhs;
    return *this;
}

series operator-(series a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

series add(const series& a, const series& b) { return a + b; }
series mul(const series& a, const series& b) { return a * b; }
series negate(const series& a) { return -a; }

series inverse(const series& a)
{
    const integer& c0 = a[0];
    if (c0 != 1 && c0 != -1)
        throw domain_error("series inverse needs a unit constant term, got " + to_string(c0));
    const int n = a.order();
    series b(n);
    b[0] = c0;
    for (int i = 1; i <= n; ++i) {
        integer acc;
        for (int k = 1; k <= i; ++k) {
            if (sgn(a[k]) != 0)
                acc += a[k] * b[i - k];
        }
        // 1/c0 == c0 for a unit
        b[i] = -(c0 * acc);
    }
    return b;
}

series dilate(const series& a, int k, int order)
{
    if (k < 1)
        throw domain_error("dilation factor must be positive");
    // q^((order+1)k) would be needed but is unknown
    if (long(a.order() + 1) * k <= order)
        throw order_mismatch("dilated series would be silently truncated");
    series out(order);
    for (int i = 0; i <= a.order() && i * k <= order; ++i)
        out[i * k] = a[i];
    return out;
}

series pochhammer(int offset, int step, int order)
{
    if (offset < 1 || step < 1)
        throw domain_error("pochhammer needs offset >= 1 and step >= 1");
    series s = series::one(order);
    for (int e = offset; e <= order; e += step) {
        // multiply in place by (1 - q^e); walk downward so sources are unmodified
        for (int i = order; i >= e; --i)
            s[i] -= s[i - e];
    }
    return s;
}

series lambert(int offset, int step, int sign, int order)
{
    if (offset < 1 || step < 1)
        throw domain_error("lambert needs offset >= 1 and step >= 1");
    if (sign != 1 && sign != -1)
        throw domain_error("lambert sign must be +1 or -1");
    series s(order);
    for (int t = offset; t <= order; t += step) {
        // q^t / (1 - sign q^t) = sum_{e >= 1} sign^(e-1) q^(t e)
        long w = 1;
        for (int e = t; e <= order; e += t) {
            s[e] += w;
            w *= sign;
        }
    }
    return s;
}

series geometric_multiples(int lead, int period, index_filter filter, int order)
{
    if (lead < 1 || period < 1)
        throw domain_error("geometric_multiples needs lead >= 1 and period >= 1");
    series s(order);
    for (int n = 1; lead * n <= order; ++n) {
        long w = 1;
        switch (filter) {
        case index_filter::all:
            break;
        case index_filter::odd:
            if (n % 2 == 0)
                continue;
            break;
        case index_filter::even:
            if (n % 2 != 0)
                continue;
            break;
        case index_filter::alternating:
            w = n % 2 ? 1 : -1;
            break;
        }
        for (int e = lead * n; e <= order; e += period * n)
            s[e] += w;
    }
    return s;
}

series pentagonal_series(int order)
{
    series s = series::one(order);
    for (long j = 1;; ++j) {
        long minus = j * (3 * j - 1) / 2;
        long plus = j * (3 * j + 1) / 2;
        if (minus > order)
            break;
        long sign = j % 2 ? -1 : 1;
        s[int(minus)] += sign;
        if (plus <= order)
            s[int(plus)] += sign;
    }
    return s;
}

series cube_series(int order)
{
    series s(order);
    for (long j = 0; j * (j + 1) / 2 <= order; ++j) {
        long sign = j % 2 ? -1 : 1;
        s[int(j * (j + 1) / 2)] += sign * (2 * j + 1);
    }
    return s;
}

} // namespace partlab
