#pragma once

#include "partlab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace partlab {

/*
 * Truncated formal power series in q with exact integer coefficients:
 * coeffs[i] is the coefficient of q^i for 0 <= i <= order. Binary operations
 * require equal orders; callers truncate first.
 */
class series {
public:
    series() : coeffs_(1) {}
    explicit series(int order);
    series(int order, std::initializer_list<long> head);

    static series one(int order);
    static series monomial(int order, int exponent, long coefficient = 1);

    int order() const { return int(coeffs_.size()) - 1; }
    const integer& operator[](int i) const { return coeffs_[std::size_t(i)]; }
    integer& operator[](int i) { return coeffs_[std::size_t(i)]; }
    std::span<const integer> coefficients() const { return coeffs_; }

    // Coefficient of q^n; zero past the order would be a silent truncation,
    // so out-of-range n throws.
    const integer& coefficient(int n) const;

    series truncated(int new_order) const;
    bool is_zero() const;

    series& operator+=(const series& rhs);
    series& operator-=(const series& rhs);
    series& operator*=(const series& rhs);

    friend series operator+(series a, const series& b) { return a += b; }
    friend series operator-(series a, const series& b) { return a -= b; }
    friend series operator*(const series& a, const series& b);
    friend series operator-(series a);
    friend bool operator==(const series&, const series&) = default;

private:
    std::vector<integer> coeffs_;
};

series add(const series& a, const series& b);
series mul(const series& a, const series& b);
series negate(const series& a);

// Multiplicative inverse; the constant term must be +1 or -1.
series inverse(const series& a);

// a(q) -> a(q^k), truncated to `order`.
series dilate(const series& a, int k, int order);

// Product over i >= 0 with a + i*b <= order of (1 - q^(a+i*b)), i.e. (q^a; q^b)_inf.
series pochhammer(int offset, int step, int order);

// Sum over m >= 0 with c + m*d <= order of q^t / (1 - sign*q^t), t = c + m*d.
series lambert(int offset, int step, int sign, int order);

enum class index_filter { all, odd, even, alternating };

// Sum over n >= 1 (restricted by `filter`) of q^(lead*n) / (1 - q^(period*n)).
// `alternating` weights the n-th term by (-1)^(n+1).
series geometric_multiples(int lead, int period, index_filter filter, int order);

// (q;q)_inf from the pentagonal-number expansion.
series pentagonal_series(int order);

// (q;q)_inf^3 from the triangular-number expansion with weights (2j+1).
series cube_series(int order);

} // namespace partlab
