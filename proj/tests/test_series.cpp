#include "partlab/errors.hpp"
#include "partlab/gf.hpp"
#include "partlab/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace partlab;

namespace {

std::vector<long> head(const series& s, int upto)
{
    std::vector<long> out;
    for (int i = 0; i <= upto; ++i)
        out.push_back(s[i].get_si());
    return out;
}

series geometric(int order)
{
    series s(order);
    for (int i = 0; i <= order; ++i)
        s[i] = 1;
    return s;
}

} // namespace

TEST_CASE("arithmetic basics")
{
    series one_minus_q(10, {1, -1});
    CHECK(mul(one_minus_q, geometric(10)) == series::one(10));
    series s(6, {3, -1, 4, 1, -5});
    CHECK(add(s, negate(s)).is_zero());
    CHECK((s - s).is_zero());
    CHECK_THROWS_AS(series(3) + series(4), order_mismatch);
    CHECK_THROWS_AS(s.coefficient(7), resource_limit);
    CHECK(s.truncated(2) == series(2, {3, -1, 4}));
}

TEST_CASE("inverse")
{
    CHECK(inverse(series(12, {1, -1})) == geometric(12));
    CHECK(inverse(series::one(5)) == series::one(5));
    CHECK(head(inverse(pochhammer(1, 1, 8)), 8) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22});
    CHECK(inverse(series(4, {-1, 1})) == negate(geometric(4)));
    CHECK_THROWS_AS(inverse(series(4, {2, 1})), domain_error);
    auto e = pochhammer(1, 1, 60);
    CHECK(mul(e, inverse(e)) == series::one(60));
}

TEST_CASE("pochhammer and lambert expansions")
{
    CHECK(head(pochhammer(1, 1, 7), 7) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(pochhammer(4, 4, 8) == series(8, {1, 0, 0, 0, -1, 0, 0, 0, -1}));
    CHECK(head(lambert(1, 1, +1, 6), 6) == std::vector<long>{0, 1, 2, 2, 3, 2, 4});
    auto l4 = lambert(4, 4, +1, 8);
    CHECK(l4[4] == 1);
    CHECK(l4[8] == 2);
    CHECK(lambert(2, 2, -1, 4) == series::monomial(4, 2));

    auto big = lambert(4, 4, +1, 200);
    for (int m = 1; 4 * m <= 200; ++m)
        CHECK(big[4 * m] == oracle::divisors(m));
}

TEST_CASE("geometric_multiples filters")
{
    // sum_{n>=1} q^n / (1 - q^n) is the divisor-count series
    auto all = geometric_multiples(1, 1, index_filter::all, 30);
    CHECK(all == lambert(1, 1, +1, 30));
    auto odd = geometric_multiples(1, 1, index_filter::odd, 30);
    auto even = geometric_multiples(1, 1, index_filter::even, 30);
    CHECK(odd + even == all);
    auto alt = geometric_multiples(1, 1, index_filter::alternating, 30);
    CHECK(alt == odd - even);
}

TEST_CASE("dilate")
{
    series s(10, {1, 2, 3});
    auto d = dilate(s, 3, 9);
    CHECK(d == series(9, {1, 0, 0, 2, 0, 0, 3}));
    CHECK_THROWS_AS(dilate(series(2, {1, 1, 1}), 3, 9), order_mismatch);
}

TEST_CASE("Euler product identities to order 200")
{
    const int order = 200;
    auto e = pochhammer(1, 1, order);
    CHECK(e == pentagonal_series(order));
    CHECK(e * e * e == cube_series(order));
    CHECK(head(cube_series(6), 6) == std::vector<long>{1, -3, 0, 5, 0, 0, -7});

    auto p = inverse(e);
    auto ref = oracle::coin_counts(60, [](int) { return true; });
    for (int n = 0; n <= 60; ++n)
        CHECK(p[n] == ref[std::size_t(n)]);
    // p(200), a classical value well past 64-bit-safe products of the intermediates
    CHECK(to_string(p[200]) == "3972999029388");
}

TEST_CASE("weighted sum closed form")
{
    for (int p : {2, 3, 5})
        for (int n : {1, 2, 3}) {
            const int order = 100;
            auto direct = dilate(weighted_sum_direct(p, order), p * n, order);
            auto closed = dilate(weighted_sum_closed(p, order), p * n, order);
            CHECK(direct == closed);
        }
}

TEST_CASE("gf_family examples")
{
    CHECK(gf_family(make_family("d_e"), 8)[8] == 6);
    CHECK(gf_family(make_family("o_p", {{"p", 2}}), 4)[4] == 3);
    CHECK(gf_family(make_family("a_r", {{"p", 2}, {"r", 0}}), 3)[3] == 1);
    CHECK_THROWS_AS(gf_family(make_family("b"), 10), unsupported_family);
    CHECK_THROWS_AS(gf_family(make_family("d_k", {{"k", 3}}), 10), unsupported_family);
}

TEST_CASE("reduced a(n,p) form agrees with the ratio form")
{
    for (int p : {2, 3, 5, 7})
        CHECK(a_np_reduced_form(p, 120) == gf_family(make_family("a_np", {{"p", p}}), 120));
}
