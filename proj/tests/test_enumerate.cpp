#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace partlab;

TEST_CASE("small enumerations")
{
    std::vector<std::string> four;
    for (const auto& p : generate(4, enum_kind::all()))
        four.push_back(p.str());
    CHECK(four == std::vector<std::string>{"4", "3,1", "2^2", "2,1^2", "1^4"});

    std::vector<partition> zero;
    for (const auto& p : generate(0, enum_kind::distinct()))
        zero.push_back(p);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    auto s = generate(3, enum_kind::distinct());
    CHECK(s.next()->str() == "3");
    CHECK(s.next()->str() == "2,1");
    CHECK(!s.next());
}

TEST_CASE("cap is enforced")
{
    CHECK_THROWS_AS(generate(81, enum_kind::all()), resource_limit);
    CHECK_THROWS_AS(generate(11, enum_kind::all(), 10), resource_limit);
    CHECK_NOTHROW(generate(10, enum_kind::all(), 10));
    CHECK_THROWS_AS(enum_kind::multiplicity_at_most(0), domain_error);
}

TEST_CASE("counting helpers")
{
    auto one_even_value = [](const partition& p) {
        int evens = 0;
        for (auto b : p.blocks())
            evens += b.part % 2 == 0;
        return evens == 1;
    };
    CHECK(count_where(3, enum_kind::all(), one_even_value) == 1);
    CHECK(count_where(5, enum_kind::all(), [](const partition&) { return true; }) == 7);
    CHECK(count_where(2, enum_kind::distinct(), [](const partition&) { return false; }) == 0);

    auto even_parts = [](const partition& p) {
        std::int64_t c = 0;
        for (auto b : p.blocks())
            if (b.part % 2 == 0)
                c += b.mult;
        return c;
    };
    CHECK(sum_statistic(2, enum_kind::distinct(), even_parts) == 1);
    CHECK(sum_statistic(3, enum_kind::distinct(), even_parts) == 1);
    CHECK(sum_statistic(1, enum_kind::distinct(), even_parts) == 0);
}

TEST_CASE("stream sizes match independent counts")
{
    const int n_max = 40;
    auto all = oracle::coin_counts(n_max, [](int) { return true; });
    auto distinct = oracle::distinct_counts(n_max);
    for (int n = 0; n <= n_max; ++n) {
        CHECK(count_where(n, enum_kind::all(), [](const partition&) { return true; }) == all[std::size_t(n)]);
        CHECK(count_where(n, enum_kind::distinct(), [](const partition&) { return true; }) ==
              distinct[std::size_t(n)]);
    }
    for (int t = 2; t <= 5; ++t) {
        auto no_multiple = oracle::coin_counts(n_max, [t](int j) { return j % t != 0; });
        for (int n = 0; n <= n_max; ++n)
            CHECK(count_where(n, enum_kind::multiplicity_at_most(part_t(t - 1)),
                              [](const partition&) { return true; }) == no_multiple[std::size_t(n)]);
    }
    CHECK(count_where(9, enum_kind::multiplicity_at_most(3), [](const partition&) { return true; }) ==
          oracle::count(9, [](const oracle::parts& p) {
              for (int x : p)
                  if (x % 4 == 0)
                      return false;
              return true;
          }));
}

TEST_CASE("streams contain no duplicates and respect the kind")
{
    for (int n = 0; n <= 25; ++n) {
        for (auto kind : {enum_kind::all(), enum_kind::distinct(), enum_kind::multiplicity_at_most(2)}) {
            std::set<std::string> seen;
            std::size_t total = 0;
            for (const auto& p : generate(n, kind)) {
                ++total;
                seen.insert(p.str());
                CHECK(p.weight() == std::uint64_t(n));
                for (auto b : p.blocks())
                    CHECK(b.mult <= kind.max_mult());
            }
            CHECK(seen.size() == total);
        }
    }
}

TEST_CASE("for_each_partition agrees with the stream")
{
    for (int n : {0, 7, 18}) {
        std::vector<partition> a, b;
        for (const auto& p : generate(n, enum_kind::multiplicity_at_most(3)))
            a.push_back(p);
        for_each_partition(n, enum_kind::multiplicity_at_most(3), [&](const partition& p) { b.push_back(p); });
        CHECK(a == b);
        for (std::size_t i = 1; i < a.size(); ++i)
            CHECK(a[i - 1] > a[i]);
    }
}
