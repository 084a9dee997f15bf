#include "partlab/bijections.hpp"
#include "partlab/enumerate.hpp"
#include "partlab/errors.hpp"
#include "partlab/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace partlab;

namespace {

partition P(std::string_view s) { return parse_partition(s); }

const trace_step* find_step(const bijection_trace& tr, std::string_view label)
{
    for (const auto& s : tr.steps)
        if (s.label == label)
            return &s;
    return nullptr;
}

using map_fn = std::function<partition(const partition&)>;

void check_bijection(const family_id& domain, const family_id& codomain, const map_fn& fwd, const map_fn& inv,
                     int n_max)
{
    for (int n = 0; n <= n_max; ++n) {
        std::vector<partition> from, to;
        for_each_partition(n, enum_kind::all(), [&](const partition& p) {
            if (belongs(domain, p))
                from.push_back(p);
            if (belongs(codomain, p))
                to.push_back(p);
        });
        std::set<partition> images, preimages;
        for (const auto& p : from) {
            auto img = fwd(p);
            INFO(describe(domain), " n=", n, " ", p.str(), " -> ", img.str());
            CHECK(img.weight() == p.weight());
            CHECK(belongs(codomain, img));
            CHECK(inv(img) == p);
            images.insert(img);
        }
        for (const auto& q : to) {
            auto pre = inv(q);
            INFO(describe(codomain), " n=", n, " ", q.str(), " -> ", pre.str());
            CHECK(belongs(domain, pre));
            CHECK(fwd(pre) == q);
            preimages.insert(pre);
        }
        CHECK(images.size() == from.size());
        CHECK(images.size() == to.size());
        CHECK(preimages.size() == to.size());
    }
}

} // namespace

TEST_CASE("glaisher examples")
{
    CHECK(glaisher(2, P("4,2")) == P("1^6"));
    CHECK(glaisher(4, P("4")) == P("1^4"));
    CHECK(glaisher(3, P("5,4,2^2,1")) == P("5,4,2^2,1"));
    CHECK(glaisher_inv(2, P("1^6")) == P("4,2"));
    CHECK(glaisher_inv(4, P("1^9")) == P("4^2,1"));
    CHECK_THROWS_AS(glaisher(2, P("1^2")), domain_error);
    CHECK_THROWS_AS(glaisher_inv(2, P("2")), domain_error);
    CHECK(glaisher(2, P("1^2"), validation::unchecked) == P("1^2"));
}

TEST_CASE("genr examples")
{
    CHECK(genr_f_to_d(3, 4, 1, P("5,4")).output == P("5,1^4"));
    CHECK(genr_f_to_d(3, 4, 1, P("4,3,2")).output == P("3,2,1^4"));
    CHECK(genr_f_to_d(2, 2, 0, P("4")).output == P("2^2"));
    CHECK(genr_d_to_f(3, 4, 1, P("1^9")).output == P("4^2,1"));
    CHECK(genr_d_to_f(3, 4, 1, P("2,1^7")).output == P("4,2,1^3"));
    CHECK(genr_d_to_f(3, 4, 1, P("2^2,1^5")).output == P("4,2^2,1"));
    CHECK_THROWS_AS(genr_f_to_d(3, 4, 1, P("5,1")), domain_error);
    CHECK_THROWS_AS(genr_d_to_f(3, 4, 1, P("5,4")), domain_error);

    auto tr = genr_d_to_f(3, 4, 1, P("1^9"));
    CHECK(tr.steps.front().label == "input");
    CHECK(tr.steps.back().label == "output");
    CHECK(*tr.steps.back().value == tr.output);
}

TEST_CASE("dpk worked example")
{
    const auto input = P("13^10,10^5,7^30,6^2,4^5,1^11");
    auto tr = dpk_to_dp(3, 4, input);
    REQUIRE(input.weight() == 433);

    const auto* split = find_step(tr, "split j^m = j^(pkq) u j^i");
    REQUIRE(split);
    CHECK(*split->value == P("7^24"));
    CHECK(split->note == "j=7, m=30=12*2+6");
    CHECK(*find_step(tr, "j^(pkq) -> (pj)^(kq)")->value == P("21^8"));
    CHECK(*find_step(tr, "beta = p * phi_k^-1(lambda''/p)")->value == P("6^2"));

    // the leftover 7^6 stays in the image, which keeps the weight at 433
    CHECK(tr.output == P("21^8,13^10,10^5,7^6,6^2,4^5,1^11"));
    CHECK(tr.output.weight() == 433);
    CHECK(dp_to_dpk(3, 4, tr.output).output == input);

    CHECK(dpk_to_dp(2, 2, P("1^4")).output == P("2^2"));
    CHECK(dp_to_dpk(2, 2, P("2^2")).output == P("1^4"));
    CHECK_THROWS_AS(dpk_to_dp(3, 4, P("7^11")), domain_error);
}

TEST_CASE("dp_to_dpk beta step")
{
    auto tr = dp_to_dpk(3, 4, P("21^8,13^10,10^5,7^6,6^2,4^5,1^11"));
    CHECK(*find_step(tr, "beta")->value == P("6^2"));
    CHECK(*find_step(tr, "s^(kt) -> (s/p)^(pkt)")->value == P("7^24"));
}

TEST_CASE("var0 maps")
{
    CHECK(var0_map(direction::forward, 0, P("4^2")).output == P("2^4"));
    CHECK(var0_map(direction::forward, 1, P("2")).output == P("1^2"));
    CHECK(var0_map(direction::inverse, 1, P("1^2")).output == P("2"));
    CHECK(var0_map(direction::forward, 0, partition{}, validation::unchecked).output.empty());
    CHECK(var0_map(direction::inverse, 0, partition{}, validation::unchecked).output.empty());
    CHECK_THROWS_AS(var0_map(direction::forward, 2, P("2")), domain_error);
}

TEST_CASE("glaisher is a bijection for n <= 30")
{
    for (int t = 2; t <= 5; ++t)
        check_bijection(
            make_family("glaisher_left", {{"t", t}}), make_family("glaisher_right", {{"t", t}}),
            [t](const partition& p) { return glaisher(t, p); }, [t](const partition& p) { return glaisher_inv(t, p); },
            30);
}

TEST_CASE("genr is a bijection for n <= 30")
{
    for (int p = 2; p <= 3; ++p)
        for (int k = 2; k <= 4; ++k)
            for (int r = 0; r < p; ++r) {
                param_map params{{"p", p}, {"k", k}, {"r", r}};
                check_bijection(
                    make_family("f_pkr", params), make_family("d_pkr", params),
                    [=](const partition& x) { return genr_f_to_d(p, k, r, x).output; },
                    [=](const partition& x) { return genr_d_to_f(p, k, r, x).output; }, 30);
            }
}

TEST_CASE("dpk is a bijection for n <= 30")
{
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 4}})
        check_bijection(
            make_family("d_k", {{"k", p * k}}), make_family("d_pkr", {{"p", p}, {"k", k}, {"r", 0}}),
            [=](const partition& x) { return dpk_to_dp(p, k, x).output; },
            [=](const partition& x) { return dp_to_dpk(p, k, x).output; }, 30);
}

TEST_CASE("var0 is a bijection for n <= 30")
{
    for (int residue = 0; residue <= 1; ++residue)
        check_bijection(
            make_family(residue ? "f2" : "f0"), make_family(residue ? "d_o" : "d_e"),
            [=](const partition& x) { return var0_map(direction::forward, residue, x).output; },
            [=](const partition& x) { return var0_map(direction::inverse, residue, x).output; }, 30);
}
