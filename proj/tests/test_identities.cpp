#include "partlab/errors.hpp"
#include "partlab/identities.hpp"
#include "partlab/report.hpp"

#include <doctest.h>

#include <json.hpp>

#include <set>

using namespace partlab;

TEST_CASE("registry lists I1..I16 once each")
{
    const auto& ids = list_identities();
    REQUIRE(ids.size() == 16);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(ids[i].id == "I" + std::to_string(i + 1));
        seen.insert(ids[i].id);
        CHECK(!ids[i].default_grid.empty());
        CHECK(!ids[i].statement.empty());
    }
    CHECK(seen.size() == ids.size());
    CHECK_THROWS_AS(find_identity("I17"), domain_error);
}

TEST_CASE("default grids")
{
    CHECK(find_identity("I4").default_grid.size() == 10);
    CHECK(find_identity("I5").default_grid.size() == 3);
    CHECK(find_identity("I7").default_grid.size() == 3);
    CHECK(find_identity("I11").default_grid.size() == 15);
    CHECK(find_identity("I13").default_grid.size() == 4);
    CHECK(find_identity("I14").default_grid.size() == 6);
    CHECK(grid_cells(find_identity("I13"), {{"p", 3}, {"k", 4}}).size() == 1);
    CHECK(grid_cells(find_identity("I4"), {{"p", 4}}).size() == 3);
    auto custom = grid_cells(find_identity("I5"), {{"p", 7}});
    REQUIRE(custom.size() == 1);
    CHECK(custom[0].params.at("p") == 7);
}

TEST_CASE("verify examples")
{
    auto r8 = verify("I8", {}, 40, engine::both);
    CHECK(r8.holds);
    CHECK(!r8.cx);
    CHECK(verify("I6", {{"m", 5}}, 200, engine::series).holds);
    CHECK(verify("I1", {}, 25, engine::enumeration).holds);
    CHECK(verify("I13", {{"p", 3}, {"k", 4}}, 25, engine::enumeration).holds);
    CHECK(verify("I2", {}, 30, engine::enumeration).holds);
}

TEST_CASE("verify errors")
{
    CHECK_THROWS_AS(verify("I99", {}, 10, engine::enumeration), domain_error);
    CHECK_THROWS_AS(verify("I1", {}, 0, engine::enumeration), domain_error);
    CHECK_THROWS_AS(verify("I4", {{"p", 3}}, 10, engine::enumeration), domain_error);
    CHECK_THROWS_AS(verify("I1", {{"p", 3}}, 10, engine::enumeration), domain_error);
    CHECK_THROWS_AS(verify("I4", {{"p", 2}, {"r", 1}}, 10, engine::enumeration), domain_error);
    CHECK_THROWS_AS(verify("I2", {}, 10, engine::series), domain_error);
    CHECK_THROWS_AS(verify("I1", {}, 81, engine::enumeration), resource_limit);
    CHECK_THROWS_AS(verify("I1", {}, 201, engine::series), resource_limit);
    CHECK_THROWS_AS(verify("I15", {{"p", 2}, {"swapped", 2}}, 10, engine::enumeration), domain_error);
    limits tight{20, 50};
    CHECK_THROWS_AS(verify("I1", {}, 21, engine::enumeration, tight), resource_limit);
    CHECK_NOTHROW(verify("I1", {}, 50, engine::series, tight));
}

TEST_CASE("I15 adjudication")
{
    std::vector<verify_cell> cells;
    for (int p = 3; p >= 2; --p)
        for (int sw = 1; sw >= 0; --sw)
            cells.push_back({"I15", {{"p", p}, {"swapped", sw}}});
    auto reps = run_cells(cells, 30, engine::enumeration, {}, 2);
    REQUIRE(reps.size() == 4);
    // ordered by params regardless of input order
    CHECK(reps[0].params.at("p") == 2);
    CHECK(reps[0].params.at("swapped") == 0);
    CHECK(reps[3].params.at("p") == 3);
    for (int p = 2; p <= 3; ++p) {
        int holding = 0;
        for (const auto& r : reps)
            if (r.params.at("p") == p) {
                holding += r.holds;
                CHECK(r.note.find("verdict") != std::string::npos);
            }
        CHECK(holding == 1);
    }
    CHECK(batch_ok(reps));

    const auto& unswapped = reps[0];
    REQUIRE(!unswapped.holds);
    REQUIRE(unswapped.cx);
    // the counterexample reproduces when re-run at that n alone
    auto again = verify("I15", unswapped.params, unswapped.cx->n, engine::enumeration);
    REQUIRE(again.cx);
    CHECK(again.cx->n == unswapped.cx->n);
    CHECK(again.cx->lhs == unswapped.cx->lhs);
    CHECK(again.cx->rhs == unswapped.cx->rhs);

    std::vector<identity_report> just_unswapped{unswapped};
    CHECK(!batch_ok(just_unswapped));
}

TEST_CASE("engines agree where both apply")
{
    for (const char* id : {"I1", "I3", "I4", "I7", "I11", "I16"}) {
        for (const auto& cell : grid_cells(find_identity(id))) {
            auto e = verify(id, cell.params, 24, engine::enumeration);
            auto s = verify(id, cell.params, 24, engine::series);
            auto b = verify(id, cell.params, 24, engine::both);
            CHECK(e.holds);
            CHECK(s.holds);
            CHECK(b.holds);
        }
    }
}

TEST_CASE("whole registry at n_max 20 in one batch")
{
    std::vector<verify_cell> cells;
    for (const auto& spec : list_identities())
        for (auto& c : grid_cells(spec))
            cells.push_back(c);
    auto reps = run_cells(cells, 20, engine::enumeration, {}, 3);
    CHECK(reps.size() == cells.size());
    CHECK(batch_ok(reps));
}

TEST_CASE("parallel runs are ordered and byte-stable")
{
    std::vector<verify_cell> cells;
    for (const char* id : {"I13", "I4", "I1", "I11"})
        for (auto& c : grid_cells(find_identity(id)))
            cells.push_back(c);
    auto one = run_cells(cells, 18, engine::enumeration, {}, 1);
    auto four = run_cells(cells, 18, engine::enumeration, {}, 4);
    CHECK(reports_json(one) == reports_json(four));
    CHECK(reports_csv(one) == reports_csv(four));
    CHECK(one.front().id == "I1");
    CHECK(one.back().id == "I13");
}

TEST_CASE("report serialisation")
{
    std::vector<verify_cell> cells{{"I15", {{"p", 2}, {"swapped", 0}}}, {"I15", {{"p", 2}, {"swapped", 1}}}};
    auto reps = run_cells(cells, 10, engine::enumeration);
    auto j = nlohmann::json::parse(reports_json(reps));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["id"] == "I15");
    CHECK(j[0]["params"]["p"] == 2);
    CHECK(j[0]["n_max"] == 10);
    CHECK(j[0]["engine"] == "enum");
    CHECK(j[0]["status"] == "fails");
    CHECK(j[0]["counterexample"]["n"] == 2);
    CHECK(j[0]["counterexample"]["lhs"] == 1);
    CHECK(j[0]["counterexample"]["rhs"] == 0);
    CHECK(j[0]["ms"].is_null());
    CHECK(j[1]["status"] == "holds");
    CHECK(j[1]["counterexample"].is_null());

    auto timed = nlohmann::json::parse(reports_json(reps, true));
    CHECK(timed[0]["ms"].is_number());

    auto csv = reports_csv(reps);
    CHECK(csv.rfind("id,params,n_max,engine,status,cx_n,cx_lhs,cx_rhs,ms,note\n", 0) == 0);
    CHECK(csv.find("I15,p=2;swapped=0,10,enum,fails,2,1,0,,") != std::string::npos);
}

TEST_CASE("engine names")
{
    CHECK(parse_engine("enum") == engine::enumeration);
    CHECK(parse_engine("series") == engine::series);
    CHECK(parse_engine("both") == engine::both);
    CHECK_THROWS_AS(parse_engine("fast"), domain_error);
    CHECK(engine_name(engine::both) == "both");
}
