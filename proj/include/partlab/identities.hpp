#pragma once

#include "partlab/enumerate.hpp"
#include "partlab/family_id.hpp"
#include "partlab/integer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

inline constexpr int default_series_order = 200;

enum class engine { enumeration, series, both };
enum class claim_kind { equality, divisibility, congruence, parity, series_equality };

std::string_view engine_name(engine e);
engine parse_engine(std::string_view s);
std::string_view claim_kind_name(claim_kind k);

struct limits {
    int max_n = default_max_n;                 // enumeration cap
    int series_order = default_series_order;   // largest series order allowed
};

struct identity_spec {
    std::string id;
    std::string statement;
    claim_kind kind;
    std::vector<std::string> params;
    bool series_allowed;
    int n_min;
    std::vector<param_map> default_grid;
};

struct counterexample {
    int n;
    integer lhs;
    integer rhs;
    std::string detail;
};

struct identity_report {
    std::string id;
    param_map params;
    int n_max = 0;
    engine eng = engine::enumeration;
    bool holds = false;
    std::optional<counterexample> cx;
    double ms = 0;
    std::string note;
};

const std::vector<identity_spec>& list_identities();
const identity_spec& find_identity(std::string_view id);

// Checks the claim for n_min <= n <= n_max and stops at the first failure.
// Throws domain_error for unknown ids, bad parameters or an engine the
// identity does not support, resource_limit when n_max exceeds the engine's
// limit.
identity_report verify(std::string_view id, const param_map& params, int n_max, engine e,
                       const limits& lim = {});

struct verify_cell {
    std::string id;
    param_map params;
};

// Default grid cells of an identity, optionally narrowed by overrides: cells
// agreeing with every override are kept; if none agree the overrides form a
// single cell.
std::vector<verify_cell> grid_cells(const identity_spec& spec, const param_map& overrides = {});

// Runs cells on `jobs` worker threads. Reports come back ordered by
// (registry position, params) whatever the completion order, and orientation
// cells of the h/g adjudication identity carry the verdict in `note`.
std::vector<identity_report> run_cells(const std::vector<verify_cell>& cells, int n_max, engine e,
                                       const limits& lim = {}, int jobs = 1);

// True when every cell holds, except that the two orientation cells of the
// adjudicated identity pass when exactly one of them holds.
bool batch_ok(const std::vector<identity_report>& reports);

// Identity whose two orientations are adjudicated rather than asserted.
inline constexpr std::string_view adjudicated_identity = "I15";

std::string describe_params(const param_map& params);

} // namespace partlab
