#pragma once

#include <functional>
#include <string>
#include <vector>

namespace partlab {

struct criterion_result {
    std::string id;     // "AC1" .. "AC8"
    std::string title;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> failures; // failed sub-checks
    std::vector<std::string> notes;    // informational lines, e.g. verdicts
};

// "PASS AC1 <title> (0.01 s)" or "FAIL AC3 <title> (0.00 s): <failures>"
std::string format_result(const criterion_result& r);

using criterion_callback = std::function<void(const criterion_result&)>;

std::vector<std::string> acceptance_ids();

// Runs the selected criteria (all when `only` is empty) in order, invoking
// `on_result` as each one finishes.
std::vector<criterion_result> run_acceptance(const std::vector<std::string>& only = {}, int jobs = 1,
                                             const criterion_callback& on_result = {});

bool all_passed(const std::vector<criterion_result>& results);

} // namespace partlab
