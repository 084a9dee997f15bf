#pragma once

#include "partlab/identities.hpp"

#include <string>
#include <vector>

namespace partlab {

// `ms` is written as null unless timing is requested, so output for identical
// inputs is byte-identical across runs.
std::string reports_json(const std::vector<identity_report>& reports, bool timing = false);
std::string reports_csv(const std::vector<identity_report>& reports, bool timing = false);
std::string reports_pretty(const std::vector<identity_report>& reports, bool timing = false);

std::string status_name(const identity_report& r);

} // namespace partlab
