#pragma once

#include "partlab/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace partlab {

struct trace_step {
    std::string label;
    std::optional<partition> value;
    std::string note;
};

// Record of one application of a constructive bijection. steps.front() holds
// the input and steps.back() the output.
struct bijection_trace {
    partition input;
    partition output;
    std::vector<trace_step> steps;
};

enum class validation { strict, unchecked };
enum class direction { forward, inverse };

// Glaisher's map: multiplicities <= t-1  ->  no part divisible by t.
partition glaisher(int t, const partition& p, validation v = validation::strict);
// Inverse via base-t digits of each multiplicity.
partition glaisher_inv(int t, const partition& p, validation v = validation::strict);

// f_p(n,k,r)-partition -> d_p(n,k,r)-partition and back.
bijection_trace genr_f_to_d(int p, int k, int r, const partition& lambda,
                            validation v = validation::strict);
bijection_trace genr_d_to_f(int p, int k, int r, const partition& mu,
                            validation v = validation::strict);

// d_{pk}(n)-partition -> d_p(n,k,0)-partition and back.
bijection_trace dpk_to_dp(int p, int k, const partition& lambda, validation v = validation::strict);
bijection_trace dp_to_dpk(int p, int k, const partition& mu, validation v = validation::strict);

// f0 <-> d_e (residue 0) and f2 <-> d_o (residue 1); forward maps from the f side.
bijection_trace var0_map(direction dir, int residue, const partition& p,
                         validation v = validation::strict);

} // namespace partlab
