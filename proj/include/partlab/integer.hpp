#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace partlab {

// Unbounded signed integer used for series coefficients and all reported counts.
using integer = mpz_class;

inline std::string to_string(const integer& v) { return v.get_str(); }

inline integer make_integer(std::int64_t v)
{
    // mpz_class has no portable long long constructor
    return integer(std::to_string(v));
}

} // namespace partlab
