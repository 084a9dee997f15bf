#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

enum class family_kind {
    a,
    c,
    c_o,
    c_e,
    b,
    b_o,
    b_e,
    b_prime,
    a_r,
    g_r,
    g_r_odd,
    g_r_even,
    a_np,
    o_p,
    o_p_odd,
    o_p_even,
    h,
    d_e,
    d_o,
    f0,
    f2,
    d_pkr,
    f_pkr,
    d_k,
    g_alpha,
    g_alpha_odd,
    g_alpha_even,
    s,
    glaisher_left,
    glaisher_right,
};

// class: counts partitions; statistic: totals a per-partition count;
// signed: odd piece minus even piece.
enum class family_category { class_count, statistic, signed_count };

// Only the fields named by the family's info().params are meaningful.
struct family_params {
    int p = 0;
    int r = 0;
    int k = 0;
    int t = 0;
    int alpha = 0;
    int i = 0;

    friend bool operator==(const family_params&, const family_params&) = default;
};

struct family_id {
    family_kind kind;
    family_params params;

    friend bool operator==(const family_id&, const family_id&) = default;
};

struct family_info {
    family_kind kind;
    std::string_view key;
    std::vector<std::string_view> params;
    family_category category;
    bool closed_form;
    std::string_view summary;
};

using param_map = std::map<std::string, int, std::less<>>;

const std::vector<family_info>& family_registry();
const family_info& info(family_kind kind);

// Builds and validates a family from its stable key and named parameters.
// Throws domain_error for unknown keys, missing or unexpected parameters,
// and parameters outside the family's domain.
family_id make_family(std::string_view key, const param_map& params = {});

// Throws domain_error when the parameter tuple is outside the family's domain.
void validate(const family_id& f);

// e.g. "d_pkr{p=3,k=4,r=1}"; just the key for parameterless families.
std::string describe(const family_id& f);

int family_param(const family_params& p, std::string_view name);

} // namespace partlab
