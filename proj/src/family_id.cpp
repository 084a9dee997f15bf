#include "partlab/family_id.hpp"

#include "partlab/errors.hpp"

#include <algorithm>

namespace partlab {

namespace {

using fc = family_category;
using fk = family_kind;

std::vector<family_info> build_registry()
{
    return {
        {fk::a, "a", {}, fc::statistic, true, "even parts over all partitions into distinct parts"},
        {fk::c, "c", {}, fc::signed_count, true, "exactly one part repeated: odd repeated part minus even"},
        {fk::c_o, "c_o", {}, fc::class_count, true, "exactly one part repeated, and it is odd"},
        {fk::c_e, "c_e", {}, fc::class_count, true, "exactly one part repeated, and it is even"},
        {fk::b, "b", {}, fc::signed_count, false, "singleton even-part set: odd number of parts minus even"},
        {fk::b_o, "b_o", {}, fc::class_count, false, "singleton even-part set, odd number of parts"},
        {fk::b_e, "b_e", {}, fc::class_count, false, "singleton even-part set, even number of parts"},
        {fk::b_prime, "b_prime", {}, fc::class_count, true, "the set of even parts is a singleton"},
        {fk::a_r, "a_r", {"p", "r"}, fc::statistic, true, "parts = -r (mod p) over distinct-part partitions"},
        {fk::g_r, "g_r", {"p", "r"}, fc::signed_count, true,
         "one repeated part, multiplicity >= p-r and = -r or -r+1 (mod p): odd minus even"},
        {fk::g_r_odd, "g_r_odd", {"p", "r"}, fc::class_count, true, "g_r partitions with odd repeated part"},
        {fk::g_r_even, "g_r_even", {"p", "r"}, fc::class_count, true, "g_r partitions with even repeated part"},
        {fk::a_np, "a_np", {"p"}, fc::statistic, true,
         "parts = 0 (mod p) over partitions with multiplicities <= p-1"},
        {fk::o_p, "o_p", {"p"}, fc::class_count, true, "the set of parts = 0 (mod p) is a singleton"},
        {fk::o_p_odd, "o_p_odd", {"p"}, fc::class_count, true, "o_p partitions with an odd number of such parts"},
        {fk::o_p_even, "o_p_even", {"p"}, fc::class_count, true, "o_p partitions with an even number of such parts"},
        {fk::h, "h", {"p", "i"}, fc::class_count, true,
         "parts = 1..p-1 (mod p) free, parts = i (mod 2p) a singleton set, i in {0,p}"},
        {fk::d_e, "d_e", {}, fc::class_count, true, "exactly one even part repeated, odd parts free"},
        {fk::d_o, "d_o", {}, fc::class_count, true, "exactly one odd part repeated, even parts free"},
        {fk::f0, "f0", {}, fc::class_count, true, "the set of parts = 0 (mod 4) is a singleton"},
        {fk::f2, "f2", {}, fc::class_count, true, "the set of parts = 2 (mod 4) is a singleton"},
        {fk::d_pkr, "d_pkr", {"p", "k", "r"}, fc::class_count, true,
         "exactly one part = r (mod p) appears at least k times, other such parts at most k-1"},
        {fk::f_pkr, "f_pkr", {"p", "k", "r"}, fc::class_count, true, "the set of parts = kr (mod pk) is a singleton"},
        {fk::d_k, "d_k", {"k"}, fc::class_count, false,
         "exactly one part appears at least k times, all others at most k-1"},
        {fk::g_alpha, "g_alpha", {"alpha", "k", "p"}, fc::signed_count, true,
         "one part with multiplicity >= alpha and = alpha+j (mod p), 0 <= j < k, others <= k-1: odd minus even"},
        {fk::g_alpha_odd, "g_alpha_odd", {"alpha", "k", "p"}, fc::class_count, true,
         "g_alpha partitions whose distinguished part is odd"},
        {fk::g_alpha_even, "g_alpha_even", {"alpha", "k", "p"}, fc::class_count, true,
         "g_alpha partitions whose distinguished part is even"},
        {fk::s, "s", {}, fc::class_count, true, "unrestricted partitions"},
        {fk::glaisher_left, "glaisher_left", {"t"}, fc::class_count, true, "every multiplicity at most t-1"},
        {fk::glaisher_right, "glaisher_right", {"t"}, fc::class_count, true, "no part divisible by t"},
    };
}

template <typename Params>
auto& param_slot(Params& p, std::string_view name)
{
    if (name == "p")
        return p.p;
    if (name == "r")
        return p.r;
    if (name == "k")
        return p.k;
    if (name == "t")
        return p.t;
    if (name == "alpha")
        return p.alpha;
    if (name == "i")
        return p.i;
    throw domain_error("unknown family parameter '" + std::string(name) + "'");
}

[[noreturn]] void bad(const family_id& f, const std::string& why)
{
    throw domain_error(describe(f) + ": " + why);
}

} // namespace

const std::vector<family_info>& family_registry()
{
    static const std::vector<family_info> registry = build_registry();
    return registry;
}

const family_info& info(family_kind kind)
{
    const auto& reg = family_registry();
    return reg[std::size_t(kind)];
}

int family_param(const family_params& p, std::string_view name)
{
    return param_slot(p, name);
}

family_id make_family(std::string_view key, const param_map& params)
{
    const auto& reg = family_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const family_info& fi) { return fi.key == key; });
    if (it == reg.end())
        throw domain_error("unknown family '" + std::string(key) + "'");
    family_id f{it->kind, {}};
    for (auto name : it->params) {
        auto v = params.find(name);
        if (v == params.end())
            throw domain_error("family " + std::string(key) + " needs parameter " + std::string(name));
        param_slot(f.params, name) = v->second;
    }
    for (const auto& [name, value] : params) {
        if (std::find(it->params.begin(), it->params.end(), name) == it->params.end())
            throw domain_error("family " + std::string(key) + " takes no parameter " + name);
    }
    validate(f);
    return f;
}

void validate(const family_id& f)
{
    const auto& q = f.params;
    switch (f.kind) {
    case fk::a_r:
    case fk::g_r:
    case fk::g_r_odd:
    case fk::g_r_even:
        if (q.r < 0 || q.p < q.r + 2)
            bad(f, "needs r >= 0 and p >= r + 2");
        break;
    case fk::a_np:
    case fk::o_p:
    case fk::o_p_odd:
    case fk::o_p_even:
        if (q.p < 2)
            bad(f, "needs p >= 2");
        break;
    case fk::h:
        if (q.p < 2 || (q.i != 0 && q.i != q.p))
            bad(f, "needs p >= 2 and i in {0, p}");
        break;
    case fk::d_pkr:
    case fk::f_pkr:
        if (q.p < 2 || q.k < 2 || q.r < 0 || q.r >= q.p)
            bad(f, "needs p >= 2, k >= 2 and 0 <= r < p");
        break;
    case fk::d_k:
        if (q.k < 2)
            bad(f, "needs k >= 2");
        break;
    case fk::g_alpha:
    case fk::g_alpha_odd:
    case fk::g_alpha_even:
        if (q.k < 1 || q.p < 1 || q.alpha < q.k)
            bad(f, "needs k >= 1, p >= 1 and alpha >= k");
        break;
    case fk::glaisher_left:
    case fk::glaisher_right:
        if (q.t < 2)
            bad(f, "needs t >= 2");
        break;
    default:
        break;
    }
}

std::string describe(const family_id& f)
{
    const auto& fi = info(f.kind);
    std::string s(fi.key);
    if (fi.params.empty())
        return s;
    s += '{';
    bool first = true;
    for (auto name : fi.params) {
        if (!first)
            s += ',';
        first = false;
        s += name;
        s += '=';
        s += std::to_string(family_param(f.params, name));
    }
    s += '}';
    return s;
}

} // namespace partlab
