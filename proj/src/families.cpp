#include "partlab/families.hpp"

#include "partlab/errors.hpp"
#include "partlab/gf.hpp"
#include "partlab/numtheory.hpp"

namespace partlab {

namespace {

using fk = family_kind;

bool is_odd(part_t v) { return v % 2 != 0; }

// Index of the single block with multiplicity >= threshold when every other
// block stays below `others_below`; -1 otherwise.
long distinguished_block(const partition& p, part_t threshold, part_t others_below)
{
    long found = -1;
    auto blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].mult >= threshold) {
            if (found >= 0)
                return -1;
            found = long(i);
        } else if (blocks[i].mult >= others_below) {
            return -1;
        }
    }
    return found;
}

// Counts blocks whose part satisfies pred; returns the last such index via `where`.
template <typename Pred>
int blocks_matching(const partition& p, Pred pred, long& where)
{
    int count = 0;
    auto blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (pred(blocks[i].part)) {
            ++count;
            where = long(i);
        }
    }
    return count;
}

// Exactly one part repeated, all other parts distinct. Returns that block or -1.
long single_repeated(const partition& p) { return distinguished_block(p, 2, 2); }

std::int64_t parity_sign(part_t v) { return is_odd(v) ? 1 : -1; }

// Within the parts selected by `in_class`, exactly one has multiplicity >= k
// and the others stay <= k-1; parts outside the class are unrestricted.
bool one_heavy_in_class(const partition& p, part_t k, auto in_class, long& heavy)
{
    heavy = -1;
    auto blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (!in_class(blocks[i].part) || blocks[i].mult < k)
            continue;
        if (heavy >= 0)
            return false;
        heavy = long(i);
    }
    return heavy >= 0;
}

long g_alpha_block(const partition& p, const family_params& q)
{
    long idx = distinguished_block(p, part_t(q.alpha), part_t(q.k));
    if (idx < 0)
        return -1;
    part_t m = p.blocks()[std::size_t(idx)].mult;
    if (part_t((m - part_t(q.alpha)) % part_t(q.p)) >= part_t(q.k))
        return -1;
    return idx;
}

long g_r_block(const partition& p, const family_params& q)
{
    long idx = single_repeated(p);
    if (idx < 0)
        return -1;
    part_t m = p.blocks()[std::size_t(idx)].mult;
    part_t lo = part_t(q.p - q.r);
    if (m < lo)
        return -1;
    part_t res = (m - lo) % part_t(q.p);
    return res <= 1 ? idx : -1;
}

} // namespace

enum_kind base_kind(const family_id& f)
{
    switch (f.kind) {
    case fk::a:
    case fk::a_r:
        return enum_kind::distinct();
    case fk::a_np:
        return enum_kind::multiplicity_at_most(part_t(f.params.p - 1));
    case fk::glaisher_left:
        return enum_kind::multiplicity_at_most(part_t(f.params.t - 1));
    default:
        return enum_kind::all();
    }
}

std::int64_t contribution(const family_id& f, const partition& p)
{
    const auto& q = f.params;
    auto blocks = p.blocks();
    long where = -1;
    switch (f.kind) {
    case fk::a: {
        std::int64_t c = 0;
        for (const auto& b : blocks)
            if (!is_odd(b.part))
                c += b.mult;
        return c;
    }
    case fk::c:
    case fk::c_o:
    case fk::c_e: {
        long idx = single_repeated(p);
        if (idx < 0)
            return 0;
        bool odd = is_odd(blocks[std::size_t(idx)].part);
        if (f.kind == fk::c)
            return odd ? 1 : -1;
        return (f.kind == fk::c_o) == odd ? 1 : 0;
    }
    case fk::b:
    case fk::b_o:
    case fk::b_e:
    case fk::b_prime: {
        if (blocks_matching(p, [](part_t v) { return !is_odd(v); }, where) != 1)
            return 0;
        bool odd_len = p.length() % 2 != 0;
        switch (f.kind) {
        case fk::b:
            return odd_len ? 1 : -1;
        case fk::b_o:
            return odd_len ? 1 : 0;
        case fk::b_e:
            return odd_len ? 0 : 1;
        default:
            return 1;
        }
    }
    case fk::a_r: {
        std::int64_t c = 0;
        for (const auto& b : blocks)
            if ((b.part + part_t(q.r)) % part_t(q.p) == 0)
                c += b.mult;
        return c;
    }
    case fk::g_r:
    case fk::g_r_odd:
    case fk::g_r_even: {
        long idx = g_r_block(p, q);
        if (idx < 0)
            return 0;
        bool odd = is_odd(blocks[std::size_t(idx)].part);
        if (f.kind == fk::g_r)
            return odd ? 1 : -1;
        return (f.kind == fk::g_r_odd) == odd ? 1 : 0;
    }
    case fk::a_np: {
        std::int64_t c = 0;
        for (const auto& b : blocks)
            if (b.part % part_t(q.p) == 0)
                c += b.mult;
        return c;
    }
    case fk::o_p:
    case fk::o_p_odd:
    case fk::o_p_even: {
        part_t mod = part_t(q.p);
        if (blocks_matching(p, [mod](part_t v) { return v % mod == 0; }, where) != 1)
            return 0;
        bool odd = blocks[std::size_t(where)].mult % 2 != 0;
        if (f.kind == fk::o_p)
            return 1;
        return (f.kind == fk::o_p_odd) == odd ? 1 : 0;
    }
    case fk::h: {
        part_t mod = part_t(q.p);
        part_t cls = part_t(q.i);
        int in_cls = 0;
        for (const auto& b : blocks) {
            if (b.part % mod != 0)
                continue;
            if (b.part % (2 * mod) != cls)
                return 0;
            ++in_cls;
        }
        return in_cls == 1 ? 1 : 0;
    }
    case fk::d_e:
    case fk::d_o: {
        bool want_odd = f.kind == fk::d_o;
        long heavy = -1;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (is_odd(blocks[i].part) != want_odd || blocks[i].mult < 2)
                continue;
            if (heavy >= 0)
                return 0;
            heavy = long(i);
        }
        return heavy >= 0 ? 1 : 0;
    }
    case fk::f0:
    case fk::f2: {
        part_t cls = f.kind == fk::f0 ? 0 : 2;
        return blocks_matching(p, [cls](part_t v) { return v % 4 == cls; }, where) == 1 ? 1 : 0;
    }
    case fk::d_pkr: {
        part_t mod = part_t(q.p);
        part_t r = part_t(q.r);
        long heavy;
        return one_heavy_in_class(p, part_t(q.k), [mod, r](part_t v) { return v % mod == r; }, heavy) ? 1 : 0;
    }
    case fk::f_pkr: {
        part_t mod = part_t(q.p * q.k);
        part_t cls = part_t(q.k * q.r) % mod;
        return blocks_matching(p, [mod, cls](part_t v) { return v % mod == cls; }, where) == 1 ? 1 : 0;
    }
    case fk::d_k:
        return distinguished_block(p, part_t(q.k), part_t(q.k)) >= 0 ? 1 : 0;
    case fk::g_alpha:
    case fk::g_alpha_odd:
    case fk::g_alpha_even: {
        long idx = g_alpha_block(p, q);
        if (idx < 0)
            return 0;
        bool odd = is_odd(blocks[std::size_t(idx)].part);
        if (f.kind == fk::g_alpha)
            return parity_sign(blocks[std::size_t(idx)].part);
        return (f.kind == fk::g_alpha_odd) == odd ? 1 : 0;
    }
    case fk::s:
    case fk::glaisher_left:
        return 1;
    case fk::glaisher_right:
        for (const auto& b : blocks)
            if (b.part % part_t(q.t) == 0)
                return 0;
        return 1;
    }
    return 0;
}

bool belongs(const family_id& f, const partition& p)
{
    std::uint64_t bound = base_kind(f).max_mult();
    for (const auto& b : p.blocks())
        if (b.mult > bound)
            return false;
    return contribution(f, p) != 0;
}

integer count_enum(const family_id& f, int n, int max_n)
{
    validate(f);
    std::int64_t total = 0;
    partition_stream stream(n, base_kind(f), max_n);
    while (auto p = stream.next())
        total += contribution(f, *p);
    return make_integer(total);
}

integer count_series(const family_id& f, int n)
{
    if (n < 0)
        throw domain_error("n must be nonnegative");
    return gf_family(f, n).coefficient(n);
}

std::vector<std::int64_t> recurrence_d_e_table(int n)
{
    if (n < 0)
        throw domain_error("recurrence_d_e needs n >= 0");
    std::vector<std::int64_t> d(std::size_t(n) + 1, 0);
    auto at = [&](std::int64_t m) -> std::int64_t { return m <= 0 ? 0 : d[std::size_t(m)]; };
    for (int m = 1; m <= n; ++m) {
        std::int64_t v = 0;
        for (const auto& t : pentagonal_terms(m)) {
            // (-1)^(j+1) = -sign
            v += -t.sign * (at(m - t.exponent_plus) + at(m - t.exponent_minus));
        }
        if (m % 4 == 0)
            v += gamma_term(m);
        d[std::size_t(m)] = v;
    }
    return d;
}

std::int64_t recurrence_d_e(int n)
{
    if (n < 1)
        throw domain_error("recurrence_d_e needs n >= 1");
    return recurrence_d_e_table(n).back();
}

int d_o_parity_lhs(int n, const std::function<integer(int)>& d_o)
{
    if (n < 1)
        throw domain_error("d_o_parity_lhs needs n >= 1");
    integer acc;
    for (long j = 0; j * (j + 1) / 2 <= n; ++j) {
        long m = n - j * (j + 1) / 2;
        if (m > 0)
            acc += d_o(int(m));
    }
    integer r = acc % 2;
    return sgn(r) == 0 ? 0 : 1;
}

int d_o_parity_lhs(int n)
{
    const family_id d_o{fk::d_o, {}};
    return d_o_parity_lhs(n, [&](int m) { return count_enum(d_o, m); });
}

int d_o_parity_rhs(int n)
{
    if (n < 1)
        throw domain_error("d_o_parity_rhs needs n >= 1");
    if (n % 2 != 0)
        return 0;
    return int(sigma0(n >> v2(n)) % 2);
}

} // namespace partlab
