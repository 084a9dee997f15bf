#include "partlab/partition.hpp"

#include "partlab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <limits>
#include <map>

namespace partlab {

namespace {

std::uint64_t weight_of(const std::vector<part_block>& blocks)
{
    std::uint64_t w = 0;
    for (const auto& b : blocks)
        w += std::uint64_t(b.part) * b.mult;
    return w;
}

// Sorts decreasing by part and merges equal parts.
std::vector<part_block> canonicalise(std::vector<part_block> raw)
{
    std::sort(raw.begin(), raw.end(),
              [](const part_block& a, const part_block& b) { return a.part > b.part; });
    std::vector<part_block> out;
    out.reserve(raw.size());
    for (const auto& b : raw) {
        if (b.mult == 0)
            continue;
        if (!out.empty() && out.back().part == b.part) {
            if (std::uint64_t(out.back().mult) + b.mult > std::numeric_limits<part_t>::max())
                throw invalid_partition("multiplicity overflow");
            out.back().mult += b.mult;
        } else {
            out.push_back(b);
        }
    }
    return out;
}

part_t checked_narrow(std::int64_t v, const char* what)
{
    if (v > std::int64_t(std::numeric_limits<part_t>::max()))
        throw invalid_partition(std::string(what) + " too large: " + std::to_string(v));
    return part_t(v);
}

} // namespace

std::uint64_t partition::length() const
{
    std::uint64_t n = 0;
    for (const auto& b : blocks_)
        n += b.mult;
    return n;
}

part_t partition::multiplicity(part_t part) const
{
    // blocks are sorted decreasing
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), part,
                               [](const part_block& b, part_t v) { return b.part > v; });
    if (it != blocks_.end() && it->part == part)
        return it->mult;
    return 0;
}

std::string partition::str() const
{
    if (blocks_.empty())
        return "-";
    std::string s;
    for (const auto& b : blocks_) {
        if (!s.empty())
            s += ',';
        s += std::to_string(b.part);
        if (b.mult != 1) {
            s += '^';
            s += std::to_string(b.mult);
        }
    }
    return s;
}

std::weak_ordering partition::compare(const partition& other) const
{
    // lexicographic on the flattened decreasing part sequence
    std::size_t i = 0, j = 0;
    part_t used_a = 0, used_b = 0;
    while (i < blocks_.size() && j < other.blocks_.size()) {
        const auto& a = blocks_[i];
        const auto& b = other.blocks_[j];
        if (a.part != b.part)
            return a.part <=> b.part;
        part_t step = std::min(a.mult - used_a, b.mult - used_b);
        used_a += step;
        used_b += step;
        if (used_a == a.mult) {
            ++i;
            used_a = 0;
        }
        if (used_b == b.mult) {
            ++j;
            used_b = 0;
        }
    }
    bool a_left = i < blocks_.size();
    bool b_left = j < other.blocks_.size();
    if (a_left == b_left)
        return std::weak_ordering::equivalent;
    return a_left ? std::weak_ordering::greater : std::weak_ordering::less;
}

partition make_partition(std::span<const std::pair<std::int64_t, std::int64_t>> pairs)
{
    std::vector<part_block> raw;
    raw.reserve(pairs.size());
    for (auto [part, mult] : pairs) {
        if (part <= 0)
            throw invalid_partition("part must be positive, got " + std::to_string(part));
        if (mult < 0)
            throw invalid_partition("multiplicity must be nonnegative, got " + std::to_string(mult));
        raw.push_back({checked_narrow(part, "part"), checked_narrow(mult, "multiplicity")});
    }
    partition p;
    p.blocks_ = canonicalise(std::move(raw));
    p.weight_ = weight_of(p.blocks_);
    return p;
}

partition make_partition(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs)
{
    return make_partition(std::span<const std::pair<std::int64_t, std::int64_t>>(pairs.begin(), pairs.size()));
}

partition multiset_union(const partition& a, const partition& b)
{
    return partition_builder(a).add(b).build();
}

partition partition_from_canonical(std::vector<part_block> blocks)
{
#ifndef NDEBUG
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        assert(blocks[i].part >= 1 && blocks[i].mult >= 1);
        assert(i == 0 || blocks[i - 1].part > blocks[i].part);
    }
#endif
    partition p;
    p.weight_ = weight_of(blocks);
    p.blocks_ = std::move(blocks);
    return p;
}

namespace {

std::int64_t parse_number(std::string_view tok, std::string_view whole)
{
    // trim spaces
    while (!tok.empty() && tok.front() == ' ')
        tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ')
        tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error("malformed partition '" + std::string(whole) + "'");
    return v;
}

} // namespace

partition parse_partition(std::string_view text)
{
    std::string_view t = text;
    while (!t.empty() && (t.front() == ' ' || t.front() == '('))
        t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == ')'))
        t.remove_suffix(1);
    if (t.empty() || t == "-")
        return {};

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    std::size_t start = 0;
    while (start <= t.size()) {
        std::size_t comma = t.find(',', start);
        std::string_view item = t.substr(start, comma == std::string_view::npos ? t.npos : comma - start);
        std::size_t caret = item.find('^');
        std::int64_t part = parse_number(item.substr(0, caret), text);
        std::int64_t mult = caret == std::string_view::npos ? 1 : parse_number(item.substr(caret + 1), text);
        pairs.emplace_back(part, mult);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    try {
        return make_partition(pairs);
    } catch (const invalid_partition& e) {
        throw parse_error(e.what());
    }
}

partition_builder::partition_builder(const partition& start)
    : raw_(start.blocks().begin(), start.blocks().end())
{
}

partition_builder& partition_builder::add(part_t part, std::uint64_t mult)
{
    if (part == 0)
        throw invalid_partition("part must be positive");
    if (mult == 0)
        return *this;
    if (mult > std::numeric_limits<part_t>::max())
        throw invalid_partition("multiplicity overflow");
    raw_.push_back({part, part_t(mult)});
    return *this;
}

partition_builder& partition_builder::add(const partition& p)
{
    raw_.insert(raw_.end(), p.blocks().begin(), p.blocks().end());
    return *this;
}

partition partition_builder::build() const
{
    return partition_from_canonical(canonicalise(raw_));
}

} // namespace partlab
