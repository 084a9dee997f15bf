#include "partlab/enumerate.hpp"

#include "partlab/errors.hpp"

#include <cassert>
#include <limits>
#include <string>

namespace partlab {

namespace {

constexpr std::uint64_t unbounded = std::numeric_limits<std::uint64_t>::max();

// Largest weight representable with parts 1..top, `top_room` copies of top
// and `b` copies of each smaller part.
std::uint64_t capacity(part_t top, std::uint64_t top_room, std::uint64_t b)
{
    if (b == unbounded)
        return top == 0 ? 0 : unbounded;
    std::uint64_t t = top;
    return top_room * t + b * (t * (t - 1) / 2);
}

} // namespace

enum_kind enum_kind::multiplicity_at_most(part_t b)
{
    if (b < 1)
        throw domain_error("multiplicity bound must be >= 1");
    return {tag::multiplicity_at_most, b};
}

std::uint64_t enum_kind::max_mult() const
{
    switch (kind) {
    case tag::all:
        return unbounded;
    case tag::distinct:
        return 1;
    case tag::multiplicity_at_most:
        return bound;
    }
    return unbounded;
}

partition_stream::partition_stream(int n, enum_kind kind, int max_n)
    : kind_(kind)
{
    if (n < 0)
        throw domain_error("n must be nonnegative");
    if (n > max_n)
        throw resource_limit("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                             std::to_string(max_n));
    if (kind.kind == enum_kind::tag::multiplicity_at_most && kind.bound < 1)
        throw domain_error("multiplicity bound must be >= 1");
    if (n > 0)
        fill(std::uint64_t(n), part_t(n), kind_.max_mult());
}

// Greedy lexicographically-largest completion of `remainder` using parts <= top.
void partition_stream::fill(std::uint64_t remainder, part_t top, std::uint64_t top_room)
{
    std::uint64_t b = kind_.max_mult();
    std::uint64_t room = top_room;
    for (part_t v = top; remainder > 0 && v >= 1; --v) {
        std::uint64_t take = std::min<std::uint64_t>(room, remainder / v);
        if (take > 0) {
            if (!state_.empty() && state_.back().part == v)
                state_.back().mult += part_t(take);
            else
                state_.push_back({v, part_t(take)});
            remainder -= take * v;
        }
        room = b;
    }
    assert(remainder == 0);
}

void partition_stream::advance()
{
    if (done_)
        return;
    std::uint64_t b = kind_.max_mult();
    // Scan blocks from the smallest part upward for the rightmost position
    // whose entry can drop by one while the tail stays fillable.
    std::uint64_t tail = 0;
    for (std::size_t idx = state_.size(); idx-- > 0;) {
        part_block& blk = state_[idx];
        if (blk.part >= 2) {
            part_t w = blk.part - 1;
            std::uint64_t rest = tail + 1; // (v + tail) - w
            // w is one new copy; the remaining room for w is b - 1.
            std::uint64_t cap = b == unbounded ? unbounded : capacity(w, b - 1, b);
            if (rest <= cap) {
                state_.resize(idx + 1);
                if (--state_.back().mult == 0)
                    state_.pop_back();
                state_.push_back({w, 1});
                fill(rest, w, b == unbounded ? unbounded : b - 1);
                return;
            }
        }
        tail += std::uint64_t(blk.part) * blk.mult;
    }
    done_ = true;
}

std::optional<partition> partition_stream::next()
{
    if (started_)
        advance();
    started_ = true;
    if (done_)
        return std::nullopt;
    return partition_from_canonical(state_);
}

void partition_stream::iterator::load()
{
    auto v = s_->next();
    if (v)
        value_ = std::move(*v);
    else
        s_ = nullptr;
}

partition_stream::iterator& partition_stream::iterator::operator++()
{
    load();
    return *this;
}

partition_stream generate(int n, enum_kind kind, int max_n)
{
    return partition_stream(n, kind, max_n);
}

void for_each_partition(int n, enum_kind kind, const std::function<void(const partition&)>& visit,
                        int max_n)
{
    partition_stream s(n, kind, max_n);
    while (auto p = s.next())
        visit(*p);
}

std::int64_t count_where(int n, enum_kind kind, const partition_predicate& pred, int max_n)
{
    std::int64_t c = 0;
    for_each_partition(n, kind, [&](const partition& p) { c += pred(p) ? 1 : 0; }, max_n);
    return c;
}

std::int64_t sum_statistic(int n, enum_kind kind, const partition_statistic& stat, int max_n)
{
    std::int64_t s = 0;
    for_each_partition(n, kind, [&](const partition& p) { s += stat(p); }, max_n);
    return s;
}

} // namespace partlab
