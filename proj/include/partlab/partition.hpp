#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partlab {

using part_t = std::uint32_t;

struct part_block {
    part_t part;
    part_t mult;

    friend bool operator==(const part_block&, const part_block&) = default;
};

/*
 * An integer partition held in compact multiplicity form: blocks with
 * strictly decreasing parts, every multiplicity positive. Values are
 * immutable once built; the weight is cached.
 */
class partition {
public:
    partition() = default;

    std::span<const part_block> blocks() const { return blocks_; }
    std::uint64_t weight() const { return weight_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t distinct_parts() const { return blocks_.size(); }

    // Total number of parts counted with multiplicity.
    std::uint64_t length() const;

    part_t multiplicity(part_t part) const;

    // Canonical text form, e.g. "13^10,10^5,1". Empty prints as "-".
    std::string str() const;

    friend bool operator==(const partition&, const partition&) = default;
    friend auto operator<=>(const partition& a, const partition& b)
    {
        return a.compare(b);
    }

private:
    friend class partition_builder;
    friend partition make_partition(std::span<const std::pair<std::int64_t, std::int64_t>>);
    friend partition partition_from_canonical(std::vector<part_block> blocks);

    std::weak_ordering compare(const partition& other) const;

    std::vector<part_block> blocks_;
    std::uint64_t weight_ = 0;
};

// Canonicalises arbitrary (part, multiplicity) pairs: merges duplicate parts,
// drops zero multiplicities, sorts decreasing. Throws invalid_partition on a
// part <= 0 or a negative multiplicity.
partition make_partition(std::span<const std::pair<std::int64_t, std::int64_t>> pairs);
partition make_partition(std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs);

partition multiset_union(const partition& a, const partition& b);

// Parses the text grammar: comma separated items `P` or `P^M`, any order.
// A lone "-" (or an empty string) is the empty partition.
partition parse_partition(std::string_view text);

/*
 * Accumulates multiplicities and produces a canonical partition. Used by the
 * bijections, which build images piece by piece.
 */
class partition_builder {
public:
    partition_builder() = default;
    explicit partition_builder(const partition& start);

    partition_builder& add(part_t part, std::uint64_t mult);
    partition_builder& add(const partition& p);

    partition build() const;

private:
    std::vector<part_block> raw_;
};

// Trusted construction from blocks already in canonical order. Used by the
// enumerators; the invariant is checked only in debug builds.
partition partition_from_canonical(std::vector<part_block> blocks);

} // namespace partlab
