#pragma once

#include "partlab/partition.hpp"

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

namespace partlab {

inline constexpr int default_max_n = 80;

struct enum_kind {
    enum class tag { all, distinct, multiplicity_at_most };

    tag kind = tag::all;
    part_t bound = 0; // only for multiplicity_at_most, >= 1

    static enum_kind all() { return {tag::all, 0}; }
    static enum_kind distinct() { return {tag::distinct, 1}; }
    static enum_kind multiplicity_at_most(part_t b);

    // Largest multiplicity allowed for any part.
    std::uint64_t max_mult() const;
};

/*
 * Single-consumer pull stream over the partitions of n of a given kind, in
 * decreasing lexicographic order of the part sequence: (n) first, (1^n) or
 * its constrained analogue last. n = 0 yields the empty partition once.
 */
class partition_stream {
public:
    partition_stream(int n, enum_kind kind, int max_n = default_max_n);

    // Returns the next partition, or nullopt once exhausted.
    std::optional<partition> next();

    // Current partition without copying; valid until the next advance().
    const std::vector<part_block>& current() const { return state_; }
    bool done() const { return done_; }
    void advance();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(partition_stream* s) : s_(s) { load(); }

        const partition& operator*() const { return value_; }
        const partition* operator->() const { return &value_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.s_ == b.s_; }

    private:
        void load();
        partition_stream* s_ = nullptr;
        partition value_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    void fill(std::uint64_t remainder, part_t top, std::uint64_t top_room);

    enum_kind kind_;
    std::vector<part_block> state_;
    bool done_ = false;
    bool started_ = false;
};

partition_stream generate(int n, enum_kind kind, int max_n = default_max_n);

using partition_predicate = std::function<bool(const partition&)>;
using partition_statistic = std::function<std::int64_t(const partition&)>;

std::int64_t count_where(int n, enum_kind kind, const partition_predicate& pred,
                         int max_n = default_max_n);

std::int64_t sum_statistic(int n, enum_kind kind, const partition_statistic& stat,
                           int max_n = default_max_n);

// Visits every partition; the callback sees a transient reference. Faster
// than the stream when the caller does not keep the values.
void for_each_partition(int n, enum_kind kind, const std::function<void(const partition&)>& visit,
                        int max_n = default_max_n);

} // namespace partlab
