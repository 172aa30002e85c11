#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "annigraph/bitset.hpp"
#include "annigraph/error.hpp"
#include "annigraph/partition.hpp"

namespace annigraph {

/// Undirected simple graph with bitset adjacency rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::int64_t n)
        : n_(n), rows_(static_cast<std::size_t>(n), DynBitset(static_cast<std::size_t>(n))) {}

    /// Adopts prebuilt rows; they must be symmetric with a zero diagonal.
    explicit SimpleGraph(std::vector<DynBitset> rows);

    std::int64_t n() const { return n_; }

    void add_edge(std::int64_t u, std::int64_t v) {
        if (u == v) throw Error(ErrorKind::InvalidGroup, "no self loops in a simple graph");
        rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }

    bool has_edge(std::int64_t u, std::int64_t v) const {
        return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    std::int64_t degree(std::int64_t v) const {
        return static_cast<std::int64_t>(rows_[static_cast<std::size_t>(v)].count());
    }

    const DynBitset& row(std::int64_t v) const { return rows_[static_cast<std::size_t>(v)]; }

    std::int64_t edge_count() const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<std::int64_t, std::int64_t>> edges() const;

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    bool operator==(const SimpleGraph&) const = default;

private:
    std::int64_t n_ = 0;
    std::vector<DynBitset> rows_;
};

/// Non-increasing sequence of the non-zero vertex degrees.
IntPartition degree_sequence(const SimpleGraph& g);

/// Classes of the twin relation u ~ v iff N(u)\{v} = N(v)\{u} (union-closed).
/// Classes are sorted by smallest member; members ascending.
std::vector<std::vector<std::int64_t>> twin_orbits(const SimpleGraph& g);

}  // namespace annigraph
