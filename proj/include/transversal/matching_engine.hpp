#pragma once

// Index-level bipartite matching shared by every module that needs an SDR.
// Left vertices are 0..adjacency.size()-1, right vertices 0..right_count-1.

#include <cstddef>
#include <span>
#include <vector>

namespace transversal::engine {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Adjacency = std::vector<std::vector<std::size_t>>;

struct BipartiteMatch {
    std::vector<std::size_t> left_mate;   // npos when unmatched
    std::vector<std::size_t> right_mate;  // npos when unmatched

    BipartiteMatch(std::size_t left_count, std::size_t right_count)
        : left_mate(left_count, npos), right_mate(right_count, npos) {}

    std::size_t size() const;
};

enum class Strategy {
    /// One alternating BFS per free left vertex, one augmentation per phase.
    augmenting_bfs,
    /// Layered phases with many vertex-disjoint shortest augmentations.
    hopcroft_karp,
};

/// Tries to grow `match` by one edge along an alternating path that starts
/// at the free left vertex `root`. Neighbours are scanned in adjacency
/// order, so the result is deterministic.
bool augment_from(BipartiteMatch& match, const Adjacency& adjacency, std::size_t root);

BipartiteMatch maximum_matching(const Adjacency& adjacency, std::size_t right_count,
                                Strategy strategy = Strategy::augmenting_bfs);

struct AlternatingReach {
    std::vector<bool> left;
    std::vector<bool> right;
};

/// Vertices reachable from `roots` (left vertices) by alternating paths:
/// left to right along any edge, right to left along matched edges.
AlternatingReach alternating_reach(const BipartiteMatch& match, const Adjacency& adjacency,
                                   std::span<const std::size_t> roots);

} // namespace transversal::engine
