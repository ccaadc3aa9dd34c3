#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace transversal {

/// A hyperedge: sorted vertex positions.
using HyperEdge = std::vector<std::size_t>;

/// Hypergraphs H_1..H_m over one shared vertex set.
class HypergraphFamily {
public:
    HypergraphFamily() = default;
    HypergraphFamily(std::vector<std::string> vertices,
                     const std::vector<std::vector<std::vector<std::string>>>& hypergraphs);
    static HypergraphFamily indexed(std::size_t vertex_count,
                                    std::vector<std::vector<HyperEdge>> hypergraphs);

    std::size_t size() const { return hypergraphs_.size(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::vector<HyperEdge>>& hypergraphs() const { return hypergraphs_; }
    std::size_t edge_count() const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<HyperEdge>> hypergraphs_;
};

/// selection[i] is the position of the chosen edge inside H_i; the chosen
/// edges are pairwise disjoint.
struct HyperSdr {
    std::vector<std::size_t> selection;
};

bool edges_meet(const HyperEdge& a, const HyperEdge& b);

/// Every edge of `f` meets some edge of `k`.
bool is_pinned(const std::vector<HyperEdge>& f, const std::vector<HyperEdge>& k);

inline constexpr std::size_t kHyperFamilyCeiling = 4;
inline constexpr std::size_t kHyperEdgeCeiling = 12;

struct AhResult {
    bool holds = true;
    std::vector<std::size_t> witness;  // violating subfamily, by hypergraph index
};

/// For every subfamily B: some matching in the union of B's edges cannot be
/// pinned by fewer than |B| disjoint edges of that union.
AhResult ah_condition(const HypergraphFamily& family,
                      std::size_t family_ceiling = kHyperFamilyCeiling,
                      std::size_t edge_ceiling = kHyperEdgeCeiling);

/// Lexicographically least disjoint selection, by backtracking.
std::optional<HyperSdr> find_hyper_sdr(const HypergraphFamily& family,
                                       std::size_t family_ceiling = kHyperFamilyCeiling,
                                       std::size_t edge_ceiling = kHyperEdgeCeiling);

bool validate_hyper_sdr(const HypergraphFamily& family, const HyperSdr& sdr);

} // namespace transversal
