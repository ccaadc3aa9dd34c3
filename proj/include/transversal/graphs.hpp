#pragma once

#include "transversal/core.hpp"
#include "transversal/matching_engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace transversal {

/// Graph with bipartition {A, B}. Vertices are positions in part_a()/part_b();
/// an edge is a pair (a, b).
class BipartiteGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    BipartiteGraph() = default;
    /// Edges may be given in either orientation; duplicates collapse.
    BipartiteGraph(std::vector<std::string> part_a, std::vector<std::string> part_b,
                   const std::vector<std::pair<std::string, std::string>>& edges);
    static BipartiteGraph indexed(std::size_t a_count, std::size_t b_count,
                                  const std::vector<Edge>& edges);

    const std::vector<std::string>& part_a() const { return part_a_; }
    const std::vector<std::string>& part_b() const { return part_b_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const engine::Adjacency& adjacency() const { return adjacency_; }
    bool has_edge(std::size_t a, std::size_t b) const;

private:
    void build(std::vector<Edge> edges);

    std::vector<std::string> part_a_;
    std::vector<std::string> part_b_;
    std::vector<Edge> edges_;
    engine::Adjacency adjacency_;
};

struct Matching {
    std::vector<BipartiteGraph::Edge> edges;
    std::size_t size() const { return edges.size(); }
};

struct VertexCover {
    std::vector<std::size_t> a_side;
    std::vector<std::size_t> b_side;
    std::size_t size() const { return a_side.size() + b_side.size(); }
};

struct KonigResult {
    Matching matching;
    VertexCover cover;
};

struct MatchingOptions {
    bool hopcroft_karp = false;
};

/// A = set indices, B = ground elements, (i, x) iff x in T_i.
BipartiteGraph family_to_graph(const SetFamily& family);
/// T_a = neighbours of a in B.
SetFamily graph_to_family(const BipartiteGraph& graph);

Matching max_matching(const BipartiteGraph& graph, MatchingOptions options = {});
KonigResult konig_cover(const BipartiteGraph& graph, MatchingOptions options = {});

bool is_matching(const BipartiteGraph& graph, const Matching& matching);
bool is_vertex_cover(const BipartiteGraph& graph, const VertexCover& cover);

/// Simple undirected graph on named vertices.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    Graph(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges);
    static Graph indexed(std::size_t vertex_count, const std::vector<Edge>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Each edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u][v]; }
    std::vector<std::size_t> neighbours(std::size_t v) const;
    void add_edge(std::size_t u, std::size_t v);
    Graph complement() const;
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> adjacency_;
};

enum class DisjointMode { edge, vertex };

/// Pairwise disjoint s-t paths (vertex sequences) and a cut of equal size.
/// In edge mode the cut is a set of edges; in vertex mode a set of vertices
/// other than s and t.
struct MengerResult {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<Graph::Edge> edge_cut;
    std::vector<std::size_t> vertex_cut;
    std::size_t cut_size() const { return edge_cut.size() + vertex_cut.size(); }
};

MengerResult menger_paths(const Graph& graph, std::size_t source, std::size_t sink, DisjointMode mode);

/// Checks path validity and disjointness, that removing the cut separates
/// s from t, and |paths| = |cut|. Uses only graph search.
bool validate_menger(const Graph& graph, std::size_t source, std::size_t sink, DisjointMode mode,
                     const MengerResult& result);

/// Directed network with nonnegative integer capacities. Parallel arcs are
/// allowed.
class FlowNetwork {
public:
    struct Arc {
        std::size_t from;
        std::size_t to;
        std::int64_t capacity;
    };

    FlowNetwork() = default;
    FlowNetwork(std::vector<std::string> names, std::vector<Arc> arcs, std::size_t source,
                std::size_t sink);
    static FlowNetwork indexed(std::size_t vertex_count, std::vector<Arc> arcs, std::size_t source,
                               std::size_t sink);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t source() const { return source_; }
    std::size_t sink() const { return sink_; }

private:
    std::vector<std::string> names_;
    std::vector<Arc> arcs_;
    std::size_t source_ = 0;
    std::size_t sink_ = 0;
};

struct FlowResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> flow;       // per arc, aligned with arcs()
    std::vector<std::size_t> cut_arcs;    // arc positions from source side to sink side
    std::vector<bool> source_side;
};

/// Shortest augmenting paths in the residual network; the cut is the set of
/// vertices still reachable from the source.
FlowResult max_flow_min_cut(const FlowNetwork& network);

bool validate_flow(const FlowNetwork& network, const FlowResult& result);

/// Hall through the a/b augmentation: join a new vertex a to every set
/// index and b to every element, then read an SDR off vertex-disjoint a-b
/// paths, or a violator off a minimum a-b separator.
HallResult hall_via_menger(const SetFamily& family);

} // namespace transversal
