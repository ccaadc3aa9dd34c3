#include "transversal/graphs.hpp"

#include "transversal/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

namespace transversal {

namespace {

std::unordered_map<std::string, std::size_t> name_index(const std::vector<std::string>& names,
                                                        const std::string& what) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], i).second) {
            throw InvalidInput("duplicate " + what + " \"" + names[i] + "\"");
        }
    }
    return index;
}

std::vector<std::string> decimal_names(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(std::to_string(i));
    }
    return names;
}

// Residual network for augmenting-path max flow. Arcs are stored in pairs:
// arc 2k is forward, arc 2k+1 its reverse.
class Residual {
public:
    explicit Residual(std::size_t vertex_count) : out_(vertex_count) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
        const std::size_t id = to_.size();
        to_.push_back(to);
        capacity_.push_back(capacity);
        out_[from].push_back(id);
        to_.push_back(from);
        capacity_.push_back(0);
        out_[to].push_back(id + 1);
        return id;
    }

    std::int64_t flow_on(std::size_t arc) const { return capacity_[arc ^ 1]; }
    std::size_t head(std::size_t arc) const { return to_[arc]; }
    std::size_t tail(std::size_t arc) const { return to_[arc ^ 1]; }

    std::int64_t max_flow(std::size_t source, std::size_t sink) {
        std::int64_t total = 0;
        if (source == sink) {
            return 0;
        }
        while (true) {
            std::vector<std::size_t> via(out_.size(), kNone);
            std::vector<bool> seen(out_.size(), false);
            std::queue<std::size_t> queue;
            queue.push(source);
            seen[source] = true;
            while (!queue.empty() && !seen[sink]) {
                const std::size_t u = queue.front();
                queue.pop();
                for (std::size_t arc : out_[u]) {
                    const std::size_t v = to_[arc];
                    if (!seen[v] && capacity_[arc] > 0) {
                        seen[v] = true;
                        via[v] = arc;
                        queue.push(v);
                    }
                }
            }
            if (!seen[sink]) {
                return total;
            }
            std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
            for (std::size_t v = sink; v != source; v = tail(via[v])) {
                bottleneck = std::min(bottleneck, capacity_[via[v]]);
            }
            for (std::size_t v = sink; v != source; v = tail(via[v])) {
                capacity_[via[v]] -= bottleneck;
                capacity_[via[v] ^ 1] += bottleneck;
            }
            total += bottleneck;
        }
    }

    std::vector<bool> reachable_from(std::size_t source) const {
        std::vector<bool> seen(out_.size(), false);
        std::queue<std::size_t> queue;
        queue.push(source);
        seen[source] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t arc : out_[u]) {
                if (capacity_[arc] > 0 && !seen[to_[arc]]) {
                    seen[to_[arc]] = true;
                    queue.push(to_[arc]);
                }
            }
        }
        return seen;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> to_;
    std::vector<std::int64_t> capacity_;
};

// Splits a unit flow into simple source-sink walks. `arcs` holds
// (from, to, flow) with nonnegative integer flow; cycles are discarded.
std::vector<std::vector<std::size_t>> decompose_paths(
    std::size_t vertex_count, const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& arcs,
    std::size_t source, std::size_t sink) {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> out(vertex_count);
    for (auto [from, to, flow] : arcs) {
        if (flow > 0) {
            out[from].emplace_back(to, flow);
        }
    }
    std::vector<std::size_t> cursor(vertex_count, 0);
    auto take = [&](std::size_t u) -> std::size_t {
        while (cursor[u] < out[u].size()) {
            auto& [to, flow] = out[u][cursor[u]];
            if (flow > 0) {
                --flow;
                return to;
            }
            ++cursor[u];
        }
        return static_cast<std::size_t>(-1);
    };

    std::vector<std::vector<std::size_t>> paths;
    while (true) {
        std::vector<std::size_t> path{source};
        std::vector<std::size_t> position(vertex_count, static_cast<std::size_t>(-1));
        position[source] = 0;
        std::size_t u = source;
        while (u != sink) {
            const std::size_t v = take(u);
            if (v == static_cast<std::size_t>(-1)) {
                return paths;
            }
            if (position[v] != static_cast<std::size_t>(-1)) {
                for (std::size_t k = position[v] + 1; k < path.size(); ++k) {
                    position[path[k]] = static_cast<std::size_t>(-1);
                }
                path.resize(position[v] + 1);
            } else {
                position[v] = path.size();
                path.push_back(v);
            }
            u = v;
        }
        paths.push_back(std::move(path));
    }
}

bool connected_without(const Graph& graph, std::size_t source, std::size_t sink,
                       const std::set<std::pair<std::size_t, std::size_t>>& removed_edges,
                       const std::vector<bool>& removed_vertices) {
    std::vector<bool> seen(graph.size(), false);
    std::queue<std::size_t> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        if (u == sink) {
            return true;
        }
        for (std::size_t v : graph.neighbours(u)) {
            if (seen[v] || removed_vertices[v] ||
                removed_edges.count({std::min(u, v), std::max(u, v)})) {
                continue;
            }
            seen[v] = true;
            queue.push(v);
        }
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Bipartite graphs

BipartiteGraph::BipartiteGraph(std::vector<std::string> part_a, std::vector<std::string> part_b,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : part_a_(std::move(part_a)), part_b_(std::move(part_b)) {
    const auto a_index = name_index(part_a_, "vertex");
    const auto b_index = name_index(part_b_, "vertex");
    for (const auto& name : part_a_) {
        if (b_index.count(name)) {
            throw InvalidInput("vertex \"" + name + "\" is in both parts");
        }
    }
    std::vector<Edge> resolved;
    for (const auto& [x, y] : edges) {
        if (a_index.count(x) && b_index.count(y)) {
            resolved.emplace_back(a_index.at(x), b_index.at(y));
        } else if (a_index.count(y) && b_index.count(x)) {
            resolved.emplace_back(a_index.at(y), b_index.at(x));
        } else {
            throw InvalidInput("edge (\"" + x + "\", \"" + y + "\") does not join the two parts");
        }
    }
    build(std::move(resolved));
}

BipartiteGraph BipartiteGraph::indexed(std::size_t a_count, std::size_t b_count,
                                       const std::vector<Edge>& edges) {
    BipartiteGraph graph;
    for (std::size_t i = 0; i < a_count; ++i) {
        graph.part_a_.push_back("a" + std::to_string(i));
    }
    for (std::size_t j = 0; j < b_count; ++j) {
        graph.part_b_.push_back("b" + std::to_string(j));
    }
    for (auto [a, b] : edges) {
        if (a >= a_count || b >= b_count) {
            throw InvalidInput("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") is out of range");
        }
    }
    graph.build(edges);
    return graph;
}

void BipartiteGraph::build(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacency_.assign(part_a_.size(), {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
    }
}

bool BipartiteGraph::has_edge(std::size_t a, std::size_t b) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

BipartiteGraph family_to_graph(const SetFamily& family) {
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t x : family.set(i)) {
            edges.emplace_back(i, x);
        }
    }
    return BipartiteGraph::indexed(family.size(), family.ground_size(), edges);
}

SetFamily graph_to_family(const BipartiteGraph& graph) {
    return SetFamily::indexed(graph.part_b(), graph.adjacency());
}

Matching max_matching(const BipartiteGraph& graph, MatchingOptions options) {
    const auto match = engine::maximum_matching(
        graph.adjacency(), graph.part_b().size(),
        options.hopcroft_karp ? engine::Strategy::hopcroft_karp : engine::Strategy::augmenting_bfs);
    Matching out;
    for (std::size_t a = 0; a < match.left_mate.size(); ++a) {
        if (match.left_mate[a] != engine::npos) {
            out.edges.emplace_back(a, match.left_mate[a]);
        }
    }
    return out;
}

KonigResult konig_cover(const BipartiteGraph& graph, MatchingOptions options) {
    KonigResult result{max_matching(graph, options), {}};
    engine::BipartiteMatch match(graph.part_a().size(), graph.part_b().size());
    for (auto [a, b] : result.matching.edges) {
        match.left_mate[a] = b;
        match.right_mate[b] = a;
    }
    std::vector<std::size_t> exposed;
    for (std::size_t a = 0; a < graph.part_a().size(); ++a) {
        if (match.left_mate[a] == engine::npos) {
            exposed.push_back(a);
        }
    }
    // Z = alternating reach of the exposed A-vertices; (A \ Z) u (B n Z)
    // covers every edge and has one vertex per matching edge.
    const auto reach = engine::alternating_reach(match, graph.adjacency(), exposed);
    for (std::size_t a = 0; a < graph.part_a().size(); ++a) {
        if (!reach.left[a]) {
            result.cover.a_side.push_back(a);
        }
    }
    for (std::size_t b = 0; b < graph.part_b().size(); ++b) {
        if (reach.right[b]) {
            result.cover.b_side.push_back(b);
        }
    }
    return result;
}

bool is_matching(const BipartiteGraph& graph, const Matching& matching) {
    std::set<std::size_t> a_used;
    std::set<std::size_t> b_used;
    for (auto [a, b] : matching.edges) {
        if (!graph.has_edge(a, b) || !a_used.insert(a).second || !b_used.insert(b).second) {
            return false;
        }
    }
    return true;
}

bool is_vertex_cover(const BipartiteGraph& graph, const VertexCover& cover) {
    std::vector<bool> in_a(graph.part_a().size(), false);
    std::vector<bool> in_b(graph.part_b().size(), false);
    for (std::size_t a : cover.a_side) {
        if (a >= in_a.size() || in_a[a]) {
            return false;
        }
        in_a[a] = true;
    }
    for (std::size_t b : cover.b_side) {
        if (b >= in_b.size() || in_b[b]) {
            return false;
        }
        in_b[b] = true;
    }
    return std::all_of(graph.edges().begin(), graph.edges().end(),
                       [&](const auto& e) { return in_a[e.first] || in_b[e.second]; });
}

// ---------------------------------------------------------------------------
// Simple graphs

Graph::Graph(std::size_t vertex_count)
    : names_(decimal_names(vertex_count)),
      adjacency_(vertex_count, std::vector<bool>(vertex_count, false)) {}

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)), adjacency_(names_.size(), std::vector<bool>(names_.size(), false)) {
    const auto index = name_index(names_, "vertex");
    for (const auto& [x, y] : edges) {
        auto u = index.find(x);
        auto v = index.find(y);
        if (u == index.end() || v == index.end()) {
            throw InvalidInput("edge (\"" + x + "\", \"" + y + "\") names an unknown vertex");
        }
        add_edge(u->second, v->second);
    }
}

Graph Graph::indexed(std::size_t vertex_count, const std::vector<Edge>& edges) {
    Graph graph(vertex_count);
    for (auto [u, v] : edges) {
        graph.add_edge(u, v);
    }
    return graph;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) {
        throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is out of range");
    }
    if (u == v) {
        throw InvalidInput("loop at vertex \"" + names_[u] + "\"");
    }
    adjacency_[u][v] = adjacency_[v][u] = true;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
            if (adjacency_[u][v]) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

std::vector<std::size_t> Graph::neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < size(); ++u) {
        if (adjacency_[v][u]) {
            out.push_back(u);
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph out = *this;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = 0; v < size(); ++v) {
            out.adjacency_[u][v] = u != v && !adjacency_[u][v];
        }
    }
    return out;
}

std::optional<std::size_t> Graph::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Menger

MengerResult menger_paths(const Graph& graph, std::size_t source, std::size_t sink, DisjointMode mode) {
    if (source >= graph.size() || sink >= graph.size()) {
        throw InvalidInput("terminal out of range");
    }
    if (source == sink) {
        throw InvalidInput("source and sink coincide");
    }
    MengerResult result;
    const auto edges = graph.edges();

    if (mode == DisjointMode::edge) {
        Residual net(graph.size());
        std::vector<std::pair<std::size_t, std::size_t>> arc_pairs;
        for (auto [u, v] : edges) {
            arc_pairs.emplace_back(net.add_arc(u, v, 1), net.add_arc(v, u, 1));
        }
        net.max_flow(source, sink);
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> flows;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            // Opposite unit flows on one edge cancel.
            const auto net_flow = net.flow_on(arc_pairs[k].first) - net.flow_on(arc_pairs[k].second);
            if (net_flow > 0) {
                flows.emplace_back(edges[k].first, edges[k].second, net_flow);
            } else if (net_flow < 0) {
                flows.emplace_back(edges[k].second, edges[k].first, -net_flow);
            }
        }
        result.paths = decompose_paths(graph.size(), flows, source, sink);
        const auto side = net.reachable_from(source);
        for (auto [u, v] : edges) {
            if (side[u] != side[v]) {
                result.edge_cut.emplace_back(u, v);
            }
        }
        return result;
    }

    if (graph.adjacent(source, sink)) {
        throw InvalidInput("vertex-disjoint mode needs non-adjacent terminals");
    }
    // Vertex v splits into in = 2v and out = 2v + 1 joined by a unit arc;
    // graph edges get a capacity no vertex cut can reach.
    const std::int64_t big = static_cast<std::int64_t>(graph.size()) + 1;
    Residual net(2 * graph.size());
    std::vector<std::size_t> through(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) {
        const bool terminal = v == source || v == sink;
        through[v] = net.add_arc(2 * v, 2 * v + 1, terminal ? big : 1);
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edge_arcs;
    for (auto [u, v] : edges) {
        edge_arcs.emplace_back(net.add_arc(2 * u + 1, 2 * v, big), 2 * u + 1, 2 * v);
        edge_arcs.emplace_back(net.add_arc(2 * v + 1, 2 * u, big), 2 * v + 1, 2 * u);
    }
    net.max_flow(2 * source + 1, 2 * sink);

    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> flows;
    for (std::size_t v = 0; v < graph.size(); ++v) {
        flows.emplace_back(2 * v, 2 * v + 1, net.flow_on(through[v]));
    }
    for (auto [arc, from, to] : edge_arcs) {
        flows.emplace_back(from, to, net.flow_on(arc));
    }
    for (auto& split_path : decompose_paths(2 * graph.size(), flows, 2 * source + 1, 2 * sink)) {
        std::vector<std::size_t> path;
        for (std::size_t node : split_path) {
            if (path.empty() || path.back() != node / 2) {
                path.push_back(node / 2);
            }
        }
        result.paths.push_back(std::move(path));
    }
    const auto side = net.reachable_from(2 * source + 1);
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (v != source && v != sink && side[2 * v] && !side[2 * v + 1]) {
            result.vertex_cut.push_back(v);
        }
    }
    return result;
}

bool validate_menger(const Graph& graph, std::size_t source, std::size_t sink, DisjointMode mode,
                     const MengerResult& result) {
    std::set<std::pair<std::size_t, std::size_t>> used_edges;
    std::vector<bool> used_vertices(graph.size(), false);
    for (const auto& path : result.paths) {
        if (path.size() < 2 || path.front() != source || path.back() != sink) {
            return false;
        }
        std::set<std::size_t> on_path;
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (path[k] >= graph.size() || !on_path.insert(path[k]).second) {
                return false;
            }
            if (k + 1 < path.size()) {
                const std::size_t u = path[k];
                const std::size_t v = path[k + 1];
                if (v >= graph.size() || !graph.adjacent(u, v)) {
                    return false;
                }
                if (mode == DisjointMode::edge && !used_edges.insert({std::min(u, v), std::max(u, v)}).second) {
                    return false;
                }
            }
            if (mode == DisjointMode::vertex && k > 0 && k + 1 < path.size()) {
                if (used_vertices[path[k]]) {
                    return false;
                }
                used_vertices[path[k]] = true;
            }
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> removed_edges;
    std::vector<bool> removed_vertices(graph.size(), false);
    if (mode == DisjointMode::edge) {
        if (!result.vertex_cut.empty()) {
            return false;
        }
        for (auto [u, v] : result.edge_cut) {
            if (u >= graph.size() || v >= graph.size() || !graph.adjacent(u, v) ||
                !removed_edges.insert({std::min(u, v), std::max(u, v)}).second) {
                return false;
            }
        }
    } else {
        if (!result.edge_cut.empty()) {
            return false;
        }
        for (std::size_t v : result.vertex_cut) {
            if (v >= graph.size() || v == source || v == sink || removed_vertices[v]) {
                return false;
            }
            removed_vertices[v] = true;
        }
    }
    return result.paths.size() == result.cut_size() &&
           !connected_without(graph, source, sink, removed_edges, removed_vertices);
}

// ---------------------------------------------------------------------------
// Flow networks

FlowNetwork::FlowNetwork(std::vector<std::string> names, std::vector<Arc> arcs, std::size_t source,
                         std::size_t sink)
    : names_(std::move(names)), arcs_(std::move(arcs)), source_(source), sink_(sink) {
    name_index(names_, "vertex");
    if (source_ >= names_.size() || sink_ >= names_.size()) {
        throw InvalidInput("source or sink out of range");
    }
    if (source_ == sink_) {
        throw InvalidInput("source and sink coincide");
    }
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        const auto& arc = arcs_[k];
        if (arc.from >= names_.size() || arc.to >= names_.size()) {
            throw InvalidInput("arc " + std::to_string(k) + " is out of range");
        }
        if (arc.capacity < 0) {
            throw InvalidInput("arc " + std::to_string(k) + " has negative capacity");
        }
    }
}

FlowNetwork FlowNetwork::indexed(std::size_t vertex_count, std::vector<Arc> arcs, std::size_t source,
                                 std::size_t sink) {
    return FlowNetwork(decimal_names(vertex_count), std::move(arcs), source, sink);
}

FlowResult max_flow_min_cut(const FlowNetwork& network) {
    Residual net(network.size());
    std::vector<std::size_t> ids;
    for (const auto& arc : network.arcs()) {
        ids.push_back(net.add_arc(arc.from, arc.to, arc.capacity));
    }
    FlowResult result;
    result.value = net.max_flow(network.source(), network.sink());
    for (std::size_t id : ids) {
        result.flow.push_back(net.flow_on(id));
    }
    result.source_side = net.reachable_from(network.source());
    for (std::size_t k = 0; k < network.arcs().size(); ++k) {
        const auto& arc = network.arcs()[k];
        if (result.source_side[arc.from] && !result.source_side[arc.to]) {
            result.cut_arcs.push_back(k);
        }
    }
    return result;
}

bool validate_flow(const FlowNetwork& network, const FlowResult& result) {
    const auto& arcs = network.arcs();
    if (result.flow.size() != arcs.size() || result.source_side.size() != network.size()) {
        return false;
    }
    std::vector<std::int64_t> excess(network.size(), 0);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (result.flow[k] < 0 || result.flow[k] > arcs[k].capacity) {
            return false;
        }
        excess[arcs[k].from] -= result.flow[k];
        excess[arcs[k].to] += result.flow[k];
    }
    for (std::size_t v = 0; v < network.size(); ++v) {
        if (v != network.source() && v != network.sink() && excess[v] != 0) {
            return false;
        }
    }
    if (-excess[network.source()] != result.value || excess[network.sink()] != result.value) {
        return false;
    }
    if (!result.source_side[network.source()] || result.source_side[network.sink()]) {
        return false;
    }
    std::vector<std::size_t> crossing;
    std::int64_t capacity = 0;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (result.source_side[arcs[k].from] && !result.source_side[arcs[k].to]) {
            crossing.push_back(k);
            capacity += arcs[k].capacity;
        }
    }
    return crossing == result.cut_arcs && capacity == result.value;
}

// ---------------------------------------------------------------------------
// Hall via Menger

HallResult hall_via_menger(const SetFamily& family) {
    const std::size_t n = family.size();
    const std::size_t m = family.ground_size();
    // a = 0, set i = 1 + i, element x = 1 + n + x, b = 1 + n + m.
    const std::size_t a = 0;
    const std::size_t b = 1 + n + m;
    Graph graph(n + m + 2);
    for (std::size_t i = 0; i < n; ++i) {
        graph.add_edge(a, 1 + i);
        for (std::size_t x : family.set(i)) {
            graph.add_edge(1 + i, 1 + n + x);
        }
    }
    for (std::size_t x = 0; x < m; ++x) {
        graph.add_edge(1 + n + x, b);
    }
    const auto menger = menger_paths(graph, a, b, DisjointMode::vertex);

    Sdr sdr{std::vector<std::size_t>(n, engine::npos)};
    std::size_t matched = 0;
    for (const auto& path : menger.paths) {
        // a, set, element, ..., b: consecutive interior pairs are disjoint
        // set-element edges.
        for (std::size_t k = 1; k + 2 < path.size(); k += 2) {
            const std::size_t set = path[k] - 1;
            const std::size_t element = path[k + 1] - 1 - n;
            if (sdr.reps[set] != engine::npos) {
                break;
            }
            sdr.reps[set] = element;
            ++matched;
        }
    }
    if (matched == n) {
        return sdr;
    }
    // Sets outside a minimum a-b separator only see separator elements.
    std::vector<bool> in_cut(graph.size(), false);
    for (std::size_t v : menger.vertex_cut) {
        in_cut[v] = true;
    }
    HallViolator violator;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_cut[1 + i]) {
            violator.indices.push_back(i);
        }
    }
    violator.union_elements = family.union_of(violator.indices);
    return violator;
}

} // namespace transversal
