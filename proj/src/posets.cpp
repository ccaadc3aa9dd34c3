#include "transversal/posets.hpp"

#include "transversal/errors.hpp"
#include "transversal/matching_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace transversal {

namespace {

void close_and_validate(std::vector<std::vector<bool>>& less, const std::vector<std::string>& names) {
    const std::size_t n = less.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!less[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (less[k][j]) {
                    less[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (less[i][i]) {
            throw InvalidInput("relation has a cycle through \"" + names[i] + "\"");
        }
    }
}

// Induced subgraph on `vertices` as adjacency bitmasks over local positions.
std::vector<std::uint32_t> local_masks(const Graph& graph, std::span<const std::size_t> vertices) {
    if (vertices.size() > 30) {
        throw ResourceLimit("bitmask routines support at most 30 vertices");
    }
    std::vector<std::uint32_t> masks(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (i != j && graph.adjacent(vertices[i], vertices[j])) {
                masks[i] |= std::uint32_t{1} << j;
            }
        }
    }
    return masks;
}

// omega, chi and independence for every vertex subset, by subset DP.
struct SubsetTables {
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> chi;

    explicit SubsetTables(const std::vector<std::uint32_t>& adj) {
        const std::size_t n = adj.size();
        const std::uint32_t full = (std::uint32_t{1} << n);
        omega.assign(full, 0);
        chi.assign(full, 0);
        std::vector<bool> independent(full, true);
        for (std::uint32_t s = 1; s < full; ++s) {
            const int v = std::countr_zero(s);
            const std::uint32_t rest = s & (s - 1);
            omega[s] = std::max<std::uint8_t>(omega[rest], 1 + omega[s & adj[v]]);
            independent[s] = independent[rest] && (adj[v] & rest) == 0;
        }
        for (std::uint32_t s = 1; s < full; ++s) {
            const std::uint32_t low = s & (~s + 1);
            const std::uint32_t rest = s ^ low;
            std::uint8_t best = 0xff;
            // Colour classes containing the lowest vertex of s.
            for (std::uint32_t t = rest;; t = (t - 1) & rest) {
                const std::uint32_t cls = t | low;
                if (independent[cls]) {
                    best = std::min<std::uint8_t>(best, 1 + chi[s ^ cls]);
                }
                if (t == 0) {
                    break;
                }
            }
            chi[s] = best;
        }
    }
};

std::vector<std::size_t> lift(std::span<const std::size_t> vertices, std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (mask >> i & 1U) {
            out.push_back(vertices[i]);
        }
    }
    return out;
}

// Cycle order of `mask` if it induces a chordless cycle under `adj`.
std::optional<std::vector<std::size_t>> induced_cycle(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    for (std::uint32_t s = mask; s; s &= s - 1) {
        if (std::popcount(adj[std::countr_zero(s)] & mask) != 2) {
            return std::nullopt;
        }
    }
    const std::size_t start = std::countr_zero(mask);
    std::vector<std::size_t> order{start};
    std::size_t previous = start;
    std::uint32_t options = adj[start] & mask;
    std::size_t current = std::countr_zero(options);
    while (current != start) {
        order.push_back(current);
        const std::uint32_t next = adj[current] & mask & ~(std::uint32_t{1} << previous);
        previous = current;
        current = std::countr_zero(next);
    }
    if (order.size() != static_cast<std::size_t>(std::popcount(mask))) {
        return std::nullopt;  // two or more disjoint cycles
    }
    return order;
}

std::vector<std::size_t> all_vertices(const Graph& graph) {
    std::vector<std::size_t> v(graph.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = i;
    }
    return v;
}

} // namespace

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& less_than)
    : names_(std::move(elements)), less_(names_.size(), std::vector<bool>(names_.size(), false)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index.emplace(names_[i], i).second) {
            throw InvalidInput("duplicate poset element \"" + names_[i] + "\"");
        }
    }
    for (const auto& [x, y] : less_than) {
        auto a = index.find(x);
        auto b = index.find(y);
        if (a == index.end() || b == index.end()) {
            throw InvalidInput("pair (\"" + x + "\", \"" + y + "\") names an unknown element");
        }
        less_[a->second][b->second] = true;
    }
    close_and_validate(less_, names_);
}

Poset Poset::indexed(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& less_than) {
    Poset poset;
    for (std::size_t i = 0; i < count; ++i) {
        poset.names_.push_back(std::to_string(i));
    }
    poset.less_.assign(count, std::vector<bool>(count, false));
    for (auto [x, y] : less_than) {
        if (x >= count || y >= count) {
            throw InvalidInput("pair (" + std::to_string(x) + ", " + std::to_string(y) + ") is out of range");
        }
        poset.less_[x][y] = true;
    }
    close_and_validate(poset.less_, poset.names_);
    return poset;
}

bool is_chain(const Poset& poset, std::span<const std::size_t> elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (!poset.comparable(elements[i], elements[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_antichain(const Poset& poset, std::span<const std::size_t> elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (elements[i] == elements[j] || poset.comparable(elements[i], elements[j])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

template <typename Parts, typename Check>
bool is_partition(const Poset& poset, const Parts& parts, Check check) {
    std::vector<bool> seen(poset.size(), false);
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (part.empty()) {
            return false;
        }
        for (std::size_t x : part) {
            if (x >= poset.size() || seen[x]) {
                return false;
            }
            seen[x] = true;
            ++total;
        }
        if (!check(poset, std::span<const std::size_t>(part))) {
            return false;
        }
    }
    return total == poset.size();
}

} // namespace

bool is_chain_partition(const Poset& poset, const ChainPartition& partition) {
    return is_partition(poset, partition.chains, is_chain);
}

bool is_antichain_partition(const Poset& poset, const AntichainPartition& partition) {
    return is_partition(poset, partition.antichains, is_antichain);
}

DilworthResult dilworth(const Poset& poset) {
    const std::size_t n = poset.size();
    // Split graph: left copy x -> right copy y whenever x < y. Each matched
    // edge glues two consecutive chain elements.
    engine::Adjacency split(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (poset.less(x, y)) {
                split[x].push_back(y);
            }
        }
    }
    const auto match = engine::maximum_matching(split, n);

    DilworthResult result;
    for (std::size_t x = 0; x < n; ++x) {
        if (match.right_mate[x] != engine::npos) {
            continue;  // x has a predecessor in its chain
        }
        std::vector<std::size_t> chain;
        for (std::size_t y = x; y != engine::npos; y = match.left_mate[y]) {
            chain.push_back(y);
        }
        result.partition.chains.push_back(std::move(chain));
    }

    // Konig cover of the split graph; elements with neither copy in the
    // cover are pairwise incomparable.
    std::vector<std::size_t> exposed;
    for (std::size_t x = 0; x < n; ++x) {
        if (match.left_mate[x] == engine::npos) {
            exposed.push_back(x);
        }
    }
    const auto reach = engine::alternating_reach(match, split, exposed);
    for (std::size_t x = 0; x < n; ++x) {
        if (reach.left[x] && !reach.right[x]) {
            result.antichain.push_back(x);
        }
    }
    return result;
}

MirskyResult mirsky(const Poset& poset) {
    const std::size_t n = poset.size();
    MirskyResult result;
    std::vector<bool> removed(n, false);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::vector<std::size_t> maximal;
        for (std::size_t x = 0; x < n; ++x) {
            if (removed[x]) {
                continue;
            }
            bool is_max = true;
            for (std::size_t y = 0; y < n && is_max; ++y) {
                is_max = removed[y] || !poset.less(x, y);
            }
            if (is_max) {
                maximal.push_back(x);
            }
        }
        for (std::size_t x : maximal) {
            removed[x] = true;
        }
        remaining -= maximal.size();
        result.partition.antichains.push_back(std::move(maximal));
    }

    // height[x] = elements in the longest chain starting at x.
    std::vector<std::size_t> height(n, 0);
    for (std::size_t level = 0; level < result.partition.antichains.size(); ++level) {
        for (std::size_t x : result.partition.antichains[level]) {
            height[x] = level + 1;
        }
    }
    if (n > 0) {
        std::size_t x = 0;
        for (std::size_t y = 0; y < n; ++y) {
            if (height[y] > height[x]) {
                x = y;
            }
        }
        result.chain.push_back(x);
        while (height[x] > 1) {
            for (std::size_t y = 0; y < n; ++y) {
                if (poset.less(x, y) && height[y] == height[x] - 1) {
                    x = y;
                    break;
                }
            }
            result.chain.push_back(x);
        }
    }
    return result;
}

HallResult hall_from_dilworth(const SetFamily& family) {
    const std::size_t m = family.ground_size();
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (family.set(i).empty()) {
            return HallViolator{{i}, {}};
        }
    }
    // Elements of S come first, then the set indices; a < i iff a in T_i.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x : family.set(i)) {
            pairs.emplace_back(x, m + i);
        }
    }
    const auto result = dilworth(Poset::indexed(m + n, pairs));

    if (result.partition.chains.size() == m) {
        Sdr sdr{std::vector<std::size_t>(n, engine::npos)};
        for (const auto& chain : result.partition.chains) {
            if (chain.size() == 2) {
                sdr.reps[chain[1] - m] = chain[0];
            }
        }
        return sdr;
    }
    // An antichain larger than |S| holds set indices K and elements outside
    // their union, so the union is smaller than K.
    HallViolator violator;
    for (std::size_t x : result.antichain) {
        if (x >= m) {
            violator.indices.push_back(x - m);
        }
    }
    violator.union_elements = family.union_of(violator.indices);
    return violator;
}

Graph comparability_graph(const Poset& poset, bool complement) {
    Graph graph(poset.size());
    for (std::size_t x = 0; x < poset.size(); ++x) {
        for (std::size_t y = x + 1; y < poset.size(); ++y) {
            if (poset.comparable(x, y) != complement) {
                graph.add_edge(x, y);
            }
        }
    }
    return Graph(poset.names(), [&] {
        std::vector<std::pair<std::string, std::string>> named;
        for (auto [u, v] : graph.edges()) {
            named.emplace_back(poset.names()[u], poset.names()[v]);
        }
        return named;
    }());
}

std::size_t clique_number(const Graph& graph, std::span<const std::size_t> vertices) {
    const auto adj = local_masks(graph, vertices);
    const std::uint32_t full = (std::uint32_t{1} << vertices.size()) - 1;
    // Branch on the lowest vertex: skip it, or take it and keep its neighbours.
    auto best = [&](auto&& self, std::uint32_t s) -> std::size_t {
        if (s == 0) {
            return 0;
        }
        const int v = std::countr_zero(s);
        return std::max(self(self, s & (s - 1)), 1 + self(self, s & adj[v]));
    };
    return best(best, full);
}

std::size_t chromatic_number(const Graph& graph, std::span<const std::size_t> vertices) {
    check_ceiling(vertices.size(), 20, "chromatic number vertex count");
    const auto adj = local_masks(graph, vertices);
    return SubsetTables(adj).chi.back();
}

PerfectResult is_perfect(const Graph& graph, std::size_t ceiling) {
    check_ceiling(graph.size(), std::min<std::size_t>(ceiling, 20), "graph size");
    const auto vertices = all_vertices(graph);
    const auto adj = local_masks(graph, vertices);
    const SubsetTables tables(adj);
    const std::uint32_t full = std::uint32_t{1} << graph.size();

    // Smallest failing induced subgraph, ties broken by mask order.
    PerfectResult result;
    int best_size = -1;
    for (std::uint32_t s = 1; s < full; ++s) {
        if (tables.omega[s] == tables.chi[s]) {
            continue;
        }
        const int size = std::popcount(s);
        if (best_size < 0 || size < best_size) {
            best_size = size;
            result.perfect = false;
            result.witness = lift(vertices, s);
            result.clique_number = tables.omega[s];
            result.chromatic_number = tables.chi[s];
        }
    }
    return result;
}

BergeResult berge_check(const Graph& graph, std::size_t ceiling) {
    check_ceiling(graph.size(), std::min<std::size_t>(ceiling, 30), "graph size");
    const auto vertices = all_vertices(graph);
    const auto adj = local_masks(graph, vertices);
    std::vector<std::uint32_t> co_adj(adj.size());
    const std::uint32_t all = graph.size() == 0 ? 0 : (std::uint32_t{1} << graph.size()) - 1;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        co_adj[v] = all & ~adj[v] & ~(std::uint32_t{1} << v);
    }
    for (std::size_t length = 5; length <= graph.size(); length += 2) {
        for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != length) {
                continue;
            }
            if (auto cycle = induced_cycle(adj, s)) {
                std::vector<std::size_t> order;
                for (std::size_t local : *cycle) {
                    order.push_back(vertices[local]);
                }
                return {false, std::move(order), false};
            }
            if (auto cycle = induced_cycle(co_adj, s)) {
                std::vector<std::size_t> order;
                for (std::size_t local : *cycle) {
                    order.push_back(vertices[local]);
                }
                return {false, std::move(order), true};
            }
        }
    }
    return {};
}

} // namespace transversal
