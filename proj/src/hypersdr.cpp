#include "transversal/hypersdr.hpp"

#include "transversal/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace transversal {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const HyperEdge& edge) {
    Mask m = 0;
    for (std::size_t v : edge) {
        m |= Mask{1} << v;
    }
    return m;
}

void check_scale(const HypergraphFamily& family, std::size_t family_ceiling, std::size_t edge_ceiling) {
    check_ceiling(family.size(), family_ceiling, "hypergraph family size");
    check_ceiling(family.edge_count(), edge_ceiling, "total hyperedge count");
    check_ceiling(family.vertex_count(), 64, "hypergraph vertex count");
}

void normalize_edge(HyperEdge& edge, std::size_t vertex_count, const std::string& where) {
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.empty()) {
        throw InvalidInput(where + " is empty");
    }
    if (edge.back() >= vertex_count) {
        throw InvalidInput(where + " names a vertex out of range");
    }
}

// Every pairwise disjoint subset of `edges`, as (edge subset mask, vertex union).
std::vector<std::pair<std::uint32_t, Mask>> disjoint_subsets(const std::vector<Mask>& edges) {
    std::vector<std::pair<std::uint32_t, Mask>> out{{0, 0}};
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::size_t existing = out.size();
        for (std::size_t k = 0; k < existing; ++k) {
            if ((out[k].second & edges[e]) == 0) {
                out.emplace_back(out[k].first | (std::uint32_t{1} << e), out[k].second | edges[e]);
            }
        }
    }
    return out;
}

} // namespace

HypergraphFamily::HypergraphFamily(std::vector<std::string> vertices,
                                   const std::vector<std::vector<std::vector<std::string>>>& hypergraphs)
    : vertices_(std::move(vertices)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!index.emplace(vertices_[v], v).second) {
            throw InvalidInput("duplicate vertex \"" + vertices_[v] + "\"");
        }
    }
    for (std::size_t h = 0; h < hypergraphs.size(); ++h) {
        std::vector<HyperEdge> edges;
        for (std::size_t e = 0; e < hypergraphs[h].size(); ++e) {
            const std::string where = "edge " + std::to_string(e) + " of hypergraph " + std::to_string(h);
            HyperEdge edge;
            for (const auto& name : hypergraphs[h][e]) {
                auto it = index.find(name);
                if (it == index.end()) {
                    throw InvalidInput(where + " contains unknown vertex \"" + name + "\"");
                }
                edge.push_back(it->second);
            }
            normalize_edge(edge, vertices_.size(), where);
            edges.push_back(std::move(edge));
        }
        hypergraphs_.push_back(std::move(edges));
    }
}

HypergraphFamily HypergraphFamily::indexed(std::size_t vertex_count, std::vector<std::vector<HyperEdge>> hypergraphs) {
    HypergraphFamily family;
    for (std::size_t v = 0; v < vertex_count; ++v) {
        family.vertices_.push_back(std::to_string(v));
    }
    for (std::size_t h = 0; h < hypergraphs.size(); ++h) {
        for (std::size_t e = 0; e < hypergraphs[h].size(); ++e) {
            normalize_edge(hypergraphs[h][e], vertex_count,
                           "edge " + std::to_string(e) + " of hypergraph " + std::to_string(h));
        }
    }
    family.hypergraphs_ = std::move(hypergraphs);
    return family;
}

std::size_t HypergraphFamily::edge_count() const {
    std::size_t total = 0;
    for (const auto& h : hypergraphs_) {
        total += h.size();
    }
    return total;
}

bool edges_meet(const HyperEdge& a, const HyperEdge& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            return true;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

bool is_pinned(const std::vector<HyperEdge>& f, const std::vector<HyperEdge>& k) {
    return std::all_of(f.begin(), f.end(), [&](const HyperEdge& edge) {
        return std::any_of(k.begin(), k.end(), [&](const HyperEdge& pin) { return edges_meet(edge, pin); });
    });
}

AhResult ah_condition(const HypergraphFamily& family, std::size_t family_ceiling, std::size_t edge_ceiling) {
    check_scale(family, family_ceiling, edge_ceiling);
    const std::size_t m = family.size();
    std::vector<std::vector<Mask>> masks(m);
    for (std::size_t h = 0; h < m; ++h) {
        for (const auto& edge : family.hypergraphs()[h]) {
            masks[h].push_back(to_mask(edge));
        }
    }

    // Subfamilies by size, then by index mask, so the witness is a smallest one.
    std::vector<std::uint32_t> subfamilies;
    for (std::uint32_t b = 1; b < (std::uint32_t{1} << m); ++b) {
        subfamilies.push_back(b);
    }
    std::stable_sort(subfamilies.begin(), subfamilies.end(),
                     [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });

    for (std::uint32_t b : subfamilies) {
        const auto needed = static_cast<std::size_t>(std::popcount(b));
        std::vector<Mask> pooled;
        for (std::size_t h = 0; h < m; ++h) {
            if (b >> h & 1U) {
                pooled.insert(pooled.end(), masks[h].begin(), masks[h].end());
            }
        }
        std::sort(pooled.begin(), pooled.end());
        pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
        const auto disjoint = disjoint_subsets(pooled);

        // A matching is pinned by K exactly when each of its edges meets
        // the vertex union of K.
        bool witnessed = false;
        for (const auto& [matching, matching_vertices] : disjoint) {
            bool pinned_by_small = false;
            for (const auto& [pins, pin_vertices] : disjoint) {
                if (static_cast<std::size_t>(std::popcount(pins)) >= needed) {
                    continue;
                }
                bool all_met = true;
                for (std::uint32_t rest = matching; rest && all_met; rest &= rest - 1) {
                    all_met = (pooled[std::countr_zero(rest)] & pin_vertices) != 0;
                }
                if (all_met) {
                    pinned_by_small = true;
                    break;
                }
            }
            if (!pinned_by_small) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) {
            AhResult result{false, {}};
            for (std::size_t h = 0; h < m; ++h) {
                if (b >> h & 1U) {
                    result.witness.push_back(h);
                }
            }
            return result;
        }
    }
    return {};
}

std::optional<HyperSdr> find_hyper_sdr(const HypergraphFamily& family, std::size_t family_ceiling,
                                       std::size_t edge_ceiling) {
    check_scale(family, family_ceiling, edge_ceiling);
    const auto& hypergraphs = family.hypergraphs();
    HyperSdr sdr;
    auto place = [&](auto&& self, std::size_t h, Mask used) -> bool {
        if (h == hypergraphs.size()) {
            return true;
        }
        for (std::size_t e = 0; e < hypergraphs[h].size(); ++e) {
            const Mask edge = to_mask(hypergraphs[h][e]);
            if (edge & used) {
                continue;
            }
            sdr.selection.push_back(e);
            if (self(self, h + 1, used | edge)) {
                return true;
            }
            sdr.selection.pop_back();
        }
        return false;
    };
    if (place(place, 0, 0)) {
        return sdr;
    }
    return std::nullopt;
}

bool validate_hyper_sdr(const HypergraphFamily& family, const HyperSdr& sdr) {
    const auto& hypergraphs = family.hypergraphs();
    if (sdr.selection.size() != hypergraphs.size()) {
        return false;
    }
    for (std::size_t h = 0; h < hypergraphs.size(); ++h) {
        if (sdr.selection[h] >= hypergraphs[h].size()) {
            return false;
        }
        for (std::size_t g = 0; g < h; ++g) {
            if (edges_meet(hypergraphs[h][sdr.selection[h]], hypergraphs[g][sdr.selection[g]])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace transversal
