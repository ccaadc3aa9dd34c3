#pragma once

// Brute-force reference implementations. None of these call into the
// library's solvers; they only read instance data.

#include "transversal/birkhoff.hpp"
#include "transversal/core.hpp"
#include "transversal/graphs.hpp"
#include "transversal/groups.hpp"
#include "transversal/hypersdr.hpp"
#include "transversal/latin.hpp"
#include "transversal/matroids.hpp"
#include "transversal/posets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace transversal;

/// Number of SDRs by enumerating every tuple of members.
inline std::uint64_t count_sdrs(const SetFamily& family) {
    std::vector<bool> used(family.ground_size(), false);
    auto go = [&](auto&& self, std::size_t i) -> std::uint64_t {
        if (i == family.size()) {
            return 1;
        }
        std::uint64_t total = 0;
        for (std::size_t x : family.set(i)) {
            if (!used[x]) {
                used[x] = true;
                total += self(self, i + 1);
                used[x] = false;
            }
        }
        return total;
    };
    return go(go, 0);
}

inline bool has_sdr(const SetFamily& family) {
    return oracle::count_sdrs(family) > 0;
}

/// max over index subsets K of |K| - |union over K|, clamped at 0.
inline std::size_t defect(const SetFamily& family) {
    std::size_t best = 0;
    const std::size_t n = family.size();
    for (std::uint32_t k = 1; k < (std::uint32_t{1} << n); ++k) {
        std::set<std::size_t> u;
        for (std::size_t i = 0; i < n; ++i) {
            if (k >> i & 1U) {
                u.insert(family.set(i).begin(), family.set(i).end());
            }
        }
        const auto size = static_cast<std::size_t>(std::popcount(k));
        if (size > u.size()) {
            best = std::max(best, size - u.size());
        }
    }
    return best;
}

/// Size of the largest partial SDR, by trying every set as skipped or used.
inline std::size_t largest_partial(const SetFamily& family) {
    std::vector<bool> used(family.ground_size(), false);
    auto go = [&](auto&& self, std::size_t i) -> std::size_t {
        if (i == family.size()) {
            return 0;
        }
        std::size_t best = self(self, i + 1);
        for (std::size_t x : family.set(i)) {
            if (!used[x]) {
                used[x] = true;
                best = std::max(best, 1 + self(self, i + 1));
                used[x] = false;
            }
        }
        return best;
    };
    return go(go, 0);
}

/// Minimum vertex cover of a bipartite graph over all subsets of A u B.
inline std::size_t min_vertex_cover(const BipartiteGraph& g) {
    const std::size_t a = g.part_a().size();
    const std::size_t total = a + g.part_b().size();
    std::size_t best = total;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << total); ++s) {
        const auto size = static_cast<std::size_t>(std::popcount(s));
        if (size >= best) {
            continue;
        }
        bool covers = true;
        for (const auto& [x, y] : g.edges()) {
            if (!(s >> x & 1U) && !(s >> (a + y) & 1U)) {
                covers = false;
                break;
            }
        }
        if (covers) {
            best = size;
        }
    }
    return best;
}

/// Maximum matching size by exhaustive edge choice.
inline std::size_t max_matching(const BipartiteGraph& g) {
    const auto& edges = g.edges();
    std::vector<bool> used_a(g.part_a().size()), used_b(g.part_b().size());
    auto go = [&](auto&& self, std::size_t k) -> std::size_t {
        if (k == edges.size()) {
            return 0;
        }
        std::size_t best = self(self, k + 1);
        const auto [x, y] = edges[k];
        if (!used_a[x] && !used_b[y]) {
            used_a[x] = used_b[y] = true;
            best = std::max(best, 1 + self(self, k + 1));
            used_a[x] = used_b[y] = false;
        }
        return best;
    };
    return go(go, 0);
}

/// Number of perfect matchings of a bipartite graph with |A| = |B|.
inline std::uint64_t count_perfect_matchings(const BipartiteGraph& g) {
    return oracle::count_sdrs(graph_to_family(g));
}

/// Sum over all n! permutations.
inline Rational permanent(const RationalMatrix& m) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
            term *= m(i, perm[i]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Size of a largest antichain, over all element subsets.
inline std::size_t max_antichain(const Poset& p) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << p.size()); ++s) {
        bool ok = true;
        for (std::size_t x = 0; x < p.size() && ok; ++x) {
            for (std::size_t y = x + 1; y < p.size() && ok; ++y) {
                ok = !((s >> x & 1U) && (s >> y & 1U) && p.comparable(x, y));
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
        }
    }
    return best;
}

/// Size of a longest chain, over all element subsets.
inline std::size_t longest_chain(const Poset& p) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << p.size()); ++s) {
        bool ok = true;
        for (std::size_t x = 0; x < p.size() && ok; ++x) {
            for (std::size_t y = x + 1; y < p.size() && ok; ++y) {
                ok = !((s >> x & 1U) && (s >> y & 1U) && !p.comparable(x, y));
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
        }
    }
    return best;
}

/// Clique number by subset enumeration.
inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.size()); ++s) {
        bool ok = true;
        for (std::size_t x = 0; x < g.size() && ok; ++x) {
            for (std::size_t y = x + 1; y < g.size() && ok; ++y) {
                ok = !((s >> x & 1U) && (s >> y & 1U) && !g.adjacent(x, y));
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
        }
    }
    return best;
}

/// Chromatic number by trying k = 0, 1, ... colours exhaustively.
inline std::size_t chromatic_number(const Graph& g) {
    const std::size_t n = g.size();
    for (std::size_t k = 0;; ++k) {
        std::vector<std::size_t> colour(n, 0);
        auto go = [&](auto&& self, std::size_t v) -> bool {
            if (v == n) {
                return true;
            }
            for (std::size_t c = 0; c < k; ++c) {
                bool clash = false;
                for (std::size_t u = 0; u < v && !clash; ++u) {
                    clash = g.adjacent(u, v) && colour[u] == c;
                }
                if (!clash) {
                    colour[v] = c;
                    if (self(self, v + 1)) {
                        return true;
                    }
                }
            }
            return false;
        };
        if (go(go, 0)) {
            return k;
        }
    }
}

/// s-t connectivity avoiding removed vertices and removed edges.
inline bool connected(const Graph& g, std::size_t s, std::size_t t, const std::vector<bool>& removed_vertex,
                      const std::set<std::pair<std::size_t, std::size_t>>& removed_edge) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        if (u == t) {
            return true;
        }
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (g.adjacent(u, v) && !seen[v] && !removed_vertex[v] &&
                !removed_edge.count({std::min(u, v), std::max(u, v)})) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return false;
}

/// Smallest s-t edge cut, over all edge subsets.
inline std::size_t min_edge_cut(const Graph& g, std::size_t s, std::size_t t) {
    const auto edges = g.edges();
    std::size_t best = edges.size();
    const std::vector<bool> none(g.size(), false);
    for (std::uint32_t k = 0; k < (std::uint32_t{1} << edges.size()); ++k) {
        const auto size = static_cast<std::size_t>(std::popcount(k));
        if (size >= best) {
            continue;
        }
        std::set<std::pair<std::size_t, std::size_t>> removed;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (k >> e & 1U) {
                removed.insert(edges[e]);
            }
        }
        if (!connected(g, s, t, none, removed)) {
            best = size;
        }
    }
    return best;
}

/// Smallest s-t vertex separator (s, t non-adjacent), over all vertex subsets.
inline std::size_t min_vertex_cut(const Graph& g, std::size_t s, std::size_t t) {
    std::size_t best = g.size();
    for (std::uint32_t k = 0; k < (std::uint32_t{1} << g.size()); ++k) {
        if ((k >> s & 1U) || (k >> t & 1U)) {
            continue;
        }
        const auto size = static_cast<std::size_t>(std::popcount(k));
        if (size >= best) {
            continue;
        }
        std::vector<bool> removed(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            removed[v] = k >> v & 1U;
        }
        if (!connected(g, s, t, removed, {})) {
            best = size;
        }
    }
    return best;
}

/// Minimum capacity over all vertex bipartitions separating source from sink.
inline std::int64_t min_cut_capacity(const FlowNetwork& net) {
    std::int64_t best = -1;
    for (std::uint32_t side = 0; side < (std::uint32_t{1} << net.size()); ++side) {
        if (!(side >> net.source() & 1U) || (side >> net.sink() & 1U)) {
            continue;
        }
        std::int64_t cap = 0;
        for (const auto& arc : net.arcs()) {
            if ((side >> arc.from & 1U) && !(side >> arc.to & 1U)) {
                cap += arc.capacity;
            }
        }
        if (best < 0 || cap < best) {
            best = cap;
        }
    }
    return best;
}

/// Whether some tuple of distinct representatives is independent in `m`.
inline bool has_sir(const SetFamily& family, const MatroidOracle& m) {
    std::vector<std::size_t> to_matroid(family.ground_size());
    for (std::size_t x = 0; x < family.ground_size(); ++x) {
        to_matroid[x] = *m.index_of(family.ground()[x]);
    }
    std::vector<std::size_t> chosen;
    auto go = [&](auto&& self, std::size_t i) -> bool {
        if (i == family.size()) {
            std::vector<std::size_t> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && m.independent(sorted);
        }
        for (std::size_t x : family.set(i)) {
            chosen.push_back(to_matroid[x]);
            if (self(self, i + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    return go(go, 0);
}

/// Rank as the size of the largest independent subset, over all subsets.
inline std::size_t rank(const MatroidOracle& m, const std::vector<std::size_t>& subset) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << subset.size()); ++s) {
        std::vector<std::size_t> pick;
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (s >> k & 1U) {
                pick.push_back(subset[k]);
            }
        }
        std::sort(pick.begin(), pick.end());
        if (m.independent(pick)) {
            best = std::max(best, pick.size());
        }
    }
    return best;
}

/// Permutations of {1..n} compatible with every existing row.
inline std::uint64_t count_next_rows(const std::vector<std::vector<int>>& rows, std::size_t n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t total = 0;
    do {
        bool ok = true;
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < n && ok; ++c) {
                ok = row[c] != perm[c];
            }
        }
        total += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Latin squares of order n, stacking whole permutation rows.
inline std::uint64_t count_latin_squares(std::size_t n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> rows;
    auto go = [&](auto&& self) -> std::uint64_t {
        if (rows.size() == n) {
            return 1;
        }
        std::uint64_t total = 0;
        for (const auto& p : perms) {
            bool ok = true;
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < n && ok; ++c) {
                    ok = row[c] != p[c];
                }
            }
            if (ok) {
                rows.push_back(p);
                total += self(self);
                rows.pop_back();
            }
        }
        return total;
    };
    return go(go);
}

/// Whether some transversal of the left cosets of H also hits each right coset once.
inline bool has_simultaneous_reps(const FiniteGroup& g, const std::vector<std::size_t>& h) {
    // Left cosets gH and right cosets Hg computed directly from the table.
    std::vector<std::size_t> left_of(g.order()), right_of(g.order());
    std::vector<std::vector<std::size_t>> left;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x]) {
            continue;
        }
        left.emplace_back();
        for (std::size_t y : h) {
            const std::size_t z = g.product(x, y);
            seen[z] = true;
            left_of[z] = left.size() - 1;
            left.back().push_back(z);
        }
    }
    std::fill(seen.begin(), seen.end(), false);
    std::size_t right_count = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x]) {
            continue;
        }
        for (std::size_t y : h) {
            const std::size_t z = g.product(y, x);
            seen[z] = true;
            right_of[z] = right_count;
        }
        ++right_count;
    }
    std::vector<bool> hit(right_count, false);
    auto go = [&](auto&& self, std::size_t i) -> bool {
        if (i == left.size()) {
            return true;
        }
        for (std::size_t z : left[i]) {
            if (!hit[right_of[z]]) {
                hit[right_of[z]] = true;
                if (self(self, i + 1)) {
                    return true;
                }
                hit[right_of[z]] = false;
            }
        }
        return false;
    };
    return go(go, 0);
}

/// Whether pairwise disjoint edges can be chosen, one from each hypergraph.
inline bool has_hyper_sdr(const HypergraphFamily& family) {
    std::vector<const HyperEdge*> chosen;
    auto go = [&](auto&& self, std::size_t h) -> bool {
        if (h == family.size()) {
            return true;
        }
        for (const auto& e : family.hypergraphs()[h]) {
            bool clash = false;
            for (const auto* f : chosen) {
                for (std::size_t v : e) {
                    clash = clash || std::find(f->begin(), f->end(), v) != f->end();
                }
            }
            if (!clash) {
                chosen.push_back(&e);
                if (self(self, h + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    return go(go, 0);
}

/// Exhaustive search for a 2D array of distinct representatives.
inline bool has_array_sdr(const ArrayFamily& arr) {
    ElementGrid grid(arr.rows(), std::vector<std::size_t>(arr.cols()));
    auto go = [&](auto&& self, std::size_t cell) -> bool {
        if (cell == arr.rows() * arr.cols()) {
            return true;
        }
        const std::size_t r = cell / arr.cols();
        const std::size_t c = cell % arr.cols();
        for (std::size_t x : arr.cell(r, c)) {
            bool clash = false;
            for (std::size_t k = 0; k < c; ++k) {
                clash = clash || grid[r][k] == x;
            }
            for (std::size_t k = 0; k < r; ++k) {
                clash = clash || grid[k][c] == x;
            }
            if (!clash) {
                grid[r][c] = x;
                if (self(self, cell + 1)) {
                    return true;
                }
            }
        }
        return false;
    };
    return go(go, 0);
}

/// Random doubly stochastic matrix as a convex combination of random
/// permutation matrices with random positive rational weights.
template <class Rng>
RationalMatrix random_doubly_stochastic(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> terms_dist(1, n * n);
    std::uniform_int_distribution<int> weight_dist(1, 12);
    const std::size_t terms = terms_dist(rng);
    std::vector<int> weights;
    std::vector<std::vector<std::size_t>> perms;
    int total = 0;
    for (std::size_t k = 0; k < terms; ++k) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        perms.push_back(perm);
        weights.push_back(weight_dist(rng));
        total += weights.back();
    }
    RationalMatrix m(n);
    for (std::size_t k = 0; k < terms; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            m(i, perms[k][i]) += Rational(weights[k], total);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j).canonicalize();
        }
    }
    return m;
}

/// Family number `code` in the exhaustive enumeration of n sets over a
/// ground of `ground` elements: set i is the bit pattern in digit i.
inline SetFamily family_from_code(std::size_t n, std::size_t ground, std::uint64_t code) {
    std::vector<std::vector<std::size_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bits = (code >> (i * ground)) & ((std::uint64_t{1} << ground) - 1);
        for (std::size_t x = 0; x < ground; ++x) {
            if (bits >> x & 1U) {
                sets[i].push_back(x);
            }
        }
    }
    return SetFamily::indexed(ground, std::move(sets));
}

/// Every strict partial order on n labelled elements, by filtering all
/// relations for irreflexivity, antisymmetry and transitivity.
inline std::vector<Poset> all_posets(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y) {
                slots.emplace_back(x, y);
            }
        }
    }
    std::vector<Poset> out;
    for (std::uint32_t r = 0; r < (std::uint32_t{1} << slots.size()); ++r) {
        bool rel[8][8] = {};
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (r >> k & 1U) {
                rel[slots[k].first][slots[k].second] = true;
            }
        }
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            for (std::size_t y = 0; y < n && ok; ++y) {
                if (!rel[x][y]) {
                    continue;
                }
                ok = !rel[y][x];
                for (std::size_t z = 0; z < n && ok; ++z) {
                    ok = !rel[y][z] || rel[x][z];
                }
            }
        }
        if (!ok) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (r >> k & 1U) {
                pairs.push_back(slots[k]);
            }
        }
        out.push_back(Poset::indexed(n, pairs));
    }
    return out;
}

/// One representative of every poset on n elements up to isomorphism (with
/// repeats): relations with x < y only between x < y as integers, closed
/// transitively. Every poset has such a natural labelling.
inline std::vector<Poset> naturally_labelled_posets(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            slots.emplace_back(x, y);
        }
    }
    std::vector<Poset> out;
    for (std::uint32_t r = 0; r < (std::uint32_t{1} << slots.size()); ++r) {
        bool rel[8][8] = {};
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (r >> k & 1U) {
                rel[slots[k].first][slots[k].second] = true;
            }
        }
        bool transitive = true;
        for (std::size_t x = 0; x < n && transitive; ++x) {
            for (std::size_t y = x + 1; y < n && transitive; ++y) {
                for (std::size_t z = y + 1; z < n && transitive; ++z) {
                    transitive = !(rel[x][y] && rel[y][z]) || rel[x][z];
                }
            }
        }
        if (!transitive) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (r >> k & 1U) {
                pairs.push_back(slots[k]);
            }
        }
        out.push_back(Poset::indexed(n, pairs));
    }
    return out;
}

} // namespace oracle
