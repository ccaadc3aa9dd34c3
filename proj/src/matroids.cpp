#include "transversal/matroids.hpp"

#include "transversal/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace transversal {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) {
        names.push_back(prefix + std::to_string(i));
    }
    return names;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    unsigned __int128 result = 1;
    unsigned __int128 b = base % p;
    while (exp) {
        if (exp & 1) {
            result = result * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

// Rank of the chosen columns over GF(p) by row reduction.
std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& columns,
                       std::span<const std::size_t> chosen, std::uint64_t p) {
    if (chosen.empty()) {
        return 0;
    }
    const std::size_t rows = columns.front().size();
    // Work on the transpose: each chosen column becomes a row vector.
    std::vector<std::vector<std::uint64_t>> m;
    for (std::size_t c : chosen) {
        m.push_back(columns[c]);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < rows && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        const std::uint64_t inv = mod_pow(m[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const std::uint64_t factor = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(m[r][col]) * inv % p);
            for (std::size_t k = col; k < rows; ++k) {
                const auto sub = static_cast<std::uint64_t>(static_cast<unsigned __int128>(factor) * m[rank][k] % p);
                m[r][k] = (m[r][k] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> mask_to_list(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1) {
        if (mask & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

MatroidOracle::MatroidOracle(std::vector<std::string> ground, Predicate independent, std::string kind)
    : ground_(std::move(ground)), predicate_(std::move(independent)), kind_(std::move(kind)) {
    std::set<std::string> seen;
    for (const auto& id : ground_) {
        if (!seen.insert(id).second) {
            throw InvalidInput("duplicate matroid element \"" + id + "\"");
        }
    }
}

std::optional<std::size_t> MatroidOracle::index_of(const std::string& id) const {
    auto it = std::find(ground_.begin(), ground_.end(), id);
    if (it == ground_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - ground_.begin());
}

namespace matroid {

MatroidOracle free(std::vector<std::string> ground) {
    return MatroidOracle(std::move(ground), [](std::span<const std::size_t>) { return true; }, "free");
}

MatroidOracle uniform(std::vector<std::string> ground, std::size_t rank) {
    return MatroidOracle(
        std::move(ground), [rank](std::span<const std::size_t> s) { return s.size() <= rank; }, "uniform");
}

MatroidOracle partition(std::vector<std::string> ground, std::vector<std::vector<std::size_t>> blocks,
                        std::vector<std::size_t> caps) {
    if (blocks.size() != caps.size()) {
        throw InvalidInput("partition matroid needs one cap per block");
    }
    std::vector<std::size_t> block_of(ground.size(), static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t e : blocks[b]) {
            if (e >= ground.size()) {
                throw InvalidInput("partition block " + std::to_string(b) + " names an element out of range");
            }
            if (block_of[e] != static_cast<std::size_t>(-1)) {
                throw InvalidInput("element \"" + ground[e] + "\" lies in two partition blocks");
            }
            block_of[e] = b;
        }
    }
    for (std::size_t e = 0; e < ground.size(); ++e) {
        if (block_of[e] == static_cast<std::size_t>(-1)) {
            throw InvalidInput("element \"" + ground[e] + "\" lies in no partition block");
        }
    }
    return MatroidOracle(
        std::move(ground),
        [block_of, caps](std::span<const std::size_t> s) {
            std::vector<std::size_t> used(caps.size(), 0);
            for (std::size_t e : s) {
                if (++used[block_of[e]] > caps[block_of[e]]) {
                    return false;
                }
            }
            return true;
        },
        "partition");
}

MatroidOracle graphic(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                      std::vector<std::string> edge_names) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InvalidInput("graphic matroid edge is out of range");
        }
        if (u == v) {
            throw InvalidInput("graphic matroid needs a simple graph (loop found)");
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw InvalidInput("graphic matroid needs a simple graph (parallel edge found)");
        }
    }
    if (edge_names.empty()) {
        edge_names = numbered("e", edges.size());
    }
    if (edge_names.size() != edges.size()) {
        throw InvalidInput("graphic matroid needs one name per edge");
    }
    return MatroidOracle(
        std::move(edge_names),
        [vertex_count, edges](std::span<const std::size_t> s) {
            DisjointSets forest(vertex_count);
            return std::all_of(s.begin(), s.end(),
                               [&](std::size_t e) { return forest.unite(edges[e].first, edges[e].second); });
        },
        "graphic");
}

MatroidOracle linear(std::uint64_t prime, std::vector<std::vector<std::int64_t>> columns,
                     std::vector<std::string> names) {
    if (!is_prime(prime) || prime > (std::uint64_t{1} << 62)) {
        throw InvalidInput("linear matroid modulus " + std::to_string(prime) + " is not a usable prime");
    }
    std::vector<std::vector<std::uint64_t>> reduced;
    for (const auto& column : columns) {
        if (column.size() != columns.front().size()) {
            throw InvalidInput("linear matroid columns differ in length");
        }
        std::vector<std::uint64_t> col;
        for (std::int64_t v : column) {
            const auto p = static_cast<std::int64_t>(prime);
            col.push_back(static_cast<std::uint64_t>(((v % p) + p) % p));
        }
        reduced.push_back(std::move(col));
    }
    if (names.empty()) {
        names = numbered("c", columns.size());
    }
    if (names.size() != columns.size()) {
        throw InvalidInput("linear matroid needs one name per column");
    }
    return MatroidOracle(
        std::move(names),
        [prime, reduced](std::span<const std::size_t> s) { return rank_mod_p(reduced, s, prime) == s.size(); },
        "linear");
}

MatroidOracle explicit_sets(std::vector<std::string> ground, std::vector<std::vector<std::size_t>> independent_sets) {
    std::set<std::vector<std::size_t>> family;
    for (auto& s : independent_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= ground.size()) {
            throw InvalidInput("independent set names an element out of range");
        }
        family.insert(s);
    }
    return MatroidOracle(
        std::move(ground),
        [family](std::span<const std::size_t> s) {
            return family.count(std::vector<std::size_t>(s.begin(), s.end())) > 0;
        },
        "explicit");
}

} // namespace matroid

std::vector<std::size_t> greedy_basis(const MatroidOracle& matroid, std::span<const std::size_t> subset) {
    std::vector<std::size_t> basis;
    for (std::size_t e : subset) {
        if (e >= matroid.size()) {
            throw InvalidInput("element " + std::to_string(e) + " is outside the matroid ground set");
        }
        auto trial = basis;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
        if (std::adjacent_find(trial.begin(), trial.end()) == trial.end() && matroid.independent(trial)) {
            basis = std::move(trial);
        }
    }
    return basis;
}

std::size_t rank(const MatroidOracle& matroid, std::span<const std::size_t> subset) {
    return greedy_basis(matroid, subset).size();
}

namespace {

// Family positions translated to matroid positions.
std::vector<std::size_t> translate_ground(const SetFamily& family, const MatroidOracle& matroid) {
    std::vector<std::size_t> to_matroid;
    for (const auto& id : family.ground()) {
        auto idx = matroid.index_of(id);
        if (!idx) {
            throw InvalidInput("family element \"" + id + "\" is not in the matroid ground set");
        }
        to_matroid.push_back(*idx);
    }
    return to_matroid;
}

bool independent_elements(const MatroidOracle& matroid, const std::vector<std::size_t>& to_matroid,
                          std::vector<std::size_t> family_elements) {
    std::vector<std::size_t> mapped;
    for (std::size_t x : family_elements) {
        mapped.push_back(to_matroid[x]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
        return false;
    }
    return matroid.independent(mapped);
}

std::size_t union_rank(const SetFamily& family, const MatroidOracle& matroid,
                       const std::vector<std::size_t>& to_matroid, std::span<const std::size_t> indices) {
    std::vector<std::size_t> mapped;
    for (std::size_t x : family.union_of(indices)) {
        mapped.push_back(to_matroid[x]);
    }
    std::sort(mapped.begin(), mapped.end());
    return rank(matroid, mapped);
}

class ExhaustiveRado {
public:
    ExhaustiveRado(const SetFamily& family, const MatroidOracle& matroid, const std::vector<std::size_t>& to_matroid)
        : family_(family), matroid_(matroid), to_matroid_(to_matroid) {}

    RadoResult run() {
        if (place(0)) {
            return Sir{reps_};
        }
        const std::size_t n = family_.size();
        check_ceiling(n, 30, "exhaustive Rado family size");
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            const auto indices = mask_to_list(mask);
            const std::size_t r = union_rank(family_, matroid_, to_matroid_, indices);
            if (r < indices.size()) {
                return RadoViolator{indices, family_.union_of(indices), r};
            }
        }
        throw std::logic_error("no representative system and no rank violator");
    }

private:
    bool place(std::size_t i) {
        if (i == family_.size()) {
            return true;
        }
        for (std::size_t x : family_.set(i)) {
            reps_.push_back(x);
            if (independent_elements(matroid_, to_matroid_, reps_) && place(i + 1)) {
                return true;
            }
            reps_.pop_back();
        }
        return false;
    }

    const SetFamily& family_;
    const MatroidOracle& matroid_;
    const std::vector<std::size_t>& to_matroid_;
    std::vector<std::size_t> reps_;
};

// Matroid intersection on the pairs (i, x) with x in T_i: one side allows at
// most one pair per set index, the other needs distinct elements forming an
// independent set of the matroid.
class IntersectionRado {
public:
    IntersectionRado(const SetFamily& family, const MatroidOracle& matroid, const std::vector<std::size_t>& to_matroid)
        : family_(family), matroid_(matroid), to_matroid_(to_matroid) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t x : family.set(i)) {
                pairs_.push_back({i, x});
            }
        }
        in_.assign(pairs_.size(), false);
    }

    RadoResult run() {
        while (augment()) {
        }
        std::vector<std::size_t> reps(family_.size(), static_cast<std::size_t>(-1));
        std::size_t size = 0;
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (in_[p]) {
                reps[pairs_[p].index] = pairs_[p].element;
                ++size;
            }
        }
        if (size == family_.size()) {
            return Sir{reps};
        }
        return violator();
    }

private:
    struct Pair {
        std::size_t index;
        std::size_t element;
    };

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (in_[p]) {
                out.push_back(p);
            }
        }
        return out;
    }

    bool index_side_ok(const std::vector<std::size_t>& set) const {
        std::set<std::size_t> indices;
        for (std::size_t p : set) {
            if (!indices.insert(pairs_[p].index).second) {
                return false;
            }
        }
        return true;
    }

    bool matroid_side_ok(const std::vector<std::size_t>& set) const {
        std::vector<std::size_t> elements;
        for (std::size_t p : set) {
            elements.push_back(pairs_[p].element);
        }
        return independent_elements(matroid_, to_matroid_, elements);
    }

    static std::vector<std::size_t> swap(const std::vector<std::size_t>& current, std::size_t out, std::size_t in) {
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            if (p != out) {
                next.push_back(p);
            }
        }
        next.push_back(in);
        return next;
    }

    // Exchange graph arcs: y -> x when I - y + x keeps one pair per index,
    // x -> y when I - y + x stays independent in the matroid.
    void build_graph() {
        const auto current = members();
        const std::size_t count = pairs_.size();
        forward_.assign(count, {});
        backward_.assign(count, {});
        sources_.assign(count, false);
        sinks_.assign(count, false);
        for (std::size_t x = 0; x < count; ++x) {
            if (in_[x]) {
                continue;
            }
            auto grown = current;
            grown.push_back(x);
            sources_[x] = index_side_ok(grown);
            sinks_[x] = matroid_side_ok(grown);
            for (std::size_t y : current) {
                const auto exchanged = swap(current, y, x);
                if (index_side_ok(exchanged)) {
                    forward_[y].push_back(x);
                    backward_[x].push_back(y);
                }
                if (matroid_side_ok(exchanged)) {
                    forward_[x].push_back(y);
                    backward_[y].push_back(x);
                }
            }
        }
    }

    bool augment() {
        build_graph();
        const std::size_t count = pairs_.size();
        std::vector<std::size_t> parent(count, static_cast<std::size_t>(-1));
        std::vector<bool> seen(count, false);
        std::queue<std::size_t> queue;
        for (std::size_t x = 0; x < count; ++x) {
            if (sources_[x]) {
                seen[x] = true;
                queue.push(x);
            }
        }
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            if (sinks_[u]) {
                // Shortest paths keep the symmetric difference independent.
                for (std::size_t v = u; v != static_cast<std::size_t>(-1); v = parent[v]) {
                    in_[v] = !in_[v];
                }
                return true;
            }
            for (std::size_t v : forward_[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    queue.push(v);
                }
            }
        }
        return false;
    }

    // U = pairs that can still reach a sink. Indices with no pair in U
    // have their whole union inside the complement, whose matroid rank is
    // bounded by |I| - (n - |K|) < |K|.
    RadoViolator violator() {
        build_graph();
        const std::size_t count = pairs_.size();
        std::vector<bool> reaches(count, false);
        std::queue<std::size_t> queue;
        for (std::size_t x = 0; x < count; ++x) {
            if (sinks_[x]) {
                reaches[x] = true;
                queue.push(x);
            }
        }
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop();
            for (std::size_t u : backward_[v]) {
                if (!reaches[u]) {
                    reaches[u] = true;
                    queue.push(u);
                }
            }
        }
        std::vector<bool> touched(family_.size(), false);
        for (std::size_t p = 0; p < count; ++p) {
            if (reaches[p]) {
                touched[pairs_[p].index] = true;
            }
        }
        RadoViolator out;
        for (std::size_t i = 0; i < family_.size(); ++i) {
            if (!touched[i]) {
                out.indices.push_back(i);
            }
        }
        out.union_elements = family_.union_of(out.indices);
        out.rank = union_rank(family_, matroid_, to_matroid_, out.indices);
        if (out.indices.empty() || out.rank >= out.indices.size()) {
            throw std::logic_error("matroid intersection produced no rank violator");
        }
        return out;
    }

    const SetFamily& family_;
    const MatroidOracle& matroid_;
    const std::vector<std::size_t>& to_matroid_;
    std::vector<Pair> pairs_;
    std::vector<bool> in_;
    std::vector<std::vector<std::size_t>> forward_;
    std::vector<std::vector<std::size_t>> backward_;
    std::vector<bool> sources_;
    std::vector<bool> sinks_;
};

} // namespace

RadoResult rado_check(const SetFamily& family, const MatroidOracle& matroid, RadoOptions options) {
    const auto to_matroid = translate_ground(family, matroid);
    if (options.exhaustive_threshold > 0 && family.size() + matroid.size() <= options.exhaustive_threshold) {
        return ExhaustiveRado(family, matroid, to_matroid).run();
    }
    return IntersectionRado(family, matroid, to_matroid).run();
}

bool validate_sir(const SetFamily& family, const MatroidOracle& matroid, const Sir& sir) {
    const auto to_matroid = translate_ground(family, matroid);
    if (sir.reps.size() != family.size()) {
        return false;
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (sir.reps[i] >= family.ground_size() || !family.contains(i, sir.reps[i])) {
            return false;
        }
    }
    return independent_elements(matroid, to_matroid, sir.reps);
}

bool validate_rado_violator(const SetFamily& family, const MatroidOracle& matroid, const RadoViolator& violator) {
    const auto to_matroid = translate_ground(family, matroid);
    if (violator.indices.empty()) {
        return false;
    }
    std::set<std::size_t> distinct(violator.indices.begin(), violator.indices.end());
    if (distinct.size() != violator.indices.size() || *distinct.rbegin() >= family.size()) {
        return false;
    }
    auto claimed = violator.union_elements;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != family.union_of(violator.indices)) {
        return false;
    }
    const std::size_t r = union_rank(family, matroid, to_matroid, violator.indices);
    return r == violator.rank && r < violator.indices.size();
}

MatroidCheck validate_matroid(const MatroidOracle& matroid, std::size_t ceiling) {
    check_ceiling(matroid.size(), std::min<std::size_t>(ceiling, 20), "matroid ground size");
    const std::uint32_t count = std::uint32_t{1} << matroid.size();
    std::vector<bool> independent(count);
    bool any = false;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        independent[mask] = matroid.independent(mask_to_list(mask));
        any = any || independent[mask];
    }
    if (!any) {
        return {false, MatroidCheck::Axiom::empty_collection, {}, {}};
    }
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (!independent[mask]) {
            continue;
        }
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const std::uint32_t sub = mask & ~(rest & (~rest + 1));
            if (!independent[sub]) {
                return {false, MatroidCheck::Axiom::downward_closure, mask_to_list(mask), mask_to_list(sub)};
            }
        }
    }
    for (std::uint32_t a = 0; a < count; ++a) {
        if (!independent[a]) {
            continue;
        }
        for (std::uint32_t b = 0; b < count; ++b) {
            if (!independent[b] || std::popcount(b) <= std::popcount(a)) {
                continue;
            }
            bool extends = false;
            for (std::uint32_t rest = b & ~a; rest && !extends; rest &= rest - 1) {
                extends = independent[a | (rest & (~rest + 1))];
            }
            if (!extends) {
                return {false, MatroidCheck::Axiom::exchange, mask_to_list(a), mask_to_list(b)};
            }
        }
    }
    return {};
}

} // namespace transversal
