#include "transversal/matching_engine.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace transversal::engine {

std::size_t BipartiteMatch::size() const {
    return static_cast<std::size_t>(
        std::count_if(left_mate.begin(), left_mate.end(), [](std::size_t m) { return m != npos; }));
}

bool augment_from(BipartiteMatch& match, const Adjacency& adjacency, std::size_t root) {
    const std::size_t right_count = match.right_mate.size();
    // parent[v] = left vertex from which right vertex v was first reached.
    std::vector<std::size_t> parent(right_count, npos);
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : adjacency[u]) {
            if (parent[v] != npos) {
                continue;
            }
            parent[v] = u;
            if (match.right_mate[v] == npos) {
                // Flip the alternating path ending at v.
                std::size_t right = v;
                while (right != npos) {
                    const std::size_t left = parent[right];
                    const std::size_t previous = match.left_mate[left];
                    match.left_mate[left] = right;
                    match.right_mate[right] = left;
                    right = previous;
                }
                return true;
            }
            queue.push(match.right_mate[v]);
        }
    }
    return false;
}

namespace {

class HopcroftKarp {
public:
    HopcroftKarp(const Adjacency& adjacency, BipartiteMatch& match)
        : adjacency_(adjacency), match_(match), level_(adjacency.size()) {}

    void run() {
        while (layer()) {
            for (std::size_t u = 0; u < adjacency_.size(); ++u) {
                if (match_.left_mate[u] == npos) {
                    descend(u);
                }
            }
        }
    }

private:
    static constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

    bool layer() {
        std::queue<std::size_t> queue;
        for (std::size_t u = 0; u < adjacency_.size(); ++u) {
            if (match_.left_mate[u] == npos) {
                level_[u] = 0;
                queue.push(u);
            } else {
                level_[u] = kInfinity;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adjacency_[u]) {
                const std::size_t w = match_.right_mate[v];
                if (w == npos) {
                    found = true;
                } else if (level_[w] == kInfinity) {
                    level_[w] = level_[u] + 1;
                    queue.push(w);
                }
            }
        }
        return found;
    }

    bool descend(std::size_t u) {
        for (std::size_t v : adjacency_[u]) {
            const std::size_t w = match_.right_mate[v];
            if (w == npos || (level_[w] == level_[u] + 1 && descend(w))) {
                match_.left_mate[u] = v;
                match_.right_mate[v] = u;
                return true;
            }
        }
        level_[u] = kInfinity;
        return false;
    }

    const Adjacency& adjacency_;
    BipartiteMatch& match_;
    std::vector<std::size_t> level_;
};

} // namespace

BipartiteMatch maximum_matching(const Adjacency& adjacency, std::size_t right_count, Strategy strategy) {
    BipartiteMatch match(adjacency.size(), right_count);
    if (strategy == Strategy::hopcroft_karp) {
        HopcroftKarp(adjacency, match).run();
        return match;
    }
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        augment_from(match, adjacency, u);
    }
    return match;
}

AlternatingReach alternating_reach(const BipartiteMatch& match, const Adjacency& adjacency,
                                   std::span<const std::size_t> roots) {
    AlternatingReach reach{std::vector<bool>(adjacency.size(), false),
                           std::vector<bool>(match.right_mate.size(), false)};
    std::queue<std::size_t> queue;
    for (std::size_t r : roots) {
        if (!reach.left[r]) {
            reach.left[r] = true;
            queue.push(r);
        }
    }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : adjacency[u]) {
            if (reach.right[v]) {
                continue;
            }
            reach.right[v] = true;
            const std::size_t w = match.right_mate[v];
            if (w != npos && !reach.left[w]) {
                reach.left[w] = true;
                queue.push(w);
            }
        }
    }
    return reach;
}

} // namespace transversal::engine
