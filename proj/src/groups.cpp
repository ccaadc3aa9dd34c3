#include "transversal/groups.hpp"

#include "transversal/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace transversal {

namespace {

using Permutation = std::vector<std::size_t>;  // 0-based images

std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == start) {
            continue;
        }
        out += "(";
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) {
                out += " ";
            }
            out += std::to_string(x + 1);
            first = false;
            x = p[x];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// (p * q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        r[x] = p[q[x]];
    }
    return r;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(elements)), table_(std::move(table)) {
    const std::size_t n = names_.size();
    if (n == 0) {
        throw InvalidInput("a group needs at least one element");
    }
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
        throw InvalidInput("group element names are not distinct");
    }
    if (table_.size() != n) {
        throw InvalidInput("multiplication table has " + std::to_string(table_.size()) + " rows, expected " +
                           std::to_string(n));
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[a].size() != n) {
            throw InvalidInput("multiplication table row " + std::to_string(a) + " has the wrong length");
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] >= n) {
                throw InvalidInput("table entry (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") is not an element index");
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        found = true;
        for (std::size_t x = 0; x < n && found; ++x) {
            found = table_[e][x] == x && table_[x][e] == x;
        }
        if (found) {
            identity_ = e;
        }
    }
    if (!found) {
        throw InvalidInput("multiplication table has no identity");
    }
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == n) {
            throw InvalidInput("element \"" + names_[a] + "\" has no inverse");
        }
    }
    if (n <= kAssociativityCeiling) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw InvalidInput("multiplication is not associative at (" + names_[a] + ", " +
                                           names_[b] + ", " + names_[c] + ")");
                    }
                }
            }
        }
    }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                           std::size_t degree) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        if (g.size() != degree) {
            throw InvalidInput("generator has length " + std::to_string(g.size()) + ", expected degree " +
                               std::to_string(degree));
        }
        Permutation p;
        std::vector<bool> hit(degree, false);
        for (std::size_t image : g) {
            if (image < 1 || image > degree || hit[image - 1]) {
                throw InvalidInput("generator is not a permutation of 1.." + std::to_string(degree));
            }
            hit[image - 1] = true;
            p.push_back(image - 1);
        }
        gens.push_back(std::move(p));
    }
    Permutation identity(degree);
    for (std::size_t x = 0; x < degree; ++x) {
        identity[x] = x;
    }
    std::vector<Permutation> elements{identity};
    std::map<Permutation, std::size_t> index{{identity, 0}};
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& g : gens) {
            auto next = compose(elements[k], g);
            if (!index.count(next)) {
                index.emplace(next, elements.size());
                elements.push_back(std::move(next));
            }
        }
    }
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
        names.push_back(cycle_notation(elements[a]));
        for (std::size_t b = 0; b < elements.size(); ++b) {
            table[a][b] = index.at(compose(elements[a], elements[b]));
        }
    }
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::cyclic(std::size_t order) {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < order; ++b) {
            table[a][b] = (a + b) % order;
        }
    }
    return FiniteGroup(std::move(names), std::move(table));
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> subgroup_closure(const FiniteGroup& group, std::span<const std::size_t> generators) {
    for (std::size_t g : generators) {
        if (g >= group.order()) {
            throw InvalidInput("generator " + std::to_string(g) + " is not a group element");
        }
    }
    // Right multiplication by generators; in a finite group this is closed
    // under inverses as well.
    std::vector<bool> member(group.order(), false);
    std::vector<std::size_t> found{group.identity()};
    member[group.identity()] = true;
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (std::size_t g : generators) {
            const std::size_t next = group.product(found[k], g);
            if (!member[next]) {
                member[next] = true;
                found.push_back(next);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool is_subgroup(const FiniteGroup& group, std::span<const std::size_t> subset) {
    std::vector<bool> member(group.order(), false);
    for (std::size_t h : subset) {
        if (h >= group.order()) {
            return false;
        }
        member[h] = true;
    }
    if (!member[group.identity()]) {
        return false;
    }
    for (std::size_t a : subset) {
        if (!member[group.inverse(a)]) {
            return false;
        }
        for (std::size_t b : subset) {
            if (!member[group.product(a, b)]) {
                return false;
            }
        }
    }
    return true;
}

CosetSystem cosets(const FiniteGroup& group, std::span<const std::size_t> subgroup) {
    if (!is_subgroup(group, subgroup)) {
        throw InvalidInput("the given elements do not form a subgroup");
    }
    CosetSystem system;
    system.subgroup.assign(subgroup.begin(), subgroup.end());
    std::sort(system.subgroup.begin(), system.subgroup.end());
    system.subgroup.erase(std::unique(system.subgroup.begin(), system.subgroup.end()), system.subgroup.end());

    auto collect = [&](bool left) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> covered(group.order(), false);
        for (std::size_t g = 0; g < group.order(); ++g) {
            if (covered[g]) {
                continue;
            }
            std::vector<std::size_t> coset;
            for (std::size_t h : system.subgroup) {
                const std::size_t x = left ? group.product(g, h) : group.product(h, g);
                coset.push_back(x);
                covered[x] = true;
            }
            std::sort(coset.begin(), coset.end());
            out.push_back(std::move(coset));
        }
        return out;
    };
    system.left = collect(true);
    system.right = collect(false);
    return system;
}

SetFamily coset_family(const FiniteGroup& group, std::span<const std::size_t> subgroup) {
    const auto system = cosets(group, subgroup);
    const std::size_t n = system.index();
    std::vector<std::size_t> right_of(group.order());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t g : system.right[j]) {
            right_of[g] = j;
        }
    }
    std::vector<std::vector<std::size_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t g : system.left[i]) {
            sets[i].push_back(right_of[g]);
        }
    }
    std::vector<std::string> ground;
    for (std::size_t j = 1; j <= n; ++j) {
        ground.push_back(std::to_string(j));
    }
    return SetFamily::indexed(std::move(ground), std::move(sets));
}

std::vector<std::size_t> simultaneous_reps(const FiniteGroup& group, std::span<const std::size_t> subgroup) {
    const auto system = cosets(group, subgroup);
    const auto family = coset_family(group, subgroup);
    // k left cosets hold k|H| elements, so they meet at least k right
    // cosets and Hall's condition always holds.
    const auto result = hall_check(family);
    const auto& sdr = std::get<Sdr>(result);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < system.index(); ++i) {
        const auto& left = system.left[i];
        const auto& right = system.right[sdr.reps[i]];
        std::vector<std::size_t> common;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
        reps.push_back(common.front());
    }
    return reps;
}

bool validate_reps(const FiniteGroup& group, std::span<const std::size_t> subgroup, std::span<const std::size_t> reps) {
    const auto system = cosets(group, subgroup);
    if (reps.size() != system.index()) {
        return false;
    }
    auto hits_each_once = [&](const std::vector<std::vector<std::size_t>>& parts) {
        for (const auto& part : parts) {
            std::size_t hits = 0;
            for (std::size_t g : reps) {
                if (std::binary_search(part.begin(), part.end(), g)) {
                    ++hits;
                }
            }
            if (hits != 1) {
                return false;
            }
        }
        return true;
    };
    return hits_each_once(system.left) && hits_each_once(system.right);
}

} // namespace transversal
