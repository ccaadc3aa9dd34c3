#pragma once

#include "transversal/core.hpp"

#include <string>
#include <vector>

namespace transversal {

/// Finite group given by a multiplication table over positions:
/// product(a, b) = table[a][b].
class FiniteGroup {
public:
    static constexpr std::size_t kAssociativityCeiling = 256;

    FiniteGroup() = default;
    /// Validates closure, identity, inverses, and associativity (the last
    /// only up to kAssociativityCeiling elements).
    FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);

    /// Group generated by permutations of {1..degree} in one-line notation.
    /// Elements are named in cycle notation, the identity as "()".
    static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                                         std::size_t degree);
    static FiniteGroup cyclic(std::size_t order);

    std::size_t order() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// Sorted element positions of the subgroup generated by `generators`.
std::vector<std::size_t> subgroup_closure(const FiniteGroup& group, std::span<const std::size_t> generators);

bool is_subgroup(const FiniteGroup& group, std::span<const std::size_t> subset);

/// Left cosets gH and right cosets Hg, each sorted, ordered by least element.
struct CosetSystem {
    std::vector<std::size_t> subgroup;
    std::vector<std::vector<std::size_t>> left;
    std::vector<std::vector<std::size_t>> right;
    std::size_t index() const { return left.size(); }
};

CosetSystem cosets(const FiniteGroup& group, std::span<const std::size_t> subgroup);

/// T_i = { j : L_i meets R_j } over the ground {1..n}.
SetFamily coset_family(const FiniteGroup& group, std::span<const std::size_t> subgroup);

/// g_1..g_n, one per left coset and one per right coset.
std::vector<std::size_t> simultaneous_reps(const FiniteGroup& group, std::span<const std::size_t> subgroup);

bool validate_reps(const FiniteGroup& group, std::span<const std::size_t> subgroup,
                   std::span<const std::size_t> reps);

} // namespace transversal
