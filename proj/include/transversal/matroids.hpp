#pragma once

#include "transversal/core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace transversal {

/// Ground set plus a black-box independence predicate. Subsets are passed
/// as sorted lists of ground positions. Rank is always derived by greedy
/// search over the predicate.
class MatroidOracle {
public:
    using Predicate = std::function<bool(std::span<const std::size_t>)>;

    MatroidOracle() = default;
    MatroidOracle(std::vector<std::string> ground, Predicate independent, std::string kind = "custom");

    std::size_t size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::string& kind() const { return kind_; }
    bool independent(std::span<const std::size_t> subset) const { return predicate_(subset); }
    std::optional<std::size_t> index_of(const std::string& id) const;

private:
    std::vector<std::string> ground_;
    Predicate predicate_;
    std::string kind_;
};

namespace matroid {

MatroidOracle free(std::vector<std::string> ground);
MatroidOracle uniform(std::vector<std::string> ground, std::size_t rank);

/// blocks[b] lists ground positions; at most caps[b] may be chosen from
/// block b. Every element must lie in exactly one block.
MatroidOracle partition(std::vector<std::string> ground, std::vector<std::vector<std::size_t>> blocks,
                        std::vector<std::size_t> caps);

/// Cycle matroid: ground = edges (endpoints are vertex positions), a set is
/// independent iff it is acyclic. The graph must be simple.
MatroidOracle graphic(std::size_t vertex_count,
                      std::vector<std::pair<std::size_t, std::size_t>> edges,
                      std::vector<std::string> edge_names = {});

/// Column matroid of a matrix over GF(p). columns[j] is the j-th column.
MatroidOracle linear(std::uint64_t prime, std::vector<std::vector<std::int64_t>> columns,
                     std::vector<std::string> names = {});

/// Explicit list of independent sets; used for axiom checking.
MatroidOracle explicit_sets(std::vector<std::string> ground,
                            std::vector<std::vector<std::size_t>> independent_sets);

} // namespace matroid

/// Size of a greedy maximal independent subset of `subset`.
std::size_t rank(const MatroidOracle& matroid, std::span<const std::size_t> subset);

/// A maximal independent subset of `subset`, scanning in order.
std::vector<std::size_t> greedy_basis(const MatroidOracle& matroid, std::span<const std::size_t> subset);

/// reps[i] is a ground position of the family (not the matroid).
struct Sir {
    std::vector<std::size_t> reps;
};

struct RadoViolator {
    std::vector<std::size_t> indices;
    std::vector<std::size_t> union_elements;  // family ground positions
    std::size_t rank = 0;
};

using RadoResult = std::variant<Sir, RadoViolator>;

struct RadoOptions {
    /// Instances with n + |E| at or below this size are settled by exhaustive
    /// search instead of matroid intersection. 0 disables the fallback.
    std::size_t exhaustive_threshold = 0;
};

/// Family elements are matched to matroid elements by id; an id missing
/// from the matroid ground is an InvalidInput.
RadoResult rado_check(const SetFamily& family, const MatroidOracle& matroid, RadoOptions options = {});

bool validate_sir(const SetFamily& family, const MatroidOracle& matroid, const Sir& sir);
bool validate_rado_violator(const SetFamily& family, const MatroidOracle& matroid,
                            const RadoViolator& violator);

inline constexpr std::size_t kMatroidValidationCeiling = 10;

struct MatroidCheck {
    enum class Axiom { none, empty_collection, downward_closure, exchange };

    bool ok = true;
    Axiom axiom = Axiom::none;
    std::vector<std::size_t> a;  // for downward closure: the independent set
    std::vector<std::size_t> b;  // for downward closure: its dependent subset
};

/// Exhaustive over all subsets and pairs of independent sets.
MatroidCheck validate_matroid(const MatroidOracle& matroid,
                              std::size_t ceiling = kMatroidValidationCeiling);

} // namespace transversal
