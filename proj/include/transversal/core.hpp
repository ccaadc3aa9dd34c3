#pragma once

#include "transversal/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace transversal {

/// An ordered tuple (T_1..T_n) of subsets of a finite ground set.
///
/// Element ids are opaque strings; internally every element is its position
/// in `ground()`, and each set is stored as a sorted, duplicate-free list of
/// those positions. Set and element positions are 0-based throughout the
/// library.
class SetFamily {
public:
    SetFamily() = default;

    /// Validates that ids are distinct and that every member is in `ground`.
    SetFamily(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& sets);

    /// Index form: elements are 0..ground_size-1, named by their decimal index.
    static SetFamily indexed(std::size_t ground_size, std::vector<std::vector<std::size_t>> sets);

    /// Index form with explicit element names.
    static SetFamily indexed(std::vector<std::string> ground,
                             std::vector<std::vector<std::size_t>> sets);

    std::size_t size() const { return sets_.size(); }
    std::size_t ground_size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }
    const std::vector<std::size_t>& set(std::size_t i) const { return sets_.at(i); }
    bool contains(std::size_t i, std::size_t element) const;
    std::optional<std::size_t> index_of(const std::string& id) const;

    /// Sorted union of the named sets.
    std::vector<std::size_t> union_of(std::span<const std::size_t> indices) const;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<std::size_t>> sets_;
};

/// reps[i] is the element chosen for set i.
struct Sdr {
    std::vector<std::size_t> reps;
};

/// Index set K with |union of T_i over K| < |K|.
struct HallViolator {
    std::vector<std::size_t> indices;
    std::vector<std::size_t> union_elements;
};

using HallResult = std::variant<Sdr, HallViolator>;

struct SdrCheck {
    enum class Clause { none, membership, distinctness };

    bool ok = true;
    Clause clause = Clause::none;
    std::size_t first = 0;   // failing index (membership) or lower clashing index
    std::size_t second = 0;  // higher clashing index (distinctness only)
    std::string reason;
};

/// Largest partial SDR. `partial` holds (set index, element) pairs sorted by
/// set index; `witness` is an index set whose shortfall |K| - |union| equals
/// the defect, which certifies that no larger partial SDR exists.
struct DefectReport {
    std::size_t defect = 0;
    std::vector<std::pair<std::size_t, std::size_t>> partial;
    std::vector<std::size_t> witness;
};

/// r x c grid of subsets of a ground set, for the two-dimensional variant.
class ArrayFamily {
public:
    ArrayFamily() = default;
    ArrayFamily(std::vector<std::string> ground,
                const std::vector<std::vector<std::vector<std::string>>>& grid);
    static ArrayFamily indexed(std::size_t ground_size,
                               std::vector<std::vector<std::vector<std::size_t>>> grid);

    std::size_t rows() const { return grid_.size(); }
    std::size_t cols() const { return grid_.empty() ? 0 : grid_.front().size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<std::size_t>& cell(std::size_t r, std::size_t c) const { return grid_[r][c]; }

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<std::vector<std::size_t>>> grid_;
};

using ElementGrid = std::vector<std::vector<std::size_t>>;

inline constexpr std::size_t kDefaultCountCeiling = 20;
inline constexpr std::size_t kDefaultArrayCeiling = 16;

/// Either an SDR or a violator of Hall's condition, found by augmenting
/// search (never by subset enumeration).
HallResult hall_check(const SetFamily& family);

SdrCheck validate_sdr(const SetFamily& family, std::span<const std::size_t> candidate);

/// Re-derives the union of the named sets and checks |union| < |K|.
bool validate_violator(const SetFamily& family, const HallViolator& violator);

/// Defect form: maximum matching fixes d, the dummy-element construction
/// produces the partial SDR.
DefectReport partial_sdr(const SetFamily& family);

bool validate_defect_report(const SetFamily& family, const DefectReport& report);

/// T_i together with `dummies` fresh elements appended to the ground set
/// and added to every set.
SetFamily with_dummies(const SetFamily& family, std::size_t dummies);

/// The lexicographically least SDR (by set index, then element position).
std::optional<Sdr> lex_least_sdr(const SetFamily& family);

/// Exact number of SDRs, the permanent of the n x |S| incidence matrix.
BigInt count_sdrs(const SetFamily& family, std::size_t ceiling = kDefaultCountCeiling);

/// Representatives distinct along every row and column; nullopt only after
/// exhaustive search.
std::optional<ElementGrid> array_sdr(const ArrayFamily& arr,
                                     std::size_t ceiling = kDefaultArrayCeiling);

bool validate_array_sdr(const ArrayFamily& arr, const ElementGrid& grid);

} // namespace transversal
