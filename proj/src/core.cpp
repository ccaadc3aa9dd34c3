#include "transversal/core.hpp"

#include "transversal/errors.hpp"
#include "transversal/matching_engine.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace transversal {

namespace {

std::vector<std::string> decimal_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(std::to_string(i));
    }
    return names;
}

std::unordered_map<std::string, std::size_t> index_ground(const std::vector<std::string>& ground) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (!index.emplace(ground[i], i).second) {
            throw InvalidInput("duplicate element id \"" + ground[i] + "\" in ground set");
        }
    }
    return index;
}

void normalize(std::vector<std::size_t>& set, std::size_t ground_size, const std::string& where) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && set.back() >= ground_size) {
        throw InvalidInput(where + " contains element " + std::to_string(set.back()) +
                           " outside a ground set of size " + std::to_string(ground_size));
    }
}

std::vector<std::size_t> resolve(const std::unordered_map<std::string, std::size_t>& index,
                                 const std::vector<std::string>& ids, const std::string& where) {
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        auto it = index.find(id);
        if (it == index.end()) {
            throw InvalidInput(where + " contains \"" + id + "\", which is not in the ground set");
        }
        out.push_back(it->second);
    }
    return out;
}

engine::BipartiteMatch match_family(const SetFamily& family) {
    return engine::maximum_matching(family.sets(), family.ground_size());
}

} // namespace

SetFamily::SetFamily(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& sets)
    : ground_(std::move(ground)) {
    const auto index = index_ground(ground_);
    sets_.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string where = "set " + std::to_string(i);
        auto resolved = resolve(index, sets[i], where);
        normalize(resolved, ground_.size(), where);
        sets_.push_back(std::move(resolved));
    }
}

SetFamily SetFamily::indexed(std::size_t ground_size, std::vector<std::vector<std::size_t>> sets) {
    return indexed(decimal_names(ground_size), std::move(sets));
}

SetFamily SetFamily::indexed(std::vector<std::string> ground, std::vector<std::vector<std::size_t>> sets) {
    SetFamily family;
    index_ground(ground);
    family.ground_ = std::move(ground);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        normalize(sets[i], family.ground_.size(), "set " + std::to_string(i));
    }
    family.sets_ = std::move(sets);
    return family;
}

bool SetFamily::contains(std::size_t i, std::size_t element) const {
    const auto& s = sets_.at(i);
    return std::binary_search(s.begin(), s.end(), element);
}

std::optional<std::size_t> SetFamily::index_of(const std::string& id) const {
    auto it = std::find(ground_.begin(), ground_.end(), id);
    if (it == ground_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - ground_.begin());
}

std::vector<std::size_t> SetFamily::union_of(std::span<const std::size_t> indices) const {
    std::vector<bool> present(ground_.size(), false);
    for (std::size_t i : indices) {
        for (std::size_t x : sets_.at(i)) {
            present[x] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < present.size(); ++x) {
        if (present[x]) {
            out.push_back(x);
        }
    }
    return out;
}

HallResult hall_check(const SetFamily& family) {
    const auto match = match_family(family);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (match.left_mate[i] != engine::npos) {
            continue;
        }
        // Everything reachable from an exposed set by alternating paths is
        // matched on the element side, so the reached sets outnumber their
        // union by exactly one.
        const std::size_t root[] = {i};
        const auto reach = engine::alternating_reach(match, family.sets(), root);
        HallViolator violator;
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (reach.left[k]) {
                violator.indices.push_back(k);
            }
        }
        for (std::size_t x = 0; x < family.ground_size(); ++x) {
            if (reach.right[x]) {
                violator.union_elements.push_back(x);
            }
        }
        return violator;
    }
    return Sdr{match.left_mate};
}

SdrCheck validate_sdr(const SetFamily& family, std::span<const std::size_t> candidate) {
    if (candidate.size() != family.size()) {
        throw InvalidInput("candidate has " + std::to_string(candidate.size()) +
                           " representatives for a family of " + std::to_string(family.size()) +
                           " sets");
    }
    std::unordered_map<std::size_t, std::size_t> first_use;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (candidate[i] >= family.ground_size() || !family.contains(i, candidate[i])) {
            return {false, SdrCheck::Clause::membership, i, 0,
                    "membership: representative of set " + std::to_string(i) + " is not in the set"};
        }
        auto [it, fresh] = first_use.emplace(candidate[i], i);
        if (!fresh) {
            return {false, SdrCheck::Clause::distinctness, it->second, i,
                    "distinctness: sets " + std::to_string(it->second) + " and " + std::to_string(i) +
                        " share a representative"};
        }
    }
    return {};
}

bool validate_violator(const SetFamily& family, const HallViolator& violator) {
    if (violator.indices.empty()) {
        return false;
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t i : violator.indices) {
        if (i >= family.size() || !seen.insert(i).second) {
            return false;
        }
    }
    auto claimed = violator.union_elements;
    std::sort(claimed.begin(), claimed.end());
    return claimed == family.union_of(violator.indices) && claimed.size() < violator.indices.size();
}

SetFamily with_dummies(const SetFamily& family, std::size_t dummies) {
    auto ground = family.ground();
    std::unordered_set<std::string> taken(ground.begin(), ground.end());
    std::string prefix = "#dummy";
    auto clashes = [&] {
        for (std::size_t k = 0; k < dummies; ++k) {
            if (taken.count(prefix + std::to_string(k))) {
                return true;
            }
        }
        return false;
    };
    while (clashes()) {
        prefix.insert(prefix.begin(), '#');
    }
    const std::size_t first_dummy = ground.size();
    for (std::size_t k = 0; k < dummies; ++k) {
        ground.push_back(prefix + std::to_string(k));
    }
    auto sets = family.sets();
    for (auto& s : sets) {
        for (std::size_t k = 0; k < dummies; ++k) {
            s.push_back(first_dummy + k);
        }
    }
    return SetFamily::indexed(std::move(ground), std::move(sets));
}

DefectReport partial_sdr(const SetFamily& family) {
    const auto match = match_family(family);
    std::vector<std::size_t> exposed;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (match.left_mate[i] == engine::npos) {
            exposed.push_back(i);
        }
    }

    DefectReport report;
    report.defect = exposed.size();
    const auto reach = engine::alternating_reach(match, family.sets(), exposed);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (reach.left[i]) {
            report.witness.push_back(i);
        }
    }

    // d dummies make Hall's condition hold; the sets represented by a dummy
    // are the ones left out of the partial SDR.
    const auto padded = with_dummies(family, report.defect);
    const auto result = hall_check(padded);
    const auto& full = std::get<Sdr>(result);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (full.reps[i] < family.ground_size()) {
            report.partial.emplace_back(i, full.reps[i]);
        }
    }
    return report;
}

bool validate_defect_report(const SetFamily& family, const DefectReport& report) {
    if (report.defect > family.size() || report.partial.size() != family.size() - report.defect) {
        return false;
    }
    std::unordered_set<std::size_t> indices;
    std::unordered_set<std::size_t> values;
    for (auto [i, x] : report.partial) {
        if (i >= family.size() || x >= family.ground_size() || !family.contains(i, x)) {
            return false;
        }
        if (!indices.insert(i).second || !values.insert(x).second) {
            return false;
        }
    }
    // The witness shortfall bounds every partial SDR from above.
    std::unordered_set<std::size_t> witness(report.witness.begin(), report.witness.end());
    if (witness.size() != report.witness.size()) {
        return false;
    }
    for (std::size_t i : report.witness) {
        if (i >= family.size()) {
            return false;
        }
    }
    const std::size_t covered = family.union_of(report.witness).size();
    return report.witness.size() >= covered && report.witness.size() - covered == report.defect;
}

std::optional<Sdr> lex_least_sdr(const SetFamily& family) {
    const std::size_t n = family.size();
    if (match_family(family).size() != n) {
        return std::nullopt;
    }
    std::vector<bool> used(family.ground_size(), false);
    Sdr sdr{std::vector<std::size_t>(n, engine::npos)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x : family.set(i)) {
            if (used[x]) {
                continue;
            }
            used[x] = true;
            engine::Adjacency rest;
            rest.reserve(n - i - 1);
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<std::size_t> allowed;
                for (std::size_t y : family.set(j)) {
                    if (!used[y]) {
                        allowed.push_back(y);
                    }
                }
                rest.push_back(std::move(allowed));
            }
            if (engine::maximum_matching(rest, family.ground_size()).size() == rest.size()) {
                sdr.reps[i] = x;
                break;
            }
            used[x] = false;
        }
    }
    return sdr;
}

namespace {

// Inclusion-exclusion over column sets X with |X| <= n:
//   #SDR = sum_X (-1)^(n-|X|) C(m-|X|, n-|X|) prod_i |T_i cap X|
// where m counts the columns that occur in some set.
class ColumnInclusionExclusion {
public:
    explicit ColumnInclusionExclusion(const SetFamily& family) : n_(family.size()) {
        std::vector<bool> present(family.ground_size(), false);
        for (const auto& s : family.sets()) {
            for (std::size_t x : s) {
                present[x] = true;
            }
        }
        std::vector<std::size_t> column_of(family.ground_size(), engine::npos);
        for (std::size_t x = 0; x < present.size(); ++x) {
            if (present[x]) {
                column_of[x] = rows_in_column_.size();
                rows_in_column_.emplace_back();
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t x : family.set(i)) {
                rows_in_column_[column_of[x]].push_back(i);
            }
        }
        hits_.assign(n_, 0);
    }

    BigInt run() {
        total_ = 0;
        visit(0, 0);
        return total_;
    }

private:
    void visit(std::size_t column, std::size_t chosen) {
        if (column == rows_in_column_.size()) {
            accumulate(chosen);
            return;
        }
        visit(column + 1, chosen);
        if (chosen < n_) {
            for (std::size_t i : rows_in_column_[column]) {
                ++hits_[i];
            }
            visit(column + 1, chosen + 1);
            for (std::size_t i : rows_in_column_[column]) {
                --hits_[i];
            }
        }
    }

    void accumulate(std::size_t chosen) {
        BigInt term;
        mpz_bin_uiui(term.get_mpz_t(), rows_in_column_.size() - chosen, n_ - chosen);
        std::uint64_t small = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (hits_[i] == 0) {
                return;
            }
            std::uint64_t next = 0;
            if (__builtin_mul_overflow(small, static_cast<std::uint64_t>(hits_[i]), &next)) {
                term *= static_cast<unsigned long>(small);
                small = hits_[i];
            } else {
                small = next;
            }
        }
        term *= static_cast<unsigned long>(small);
        if ((n_ - chosen) % 2 == 0) {
            total_ += term;
        } else {
            total_ -= term;
        }
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> rows_in_column_;
    std::vector<std::size_t> hits_;
    BigInt total_;
};

} // namespace

BigInt count_sdrs(const SetFamily& family, std::size_t ceiling) {
    check_ceiling(family.size(), ceiling, "family size");
    return ColumnInclusionExclusion(family).run();
}

ArrayFamily::ArrayFamily(std::vector<std::string> ground,
                         const std::vector<std::vector<std::vector<std::string>>>& grid)
    : ground_(std::move(ground)) {
    const auto index = index_ground(ground_);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (!grid.empty() && grid[r].size() != grid.front().size()) {
            throw InvalidInput("grid row " + std::to_string(r) + " has a different length");
        }
        std::vector<std::vector<std::size_t>> row;
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            const std::string where = "cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
            auto cell = resolve(index, grid[r][c], where);
            normalize(cell, ground_.size(), where);
            row.push_back(std::move(cell));
        }
        grid_.push_back(std::move(row));
    }
}

ArrayFamily ArrayFamily::indexed(std::size_t ground_size,
                                 std::vector<std::vector<std::vector<std::size_t>>> grid) {
    ArrayFamily arr;
    arr.ground_ = decimal_names(ground_size);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        if (grid[r].size() != grid.front().size()) {
            throw InvalidInput("grid row " + std::to_string(r) + " has a different length");
        }
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            normalize(grid[r][c], ground_size,
                      "cell (" + std::to_string(r) + "," + std::to_string(c) + ")");
        }
    }
    arr.grid_ = std::move(grid);
    return arr;
}

namespace {

class ArraySearch {
public:
    explicit ArraySearch(const ArrayFamily& arr)
        : arr_(arr),
          row_used_(arr.rows(), std::vector<bool>(arr.ground().size(), false)),
          col_used_(arr.cols(), std::vector<bool>(arr.ground().size(), false)),
          grid_(arr.rows(), std::vector<std::size_t>(arr.cols(), engine::npos)) {}

    std::optional<ElementGrid> run() {
        if (place(0)) {
            return grid_;
        }
        return std::nullopt;
    }

private:
    bool place(std::size_t cell) {
        if (cell == arr_.rows() * arr_.cols()) {
            return true;
        }
        const std::size_t r = cell / arr_.cols();
        const std::size_t c = cell % arr_.cols();
        for (std::size_t x : arr_.cell(r, c)) {
            if (row_used_[r][x] || col_used_[c][x]) {
                continue;
            }
            row_used_[r][x] = col_used_[c][x] = true;
            grid_[r][c] = x;
            if (place(cell + 1)) {
                return true;
            }
            row_used_[r][x] = col_used_[c][x] = false;
        }
        return false;
    }

    const ArrayFamily& arr_;
    std::vector<std::vector<bool>> row_used_;
    std::vector<std::vector<bool>> col_used_;
    ElementGrid grid_;
};

} // namespace

std::optional<ElementGrid> array_sdr(const ArrayFamily& arr, std::size_t ceiling) {
    // Finding a two-dimensional SDR is NP-hard, hence the cell ceiling.
    check_ceiling(arr.rows() * arr.cols(), ceiling, "array cell count");
    return ArraySearch(arr).run();
}

bool validate_array_sdr(const ArrayFamily& arr, const ElementGrid& grid) {
    if (grid.size() != arr.rows()) {
        return false;
    }
    for (std::size_t r = 0; r < arr.rows(); ++r) {
        if (grid[r].size() != arr.cols()) {
            return false;
        }
        for (std::size_t c = 0; c < arr.cols(); ++c) {
            const auto& cell = arr.cell(r, c);
            if (!std::binary_search(cell.begin(), cell.end(), grid[r][c])) {
                return false;
            }
            for (std::size_t c2 = 0; c2 < c; ++c2) {
                if (grid[r][c2] == grid[r][c]) {
                    return false;
                }
            }
            for (std::size_t r2 = 0; r2 < r; ++r2) {
                if (grid[r2][c] == grid[r][c]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace transversal
