#pragma once

#include "transversal/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace transversal {

/// m x n array over symbols 1..n; each symbol once per row, at most once per
/// column. A square when m == n.
class LatinRectangle {
public:
    LatinRectangle() = default;
    /// Throws InvalidInput on out-of-range symbols or repeats.
    LatinRectangle(std::size_t n, std::vector<std::vector<int>> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t order() const { return n_; }
    bool is_square() const { return rows_.size() == n_; }
    const std::vector<std::vector<int>>& cells() const { return rows_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<int>> rows_;
};

/// Reason is empty on success.
std::string latin_violation(std::size_t n, const std::vector<std::vector<int>>& rows);

/// Appends the lexicographically least valid row; the row is an SDR of the
/// sets of symbols missing from each column.
LatinRectangle extend_row(const LatinRectangle& rect);
LatinRectangle complete(const LatinRectangle& rect);

inline constexpr std::size_t kExtensionCeiling = 8;
inline constexpr std::size_t kLatinCountCeiling = 5;

/// Number of valid next rows.
BigInt count_extensions(const LatinRectangle& rect, std::size_t ceiling = kExtensionCeiling);
BigInt count_latin_squares(std::size_t n, std::size_t ceiling = kLatinCountCeiling);

/// (n!)^{2n} / n^{n^2}.
Rational latin_lower_bound(unsigned n);

/// Points and blocks; block members are point positions.
class BlockDesign {
public:
    BlockDesign() = default;
    BlockDesign(std::vector<std::string> points, const std::vector<std::vector<std::string>>& blocks);
    static BlockDesign indexed(std::size_t v, std::vector<std::vector<std::size_t>> blocks);

    std::size_t point_count() const { return points_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

    /// Common block size, or nullopt when sizes differ (or there are no blocks).
    std::optional<std::size_t> block_size() const;
    /// Common replication number, or nullopt.
    std::optional<std::size_t> replication() const;
    /// Symmetric BIBD: v == b, constant k, and every pair in the same number of blocks.
    bool is_symmetric_bibd() const;

private:
    std::vector<std::string> points_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// k x v array of point positions: column j holds block j, each row is a
/// permutation of the points. Built row by row as SDRs of what remains of
/// each block.
std::vector<std::vector<std::size_t>> youden_from_design(const BlockDesign& design);

/// Columns equal blocks as sets, rows use each point at most once.
bool validate_youden(const BlockDesign& design, const std::vector<std::vector<std::size_t>>& array);

} // namespace transversal
