#include "transversal/latin.hpp"

#include "transversal/core.hpp"
#include "transversal/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace transversal {

std::string latin_violation(std::size_t n, const std::vector<std::vector<int>>& rows) {
    if (rows.size() > n) {
        return "more rows (" + std::to_string(rows.size()) + ") than symbols (" + std::to_string(n) + ")";
    }
    std::vector<std::vector<bool>> in_column(n, std::vector<bool>(n + 1, false));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n) {
            return "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size());
        }
        std::vector<bool> in_row(n + 1, false);
        for (std::size_t c = 0; c < n; ++c) {
            const int s = rows[r][c];
            if (s < 1 || static_cast<std::size_t>(s) > n) {
                return "symbol " + std::to_string(s) + " at (" + std::to_string(r) + "," + std::to_string(c) +
                       ") is outside 1.." + std::to_string(n);
            }
            if (in_row[s]) {
                return "symbol " + std::to_string(s) + " repeats in row " + std::to_string(r);
            }
            if (in_column[c][s]) {
                return "symbol " + std::to_string(s) + " repeats in column " + std::to_string(c);
            }
            in_row[s] = in_column[c][s] = true;
        }
    }
    return {};
}

LatinRectangle::LatinRectangle(std::size_t n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows)) {
    if (auto reason = latin_violation(n_, rows_); !reason.empty()) {
        throw InvalidInput("not a Latin rectangle: " + reason);
    }
}

namespace {

std::vector<std::string> symbol_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t s = 1; s <= n; ++s) {
        names.push_back(std::to_string(s));
    }
    return names;
}

// T_c = symbols missing from column c, as 0-based symbol positions. Every
// set has n - m members and every symbol lies in n - m sets.
SetFamily deficiency_family(const LatinRectangle& rect) {
    const std::size_t n = rect.order();
    std::vector<std::vector<std::size_t>> sets(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<bool> present(n, false);
        for (const auto& row : rect.cells()) {
            present[static_cast<std::size_t>(row[c] - 1)] = true;
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (!present[s]) {
                sets[c].push_back(s);
            }
        }
    }
    return SetFamily::indexed(symbol_names(n), std::move(sets));
}

class SquareCounter {
public:
    explicit SquareCounter(std::size_t n) : n_(n), row_used_(n, 0), col_used_(n, 0) {}

    // Squares whose first row is 1..n; every square is a symbol relabelling
    // of exactly one of these.
    std::uint64_t run() {
        for (std::size_t c = 0; c < n_; ++c) {
            row_used_[0] |= 1U << c;
            col_used_[c] |= 1U << c;
        }
        count_ = 0;
        place(n_);
        return count_;
    }

private:
    void place(std::size_t cell) {
        if (cell == n_ * n_) {
            ++count_;
            return;
        }
        const std::size_t r = cell / n_;
        const std::size_t c = cell % n_;
        unsigned free = ~(row_used_[r] | col_used_[c]) & ((1U << n_) - 1);
        while (free) {
            const unsigned bit = free & (~free + 1);
            free ^= bit;
            row_used_[r] |= bit;
            col_used_[c] |= bit;
            place(cell + 1);
            row_used_[r] ^= bit;
            col_used_[c] ^= bit;
        }
    }

    std::size_t n_;
    std::vector<unsigned> row_used_;
    std::vector<unsigned> col_used_;
    std::uint64_t count_ = 0;
};

} // namespace

LatinRectangle extend_row(const LatinRectangle& rect) {
    if (rect.is_square()) {
        throw AlreadyComplete("rectangle is already a " + std::to_string(rect.order()) + "x" +
                              std::to_string(rect.order()) + " Latin square");
    }
    const auto sdr = lex_least_sdr(deficiency_family(rect));
    if (!sdr) {
        throw std::logic_error("regular deficiency family without an SDR");
    }
    auto rows = rect.cells();
    std::vector<int> row;
    for (std::size_t s : sdr->reps) {
        row.push_back(static_cast<int>(s) + 1);
    }
    rows.push_back(std::move(row));
    return LatinRectangle(rect.order(), std::move(rows));
}

LatinRectangle complete(const LatinRectangle& rect) {
    LatinRectangle out = rect;
    while (!out.is_square()) {
        out = extend_row(out);
    }
    return out;
}

BigInt count_extensions(const LatinRectangle& rect, std::size_t ceiling) {
    check_ceiling(rect.order(), ceiling, "Latin rectangle order");
    if (rect.is_square()) {
        throw AlreadyComplete("a Latin square has no next row");
    }
    const auto family = deficiency_family(rect);
    return count_sdrs(family, family.size());
}

BigInt count_latin_squares(std::size_t n, std::size_t ceiling) {
    check_ceiling(n, ceiling, "Latin square order");
    if (n == 0) {
        throw InvalidInput("Latin square order must be positive");
    }
    BigInt normalized = static_cast<unsigned long>(SquareCounter(n).run());
    return normalized * factorial(static_cast<unsigned>(n));
}

Rational latin_lower_bound(unsigned n) {
    if (n == 0) {
        throw InvalidInput("Latin square bound needs n >= 1");
    }
    Rational bound(power(factorial(n), 2UL * n), power(BigInt(n), static_cast<unsigned long>(n) * n));
    bound.canonicalize();
    return bound;
}

BlockDesign::BlockDesign(std::vector<std::string> points, const std::vector<std::vector<std::string>>& blocks)
    : points_(std::move(points)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!index.emplace(points_[i], i).second) {
            throw InvalidInput("duplicate point \"" + points_[i] + "\"");
        }
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<std::size_t> block;
        for (const auto& p : blocks[b]) {
            auto it = index.find(p);
            if (it == index.end()) {
                throw InvalidInput("block " + std::to_string(b) + " contains unknown point \"" + p + "\"");
            }
            block.push_back(it->second);
        }
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
            throw InvalidInput("block " + std::to_string(b) + " repeats a point");
        }
        blocks_.push_back(std::move(block));
    }
}

BlockDesign BlockDesign::indexed(std::size_t v, std::vector<std::vector<std::size_t>> blocks) {
    std::vector<std::string> points;
    for (std::size_t p = 1; p <= v; ++p) {
        points.push_back(std::to_string(p));
    }
    std::vector<std::vector<std::string>> named;
    for (const auto& block : blocks) {
        std::vector<std::string> names;
        for (std::size_t p : block) {
            if (p >= v) {
                throw InvalidInput("block point " + std::to_string(p) + " is out of range");
            }
            names.push_back(points[p]);
        }
        named.push_back(std::move(names));
    }
    return BlockDesign(std::move(points), named);
}

std::optional<std::size_t> BlockDesign::block_size() const {
    if (blocks_.empty()) {
        return std::nullopt;
    }
    for (const auto& block : blocks_) {
        if (block.size() != blocks_.front().size()) {
            return std::nullopt;
        }
    }
    return blocks_.front().size();
}

std::optional<std::size_t> BlockDesign::replication() const {
    std::vector<std::size_t> count(points_.size(), 0);
    for (const auto& block : blocks_) {
        for (std::size_t p : block) {
            ++count[p];
        }
    }
    if (count.empty() || std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>()) != count.end()) {
        return std::nullopt;
    }
    return count.front();
}

bool BlockDesign::is_symmetric_bibd() const {
    if (points_.size() != blocks_.size() || !block_size() || !replication()) {
        return false;
    }
    const std::size_t v = points_.size();
    std::vector<std::vector<std::size_t>> together(v, std::vector<std::size_t>(v, 0));
    for (const auto& block : blocks_) {
        for (std::size_t a : block) {
            for (std::size_t b : block) {
                ++together[a][b];
            }
        }
    }
    std::optional<std::size_t> lambda;
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
            if (lambda && *lambda != together[a][b]) {
                return false;
            }
            lambda = together[a][b];
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> youden_from_design(const BlockDesign& design) {
    const auto k = design.block_size();
    if (!k) {
        throw InvalidInput("blocks do not share a common size");
    }
    if (!design.replication()) {
        throw InvalidInput("design is not equireplicate");
    }
    if (design.point_count() != design.block_count()) {
        throw InvalidInput("design needs as many blocks as points (v = " + std::to_string(design.point_count()) +
                           ", b = " + std::to_string(design.block_count()) + ")");
    }
    // After t rows every block keeps k - t points and every point sits in
    // k - t of them, so each step is an SDR of a regular family.
    std::vector<std::vector<std::size_t>> remaining = design.blocks();
    std::vector<std::vector<std::size_t>> array;
    for (std::size_t row = 0; row < *k; ++row) {
        const auto sdr = lex_least_sdr(SetFamily::indexed(design.points(), remaining));
        if (!sdr) {
            throw std::logic_error("regular block family without an SDR");
        }
        for (std::size_t j = 0; j < remaining.size(); ++j) {
            std::erase(remaining[j], sdr->reps[j]);
        }
        array.push_back(sdr->reps);
    }
    return array;
}

bool validate_youden(const BlockDesign& design, const std::vector<std::vector<std::size_t>>& array) {
    const std::size_t v = design.point_count();
    const std::size_t b = design.block_count();
    for (const auto& row : array) {
        if (row.size() != b) {
            return false;
        }
        std::vector<bool> seen(v, false);
        for (std::size_t p : row) {
            if (p >= v || seen[p]) {
                return false;
            }
            seen[p] = true;
        }
    }
    for (std::size_t j = 0; j < b; ++j) {
        std::vector<std::size_t> column;
        for (const auto& row : array) {
            column.push_back(row[j]);
        }
        std::sort(column.begin(), column.end());
        if (column != design.blocks()[j]) {
            return false;
        }
    }
    return true;
}

} // namespace transversal
