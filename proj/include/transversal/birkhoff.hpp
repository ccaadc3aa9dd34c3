#pragma once

#include "transversal/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace transversal {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t n);
    /// Throws InvalidInput unless `rows` is square.
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix uniform(std::size_t n);
    static RationalMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t size() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    std::size_t nonzeros() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Rational> entries_;
};

struct StochasticCheck {
    enum class Failure { none, negative_entry, row_sum, column_sum };

    bool ok = true;
    Failure failure = Failure::none;
    std::size_t index = 0;   // row or column, or row of the negative entry
    std::size_t column = 0;  // column of the negative entry
    Rational sum;
};

StochasticCheck is_doubly_stochastic(const RationalMatrix& m);

struct BirkhoffTerm {
    Rational coefficient;
    std::vector<std::size_t> permutation;  // row i -> column permutation[i]
};

struct BirkhoffDecomposition {
    std::vector<BirkhoffTerm> terms;
};

/// Peels off mu * P where P is a permutation inside the positive support
/// (found by bipartite matching) and mu the least entry along it.
BirkhoffDecomposition birkhoff_decompose(const RationalMatrix& m);

RationalMatrix reconstruct(const BirkhoffDecomposition& decomposition, std::size_t n);

/// Positive coefficients summing to 1 whose combination reproduces `m` exactly.
bool validate_decomposition(const RationalMatrix& m, const BirkhoffDecomposition& decomposition);

inline constexpr std::size_t kPermanentCeiling = 20;

/// Ryser inclusion-exclusion over column subsets, exact.
Rational permanent(const RationalMatrix& m, std::size_t ceiling = kPermanentCeiling);

/// n!/n^n.
Rational vdw_bound(unsigned n);

/// (r/n)^n n!.
Rational regular_matching_bound(unsigned n, unsigned r);

} // namespace transversal
