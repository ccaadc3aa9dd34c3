#include "transversal/birkhoff.hpp"

#include "transversal/core.hpp"
#include "transversal/errors.hpp"

#include <algorithm>

namespace transversal {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw InvalidInput("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                               " entries, expected " + std::to_string(n_));
        }
        for (const auto& value : rows[i]) {
            Rational canonical = value;
            canonical.canonicalize();
            entries_.push_back(std::move(canonical));
        }
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::uniform(std::size_t n) {
    RationalMatrix m(n);
    for (auto& e : m.entries_) {
        e = Rational(1, static_cast<unsigned long>(n));
    }
    return m;
}

RationalMatrix RationalMatrix::permutation(const std::vector<std::size_t>& perm) {
    RationalMatrix m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        m(i, perm.at(i)) = 1;
    }
    return m;
}

std::size_t RationalMatrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const Rational& e) { return e != 0; }));
}

StochasticCheck is_doubly_stochastic(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < 0) {
                return {false, StochasticCheck::Failure::negative_entry, i, j, m(i, j)};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += m(i, j);
        }
        if (sum != 1) {
            return {false, StochasticCheck::Failure::row_sum, i, 0, sum};
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += m(i, j);
        }
        if (sum != 1) {
            return {false, StochasticCheck::Failure::column_sum, j, 0, sum};
        }
    }
    return {};
}

BirkhoffDecomposition birkhoff_decompose(const RationalMatrix& m) {
    const auto check = is_doubly_stochastic(m);
    if (!check.ok) {
        throw InvalidInput("matrix is not doubly stochastic");
    }
    const std::size_t n = m.size();
    BirkhoffDecomposition out;
    RationalMatrix rest = m;
    // Every row of `rest` sums to the mass not yet peeled off.
    Rational remaining = n == 0 ? Rational(0) : Rational(1);
    while (remaining > 0) {
        std::vector<std::vector<std::size_t>> support(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (rest(i, j) > 0) {
                    support[i].push_back(j);
                }
            }
        }
        // A positive multiple of a doubly stochastic matrix satisfies Hall's
        // condition row-wise, so a permutation inside the support exists.
        const auto sdr = lex_least_sdr(SetFamily::indexed(n, std::move(support)));
        if (!sdr) {
            throw std::logic_error("support of a doubly stochastic matrix has no permutation");
        }
        Rational mu = rest(0, sdr->reps[0]);
        for (std::size_t i = 1; i < n; ++i) {
            mu = std::min(mu, rest(i, sdr->reps[i]));
        }
        for (std::size_t i = 0; i < n; ++i) {
            rest(i, sdr->reps[i]) -= mu;
        }
        remaining -= mu;
        out.terms.push_back({mu, sdr->reps});
    }
    return out;
}

RationalMatrix reconstruct(const BirkhoffDecomposition& decomposition, std::size_t n) {
    RationalMatrix m(n);
    for (const auto& term : decomposition.terms) {
        std::vector<bool> hit(n, false);
        if (term.permutation.size() != n) {
            throw InvalidInput("term permutation has the wrong length");
        }
        for (std::size_t image : term.permutation) {
            if (image >= n || hit[image]) {
                throw InvalidInput("term is not a permutation of 0.." + std::to_string(n - 1));
            }
            hit[image] = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            m(i, term.permutation[i]) += term.coefficient;
        }
    }
    return m;
}

bool validate_decomposition(const RationalMatrix& m, const BirkhoffDecomposition& decomposition) {
    Rational total = 0;
    for (const auto& term : decomposition.terms) {
        if (sgn(term.coefficient) <= 0) {
            return false;
        }
        total += term.coefficient;
    }
    if (total != 1) {
        return false;
    }
    try {
        return reconstruct(decomposition, m.size()) == m;
    } catch (const InvalidInput&) {
        return false;
    }
}

Rational permanent(const RationalMatrix& m, std::size_t ceiling) {
    const std::size_t n = m.size();
    check_ceiling(n, std::min<std::size_t>(ceiling, 62), "matrix dimension");
    if (n == 0) {
        return 1;
    }
    // Clear denominators row by row, then per(A) = per(B) / prod(scale).
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
    BigInt scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            b[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
        }
        scale_product *= scale;
    }

    // Ryser: per(B) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} b_ij, with
    // S visited in Gray-code order so each step toggles one column.
    std::vector<BigInt> row_sum(n, 0);
    BigInt total = 0;
    BigInt product;
    std::size_t subset_size = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto j = static_cast<std::size_t>(__builtin_ctzll(k));
        const bool adding = ((k ^ (k >> 1)) >> j) & 1U;
        for (std::size_t i = 0; i < n; ++i) {
            if (adding) {
                row_sum[i] += b[i][j];
            } else {
                row_sum[i] -= b[i][j];
            }
        }
        subset_size += adding ? 1 : static_cast<std::size_t>(-1);
        product = 1;
        for (std::size_t i = 0; i < n && product != 0; ++i) {
            product *= row_sum[i];
        }
        if ((n - subset_size) % 2 == 0) {
            total += product;
        } else {
            total -= product;
        }
    }
    Rational result(total, scale_product);
    result.canonicalize();
    return result;
}

Rational vdw_bound(unsigned n) {
    if (n == 0) {
        throw InvalidInput("van der Waerden bound needs n >= 1");
    }
    Rational r(factorial(n), power(BigInt(n), n));
    r.canonicalize();
    return r;
}

Rational regular_matching_bound(unsigned n, unsigned r) {
    if (n == 0 || r == 0 || r > n) {
        throw InvalidInput("regular matching bound needs 1 <= r <= n");
    }
    Rational bound(power(BigInt(r), n) * factorial(n), power(BigInt(n), n));
    bound.canonicalize();
    return bound;
}

} // namespace transversal
