#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "sqzero/gf.hpp"
#include "sqzero/qpoly.hpp"

namespace sqzero {

/// Strictly upper-triangular n x n matrix; entries (i, j), i < j, stored in
/// row-major order. Everything on and below the diagonal is zero.
class StrictUpperMatrix {
public:
    /// Throws std::invalid_argument unless entries.size() == n(n-1)/2.
    StrictUpperMatrix(std::size_t n, std::vector<FieldElement> entries);

    static std::size_t entry_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }
    /// Position of (i, j), i < j, in the entry vector.
    static std::size_t entry_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t dim() const noexcept { return n_; }
    const std::vector<FieldElement>& entries() const noexcept { return entries_; }
    FieldElement at(std::size_t i, std::size_t j) const noexcept {
        return i < j ? entries_[entry_index(n_, i, j)] : FieldElement{};
    }

private:
    std::size_t n_;
    std::vector<FieldElement> entries_;
};

/// X^2 == 0. Only (i, j) with j >= i + 2 can be nonzero in X^2.
bool square_is_zero(const StrictUpperMatrix& m, const FiniteField& f);

/// Rank over f by Gaussian elimination.
std::size_t rank(const StrictUpperMatrix& m, const FiniteField& f);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const BigInt& required, std::uint64_t budget);
    const BigInt& required() const noexcept { return required_; }

private:
    BigInt required_;
};

struct EnumerationOptions {
    static constexpr std::uint64_t default_budget = 100'000'000;

    /// Number of worker threads; must be positive.
    unsigned workers = 1;
    /// Maximum number of candidate matrices q^{n(n-1)/2} to visit.
    std::uint64_t budget = default_budget;
};

/// Number of candidate matrices q^{n(n-1)/2}.
BigInt candidate_count(std::size_t n, unsigned q);

/// Exhaustive count of strictly upper-triangular X over GF(q) with X^2 = 0.
/// Upper-triangular solutions have zero diagonal (a field has no nonzero x
/// with x^2 = 0), so this is also the count over all upper-triangular X.
/// Throws BudgetExceeded when the search space exceeds options.budget.
BigInt count_square_zero(std::size_t n, unsigned q, const EnumerationOptions& options = {});

/// The same solutions partitioned by rank. Values sum to count_square_zero.
std::map<std::size_t, BigInt> count_by_rank(std::size_t n, unsigned q, const EnumerationOptions& options = {});

} // namespace sqzero
