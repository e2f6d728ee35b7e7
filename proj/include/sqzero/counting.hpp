#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sqzero/qpoly.hpp"

namespace sqzero {

/// A constant-term extraction produced negative q-exponents. The count
/// polynomials are genuine polynomials, so this always means a bug upstream.
class NonPolynomialResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The polynomials A_n^r(q) for 0 <= n <= n_max, 0 <= 2r <= n.
///
/// Entries outside 0 <= 2r <= n read as zero: the recurrence coefficient
/// q^(n-r) - q^r vanishes at n = 2r, so nothing ever leaks past that edge.
class TriangularTable {
public:
    explicit TriangularTable(std::vector<std::vector<QPoly>> rows);

    std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(rows_.size()) - 1; }
    const std::vector<QPoly>& row(std::int64_t n) const;
    /// A_n^r, or zero outside the triangle.
    QPoly entry(std::int64_t n, std::int64_t r) const;

private:
    std::vector<std::vector<QPoly>> rows_;
};

/// A_{n+1}^{r+1} = q^{r+1} A_n^{r+1} + (q^{n-r} - q^r) A_n^r, A_{n+1}^0 = 1.
/// Row 0 holds the single entry A_0^0 = 1 (the empty matrix).
TriangularTable recurrence_table(std::int64_t n_max);

/// A_n(q) = sum over r of A_n^r(q).
QPoly a_n(const TriangularTable& table, std::int64_t n);

/// C_n(q) from the closed binomial-difference formula.
QPoly closed_form(std::int64_t n);

/// A_n^r(q) as the constant term in w of
///   (1-w)(1+w)^n q^{r(n-r)} w^{-r} sum_i (-1)^i q^{-(i+1)i/2 - i(n-2r)} [i+n-2r choose i]_q w^i.
/// Requires 0 <= 2r <= n.
QPoly anna(std::int64_t n, std::int64_t r);

/// anna(n+1, r+1) - q^{r+1} anna(n, r+1) - (q^{n-r} - q^r) anna(n, r), which
/// must vanish identically. Requires 0 <= 2(r+1) <= n+1.
QPoly sasha_prime_residual(std::int64_t n, std::int64_t r);

/// A_n(q) as the constant term of the summed form
///   (1-w)(1+w)^n sum_l w^{-l} q^{ln-l^2} sum_i (-1)^i q^{i(i-1)/2} [n-2l-i choose i]_q.
QPoly sumanna(std::int64_t n);

/// sum_{i=0}^{floor(m/2)} (-1)^i q^{i(i-1)/2} [m-i choose i]_q
QPoly lemma2_lhs(std::int64_t m);

/// (-1)^{floor(m/3)} q^{m(m-1)/6}, or zero when m = 2 (mod 3).
QPoly lemma2_rhs(std::int64_t m);

} // namespace sqzero
