#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqzero {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Exponent = std::int64_t;

/// Raised by exact_div when the divisor does not divide the dividend over Z.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// structural equality is mathematical equality. The zero polynomial has no
/// terms. Values are immutable once built; all operations return new values.
class QPoly {
public:
    using TermMap = std::map<Exponent, BigInt>;

    QPoly() = default;
    QPoly(long long constant); // NOLINT(google-explicit-constructor)
    explicit QPoly(BigInt constant);

    /// Builds a polynomial from an arbitrary term map, dropping zeros.
    static QPoly from_terms(TermMap terms);
    static QPoly monomial(BigInt coeff, Exponent exp);
    /// The indeterminate q itself.
    static QPoly q() { return monomial(1, 1); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True iff every exponent is nonnegative.
    bool is_polynomial() const noexcept;

    BigInt coefficient(Exponent exp) const;
    std::optional<Exponent> degree() const;
    std::optional<Exponent> low_degree() const;
    /// Coefficient of the highest-exponent term; 0 for the zero polynomial.
    BigInt leading_coefficient() const;

    /// Multiplication by q^k.
    QPoly shifted(Exponent k) const;

    /// Exact value at q = x. Throws std::domain_error for x = 0 when there
    /// are negative exponents.
    BigRational eval(const BigInt& x) const;

    /// Canonical rendering: ascending exponents, e.g. "-q + 2*q^2".
    std::string to_string() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void add_term(Exponent exp, const BigInt& coeff);

    TermMap terms_;
};

/// q^k as a polynomial.
inline QPoly q_pow(Exponent k) { return QPoly::monomial(1, k); }

/// Returns c with b * c == a. Long division from the lowest exponent;
/// throws InexactDivision on a nonzero remainder and std::invalid_argument
/// when b is zero.
QPoly exact_div(const QPoly& a, const QPoly& b);

std::string to_string(const BigRational& value);

} // namespace sqzero
