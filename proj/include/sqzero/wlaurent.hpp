#pragma once

#include <map>

#include "sqzero/qpoly.hpp"

namespace sqzero {

/// Finite Laurent polynomial in w whose coefficients are Laurent polynomials
/// in q. No stored coefficient is zero.
class WLaurent {
public:
    using TermMap = std::map<Exponent, QPoly>;

    WLaurent() = default;

    static WLaurent monomial(QPoly coeff, Exponent w_exp);
    /// (1 + w)^n with ordinary binomial coefficients.
    static WLaurent one_plus_w_pow(unsigned n);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Exponent w_exp, const QPoly& coeff);

    /// CT_w: the coefficient of w^0.
    QPoly constant_term() const;

    /// Multiplication by w^k.
    WLaurent shifted(Exponent k) const;

    WLaurent& operator+=(const WLaurent& rhs);
    friend WLaurent operator+(WLaurent lhs, const WLaurent& rhs) { return lhs += rhs; }
    friend WLaurent operator*(const WLaurent& lhs, const WLaurent& rhs);
    friend WLaurent operator*(const WLaurent& lhs, const QPoly& scalar);
    friend bool operator==(const WLaurent&, const WLaurent&) = default;

private:
    TermMap terms_;
};

} // namespace sqzero
