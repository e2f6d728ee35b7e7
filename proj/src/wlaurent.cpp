#include "sqzero/wlaurent.hpp"

#include "sqzero/qbinom.hpp"

namespace sqzero {

WLaurent WLaurent::monomial(QPoly coeff, Exponent w_exp) {
    WLaurent out;
    out.add_term(w_exp, coeff);
    return out;
}

WLaurent WLaurent::one_plus_w_pow(unsigned n) {
    WLaurent out;
    for (unsigned k = 0; k <= n; ++k) {
        out.add_term(k, QPoly(binomial(n, k)));
    }
    return out;
}

void WLaurent::add_term(Exponent w_exp, const QPoly& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w_exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QPoly WLaurent::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? QPoly{} : it->second;
}

WLaurent WLaurent::shifted(Exponent k) const {
    WLaurent out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    }
    return out;
}

WLaurent& WLaurent::operator+=(const WLaurent& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

WLaurent operator*(const WLaurent& lhs, const WLaurent& rhs) {
    WLaurent out;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

WLaurent operator*(const WLaurent& lhs, const QPoly& scalar) {
    WLaurent out;
    for (const auto& [e, c] : lhs.terms_) {
        out.add_term(e, c * scalar);
    }
    return out;
}

} // namespace sqzero
