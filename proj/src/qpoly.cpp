#include "sqzero/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sqzero {

QPoly::QPoly(long long constant) : QPoly(BigInt(constant)) {}

QPoly::QPoly(BigInt constant) {
    if (constant != 0) {
        terms_.emplace(0, std::move(constant));
    }
}

QPoly QPoly::from_terms(TermMap terms) {
    QPoly out;
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    out.terms_ = std::move(terms);
    return out;
}

QPoly QPoly::monomial(BigInt coeff, Exponent exp) {
    QPoly out;
    if (coeff != 0) {
        out.terms_.emplace(exp, std::move(coeff));
    }
    return out;
}

bool QPoly::is_polynomial() const noexcept {
    return terms_.empty() || terms_.begin()->first >= 0;
}

BigInt QPoly::coefficient(Exponent exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<Exponent> QPoly::degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

std::optional<Exponent> QPoly::low_degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

BigInt QPoly::leading_coefficient() const {
    return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

QPoly QPoly::shifted(Exponent k) const {
    QPoly out;
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    }
    return out;
}

void QPoly::add_term(Exponent exp, const BigInt& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    QPoly out;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

BigRational QPoly::eval(const BigInt& x) const {
    if (terms_.empty()) {
        return 0;
    }
    const Exponent low = terms_.begin()->first;
    if (x == 0) {
        if (low < 0) {
            throw std::domain_error("evaluation at zero with negative exponents");
        }
        return BigRational(coefficient(0));
    }
    // Evaluate x^(-base) * a(x) as an integer polynomial, then divide.
    const Exponent base = std::min<Exponent>(low, 0);
    BigInt acc = 0;
    Exponent prev = terms_.rbegin()->first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc *= boost::multiprecision::pow(x, static_cast<unsigned>(prev - it->first));
        acc += it->second;
        prev = it->first;
    }
    acc *= boost::multiprecision::pow(x, static_cast<unsigned>(prev - base));
    return BigRational(acc) / BigRational(boost::multiprecision::pow(x, static_cast<unsigned>(-base)));
}

std::string QPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) {
        throw std::invalid_argument("exact_div: division by the zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    const auto& divisor = b.terms();
    const Exponent b_low = divisor.begin()->first;
    const BigInt& b_low_coeff = divisor.begin()->second;
    const Exponent max_shift = *a.degree() - *b.degree();

    QPoly::TermMap rem = a.terms();
    QPoly::TermMap quot;
    while (!rem.empty()) {
        const auto [e, c] = *rem.begin();
        const Exponent shift = e - b_low;
        if (shift > max_shift) {
            throw InexactDivision("inexact division: " + a.to_string() + " by " + b.to_string());
        }
        BigInt factor;
        BigInt leftover;
        boost::multiprecision::divide_qr(c, b_low_coeff, factor, leftover);
        if (leftover != 0) {
            throw InexactDivision("inexact division: " + a.to_string() + " by " + b.to_string());
        }
        for (const auto& [eb, cb] : divisor) {
            auto [it, inserted] = rem.try_emplace(eb + shift, 0);
            it->second -= factor * cb;
            if (it->second == 0) {
                rem.erase(it);
            }
        }
        quot.emplace_hint(quot.end(), shift, std::move(factor));
    }
    return QPoly::from_terms(std::move(quot));
}

std::string to_string(const BigRational& value) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(value);
    if (boost::multiprecision::denominator(value) != 1) {
        os << '/' << boost::multiprecision::denominator(value);
    }
    return os.str();
}

} // namespace sqzero
