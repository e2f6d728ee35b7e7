#include "sqzero/gf.hpp"

#include <algorithm>
#include <map>

namespace sqzero {
namespace {

using Digits = std::vector<unsigned>;

const std::map<unsigned, std::vector<std::uint8_t>>& extension_moduli() {
    static const std::map<unsigned, std::vector<std::uint8_t>> table = {
        {4, {1, 1, 1}},       // x^2 + x + 1
        {8, {1, 1, 0, 1}},    // x^3 + x + 1
        {9, {1, 0, 1}},       // x^2 + 1
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {25, {2, 0, 1}},      // x^2 + 2
        {27, {1, 2, 0, 1}},   // x^3 + 2x + 1
    };
    return table;
}

bool is_prime(unsigned n) {
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Digits to_digits(unsigned value, unsigned p, unsigned k) {
    Digits out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

unsigned from_digits(const Digits& digits, unsigned p) {
    unsigned value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value = value * p + *it;
    }
    return value;
}

// Remainder of a modulo a monic polynomial, coefficients in GF(p).
Digits reduce(Digits a, std::span<const std::uint8_t> monic, unsigned p) {
    const std::size_t d = monic.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        const unsigned c = a[i] % p;
        if (c == 0) {
            continue;
        }
        for (std::size_t t = 0; t <= d; ++t) {
            a[i - d + t] = (a[i - d + t] + (p - c) * monic[t]) % p;
        }
    }
    a.resize(std::min(a.size(), d));
    return a;
}

} // namespace

bool is_irreducible(std::span<const std::uint8_t> monic, unsigned p) {
    const std::size_t deg = monic.size() - 1;
    Digits poly(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        unsigned count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (unsigned code = 0; code < count; ++code) {
            Digits low = to_digits(code, p, static_cast<unsigned>(d));
            std::vector<std::uint8_t> divisor(low.begin(), low.end());
            divisor.push_back(1);
            const Digits rem = reduce(poly, divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](unsigned c) { return c == 0; })) {
                return false;
            }
        }
    }
    return true;
}

FiniteField::FiniteField(unsigned q) : q_(q), p_(0), k_(0) {
    const auto unsupported = [q] {
        return UnsupportedFieldOrder(std::to_string(q) + " is not a supported prime power");
    };
    if (q < 2 || q > max_order) {
        throw unsupported();
    }
    unsigned p = 2;
    while (q % p != 0) {
        ++p;
    }
    unsigned k = 0;
    for (unsigned rest = q; rest > 1; rest /= p, ++k) {
        if (rest % p != 0) {
            throw unsupported();
        }
    }
    p_ = p;
    k_ = k;
    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        auto it = extension_moduli().find(q);
        if (it == extension_moduli().end()) {
            throw unsupported();
        }
        modulus_ = it->second;
        if (!is_irreducible(modulus_, p_)) {
            throw std::logic_error("built-in modulus for GF(" + std::to_string(q) + ") is reducible");
        }
    }

    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            unsigned sum = 0;
            unsigned product = 0;
            if (k_ == 1) {
                sum = (a + b) % p_;
                product = (a * b) % p_;
            } else {
                const Digits da = to_digits(a, p_, k_);
                const Digits db = to_digits(b, p_, k_);
                Digits ds(k_);
                Digits dp(2 * k_ - 1, 0);
                for (unsigned i = 0; i < k_; ++i) {
                    ds[i] = (da[i] + db[i]) % p_;
                    for (unsigned j = 0; j < k_; ++j) {
                        dp[i + j] = (dp[i + j] + da[i] * db[j]) % p_;
                    }
                }
                sum = from_digits(ds, p_);
                product = from_digits(reduce(std::move(dp), modulus_, p_), p_);
            }
            add_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>(sum);
            mul_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>(product);
            if (sum == 0) {
                neg_[a] = static_cast<std::uint8_t>(b);
            }
            if (product == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
            }
        }
    }
}

FieldElement FiniteField::generator_x() const {
    if (k_ < 2) {
        throw std::logic_error("generator_x: GF(" + std::to_string(q_) + ") is a prime field");
    }
    return {static_cast<std::uint8_t>(p_)};
}

FieldElement FiniteField::element(unsigned value) const {
    if (value >= q_) {
        throw std::out_of_range("element " + std::to_string(value) + " not in GF(" + std::to_string(q_) + ")");
    }
    return {static_cast<std::uint8_t>(value)};
}

FieldElement FiniteField::inv(FieldElement a) const {
    if (a.value == 0) {
        throw std::domain_error("inverse of zero");
    }
    return {inv_[a.value]};
}

std::vector<unsigned> FiniteField::supported_orders() {
    std::vector<unsigned> out;
    for (unsigned q = 2; q <= max_order; ++q) {
        if (is_prime(q) || extension_moduli().contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

} // namespace sqzero
