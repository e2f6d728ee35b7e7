#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqzero {

class UnsupportedFieldOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of a FiniteField, encoded as the base-p digits of its polynomial
/// representative (value = c_0 + c_1 p + ... + c_{k-1} p^{k-1}).
struct FieldElement {
    std::uint8_t value = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
};

/// GF(q) for q = p^k <= 32. Addition, multiplication, negation and inverse
/// are precomputed tables; prime fields fill them with modular arithmetic,
/// extension fields by reducing modulo a fixed irreducible polynomial.
///
/// Moduli: x^2+x+1 (4), x^3+x+1 (8), x^2+1 (9), x^4+x+1 (16), x^2+2 (25),
/// x^3+2x+1 (27). Any irreducible choice gives an isomorphic field.
class FiniteField {
public:
    static constexpr unsigned max_order = 32;

    /// Throws UnsupportedFieldOrder unless q is a supported prime power.
    explicit FiniteField(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    /// Monic modulus, lowest coefficient first; {0, 1} (i.e. x) for prime fields.
    std::span<const std::uint8_t> modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// The class of x in an extension field (p itself encodes x).
    FieldElement generator_x() const;
    FieldElement element(unsigned value) const;

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        return {add_[index(a, b)]};
    }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        return {mul_[index(a, b)]};
    }
    FieldElement neg(FieldElement a) const noexcept { return {neg_[a.value]}; }
    /// Throws std::domain_error for zero.
    FieldElement inv(FieldElement a) const;

    /// All supported orders in ascending order.
    static std::vector<unsigned> supported_orders();

private:
    std::size_t index(FieldElement a, FieldElement b) const noexcept {
        return static_cast<std::size_t>(a.value) * q_ + b.value;
    }

    unsigned q_;
    unsigned p_;
    unsigned k_;
    std::vector<std::uint8_t> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

/// True iff the monic polynomial (lowest coefficient first) has no monic
/// factor of degree 1..deg/2 over GF(p). Exhaustive; fine for tiny p^deg.
bool is_irreducible(std::span<const std::uint8_t> monic, unsigned p);

} // namespace sqzero
