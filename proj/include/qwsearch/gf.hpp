#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qws {

/// Element of a GaloisField. `index` encodes the coefficient vector
/// (c_0, ..., c_{m-1}), least-significant degree first, as sum_i c_i p^i;
/// the same encoding fixes the element's position in the field's
/// enumeration order.
struct FieldElement {
    std::int64_t index = 0;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::int64_t n);

/// True iff q = p^m for a prime p and m >= 1; optionally outputs the
/// decomposition.
bool is_prime_power(std::int64_t q, std::int64_t* p_out = nullptr, int* m_out = nullptr);

/// GF(p^m). The modulus is the monic irreducible polynomial of degree m
/// whose non-leading coefficient encoding sum_i c_i p^i is smallest, so a
/// given (p, m) always yields the same field, the same element numbering,
/// and therefore bit-identical derived artifacts.
class GaloisField {
public:
    GaloisField(std::int64_t p, int m);

    static GaloisField of_order(std::int64_t q);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return m_; }
    std::int64_t order() const { return q_; }

    /// Coefficients c_0..c_{m-1} of the modulus x^m + c_{m-1}x^{m-1} + ... + c_0.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElement element(std::int64_t index) const;
    FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
    std::vector<std::int64_t> coeffs(FieldElement a) const;

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// Multiplicative inverse; throws std::domain_error for the zero element.
    FieldElement inv(FieldElement a) const;

    /// True iff a = b^2 for some nonzero b, via the square set precomputed
    /// at construction. The zero element is rejected with std::domain_error.
    bool is_nonzero_square(FieldElement a) const;

    std::int64_t nonzero_square_count() const { return square_count_; }

private:
    std::int64_t p_;
    int m_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<bool> square_;
    std::int64_t square_count_ = 0;

    void require_element(FieldElement a) const;
};

}  // namespace qws
