#pragma once

#include <cstdint>
#include <string>

namespace sumfree {

// An element of GF(2^n) in polynomial basis: an n-bit integer whose bit i is
// the coefficient of x^i.
using FieldElement = std::uint32_t;

// Carryless (XOR) polynomial product of two words, no reduction.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

// Remainder of a modulo the polynomial `modulus` (shift-and-XOR division).
std::uint32_t clmod(std::uint64_t a, std::uint32_t modulus);

// Irreducibility over F_2 by trial division against all polynomials of degree
// <= deg/2. Degree of `poly` is its highest set bit.
bool is_irreducible(std::uint32_t poly);

// GF(2^n) under a configurable irreducible modulus, 1 <= n <= 16.
// Immutable after construction; all operations are pure.
class FieldContext {
public:
    FieldContext(int n, std::uint32_t modulus);

    static FieldContext with_default_modulus(int n);
    // Lowest-weight, lexicographically least primitive polynomial of degree n.
    static std::uint32_t default_modulus(int n);

    int degree() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t field_size() const { return 1u << n_; }
    std::uint32_t group_order() const { return (1u << n_) - 1; }

    FieldElement mul(FieldElement a, FieldElement b) const;
    // Square-and-multiply; pow(0, 0) == 1 (x^0 is the constant-one function).
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    // tr(a) = a + a^2 + a^4 + ... + a^(2^(n-1)), always 0 or 1.
    int trace(FieldElement a) const;
    // Smallest element generating the multiplicative group.
    FieldElement generator() const;

private:
    int n_;
    std::uint32_t modulus_;
};

} // namespace sumfree
