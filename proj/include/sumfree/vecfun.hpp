#pragma once

#include "sumfree/gf2n.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sumfree {

// Coordinate-parallel binary Mobius transform (an involution): out[u] is the
// XOR of table[x] over all submasks x of u, computed per output bit at once.
std::vector<std::uint32_t> mobius_transform(std::span<const std::uint32_t> table, int n);

// An (n,m)-function stored as a truth table of 2^n m-bit values, indexed by
// the n-bit integer encoding of the input point (bit i of the index is
// coordinate i). Immutable; the ANF is computed once at construction.
class VectorialFunction {
public:
    VectorialFunction(int n, int m, std::vector<std::uint32_t> table);

    // Univariate polynomial sum(c_i * x^(e_i)) evaluated over ctx, m = n.
    static VectorialFunction from_univariate(
        const FieldContext& ctx,
        std::span<const std::pair<std::uint32_t, std::uint64_t>> terms);
    // The power map x^e, exponent taken as given (not reduced).
    static VectorialFunction power_map(const FieldContext& ctx, std::uint64_t exponent);
    static VectorialFunction constant(int n, int m, std::uint32_t value);

    int input_dim() const { return n_; }
    int output_dim() const { return m_; }
    std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
    std::span<const std::uint32_t> table() const { return table_; }

    // anf()[u] packs the coefficient of monomial u for all m coordinates.
    std::span<const std::uint32_t> anf() const { return anf_; }
    bool anf_coefficient(int coord, std::uint32_t monomial) const {
        return (anf_[monomial] >> coord) & 1;
    }

    // Degree of the zero function is reported as this sentinel, never as a
    // value to be compared against an order k.
    static constexpr int kZeroFunction = -1;
    int algebraic_degree() const { return degree_; }
    bool is_zero() const { return degree_ == kZeroFunction; }

    // Boolean component v . F(x) under the standard bit dot product; v != 0.
    VectorialFunction component(std::uint32_t v) const;
    // Trace-form component tr(v F(x)); requires m == n.
    VectorialFunction component(const FieldContext& ctx, std::uint32_t v) const;

    VectorialFunction derivative(std::uint32_t a) const;
    VectorialFunction higher_derivative(std::span<const std::uint32_t> dirs) const;

    // True iff every nonzero component has algebraic degree >= k. The bit dot
    // product is fixed here; for m == n this matches the trace form up to a
    // linear reindexing of v, which leaves the set of component degrees alone.
    bool is_nondegenerate(int k) const;
    // Smallest v whose component has degree < k (the degeneracy witness).
    std::optional<std::uint32_t> low_degree_component(int k) const;
    // min over nonzero v of deg(v . F); kZeroFunction if some component vanishes.
    int min_component_degree() const;

    friend bool operator==(const VectorialFunction& a, const VectorialFunction& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.table_ == b.table_;
    }

private:
    int n_, m_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> anf_;
    int degree_;
};

} // namespace sumfree
