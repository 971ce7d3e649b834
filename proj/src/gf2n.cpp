#include "sumfree/gf2n.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace sumfree {

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return acc;
}

std::uint32_t clmod(std::uint64_t a, std::uint32_t modulus) {
    const int dm = std::bit_width(modulus) - 1;
    while (a >> dm) {
        const int da = std::bit_width(a) - 1;
        a ^= static_cast<std::uint64_t>(modulus) << (da - dm);
    }
    return static_cast<std::uint32_t>(a);
}

bool is_irreducible(std::uint32_t poly) {
    const int n = std::bit_width(poly) - 1;
    if (n < 1) return false;
    if (!(poly & 1)) return false; // divisible by x
    for (int d = 1; d <= n / 2; ++d) {
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
            if (clmod(poly, q) == 0) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t x) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            out.push_back(p);
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_primitive_poly(std::uint32_t poly) {
    if (!is_irreducible(poly)) return false;
    const int n = std::bit_width(poly) - 1;
    const std::uint32_t order = (1u << n) - 1;
    if (order == 1) return true;
    const FieldContext ctx(n, poly);
    if (ctx.pow(0b10, order) != 1) return false;
    for (std::uint32_t p : prime_factors(order)) {
        if (ctx.pow(0b10, order / p) == 1) return false;
    }
    return true;
}

} // namespace

FieldContext::FieldContext(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("field degree must be in [1,16], got " + std::to_string(n));
    if (std::bit_width(modulus) - 1 != n)
        throw std::invalid_argument("modulus degree does not match n");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("modulus is reducible over F_2");
}

std::uint32_t FieldContext::default_modulus(int n) {
    if (n < 1 || n > 16)
        throw std::invalid_argument("field degree must be in [1,16]");
    if (n == 1) return 0b11; // x + 1
    // Lowest weight first, then smallest as integer. Cached after first search.
    static std::uint32_t cache[17] = {};
    if (cache[n]) return cache[n];
    for (int weight = 3; weight <= n + 1; ++weight) {
        for (std::uint32_t m = (1u << n) | 1u; m < (2u << n); m += 2) {
            if (std::popcount(m) != weight) continue;
            if (is_primitive_poly(m)) {
                cache[n] = m;
                return m;
            }
        }
    }
    throw std::logic_error("no primitive polynomial found"); // unreachable
}

FieldContext FieldContext::with_default_modulus(int n) {
    return FieldContext(n, default_modulus(n));
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
    return clmod(clmul(a, b), modulus_);
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = 1;
    FieldElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FieldContext::trace(FieldElement a) const {
    FieldElement acc = 0;
    FieldElement t = a;
    for (int i = 0; i < n_; ++i) {
        acc ^= t;
        t = mul(t, t);
    }
    return static_cast<int>(acc & 1u); // acc is 0 or 1: tr(a)^2 = tr(a)
}

FieldElement FieldContext::generator() const {
    const std::uint32_t order = group_order();
    const auto factors = prime_factors(order);
    for (FieldElement g = 2; g < field_size(); ++g) {
        bool ok = true;
        for (std::uint32_t p : factors) {
            if (pow(g, order / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1; // n == 1
}

} // namespace sumfree
