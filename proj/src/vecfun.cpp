#include "sumfree/vecfun.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sumfree {

std::vector<std::uint32_t> mobius_transform(std::span<const std::uint32_t> table, int n) {
    std::vector<std::uint32_t> t(table.begin(), table.end());
    for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = 1u << i;
        for (std::uint32_t x = 0; x < t.size(); ++x) {
            if (x & bit) t[x] ^= t[x ^ bit];
        }
    }
    return t;
}

VectorialFunction::VectorialFunction(int n, int m, std::vector<std::uint32_t> table)
    : n_(n), m_(m), table_(std::move(table)) {
    if (n < 1 || n > 16) throw std::invalid_argument("input dimension must be in [1,16]");
    if (m < 1 || m > 16) throw std::invalid_argument("output dimension must be in [1,16]");
    if (table_.size() != (std::size_t(1) << n))
        throw std::invalid_argument("truth table must have exactly 2^n entries");
    for (std::uint32_t v : table_) {
        if (v >> m) throw std::invalid_argument("truth table entry exceeds m bits");
    }
    anf_ = mobius_transform(table_, n_);
    degree_ = kZeroFunction;
    for (std::uint32_t u = 0; u < anf_.size(); ++u) {
        if (anf_[u]) degree_ = std::max(degree_, std::popcount(u));
    }
}

VectorialFunction VectorialFunction::from_univariate(
    const FieldContext& ctx, std::span<const std::pair<std::uint32_t, std::uint64_t>> terms) {
    const int n = ctx.degree();
    for (const auto& [c, e] : terms) {
        if (e >= ctx.field_size())
            throw std::invalid_argument("exponent out of range [0, 2^n - 1]");
        (void)c;
    }
    std::vector<std::uint32_t> table(std::size_t(1) << n, 0);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        std::uint32_t acc = 0;
        for (const auto& [c, e] : terms) acc ^= ctx.mul(c, ctx.pow(x, e));
        table[x] = acc;
    }
    return VectorialFunction(n, n, std::move(table));
}

VectorialFunction VectorialFunction::power_map(const FieldContext& ctx, std::uint64_t exponent) {
    const int n = ctx.degree();
    std::vector<std::uint32_t> table(std::size_t(1) << n, 0);
    for (std::uint32_t x = 0; x < table.size(); ++x) table[x] = ctx.pow(x, exponent);
    return VectorialFunction(n, n, std::move(table));
}

VectorialFunction VectorialFunction::constant(int n, int m, std::uint32_t value) {
    return VectorialFunction(n, m, std::vector<std::uint32_t>(std::size_t(1) << n, value));
}

VectorialFunction VectorialFunction::component(std::uint32_t v) const {
    if (v == 0) throw std::invalid_argument("component direction v must be nonzero");
    if (v >> m_) throw std::invalid_argument("component direction v exceeds m bits");
    std::vector<std::uint32_t> t(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x)
        t[x] = std::popcount(table_[x] & v) & 1;
    return VectorialFunction(n_, 1, std::move(t));
}

VectorialFunction VectorialFunction::component(const FieldContext& ctx, std::uint32_t v) const {
    if (v == 0) throw std::invalid_argument("component direction v must be nonzero");
    if (m_ != n_ || ctx.degree() != n_)
        throw std::invalid_argument("trace-form component requires m == n");
    std::vector<std::uint32_t> t(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x)
        t[x] = static_cast<std::uint32_t>(ctx.trace(ctx.mul(v, table_[x])));
    return VectorialFunction(n_, 1, std::move(t));
}

VectorialFunction VectorialFunction::derivative(std::uint32_t a) const {
    std::vector<std::uint32_t> t(table_.size());
    for (std::uint32_t x = 0; x < table_.size(); ++x) t[x] = table_[x ^ a] ^ table_[x];
    return VectorialFunction(n_, m_, std::move(t));
}

VectorialFunction VectorialFunction::higher_derivative(
    std::span<const std::uint32_t> dirs) const {
    // Linearly dependent directions collapse to the zero function on their own.
    VectorialFunction f = *this;
    for (std::uint32_t a : dirs) f = f.derivative(a);
    return f;
}

int VectorialFunction::min_component_degree() const {
    // deg(v . F) = max weight of u with <v, anf[u]> odd; scan heavy monomials
    // first so full-degree components exit immediately.
    std::vector<std::uint32_t> order(anf_.size() - 1);
    for (std::uint32_t u = 1; u < anf_.size(); ++u) order[u - 1] = u;
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        const int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa > wb : a < b;
    });
    int min_deg = n_ + 1;
    for (std::uint32_t v = 1; v < (1u << m_); ++v) {
        int deg = kZeroFunction;
        const bool const_term = std::popcount(anf_[0] & v) & 1;
        for (std::uint32_t u : order) {
            if (std::popcount(anf_[u] & v) & 1) {
                deg = std::popcount(u);
                break;
            }
        }
        if (deg == kZeroFunction && const_term) deg = 0;
        if (deg == kZeroFunction) return kZeroFunction; // a vanishing component
        min_deg = std::min(min_deg, deg);
        if (min_deg == 0) break;
    }
    return min_deg;
}

bool VectorialFunction::is_nondegenerate(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("order k must be in [1,n]");
    const int d = min_component_degree();
    return d != kZeroFunction && d >= k;
}

std::optional<std::uint32_t> VectorialFunction::low_degree_component(int k) const {
    for (std::uint32_t v = 1; v < (1u << m_); ++v) {
        int deg = kZeroFunction;
        for (std::uint32_t u = 0; u < anf_.size(); ++u) {
            if (std::popcount(anf_[u] & v) & 1) deg = std::max(deg, std::popcount(u));
        }
        if (deg < k) return v;
    }
    return std::nullopt;
}

} // namespace sumfree
