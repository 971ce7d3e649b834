#pragma once

// Test-only oracles, written independently of the library internals: schoolbook
// polynomial arithmetic on coefficient vectors, subset-sum Mobius transforms,
// and set-based flat enumeration. Deliberately slow and obvious.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Polynomials over F_2 as coefficient vectors (index = degree).
inline std::vector<int> poly_from_bits(std::uint64_t bits) {
    std::vector<int> c;
    for (int i = 0; i < 64; ++i) c.push_back(static_cast<int>((bits >> i) & 1));
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

inline std::uint64_t poly_to_bits(const std::vector<int>& c) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] & 1) b |= std::uint64_t(1) << i;
    return b;
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
    return out;
}

inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m) {
    auto deg = [](const std::vector<int>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[i]) return i;
        return -1;
    };
    const int dm = deg(m);
    for (int da = deg(a); da >= dm && da >= 0; da = deg(a)) {
        for (int i = 0; i <= dm; ++i) a[da - dm + i] ^= m[i];
    }
    return a;
}

// Field multiply via the coefficient-vector route.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
    auto prod = poly_mul(poly_from_bits(a), poly_from_bits(b));
    return static_cast<std::uint32_t>(poly_to_bits(poly_mod(prod, poly_from_bits(modulus))));
}

// Binary Mobius transform straight from the definition: out[u] = XOR of
// table[x] over all x that are submasks of u.
inline std::vector<std::uint32_t> mobius_by_definition(const std::vector<std::uint32_t>& table,
                                                       int n) {
    std::vector<std::uint32_t> out(std::size_t(1) << n, 0);
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            if ((x & u) == x) out[u] ^= table[x];
        }
    }
    return out;
}

inline int degree_by_definition(const std::vector<std::uint32_t>& table, int n) {
    auto a = mobius_by_definition(table, n);
    int d = -1;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        if (a[u]) d = std::max(d, __builtin_popcount(u));
    }
    return d;
}

// Every k-flat of F_2^n as a sorted point set, found by closing every
// independent direction tuple over every base point. Exponential; n <= 6 only.
inline std::set<std::vector<std::uint32_t>> all_flats_as_point_sets(int n, int k) {
    std::set<std::vector<std::uint32_t>> flats;
    const std::uint32_t N = 1u << n;
    std::vector<std::uint32_t> dirs(k);
    auto rec = [&](auto&& self, int depth, std::uint32_t start) -> void {
        if (depth == k) {
            std::set<std::uint32_t> span = {0};
            for (std::uint32_t d : dirs) {
                std::set<std::uint32_t> next = span;
                for (std::uint32_t s : span) next.insert(s ^ d);
                span = next;
            }
            if (span.size() != (std::size_t(1) << k)) return;
            for (std::uint32_t x = 0; x < N; ++x) {
                std::vector<std::uint32_t> pts;
                for (std::uint32_t s : span) pts.push_back(s ^ x);
                std::sort(pts.begin(), pts.end());
                flats.insert(pts);
            }
            return;
        }
        for (std::uint32_t d = start; d < N; ++d) {
            dirs[depth] = d;
            self(self, depth + 1, d + 1);
        }
    };
    if (k == 0) {
        for (std::uint32_t x = 0; x < N; ++x) flats.insert({x});
    } else {
        rec(rec, 0, 1);
    }
    return flats;
}

inline std::uint32_t xor_over(const std::vector<std::uint32_t>& pts,
                              const std::vector<std::uint32_t>& table) {
    std::uint32_t acc = 0;
    for (std::uint32_t p : pts) acc ^= table[p];
    return acc;
}

inline bool sumfree_by_definition(const std::vector<std::uint32_t>& table, int n, int k) {
    for (const auto& pts : all_flats_as_point_sets(n, k))
        if (xor_over(pts, table) == 0) return false;
    return true;
}

// Rank over F_2 by plain elimination on a copy, no pivot bookkeeping shared
// with the library.
inline int rank_by_elimination(std::vector<std::uint32_t> rows) {
    int rank = 0;
    for (int bit = 31; bit >= 0; --bit) {
        std::size_t pivot = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if ((rows[i] >> bit) & 1) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != std::size_t(rank) && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

} // namespace oracle
