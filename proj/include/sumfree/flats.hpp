#pragma once

#include "sumfree/vecfun.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumfree {

// Exact subspace/flat counts; [16 choose 8]_2 overflows 64 bits.
using BigCount = unsigned __int128;
std::string to_decimal(BigCount v);

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear subspace of F_2^n in canonical reduced row echelon form: each row's
// pivot is its highest set bit, pivots strictly decrease down the rows, and no
// row has a bit set at another row's pivot. Equal subspaces have identical
// representations, so equality is plain vector comparison.
struct Subspace {
    int n = 0;
    std::vector<std::uint32_t> rows;

    int dim() const { return static_cast<int>(rows.size()); }
    // Clears the pivot positions of v; the result is the canonical (minimal)
    // representative of v's coset.
    std::uint32_t reduce(std::uint32_t v) const;
    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
    // All 2^dim points; index bit j selects rows[j].
    std::vector<std::uint32_t> points() const;

    friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

// RREF basis of the span of arbitrary vectors.
Subspace canonicalize(int n, std::span<const std::uint32_t> vectors);
int gf2_rank(std::span<const std::uint32_t> vectors);

// Affine subspace: direction plus the minimal coset representative (zero at
// every pivot position of the direction's basis).
struct Flat {
    Subspace direction;
    std::uint32_t rep = 0;

    int dim() const { return direction.dim(); }
    std::vector<std::uint32_t> points() const;

    friend auto operator<=>(const Flat&, const Flat&) = default;
};

Flat flat_through(const Subspace& direction, std::uint32_t point);

Subspace intersect(const Subspace& U, const Subspace& V);
// Empty optional when the flats are disjoint.
std::optional<Flat> intersect(const Flat& A, const Flat& B);

BigCount gaussian_binomial(int n, int k);
BigCount flat_count(int n, int k); // 2^(n-k) * [n choose k]_2

struct EnumerationCaps {
    std::uint64_t max_flats = 100'000'000;
};

// Canonical enumeration order: pivot masks ascending as integers; within a
// pivot set, a free-bit counter ascending (row 0 first, each row's free
// positions from low to high). A flat's canonical index is
// subspace_index * 2^(n-k) + coset_counter. Return false from fn to stop.
void for_each_subspace(int n, int k, const std::function<bool(const Subspace&)>& fn);
void for_each_flat(int n, int k, const std::function<bool(const Flat&)>& fn);
std::vector<Subspace> enumerate_subspaces(int n, int k, const EnumerationCaps& caps = {});
std::vector<Flat> enumerate_flats(int n, int k, const EnumerationCaps& caps = {});

// XOR of F over the flat's 2^k points (Gray-code walk, one XOR per step).
std::uint32_t witness(const VectorialFunction& F, const Flat& A);
std::uint32_t witness(const VectorialFunction& F, const Subspace& U);

struct SumFreeResult {
    bool sum_free = false;
    // First violating flat in canonical order, with its canonical index.
    std::optional<Flat> counterexample;
    std::uint64_t counterexample_index = 0;
    std::uint64_t flats_checked = 0;
};

// Exhaustive check of all k-flats; jobs > 1 shards subspaces round-robin with
// a deterministic minimum-index reduction.
SumFreeResult is_sumfree(const VectorialFunction& F, int k, int jobs = 1,
                         const EnumerationCaps& caps = {});

enum class KStatus { member, non_member, cap_exceeded };

struct OrderProfile {
    int n = 0, m = 0;
    std::set<int> orders; // verified members within the checked range
    std::map<int, KStatus> per_k;
};

// K_F restricted to [kmin, kmax]; kmax < 0 means n. Cap overruns are recorded
// per k, not fatal.
OrderProfile order_profile(const VectorialFunction& F, int kmin = 1, int kmax = -1,
                           int jobs = 1, const EnumerationCaps& caps = {});

// True iff the 2^(n-dim U) cosets of U all have pairwise distinct witnesses.
bool coset_witnesses_distinct(const VectorialFunction& F, const Subspace& U);

// Restriction of the iterated derivative along dirs to the complement W,
// re-indexed by coordinates in W's basis (rows taken pivot-ascending). Yields
// an (n-j, m)-function.
VectorialFunction derivative_restriction(const VectorialFunction& F,
                                         std::span<const std::uint32_t> dirs,
                                         const Subspace& W);

} // namespace sumfree
