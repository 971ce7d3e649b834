#pragma once

#include "sumfree/flats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumfree {

// Exponent 1 + 2^j + ... + 2^(j(k-1)) reduced mod 2^n - 1 into [1, 2^n - 1].
std::uint64_t carlet_exponent(int n, int k, int j);

// The kth-order sum-free power map x^((2^(jk)-1)/(2^j-1)). Requires
// gcd(j, n) = 1 (the family's sufficient condition) unless the override is
// set for exploration.
VectorialFunction carlet_function(const FieldContext& ctx, int k, int j,
                                  bool allow_gcd_violation = false);

struct GoldInverseReport {
    int n = 0, i = 0;
    std::uint64_t inverse_exponent = 0; // exponent of F_{m+1, 2i}
    std::uint64_t gold_exponent = 0;    // 2^i + 1
    bool composition_is_identity = false;
    bool sumfree_order_2 = false;
    bool sumfree_order_m_plus_1 = false;
    bool ok() const {
        return composition_is_identity && sumfree_order_2 && sumfree_order_m_plus_1;
    }
};

// For odd n = 2m+1 with gcd(2i, n) = 1: checks pointwise that F_{m+1,2i}
// inverts the Gold map x^(2^i + 1), and that its order profile contains
// {2, m+1}.
GoldInverseReport gold_inverse_check(const FieldContext& ctx, int i, int jobs = 1);

struct CatalogEntry {
    std::string label;
    VectorialFunction fn;
    std::vector<std::string> tags;
};

struct FunctionCatalog {
    std::vector<CatalogEntry> entries; // all sharing (n, m); labels unique
    std::string source;
};

struct EntryProfile {
    std::string label;
    int degree = 0;
    std::map<int, KStatus> per_k;
    std::set<int> orders;          // verified members of K_F within the range
    int min_component_degree = 0;  // non-degeneracy at order k iff >= k
    double seconds = 0.0;
};

struct ProfileReport {
    int n = 0, m = 0, kmin = 0, kmax = 0;
    std::vector<EntryProfile> entries;
};

// Exhaustively profiles every catalog entry over [kmin, kmax]; per-entry cap
// overruns are recorded, not fatal.
ProfileReport profile_catalog(const FunctionCatalog& catalog, int kmin, int kmax,
                              int jobs = 1, const EnumerationCaps& caps = {});

enum class SearchStatus { found, nonexistent, budget_exhausted };

struct NonexistenceResult {
    SearchStatus status = SearchStatus::budget_exhausted;
    std::optional<VectorialFunction> witness; // a sum-free function when found
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t(1) << 31;

// Depth-first assignment of F(0), F(1), ... in ascending point order, pruning
// whenever a fully assigned k-flat sums to zero. Flats are precomputed and
// bucketed by their maximal point, so each assignment triggers only its
// bucket. Exhausting the tree certifies nonexistence; exceeding the budget is
// reported as inconclusive.
NonexistenceResult exhaustive_nonexistence(int n, int m, int k,
                                           std::uint64_t budget = kDefaultNodeBudget);

struct BoundCheck {
    int k = 0;
    int required_m = 0; // max{n-k+2, k+2}
    bool ok = false;
};

struct BoundConsistencyReport {
    OrderProfile profile;
    std::vector<BoundCheck> checks; // one per k in K_F with 2 <= k <= n-2
    bool all_consistent = true;     // a violation would falsify the bound
};

BoundConsistencyReport bound_consistency_report(const VectorialFunction& F, int jobs = 1,
                                                const EnumerationCaps& caps = {});

} // namespace sumfree
