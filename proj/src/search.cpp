#include "sumfree/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace sumfree {

std::uint64_t carlet_exponent(int n, int k, int j) {
    // 2^a mod (2^n - 1) = 2^(a mod n), so the sum reduces term by term.
    const std::uint64_t order = (std::uint64_t(1) << n) - 1;
    std::uint64_t e = 0;
    for (int i = 0; i < k; ++i) {
        e = (e + (std::uint64_t(1) << ((std::uint64_t(j) * i) % n))) % order;
    }
    if (e == 0) e = order; // x^(2^n - 1), not the constant 1
    return e;
}

VectorialFunction carlet_function(const FieldContext& ctx, int k, int j,
                                  bool allow_gcd_violation) {
    const int n = ctx.degree();
    if (k < 1 || k > n) throw std::invalid_argument("carlet_function requires 1 <= k <= n");
    if (j < 1) throw std::invalid_argument("carlet_function requires j >= 1");
    if (std::gcd(j, n) != 1 && !allow_gcd_violation)
        throw std::invalid_argument("gcd(j, n) = " + std::to_string(std::gcd(j, n)) +
                                    " != 1; the family is only proven sum-free for coprime j");
    return VectorialFunction::power_map(ctx, carlet_exponent(n, k, j));
}

GoldInverseReport gold_inverse_check(const FieldContext& ctx, int i, int jobs) {
    const int n = ctx.degree();
    if (n % 2 == 0) throw std::invalid_argument("gold_inverse_check requires odd n");
    const int m = (n - 1) / 2;
    if (i < 1 || std::gcd(2 * i, n) != 1)
        throw std::invalid_argument("gold_inverse_check requires gcd(2i, n) = 1");

    GoldInverseReport report;
    report.n = n;
    report.i = i;
    report.gold_exponent = (std::uint64_t(1) << i) + 1;
    report.inverse_exponent = carlet_exponent(n, m + 1, (2 * i) % n);

    const VectorialFunction F = VectorialFunction::power_map(ctx, report.inverse_exponent);
    const VectorialFunction gold = VectorialFunction::power_map(ctx, report.gold_exponent);
    report.composition_is_identity = true;
    for (std::uint32_t x = 0; x < ctx.field_size(); ++x) {
        if (F(gold(x)) != x) {
            report.composition_is_identity = false;
            break;
        }
    }
    report.sumfree_order_2 = is_sumfree(F, 2, jobs).sum_free;
    report.sumfree_order_m_plus_1 = is_sumfree(F, m + 1, jobs).sum_free;
    return report;
}

ProfileReport profile_catalog(const FunctionCatalog& catalog, int kmin, int kmax, int jobs,
                              const EnumerationCaps& caps) {
    ProfileReport report;
    if (catalog.entries.empty()) return report;
    report.n = catalog.entries.front().fn.input_dim();
    report.m = catalog.entries.front().fn.output_dim();
    report.kmin = kmin;
    report.kmax = kmax;
    for (const auto& entry : catalog.entries) {
        if (entry.fn.input_dim() != report.n || entry.fn.output_dim() != report.m)
            throw std::invalid_argument("catalog entries must share (n, m)");
        EntryProfile p;
        p.label = entry.label;
        const auto t0 = std::chrono::steady_clock::now();
        p.degree = entry.fn.algebraic_degree();
        p.min_component_degree = entry.fn.min_component_degree();
        const OrderProfile prof = order_profile(entry.fn, kmin, kmax, jobs, caps);
        p.per_k = prof.per_k;
        p.orders = prof.orders;
        p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.entries.push_back(std::move(p));
    }
    return report;
}

namespace {

// DFS state: flats bucketed by maximal point; bucket entries list the other
// 2^k - 1 points, all smaller than the trigger.
struct DfsContext {
    int n, m, k;
    std::vector<std::vector<std::vector<std::uint32_t>>> buckets;
    std::vector<std::uint32_t> table;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool exhausted = false;

    bool dfs(std::uint32_t p) {
        if (p == (1u << n)) return true;
        std::uint64_t forbidden = 0; // m <= 6 in practice; 2^m <= 64 values
        for (const auto& others : buckets[p]) {
            std::uint32_t acc = 0;
            for (std::uint32_t q : others) acc ^= table[q];
            forbidden |= std::uint64_t(1) << acc;
        }
        for (std::uint32_t v = 0; v < (1u << m); ++v) {
            if ((forbidden >> v) & 1) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            table[p] = v;
            if (dfs(p + 1)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

NonexistenceResult exhaustive_nonexistence(int n, int m, int k, std::uint64_t budget) {
    if (n < 1 || n > 16 || m < 1 || k < 0 || k > n)
        throw std::invalid_argument("bad (n, m, k) for nonexistence search");
    if (m > 6)
        throw std::invalid_argument("nonexistence search supports m <= 6 (value bitmask)");

    DfsContext ctx;
    ctx.n = n;
    ctx.m = m;
    ctx.k = k;
    ctx.budget = budget;
    ctx.buckets.assign(std::size_t(1) << n, {});
    for_each_flat(n, k, [&](const Flat& A) {
        auto pts = A.points();
        const auto mx = std::max_element(pts.begin(), pts.end());
        const std::uint32_t trigger = *mx;
        pts.erase(mx);
        ctx.buckets[trigger].push_back(std::move(pts));
        return true;
    });
    ctx.table.assign(std::size_t(1) << n, 0);

    NonexistenceResult result;
    result.budget = budget;
    const bool found = ctx.dfs(0);
    result.nodes = ctx.nodes;
    if (found) {
        result.status = SearchStatus::found;
        result.witness = VectorialFunction(n, m, std::move(ctx.table));
    } else if (ctx.exhausted) {
        result.status = SearchStatus::budget_exhausted;
    } else {
        result.status = SearchStatus::nonexistent;
    }
    return result;
}

BoundConsistencyReport bound_consistency_report(const VectorialFunction& F, int jobs,
                                                const EnumerationCaps& caps) {
    BoundConsistencyReport report;
    const int n = F.input_dim();
    const int m = F.output_dim();
    report.profile = order_profile(F, 1, n, jobs, caps);
    for (int k : report.profile.orders) {
        if (k < 2 || k > n - 2) continue;
        BoundCheck check;
        check.k = k;
        check.required_m = std::max(n - k + 2, k + 2);
        check.ok = m >= check.required_m;
        if (!check.ok) report.all_consistent = false;
        report.checks.push_back(check);
    }
    return report;
}

} // namespace sumfree
