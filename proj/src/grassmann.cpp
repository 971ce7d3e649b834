#include "sumfree/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

namespace sumfree {

int intersection_dim(const Subspace& U, const Subspace& W) {
    if (U.n != W.n) throw std::invalid_argument("subspaces live in different ambient spaces");
    std::vector<std::uint32_t> stacked(U.rows);
    stacked.insert(stacked.end(), W.rows.begin(), W.rows.end());
    return U.dim() + W.dim() - gf2_rank(stacked);
}

ColoringCertificate witness_coloring(const VectorialFunction& F, int k, int jobs) {
    const int n = F.input_dim();
    if (k < 1 || k >= n) throw std::invalid_argument("witness coloring requires 1 <= k < n");
    const auto sf = is_sumfree(F, k, jobs);
    if (!sf.sum_free)
        throw std::invalid_argument("F is not " + std::to_string(k) +
                                    "th-order sum-free; no witness coloring exists");
    ColoringCertificate cert;
    cert.params = {n, k, k - 1};
    cert.m = F.output_dim();
    cert.producer = ColoringProducer::witness;
    cert.assignment.reserve(static_cast<std::size_t>(gaussian_binomial(n, k)));
    for_each_subspace(n, k, [&](const Subspace& U) {
        cert.assignment.emplace_back(U, witness(F, U));
        return true;
    });
    return cert;
}

namespace {

bool lies_in_hyperplane(const Subspace& U, int n) {
    for (std::uint32_t r : U.rows)
        if ((r >> n) & 1) return false;
    return true;
}

// Sums F over the first components of U's points, split by the last
// coordinate: low = points inside H, high = points outside.
struct SplitSums {
    std::uint32_t low = 0, high = 0;
};

SplitSums split_sums(const VectorialFunction& F, const Subspace& U, int n) {
    const std::uint32_t lowmask = (1u << n) - 1;
    SplitSums s;
    for (std::uint32_t p : U.points()) {
        if ((p >> n) & 1)
            s.high ^= F(p & lowmask);
        else
            s.low ^= F(p & lowmask);
    }
    return s;
}

} // namespace

ColoringCertificate extended_coloring(const VectorialFunction& F, int k, int jobs) {
    const int n = F.input_dim();
    if (k < 2 || k >= n) throw std::invalid_argument("extended coloring requires 2 <= k < n");
    if (F.algebraic_degree() != k)
        throw std::invalid_argument("extended coloring requires algebraic degree exactly " +
                                    std::to_string(k) + ", got " +
                                    std::to_string(F.algebraic_degree()));
    for (int order : {k - 1, k}) {
        const auto sf = is_sumfree(F, order, jobs);
        if (!sf.sum_free)
            throw std::invalid_argument("F is not " + std::to_string(order) +
                                        "th-order sum-free");
    }
    ColoringCertificate cert;
    cert.params = {n + 1, k, k - 1};
    cert.m = F.output_dim();
    cert.producer = ColoringProducer::extended;
    cert.assignment.reserve(static_cast<std::size_t>(gaussian_binomial(n + 1, k)));
    for_each_subspace(n + 1, k, [&](const Subspace& U) {
        const SplitSums s = split_sums(F, U, n);
        const std::uint32_t color = lies_in_hyperplane(U, n) ? s.low : s.high;
        cert.assignment.emplace_back(U, color);
        return true;
    });
    return cert;
}

namespace {

std::uint32_t xor_table_over(const VectorialFunction& F, const std::vector<std::uint32_t>& pts) {
    std::uint32_t acc = 0;
    for (std::uint32_t p : pts) acc ^= F(p);
    return acc;
}

bool is_flat_point_set(std::vector<std::uint32_t> pts) {
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
    const std::uint32_t p0 = pts.front();
    std::vector<std::uint32_t> translated;
    translated.reserve(pts.size());
    for (std::uint32_t p : pts) translated.push_back(p ^ p0);
    const int r = gf2_rank(translated);
    // 2^r distinct points inside a rank-r span fill it exactly.
    return pts.size() == (std::size_t(1) << r);
}

// Re-derives the color difference of an adjacent pair of an extended
// certificate through the four-way case analysis; returns the case index or
// throws if the reconstruction disagrees.
int recheck_extended_pair(const VectorialFunction& F, int n, int k, const Subspace& U1,
                          const Subspace& U2, std::uint32_t c1, std::uint32_t c2) {
    const std::uint32_t lowmask = (1u << n) - 1;
    const bool h1 = lies_in_hyperplane(U1, n), h2 = lies_in_hyperplane(U2, n);
    auto project_outside = [&](const Subspace& U) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t p : U.points())
            if ((p >> n) & 1) out.push_back(p & lowmask);
        return out;
    };
    if (h1 && h2) {
        // both inside H: plain witnesses of two adjacent k-spaces of F_2^n
        std::vector<std::uint32_t> a, b;
        for (std::uint32_t p : U1.points()) a.push_back(p & lowmask);
        for (std::uint32_t p : U2.points()) b.push_back(p & lowmask);
        if (xor_table_over(F, a) != c1 || xor_table_over(F, b) != c2)
            throw std::logic_error("case 1 witness mismatch");
        if (c1 == c2) throw std::logic_error("case 1 equal witnesses on adjacent spaces");
        return 0;
    }
    if (h1 != h2) {
        const Subspace& inside = h1 ? U1 : U2;
        const Subspace& outside = h1 ? U2 : U1;
        // W = inside ∩ outside is a (k-1)-space in H
        const Subspace W = intersect(inside, outside);
        if (W.dim() != k - 1 || !lies_in_hyperplane(W, n))
            throw std::logic_error("case 2 intersection shape unexpected");
        // a: a point of inside \ W; b: first component of any point outside H
        std::uint32_t a = 0, b = 0;
        for (std::uint32_t p : inside.points())
            if (!W.contains(p)) {
                a = p & lowmask;
                break;
            }
        for (std::uint32_t p : outside.points())
            if ((p >> n) & 1) {
                b = p & lowmask;
                break;
            }
        std::vector<std::uint32_t> w_pts;
        for (std::uint32_t p : W.points()) w_pts.push_back(p & lowmask);
        std::uint32_t sum = 0;
        for (std::uint32_t p : w_pts) sum ^= F(p) ^ F(p ^ a) ^ F(p ^ b);
        if (sum != (c1 ^ c2)) throw std::logic_error("case 2 identity mismatch");
        if (sum == 0) throw std::logic_error("case 2 sum vanished");
        return 1;
    }
    const Subspace I = intersect(U1, U2);
    if (lies_in_hyperplane(I, n)) {
        // both cross H, intersection inside: the two outside halves project
        // onto a k-flat whose witness is the color difference
        auto pts = project_outside(U1);
        const auto q = project_outside(U2);
        pts.insert(pts.end(), q.begin(), q.end());
        if (!is_flat_point_set(pts)) throw std::logic_error("case 3 projection is not a flat");
        const std::uint32_t om = xor_table_over(F, pts);
        if (om != (c1 ^ c2)) throw std::logic_error("case 3 witness mismatch");
        if (om == 0) throw std::logic_error("case 3 witness vanished");
        return 2;
    }
    // both cross H, intersection crosses too: the symmetric difference of the
    // projected outside halves is a (k-1)-flat
    auto a = project_outside(U1);
    auto b = project_outside(U2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::uint32_t> sym;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(sym));
    if (sym.size() != (std::size_t(1) << (k - 1)) || !is_flat_point_set(sym))
        throw std::logic_error("case 4 symmetric difference is not a (k-1)-flat");
    const std::uint32_t om = xor_table_over(F, sym);
    if (om != (c1 ^ c2)) throw std::logic_error("case 4 witness mismatch");
    if (om == 0) throw std::logic_error("case 4 witness vanished");
    return 3;
}

} // namespace

VerifyReport verify_coloring(const ColoringCertificate& cert,
                             const VectorialFunction* producer_fn,
                             std::uint64_t sample_stride) {
    VerifyReport report;
    const int n = cert.params.n, k = cert.params.k, t = cert.params.t;

    // completeness: every k-space exactly once
    std::map<std::vector<std::uint32_t>, std::uint32_t> by_basis;
    for (const auto& [u, c] : cert.assignment) {
        if (u.n != n || u.dim() != k) {
            report.detail = "assignment contains a vertex with wrong parameters";
            return report;
        }
        if (!by_basis.emplace(u.rows, c).second) {
            report.detail = "duplicate vertex in assignment";
            return report;
        }
    }
    const BigCount expected = gaussian_binomial(n, k);
    if (BigCount(by_basis.size()) != expected) {
        report.detail = "assignment covers " + std::to_string(by_basis.size()) + " of " +
                        to_decimal(expected) + " vertices";
        return report;
    }
    bool missing = false;
    for_each_subspace(n, k, [&](const Subspace& u) {
        if (!by_basis.count(u.rows)) {
            missing = true;
            return false;
        }
        return true;
    });
    if (missing) {
        report.detail = "assignment misses a vertex";
        return report;
    }

    std::map<std::uint32_t, std::vector<std::size_t>> buckets; // color -> positions
    for (std::size_t i = 0; i < cert.assignment.size(); ++i) {
        const std::uint32_t c = cert.assignment[i].second;
        if (c == 0) {
            report.detail = "zero color assigned";
            return report;
        }
        buckets[c].push_back(i);
    }
    report.colors_used = buckets.size();

    // conflicts can only occur inside a color class
    for (const auto& [color, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                ++report.pairs_checked;
                const Subspace& a = cert.assignment[members[i]].first;
                const Subspace& b = cert.assignment[members[j]].first;
                if (intersection_dim(a, b) >= t) {
                    report.first_conflict = {a, b};
                    report.detail = "equal colors on adjacent vertices";
                    return report;
                }
            }
        }
    }

    std::string recheck_note;
    if (cert.producer == ColoringProducer::extended && producer_fn && sample_stride > 0) {
        // Re-derive sampled adjacent pairs through the construction's case
        // analysis; each case recomputes the color difference from scratch.
        const int base_n = n - 1;
        std::uint64_t adjacent_seen = 0, rechecked = 0;
        for (std::size_t i = 0; i < cert.assignment.size(); ++i) {
            for (std::size_t j = i + 1; j < cert.assignment.size(); ++j) {
                const auto& [u1, c1] = cert.assignment[i];
                const auto& [u2, c2] = cert.assignment[j];
                if (intersection_dim(u1, u2) != k - 1) continue;
                if (adjacent_seen++ % sample_stride) continue;
                try {
                    const int which =
                        recheck_extended_pair(*producer_fn, base_n, k, u1, u2, c1, c2);
                    ++report.extended_cases[static_cast<std::size_t>(which)];
                } catch (const std::logic_error& e) {
                    report.valid = false;
                    report.first_conflict = {u1, u2};
                    report.detail = std::string("extended case recheck failed: ") + e.what();
                    return report;
                }
                ++rechecked;
            }
        }
        recheck_note = "; case recheck on " + std::to_string(rechecked) + " adjacent pairs (" +
                       std::to_string(report.extended_cases[0]) + "/" +
                       std::to_string(report.extended_cases[1]) + "/" +
                       std::to_string(report.extended_cases[2]) + "/" +
                       std::to_string(report.extended_cases[3]) + " per case)";
    }

    report.valid = true;
    report.detail = "ok" + recheck_note;
    return report;
}

BigCount chromatic_lower_bound(int n, int k, int t) {
    if (t < 0 || t > k || k >= n) throw std::invalid_argument("need 0 <= t <= k < n");
    if (t == 0) return gaussian_binomial(n, k);
    const BigCount a = gaussian_binomial(n - t, k - t);
    const BigCount b = gaussian_binomial(2 * k - t, k - t);
    return a > b ? a : b;
}

} // namespace sumfree
