#pragma once

#include "sumfree/flats.hpp"
#include "sumfree/vecfun.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sumfree {

// Generalized Grassmann graph J_2(n,k,t): vertices are the k-spaces of F_2^n,
// adjacency when the intersection has dimension >= t. t = k-1 is the plain
// Grassmann graph.
struct GrassmannParams {
    int n = 0, k = 0, t = 0;
};

// dim U + dim W - rank of the stacked bases.
int intersection_dim(const Subspace& U, const Subspace& W);

enum class ColoringProducer { witness, extended, external };

// A color per k-space; colors are nonzero m-bit values, so a valid coloring
// uses at most 2^m - 1 colors.
struct ColoringCertificate {
    GrassmannParams params;
    int m = 0;
    ColoringProducer producer = ColoringProducer::external;
    std::vector<std::pair<Subspace, std::uint32_t>> assignment; // canonical order
};

// color(U) = witness of U under a verified kth-order sum-free F; valid on
// J_2(n,k) with at most 2^m - 1 colors.
ColoringCertificate witness_coloring(const VectorialFunction& F, int k, int jobs = 1);

// Coloring of J_2(n+1,k) from a {k-1,k}th-order sum-free F of algebraic
// degree k: the ambient space is F_2^n x F_2 with the distinguished
// coordinate at bit n and hyperplane H = F_2^n x {0};
// c(U) = sum of F over first components of U when U lies in H, and over the
// first components of U \ H otherwise. All preconditions are verified.
ColoringCertificate extended_coloring(const VectorialFunction& F, int k, int jobs = 1);

struct VerifyReport {
    bool valid = false;
    std::uint64_t colors_used = 0;
    std::optional<std::pair<Subspace, Subspace>> first_conflict;
    std::string detail; // completeness failures, case-recheck summary
    std::uint64_t pairs_checked = 0;
    // For producer == extended: adjacent pairs re-derived per case of the
    // four-way analysis (both in H / one in H / outside with intersection in
    // H / outside with intersection not in H).
    std::array<std::uint64_t, 4> extended_cases{};
};

// Checks completeness (every k-space exactly once), nonzero colors, and
// pairwise validity within color buckets. For extended certificates, when the
// producing function is supplied, every sample_stride-th adjacent pair is
// re-derived through the four-way case analysis (sample_stride 0 disables).
VerifyReport verify_coloring(const ColoringCertificate& cert,
                             const VectorialFunction* producer_fn = nullptr,
                             std::uint64_t sample_stride = 97);

// max{[n-t choose k-t]_2, [2k-t choose k-t]_2} for t >= 1; [n choose k]_2 for
// t = 0 (complete graph).
BigCount chromatic_lower_bound(int n, int k, int t);

} // namespace sumfree
