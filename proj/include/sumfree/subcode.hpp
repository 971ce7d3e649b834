#pragma once

#include "sumfree/rmcode.hpp"
#include "sumfree/vecfun.hpp"

#include <cstdint>
#include <optional>

namespace sumfree {

struct NotSumFreeError : std::runtime_error {
    NotSumFreeError(std::string msg, Flat flat)
        : std::runtime_error(std::move(msg)), violating(std::move(flat)) {}
    Flat violating;
};

struct DegenerateError : std::runtime_error {
    DegenerateError(std::string msg, std::uint32_t v)
        : std::runtime_error(std::move(msg)), component(v) {}
    std::uint32_t component;
};

enum class Provenance { built_from_function, extracted_from_code };

// A subcode of RM(r,n) with parity check [rm_parity_check(r,n) ; M_F] where
// row i of M_F is output bit i of F across all points.
struct SubcodeBundle {
    int r = 0, n = 0, m = 0;
    BinaryCode code;
    VectorialFunction F;
    Provenance provenance = Provenance::built_from_function;
    std::size_t dimension = 0;
};

struct BuildOptions {
    bool trust = false; // skip the sum-freedom / non-degeneracy verification
    int jobs = 1;
    EnumerationCaps caps;
};

// Requires 2 <= r <= n-2; verifies F is (n-r)th-order sum-free and
// non-degenerate at order n-r unless trust is set. The resulting code has
// dimension dim RM(r,n) - m (asserted unless trust).
SubcodeBundle build_subcode(const VectorialFunction& F, int r, const BuildOptions& opts = {});

// Value matrix M_F: m x 2^n, row i = output bit i of F across points.
BitMatrix value_matrix(const VectorialFunction& F);

// Reads an (n,m)-function back out of a codimension-m subcode of RM(r,n):
// completes a parity check as [H ; M] by row-reducing the code's parity check
// against H and keeping the m surplus rows in elimination order, then takes
// F(v) = column v of M. Rejects codes not contained in RM(r,n) and
// codimension > n. Codimension 0 yields m = 0, flagged via the return.
struct ExtractResult {
    std::optional<SubcodeBundle> bundle; // empty iff the input was RM(r,n) itself
    int codimension = 0;
};
ExtractResult extract_function(BinaryCode code, int r);

struct MinDistanceOptions {
    int dim_cap = 24;
};

// Exact minimum weight by Gray-code enumeration of all 2^dim - 1 nonzero
// codewords. Throws CapExceeded above the cap (use certify_min_distance).
int min_distance_exhaustive(BinaryCode& code, const MinDistanceOptions& opts = {});

struct DistanceCertificate {
    int lower = 0;              // 3 * 2^(n-r-1), from the verified sum-free check
    int upper = 0;              // matching upper bound when complete
    bool complete = false;      // false: search cap hit, lower bound only
    BitVec witness_codeword;    // weight 3*2^(n-r-1) member of the code
    Subspace space_a, space_b;  // the equal-witness pair, meeting in dim n-r-2
    std::uint32_t shared_witness = 0;
    std::uint64_t subspaces_scanned = 0;
};

// Certifies d(C_F) = 3*2^(n-r-1): the lower bound by re-running the sum-free
// check, the upper bound by locating two (n-r)-spaces through a common
// (n-r-2)-space with equal witness, whose symmetric difference is a
// second-weight codeword of the bundle. Subspaces W are scanned in canonical
// order and grouped by witness, so the first collision is deterministic.
DistanceCertificate certify_min_distance(const SubcodeBundle& bundle,
                                         std::uint64_t max_w_scanned = ~std::uint64_t(0),
                                         int jobs = 1);

} // namespace sumfree
