#include "doctest.h"
#include "sumfree/subcode.hpp"

using namespace sumfree;

namespace {

VectorialFunction power_fn(int n, std::uint64_t e) {
    return VectorialFunction::power_map(FieldContext::with_default_modulus(n), e);
}

} // namespace

TEST_CASE("build_subcode dimensions") {
    // dim C_F = dim RM(r,n) - m
    auto b52 = build_subcode(power_fn(5, 7), 2);
    CHECK(b52.dimension == 11);
    CHECK(b52.m == 5);
    auto b62 = build_subcode(power_fn(6, 15), 2);
    CHECK(b62.dimension == 16);
    auto b53 = build_subcode(power_fn(5, 3), 3); // x^3 is APN, hence 2nd-order sum-free
    CHECK(b53.dimension == 21);
    // parity-check consistency
    for (auto* b : {&b52, &b62, &b53}) {
        CHECK(b->code.generator->product_with_transpose_is_zero(*b->code.parity_check));
        CHECK(b->code.generator->rank() + b->code.parity_check->rank() == b->code.length);
    }
}

TEST_CASE("build_subcode rejects bad inputs") {
    CHECK_THROWS_AS(build_subcode(power_fn(5, 7), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_subcode(power_fn(5, 7), 4), std::invalid_argument);
    // x^3 over GF(2^5) has degree 2 < 3 = n-r: not (n-r)th-order sum-free
    CHECK_THROWS_AS(build_subcode(power_fn(5, 3), 2), NotSumFreeError);
    // degenerate: x^31 maps into {0,1}
    try {
        build_subcode(power_fn(5, 31), 2);
        FAIL("expected a rejection");
    } catch (const NotSumFreeError&) {
        // acceptable: verification order starts with sum-freedom
    } catch (const DegenerateError& e) {
        CHECK(e.component != 0);
    }
}

TEST_CASE("negative control: trust-building a failing function leaves RM min-weight words") {
    const auto F = power_fn(5, 3); // degree 2, not 3rd-order sum-free
    const auto violation = is_sumfree(F, 3);
    REQUIRE_FALSE(violation.sum_free);
    BuildOptions opts;
    opts.trust = true;
    auto bundle = build_subcode(F, 2, opts);
    // the violating flat's incidence vector is a weight-8 codeword of the code
    const BitVec iv = incidence_vector(*violation.counterexample);
    CHECK(iv.popcount() == 8);
    CHECK(ensure_parity_check(bundle.code).multiply(iv).is_zero());
}

TEST_CASE("exhaustive minimum distance") {
    auto b52 = build_subcode(power_fn(5, 7), 2);
    CHECK(min_distance_exhaustive(b52.code) == 12);
    auto b53 = build_subcode(power_fn(5, 3), 3);
    CHECK(min_distance_exhaustive(b53.code) == 6);
    auto b62 = build_subcode(power_fn(6, 15), 2);
    CHECK(min_distance_exhaustive(b62.code) == 24);
    // RM(2,5) itself has minimum distance 8
    BinaryCode rm25 = code_from_generator(rm_generator(2, 5));
    CHECK(min_distance_exhaustive(rm25) == 8);
    // cap is enforced
    MinDistanceOptions tight;
    tight.dim_cap = 10;
    CHECK_THROWS_AS(min_distance_exhaustive(b52.code, tight), CapExceeded);
}

TEST_CASE("extraction roundtrip") {
    for (const auto& [n, r, e] :
         std::vector<std::tuple<int, int, std::uint64_t>>{{5, 2, 7}, {5, 3, 3}, {6, 2, 15}}) {
        const auto F = power_fn(n, e);
        auto bundle = build_subcode(F, r);
        auto extracted = extract_function(bundle.code, r);
        REQUIRE(extracted.bundle.has_value());
        CHECK(extracted.codimension == n);
        CHECK(extracted.bundle->F == F);
        CHECK(is_sumfree(extracted.bundle->F, n - r).sum_free);
        CHECK(extracted.bundle->F.is_nondegenerate(n - r));
        // rebuilt code has the same codeword set: equal dimension and mutual containment
        CHECK(extracted.bundle->dimension == bundle.dimension);
        CHECK(extracted.bundle->code.parity_check->product_with_transpose_is_zero(
            *bundle.code.generator));
    }
}

TEST_CASE("extract_function rejects non-subcodes and deep codimensions") {
    // a code not inside RM(2,5): the full space
    BitMatrix full(1, 32);
    for (int i = 0; i < 32; ++i) full.set(0, i, i == 0);
    CHECK_THROWS_AS(extract_function(code_from_generator(full), 2), std::invalid_argument);
    // RM(r,n) itself: codimension 0, flagged trivial
    auto res = extract_function(code_from_generator(rm_generator(2, 5)), 2);
    CHECK_FALSE(res.bundle.has_value());
    CHECK(res.codimension == 0);
    // codimension n+1 subcode: drop one more independent row than allowed
    const BitMatrix g = rm_generator(2, 5);
    BitMatrix small(g.rows() - 6, g.cols());
    for (std::size_t i = 0; i < small.rows(); ++i) small.set_row(i, g.row(i + 6));
    CHECK_THROWS_AS(extract_function(code_from_generator(small), 2), std::invalid_argument);
}

TEST_CASE("certificates for the exhaustively checkable cases agree") {
    for (const auto& [n, r, e] :
         std::vector<std::tuple<int, int, std::uint64_t>>{{5, 2, 7}, {5, 3, 3}, {6, 2, 15}}) {
        auto bundle = build_subcode(power_fn(n, e), r);
        const auto cert = certify_min_distance(bundle);
        REQUIRE(cert.complete);
        const int expected = 3 << (n - r - 1);
        CHECK(cert.lower == expected);
        CHECK(cert.upper == expected);
        CHECK(cert.witness_codeword.popcount() == static_cast<std::size_t>(expected));
        CHECK(ensure_parity_check(bundle.code).multiply(cert.witness_codeword).is_zero());
        CHECK(intersect(cert.space_a, cert.space_b).dim() == n - r - 2);
        CHECK(witness(bundle.F, cert.space_a) == cert.shared_witness);
        CHECK(witness(bundle.F, cert.space_b) == cert.shared_witness);
        // matches the exhaustive answer
        CHECK(min_distance_exhaustive(bundle.code) == expected);
    }
}

TEST_CASE("certificate search cap reports a partial certificate") {
    auto bundle = build_subcode(power_fn(5, 7), 2);
    const auto cert = certify_min_distance(bundle, 0);
    CHECK_FALSE(cert.complete);
    CHECK(cert.lower == 12);
}
