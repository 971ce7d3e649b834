#include "doctest.h"
#include "sumfree/rmcode.hpp"

#include <bit>

using namespace sumfree;

TEST_CASE("dimensions") {
    CHECK(rm_dimension(0, 5) == 1);
    CHECK(rm_dimension(2, 5) == 16);
    CHECK(rm_dimension(2, 6) == 22);
    CHECK(rm_dimension(3, 6) == 42);
    CHECK(rm_dimension(3, 5) == 26);
    CHECK(rm_dimension(-1, 5) == 0);
    for (int n = 1; n <= 10; ++n) {
        for (int r = 0; r <= n - 1; ++r) {
            // dim RM(r,n) + dim RM(n-r-1,n) = 2^n
            CHECK(rm_dimension(r, n) + rm_dimension(n - r - 1, n) == (1 << n));
        }
    }
}

TEST_CASE("generator shapes and rank") {
    const BitMatrix g0 = rm_generator(0, 4);
    CHECK(g0.rows() == 1);
    CHECK(g0.row(0).popcount() == 16); // all-ones row
    CHECK(rm_generator(2, 5).rows() == 16);
    CHECK(rm_generator(2, 6).rows() == 22);
    for (int n = 2; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            const BitMatrix g = rm_generator(r, n);
            CHECK(g.rank() == g.rows()); // monomial evaluations are independent
        }
    }
}

TEST_CASE("parity check is the dual generator and is orthogonal") {
    const BitMatrix h = rm_parity_check(2, 5);
    CHECK(h.rows() == 16);
    CHECK(rm_generator(2, 5).product_with_transpose_is_zero(h));
    CHECK(rm_parity_check(2, 6).rows() == 42);
    CHECK(rm_generator(2, 6).product_with_transpose_is_zero(rm_parity_check(2, 6)));
    // r = n-1: the single parity bit
    const BitMatrix pb = rm_parity_check(4, 5);
    CHECK(pb.rows() == 1);
    CHECK(pb.row(0).popcount() == 32);
}

TEST_CASE("incidence vectors") {
    // whole space -> all ones
    const Subspace full = canonicalize(4, std::vector<std::uint32_t>{1, 2, 4, 8});
    CHECK(incidence_vector(Flat{full, 0}).popcount() == 16);
    // single point
    const Flat pt{Subspace{4, {}}, 9};
    const BitVec v = incidence_vector(pt);
    CHECK(v.popcount() == 1);
    CHECK(v.get(9));
    // every (n-r)-flat incidence vector lies in RM(r,n): parity check kills it
    for (int n = 4; n <= 6; ++n) {
        for (int r = 2; r <= n - 2; ++r) {
            const BitMatrix h = rm_parity_check(r, n);
            for_each_flat(n, n - r, [&](const Flat& A) {
                const BitVec iv = incidence_vector(A);
                CHECK(iv.popcount() == (std::size_t(1) << (n - r)));
                CHECK(h.multiply(iv).is_zero());
                return true;
            });
        }
    }
}

TEST_CASE("minimum distance of RM(r,n) is 2^(n-r) by exhaustive enumeration") {
    const std::pair<int, int> cases[] = {{1, 4}, {2, 4}, {2, 5}, {1, 5}, {3, 5}, {2, 6}};
    for (const auto& [r, n] : cases) {
        const BitMatrix gen = rm_generator(r, n);
        const std::size_t dim = gen.rows();
        REQUIRE(dim <= 26);
        const std::size_t wpr = ((std::size_t(1) << n) + 63) / 64;
        std::vector<std::uint64_t> cw(wpr, 0);
        std::size_t best = std::size_t(1) << n;
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << dim); ++i) {
            const auto row = gen.row_words(static_cast<std::size_t>(std::countr_zero(i)));
            std::size_t weight = 0;
            for (std::size_t w = 0; w < wpr; ++w) {
                cw[w] ^= row[w];
                weight += static_cast<std::size_t>(std::popcount(cw[w]));
            }
            if (weight < best) best = weight;
        }
        CHECK(best == (std::size_t(1) << (n - r)));
    }
}

TEST_CASE("second weight codewords") {
    // (n=5, r=2): two 3-flats meeting in a 1-flat give a weight-12 codeword
    const Subspace a = canonicalize(5, std::vector<std::uint32_t>{1, 2, 4});
    const Subspace b = canonicalize(5, std::vector<std::uint32_t>{1, 8, 16});
    const BitVec cw = second_weight_codeword(Flat{a, 0}, Flat{b, 0});
    CHECK(cw.popcount() == 12);
    CHECK(rm_parity_check(2, 5).multiply(cw).is_zero());

    // (n=6, r=2): weight 24
    const Subspace a6 = canonicalize(6, std::vector<std::uint32_t>{1, 2, 4, 8});
    const Subspace b6 = canonicalize(6, std::vector<std::uint32_t>{1, 2, 16, 32});
    const BitVec cw6 = second_weight_codeword(Flat{a6, 0}, Flat{b6, 0});
    CHECK(cw6.popcount() == 24);
    CHECK(rm_parity_check(2, 6).multiply(cw6).is_zero());

    // rejected shapes
    CHECK_THROWS_AS(second_weight_codeword(Flat{a, 0}, Flat{a, 0}), std::invalid_argument);
    // parallel cosets are disjoint
    CHECK_THROWS_AS(second_weight_codeword(Flat{a, 0}, Flat{a, 8}), std::invalid_argument);
    const Subspace c = canonicalize(5, std::vector<std::uint32_t>{1, 2, 8});
    // intersection dimension 2, not 1
    CHECK_THROWS_AS(second_weight_codeword(Flat{a, 0}, Flat{c, 0}), std::invalid_argument);
}

TEST_CASE("binary code helpers") {
    BinaryCode code = code_from_generator(rm_generator(1, 4));
    CHECK(code.length == 16);
    CHECK(code_dimension(code) == 5);
    const BitMatrix& pc = ensure_parity_check(code);
    CHECK(pc.rows() == 11);
    CHECK(code.generator->product_with_transpose_is_zero(pc));
    // generator . parity_check^T = 0 and ranks add to the length
    CHECK(code.generator->rank() + pc.rank() == 16);
}
