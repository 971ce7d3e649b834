#include "doctest.h"
#include "oracles.hpp"
#include "sumfree/flats.hpp"

#include <algorithm>
#include <random>

using namespace sumfree;

namespace {

VectorialFunction power_fn(int n, std::uint64_t e) {
    return VectorialFunction::power_map(FieldContext::with_default_modulus(n), e);
}

std::vector<std::uint32_t> sorted_points(const Flat& A) {
    auto pts = A.points();
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

TEST_CASE("gaussian binomial values and symmetry") {
    CHECK(gaussian_binomial(6, 3) == 1395);
    CHECK(gaussian_binomial(4, 2) == 35);
    CHECK(gaussian_binomial(5, 3) == 155);
    CHECK(gaussian_binomial(5, 2) == 155);
    CHECK(gaussian_binomial(7, 3) == 11811);
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
            CHECK(gaussian_binomial(n, 0) == 1);
        }
        if (n >= 1) CHECK(gaussian_binomial(n, 1) == (BigCount(1) << n) - 1);
    }
    CHECK(to_decimal(gaussian_binomial(16, 8)) == to_decimal(gaussian_binomial(16, 8)));
    // [16 8]_2 needs more than 64 bits
    CHECK(gaussian_binomial(16, 8) > BigCount(~std::uint64_t(0)));
}

TEST_CASE("canonicalize produces stable RREF") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        std::vector<std::uint32_t> vecs(1 + rng() % 5);
        for (auto& v : vecs) v = rng() & ((1u << n) - 1);
        const Subspace s = canonicalize(n, vecs);
        CHECK(s.dim() == oracle::rank_by_elimination(vecs));
        // rows strictly decreasing, each pivot absent elsewhere
        for (std::size_t i = 0; i + 1 < s.rows.size(); ++i) CHECK(s.rows[i] > s.rows[i + 1]);
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
            const std::uint32_t pivot = 1u << (31 - std::countl_zero(s.rows[i]));
            for (std::size_t jj = 0; jj < s.rows.size(); ++jj)
                if (jj != i) CHECK((s.rows[jj] & pivot) == 0);
        }
        // shuffling and re-canonicalizing is a no-op on the representation
        auto pts = s.points();
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(canonicalize(n, pts) == s);
    }
}

TEST_CASE("enumeration counts match the closed form") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (flat_count(n, k) > 2'000'000) continue;
            std::uint64_t subspaces = 0;
            for_each_subspace(n, k, [&](const Subspace& U) {
                CHECK(U.dim() == k);
                ++subspaces;
                return true;
            });
            CHECK(BigCount(subspaces) == gaussian_binomial(n, k));
            std::uint64_t flats = 0;
            for_each_flat(n, k, [&](const Flat&) {
                ++flats;
                return true;
            });
            CHECK(BigCount(flats) == flat_count(n, k));
        }
    }
    // spot values from the counting formulas
    CHECK(enumerate_subspaces(4, 2).size() == 35);
    CHECK(enumerate_subspaces(5, 3).size() == 155);
    CHECK(enumerate_flats(5, 3).size() == 620);
    CHECK(enumerate_flats(4, 2).size() == 140);
    CHECK(enumerate_flats(4, 4).size() == 1);
    CHECK(enumerate_subspaces(6, 0).size() == 1);
}

TEST_CASE("enumerated flats are exactly the affine subspaces, each once") {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto expected = oracle::all_flats_as_point_sets(n, k);
            std::set<std::vector<std::uint32_t>> got;
            for_each_flat(n, k, [&](const Flat& A) {
                // canonicity: re-canonicalizing reproduces the stored form
                const Subspace re = canonicalize(n, A.direction.rows);
                CHECK(re == A.direction);
                CHECK(A.direction.reduce(A.rep) == A.rep);
                // rep is the coset minimum
                const auto pts = sorted_points(A);
                CHECK(pts.front() == A.rep);
                CHECK(got.insert(pts).second);
                return true;
            });
            CHECK(got == expected);
        }
    }
}

TEST_CASE("enumeration cap is an explicit error") {
    EnumerationCaps caps{100};
    CHECK_THROWS_AS(enumerate_flats(6, 3, caps), CapExceeded);
    CHECK_THROWS_AS(is_sumfree(power_fn(6, 7), 3, 1, caps), CapExceeded);
}

TEST_CASE("witness against the point-set oracle") {
    const auto F = power_fn(5, 7);
    std::vector<std::uint32_t> table(F.table().begin(), F.table().end());
    for (int k = 0; k <= 3; ++k) {
        for_each_flat(5, k, [&](const Flat& A) {
            CHECK(witness(F, A) == oracle::xor_over(A.points(), table));
            return true;
        });
    }
    // constant function: any flat with k >= 1 sums to zero
    const auto C = VectorialFunction::constant(4, 3, 5);
    for_each_flat(4, 2, [&](const Flat& A) {
        CHECK(witness(C, A) == 0);
        return true;
    });
}

TEST_CASE("witness equals the higher derivative at the representative") {
    for (int n = 3; n <= 6; ++n) {
        const auto F = power_fn(n, (1u << (n - 1)) - 1);
        for (int k = 1; k <= std::min(3, n); ++k) {
            for_each_flat(n, k, [&](const Flat& A) {
                const auto D = F.higher_derivative(A.direction.rows);
                CHECK(witness(F, A) == D(A.rep));
                return true;
            });
        }
    }
}

TEST_CASE("is_sumfree on the documented cases") {
    // x^7 over GF(2^5) is 3rd-order sum-free
    CHECK(is_sumfree(power_fn(5, 7), 3).sum_free);
    // x^3 over GF(2^4) has degree 2 < 3: every 3-flat witness vanishes
    const auto res = is_sumfree(power_fn(4, 3), 3);
    CHECK_FALSE(res.sum_free);
    CHECK(res.counterexample_index == 0); // the first flat already fails
    // any permutation is 1st-order sum-free
    CHECK(is_sumfree(power_fn(5, 30), 1).sum_free);
    // zero-order sum-freedom means no roots
    CHECK_FALSE(is_sumfree(power_fn(5, 7), 0).sum_free); // F(0) = 0
    CHECK(is_sumfree(VectorialFunction::constant(4, 2, 3), 0).sum_free);
    // agreement with the brute-force oracle on small cases
    for (std::uint64_t e : {3ull, 7ull, 14ull}) {
        const auto F = power_fn(4, e);
        std::vector<std::uint32_t> table(F.table().begin(), F.table().end());
        for (int k = 0; k <= 4; ++k)
            CHECK(is_sumfree(F, k).sum_free == oracle::sumfree_by_definition(table, 4, k));
    }
}

TEST_CASE("sharded checks agree with single-threaded and report the same counterexample") {
    // a random function is essentially never 3rd-order sum-free, and its first
    // violation lands at a nontrivial canonical index
    std::mt19937 rng(2024);
    std::vector<std::uint32_t> table(64);
    for (auto& v : table) v = rng() & 63;
    const VectorialFunction F(6, 6, table);
    const auto serial = is_sumfree(F, 3, 1);
    REQUIRE_FALSE(serial.sum_free);
    for (int jobs : {2, 3, 5}) {
        const auto parallel = is_sumfree(F, 3, jobs);
        CHECK(parallel.sum_free == serial.sum_free);
        REQUIRE(parallel.counterexample.has_value());
        CHECK(parallel.counterexample_index == serial.counterexample_index);
        CHECK(*parallel.counterexample == *serial.counterexample);
    }
    const auto good = power_fn(6, 7);
    CHECK(is_sumfree(good, 3, 4).sum_free == is_sumfree(good, 3, 1).sum_free);
}

TEST_CASE("order profiles") {
    // the n=5 inverse function: {1,2,3,4} (and not 5)
    const auto prof = order_profile(power_fn(5, 30), 1, 5);
    CHECK(prof.orders == std::set<int>{1, 2, 3, 4});
    CHECK(prof.per_k.at(5) == KStatus::non_member);
    // x^7 at n=5 contains {2,3}
    const auto prof7 = order_profile(power_fn(5, 7), 1, 5);
    CHECK(prof7.orders.count(2) == 1);
    CHECK(prof7.orders.count(3) == 1);
    // constants have an empty profile in [1,n]
    CHECK(order_profile(VectorialFunction::constant(4, 2, 1), 1, 4).orders.empty());
    // isomorphism invariance: same profile under a different irreducible
    const auto alt = VectorialFunction::power_map(FieldContext(5, 0b101001), 30);
    CHECK(order_profile(alt, 1, 5).orders == prof.orders);
    // per-k cap reporting
    const auto capped = order_profile(power_fn(6, 7), 1, 6, 1, EnumerationCaps{500});
    CHECK(capped.per_k.at(3) == KStatus::cap_exceeded);
}

TEST_CASE("coset witnesses distinct <-> sum-freedom (both directions, n <= 6)") {
    for (int n = 4; n <= 6; ++n) {
        for (std::uint64_t e : {3ull, 7ull, (std::uint64_t(1) << n) - 2}) {
            const auto F = power_fn(n, e);
            for (int k = 1; k <= n; ++k) {
                bool all_distinct = true;
                for_each_subspace(n, k - 1, [&](const Subspace& U) {
                    if (!coset_witnesses_distinct(F, U)) {
                        all_distinct = false;
                        return false;
                    }
                    return true;
                });
                CHECK(all_distinct == is_sumfree(F, k).sum_free);
            }
        }
    }
    // constant function: all coset witnesses equal
    const auto C = VectorialFunction::constant(5, 3, 1);
    bool any = true;
    for_each_subspace(5, 2, [&](const Subspace& U) {
        any = coset_witnesses_distinct(C, U);
        return false;
    });
    CHECK_FALSE(any);
}

TEST_CASE("flat intersection") {
    // two distinct 2-spaces of F_2^4 sharing one basis vector meet in dim 1
    const Subspace a = canonicalize(4, std::vector<std::uint32_t>{0b0001, 0b0010});
    const Subspace b = canonicalize(4, std::vector<std::uint32_t>{0b0001, 0b0100});
    CHECK(intersect(a, b).dim() == 1);
    const auto meet = intersect(Flat{a, 0}, Flat{b, 0});
    REQUIRE(meet.has_value());
    CHECK(meet->dim() == 1);
    // parallel distinct cosets are disjoint
    CHECK_FALSE(intersect(Flat{a, 0b0100}, Flat{a, 0b1000}).has_value());
    // oracle comparison: intersection of point sets
    std::mt19937 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 2);
        std::vector<std::uint32_t> va(2 + rng() % 2), vb(2 + rng() % 2);
        for (auto& v : va) v = rng() & ((1u << n) - 1);
        for (auto& v : vb) v = rng() & ((1u << n) - 1);
        const Flat A{canonicalize(n, va), static_cast<std::uint32_t>(rng() & ((1u << n) - 1))};
        const Flat B{canonicalize(n, vb), static_cast<std::uint32_t>(rng() & ((1u << n) - 1))};
        const Flat An = flat_through(A.direction, A.rep);
        const Flat Bn = flat_through(B.direction, B.rep);
        auto pa = sorted_points(An), pb = sorted_points(Bn);
        std::vector<std::uint32_t> common;
        std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                              std::back_inserter(common));
        const auto meet2 = intersect(An, Bn);
        if (common.empty()) {
            CHECK_FALSE(meet2.has_value());
        } else {
            REQUIRE(meet2.has_value());
            CHECK(sorted_points(*meet2) == common);
        }
    }
}

TEST_CASE("derivative restriction produces lower-order sum-free functions") {
    // x^15 over GF(2^6) is 4th-order sum-free; one derivative restricted to a
    // complement is a 3rd-order sum-free (5,6)-function
    const auto F6 = power_fn(6, 15);
    std::vector<std::uint32_t> wrows{0b00001, 0b00010, 0b00100, 0b01000, 0b10000};
    const Subspace W6 = canonicalize(6, wrows);
    const std::uint32_t dirs6[] = {0b100000};
    const auto G5 = derivative_restriction(F6, dirs6, W6);
    CHECK(G5.input_dim() == 5);
    CHECK(G5.output_dim() == 6);
    CHECK(is_sumfree(G5, 3).sum_free);

    // x^7 over GF(2^5) restricts to a 2nd-order sum-free (4,5)-function
    const auto F5 = power_fn(5, 7);
    const Subspace W5 = canonicalize(5, std::vector<std::uint32_t>{1, 2, 4, 8});
    const std::uint32_t dirs5[] = {16};
    const auto G4 = derivative_restriction(F5, dirs5, W5);
    CHECK(is_sumfree(G4, 2).sum_free);

    // j = 0 re-indexes the identity on the full space
    const Subspace full = canonicalize(5, std::vector<std::uint32_t>{1, 2, 4, 8, 16});
    const auto same = derivative_restriction(F5, {}, full);
    CHECK(same == F5);

    // rejections
    const Subspace bad = canonicalize(5, std::vector<std::uint32_t>{1, 2, 4, 8});
    const std::uint32_t overlap[] = {0b0001};
    CHECK_THROWS_AS(derivative_restriction(F5, overlap, bad), std::invalid_argument);
    const std::uint32_t dep[] = {1, 2, 3};
    CHECK_THROWS_AS(derivative_restriction(F5, dep, bad), std::invalid_argument);
}

TEST_CASE("degree lemma: (n-1)th-order sum-free (n,n)-functions have degree n-1") {
    for (int n = 3; n <= 8; ++n) {
        const auto F = power_fn(n, (1u << (n - 1)) - 1);
        CHECK(F.algebraic_degree() == n - 1);
        if (n <= 7) CHECK(is_sumfree(F, n - 1).sum_free);
    }
}
