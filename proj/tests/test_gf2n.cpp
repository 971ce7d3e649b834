#include "doctest.h"
#include "oracles.hpp"
#include "sumfree/gf2n.hpp"

#include <random>

using namespace sumfree;

TEST_CASE("clmul/clmod against schoolbook polynomial arithmetic") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint32_t a = rng() & 0xFFFF, b = rng() & 0xFFFF;
        auto prod = oracle::poly_mul(oracle::poly_from_bits(a), oracle::poly_from_bits(b));
        CHECK(clmul(a, b) == oracle::poly_to_bits(prod));
    }
}

TEST_CASE("documented multiplication examples in GF(2^3), modulus x^3+x+1") {
    FieldContext ctx(3, 0b1011);
    CHECK(ctx.mul(0b010, 0b001) == 0b010);
    CHECK(ctx.mul(0b010, 0b010) == 0b100);
    // x^2 * x = x^3 = x + 1; cross-checked by the coefficient-vector oracle
    CHECK(oracle::gf_mul(0b100, 0b010, 0b1011) == 0b011);
    CHECK(ctx.mul(0b100, 0b010) == 0b011);
}

TEST_CASE("field axioms, exhaustive for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto ctx = FieldContext::with_default_modulus(n);
        const std::uint32_t N = ctx.field_size();
        for (std::uint32_t a = 0; a < N; ++a) {
            for (std::uint32_t b = 0; b < N; ++b) {
                CHECK(ctx.mul(a, b) == ctx.mul(b, a));
                for (std::uint32_t c = 0; c < N; ++c) {
                    CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
                    CHECK(ctx.mul(a, b ^ c) == (ctx.mul(a, b) ^ ctx.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms on random triples for 5 <= n <= 16") {
    std::mt19937 rng(777);
    for (int n = 5; n <= 16; ++n) {
        auto ctx = FieldContext::with_default_modulus(n);
        const std::uint32_t mask = ctx.field_size() - 1;
        for (int trial = 0; trial < 200; ++trial) {
            std::uint32_t a = rng() & mask, b = rng() & mask, c = rng() & mask;
            CHECK(ctx.mul(a, b) == ctx.mul(b, a));
            CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
            CHECK(ctx.mul(a, b ^ c) == (ctx.mul(a, b) ^ ctx.mul(a, c)));
            CHECK(ctx.mul(a, b) == oracle::gf_mul(a, b, ctx.modulus()));
        }
    }
}

TEST_CASE("pow basics and Fermat") {
    auto ctx = FieldContext::with_default_modulus(5);
    CHECK(ctx.pow(0, 0) == 1);
    for (std::uint32_t a = 0; a < 32; ++a) CHECK(ctx.pow(a, 1) == a);
    for (std::uint32_t g = 1; g < 32; ++g) CHECK(ctx.pow(g, 31) == 1);

    // pow against repeated multiplication
    std::mt19937 rng(99);
    for (int n = 2; n <= 16; n += 3) {
        auto c = FieldContext::with_default_modulus(n);
        std::uint32_t a = (rng() % (c.field_size() - 1)) + 1;
        std::uint32_t acc = 1;
        for (std::uint64_t e = 0; e < 40; ++e) {
            CHECK(c.pow(a, e) == acc);
            acc = c.mul(acc, a);
        }
    }
    // x^31 = 1 in GF(2^5) under modulus 0x25
    FieldContext c5(5, 0x25);
    CHECK(c5.pow(0b00010, 31) == 0b00001);
    // every nonzero a satisfies a^(2^n - 1) = 1
    for (int n = 2; n <= 10; ++n) {
        auto c = FieldContext::with_default_modulus(n);
        for (std::uint32_t a = 1; a < c.field_size(); ++a)
            CHECK(c.pow(a, c.group_order()) == 1);
    }
}

TEST_CASE("trace: values, linearity, balance, Frobenius invariance") {
    for (int n = 1; n <= 8; ++n) {
        auto ctx = FieldContext::with_default_modulus(n);
        CHECK(ctx.trace(0) == 0);
        CHECK(ctx.trace(1) == n % 2);
        for (std::uint32_t a = 0; a < ctx.field_size(); ++a) {
            CHECK(ctx.trace(ctx.mul(a, a)) == ctx.trace(a));
            for (std::uint32_t b = 0; b < ctx.field_size(); ++b)
                CHECK(ctx.trace(a ^ b) == (ctx.trace(a) ^ ctx.trace(b)));
        }
    }
    // balancedness at n = 5: exactly 16 of the 32 elements have trace 1
    auto c5 = FieldContext::with_default_modulus(5);
    int ones = 0;
    for (std::uint32_t a = 0; a < 32; ++a) ones += c5.trace(a);
    CHECK(ones == 16);
}

TEST_CASE("default moduli match the documented table") {
    CHECK(FieldContext::default_modulus(3) == 0xB);   // x^3+x+1
    CHECK(FieldContext::default_modulus(5) == 0x25);  // x^5+x^2+1
    CHECK(FieldContext::default_modulus(6) == 0x43);  // x^6+x+1
    CHECK(FieldContext::default_modulus(8) == 0x11D); // x^8+x^4+x^3+x^2+1
    for (int n = 2; n <= 16; ++n) {
        std::uint32_t m = FieldContext::default_modulus(n);
        CHECK(is_irreducible(m));
        FieldContext ctx(n, m);
        // x generates the full multiplicative group (primitivity)
        std::uint32_t seen = 0, t = 1;
        for (std::uint32_t i = 0; i < ctx.group_order(); ++i) {
            t = ctx.mul(t, 0b10);
            ++seen;
            if (t == 1) break;
        }
        CHECK(seen == ctx.group_order());
        CHECK(ctx.generator() == 0b10);
    }
}

TEST_CASE("construction rejects bad moduli") {
    CHECK_THROWS_AS(FieldContext(4, 0b10101), std::invalid_argument);  // (x^2+x+1)^2
    CHECK_THROWS_AS(FieldContext(3, 0b1111), std::invalid_argument);   // divisible by x+1
    CHECK_THROWS_AS(FieldContext(3, 0b10011), std::invalid_argument);  // degree mismatch
    CHECK_THROWS_AS(FieldContext(0, 0b11), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(17, 0x20001), std::invalid_argument);
    // a user-supplied irreducible that is not the default is accepted
    FieldContext alt(5, 0b101001); // x^5+x^3+1
    CHECK(alt.mul(2, alt.pow(2, 30)) == 1);
}
