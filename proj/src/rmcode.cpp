#include "sumfree/rmcode.hpp"

#include <bit>
#include <stdexcept>

namespace sumfree {

int rm_dimension(int r, int n) {
    if (r < 0) return 0;
    if (r > n) r = n;
    long long sum = 0, binom = 1;
    for (int i = 0; i <= r; ++i) {
        if (i > 0) binom = binom * (n - i + 1) / i;
        sum += binom;
    }
    return static_cast<int>(sum);
}

BitMatrix rm_generator(int r, int n) {
    if (r < 0 || r > n) throw std::invalid_argument("rm_generator requires 0 <= r <= n");
    const std::size_t length = std::size_t(1) << n;
    BitMatrix g(static_cast<std::size_t>(rm_dimension(r, n)), length);
    std::size_t row = 0;
    for (int w = 0; w <= r; ++w) {
        for (std::uint32_t t = 0; t < (1u << n); ++t) {
            if (std::popcount(t) != w) continue;
            // Monomial t evaluates to 1 at x iff every variable of t is set in x.
            for (std::uint32_t x = 0; x < length; ++x)
                if ((x & t) == t) g.set(row, x, true);
            ++row;
        }
    }
    return g;
}

BitMatrix rm_parity_check(int r, int n) {
    if (r < 0 || r > n - 1) throw std::invalid_argument("rm_parity_check requires 0 <= r <= n-1");
    return rm_generator(n - r - 1, n);
}

BitVec incidence_vector(const Flat& A) {
    BitVec v(std::size_t(1) << A.direction.n);
    for (std::uint32_t p : A.points()) v.set(p, true);
    return v;
}

BitVec second_weight_codeword(const Flat& A1, const Flat& A2) {
    const int d = A1.dim();
    if (A2.dim() != d) throw std::invalid_argument("flats must have equal dimension");
    if (A1.direction.n != A2.direction.n)
        throw std::invalid_argument("flats must share the ambient space");
    const auto inter = intersect(A1, A2);
    if (!inter) throw std::invalid_argument("flats are disjoint");
    if (inter->dim() != d - 2)
        throw std::invalid_argument("flats must meet in codimension 2 within each flat");
    BitVec v = incidence_vector(A1);
    v ^= incidence_vector(A2);
    return v;
}

BinaryCode code_from_generator(BitMatrix g) {
    BinaryCode c;
    c.length = g.cols();
    c.generator = std::move(g);
    return c;
}

BinaryCode code_from_parity_check(BitMatrix h) {
    BinaryCode c;
    c.length = h.cols();
    c.parity_check = std::move(h);
    return c;
}

const BitMatrix& ensure_generator(BinaryCode& code) {
    if (!code.generator) {
        if (!code.parity_check) throw std::invalid_argument("code has no matrix");
        code.generator = code.parity_check->kernel();
    }
    return *code.generator;
}

const BitMatrix& ensure_parity_check(BinaryCode& code) {
    if (!code.parity_check) {
        if (!code.generator) throw std::invalid_argument("code has no matrix");
        code.parity_check = code.generator->kernel();
    }
    return *code.parity_check;
}

std::size_t code_dimension(BinaryCode& code) {
    if (code.generator) return code.generator->rank();
    return code.length - ensure_parity_check(code).rank();
}

} // namespace sumfree
