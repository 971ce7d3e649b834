#pragma once

#include "sumfree/bitmatrix.hpp"
#include "sumfree/flats.hpp"

#include <optional>

namespace sumfree {

// dim RM(r,n) = sum_{i<=r} C(n,i); zero code for r < 0.
int rm_dimension(int r, int n);

// Rows are evaluation vectors of the monomials prod_{i in supp(t)} x_i with
// |supp(t)| <= r. Columns are the points of F_2^n in integer order; rows are
// ordered by support weight, then by support mask ascending. Full row rank.
BitMatrix rm_generator(int r, int n);

// Parity check of RM(r,n) = generator of the dual RM(n-r-1,n).
BitMatrix rm_parity_check(int r, int n);

// Length-2^n indicator of the flat's point set; weight 2^dim.
BitVec incidence_vector(const Flat& A);

// XOR of the incidence vectors of two (n-r)-flats meeting in an (n-r-2)-flat;
// weight exactly 3*2^(n-r-1). Throws on any precondition violation.
BitVec second_weight_codeword(const Flat& A1, const Flat& A2);

// Linear code of length 2^n given by a generator and/or parity-check matrix.
struct BinaryCode {
    std::size_t length = 0;
    std::optional<BitMatrix> generator;
    std::optional<BitMatrix> parity_check;
};

BinaryCode code_from_generator(BitMatrix g);
BinaryCode code_from_parity_check(BitMatrix h);
// Fills the missing matrix via the kernel of the other.
const BitMatrix& ensure_generator(BinaryCode& code);
const BitMatrix& ensure_parity_check(BinaryCode& code);
std::size_t code_dimension(BinaryCode& code);

} // namespace sumfree
