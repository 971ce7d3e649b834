#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace sumfree {

// Dense bit vector packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    std::size_t popcount() const;
    bool is_zero() const;
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend bool operator<(const BitVec& a, const BitVec& b) {
        return a.words_ < b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major packed bit matrix over F_2.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v)
            data_[r * wpr_ + (c >> 6)] |= mask;
        else
            data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * wpr_, wpr_};
    }
    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void xor_row(std::size_t dst, std::size_t src); // row[dst] ^= row[src]
    void append_row(const BitVec& v);

    static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

    std::size_t rank() const;
    // Reduced row echelon form with zero rows dropped.
    BitMatrix row_reduced() const;
    // Basis of { v : M v = 0 }, one vector per row; rows() == cols() - rank().
    BitMatrix kernel() const;
    // True iff this * other^T == 0 (every row orthogonal to every row of other).
    bool product_with_transpose_is_zero(const BitMatrix& other) const;
    // Syndrome M * v, length rows().
    BitVec multiply(const BitVec& v) const;
    // True iff v lies in the row space.
    bool row_space_contains(const BitVec& v) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// Text format: "<rows> <cols>" line, then one 0/1 string per row.
void write_matrix(std::ostream& os, const BitMatrix& m);
BitMatrix read_matrix(std::istream& is);

} // namespace sumfree
