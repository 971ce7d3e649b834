#include "sumfree/bitmatrix.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sumfree {

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    auto dst = row_words(r);
    auto src = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) dst[i] = src[i];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    auto d = row_words(dst);
    auto s = row_words(src);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::append_row(const BitVec& v) {
    if (cols_ == 0) {
        cols_ = v.size();
        wpr_ = (cols_ + 63) / 64;
    }
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.resize((rows_ + 1) * wpr_, 0);
    ++rows_;
    set_row(rows_ - 1, v);
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("column count mismatch");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t i = 0; i < out.wpr_; ++i)
            out.row_words(r)[i] = top.row_words(r)[i];
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t i = 0; i < out.wpr_; ++i)
            out.row_words(top.rows() + r)[i] = bottom.row_words(r)[i];
    return out;
}

namespace {

// Gaussian elimination on a copy; returns reduced rows and their pivot columns.
struct Echelon {
    BitMatrix m;
    std::vector<std::size_t> pivots; // pivot column of each surviving row
};

Echelon reduce(const BitMatrix& in) {
    BitMatrix work = in;
    std::vector<std::size_t> pivots;
    std::size_t next = 0; // next row slot to fill
    for (std::size_t c = 0; c < work.cols() && next < work.rows(); ++c) {
        std::size_t pivot = work.rows();
        for (std::size_t r = next; r < work.rows(); ++r) {
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == work.rows()) continue;
        if (pivot != next) {
            for (std::size_t i = 0; i < (work.cols() + 63) / 64; ++i)
                std::swap(work.row_words(pivot)[i], work.row_words(next)[i]);
        }
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r != next && work.get(r, c)) work.xor_row(r, next);
        }
        pivots.push_back(c);
        ++next;
    }
    BitMatrix out(pivots.size(), work.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) out.set_row(r, work.row(r));
    return {std::move(out), std::move(pivots)};
}

} // namespace

std::size_t BitMatrix::rank() const { return reduce(*this).pivots.size(); }

BitMatrix BitMatrix::row_reduced() const { return reduce(*this).m; }

BitMatrix BitMatrix::kernel() const {
    Echelon e = reduce(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    BitMatrix out(cols_ - e.pivots.size(), cols_);
    std::size_t idx = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        out.set(idx, c, true);
        // free column c: solve pivot variables from the reduced rows
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.m.get(r, c)) out.set(idx, e.pivots[r], true);
        }
        ++idx;
    }
    return out;
}

bool BitMatrix::product_with_transpose_is_zero(const BitMatrix& other) const {
    if (cols_ != other.cols()) throw std::invalid_argument("column count mismatch");
    for (std::size_t r = 0; r < rows_; ++r) {
        auto a = row_words(r);
        for (std::size_t s = 0; s < other.rows(); ++s) {
            auto b = other.row_words(s);
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < wpr_; ++i) acc ^= a[i] & b[i];
            if (std::popcount(acc) & 1) return false;
        }
    }
    return true;
}

BitVec BitMatrix::multiply(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    BitVec out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto a = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < wpr_; ++i) acc ^= a[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

bool BitMatrix::row_space_contains(const BitVec& v) const {
    Echelon e = reduce(*this);
    BitVec work = v;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (work.get(e.pivots[r])) work ^= e.m.row(r);
    }
    return work.is_zero();
}

void write_matrix(std::ostream& os, const BitMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string line(m.cols(), '0');
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) line[c] = '1';
        os << line << '\n';
    }
}

BitMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::runtime_error("matrix header malformed");
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!(is >> line) || line.size() != cols)
            throw std::runtime_error("matrix row " + std::to_string(r) + " malformed");
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw std::runtime_error("matrix entries must be 0 or 1");
        }
    }
    return m;
}

} // namespace sumfree
