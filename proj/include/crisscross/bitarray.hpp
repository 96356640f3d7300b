#ifndef CRISSCROSS_BITARRAY_HPP
#define CRISSCROSS_BITARRAY_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace crisscross {

// 1-D bit string, one value per byte. Lines handled by the row codes are short
// (<= a few hundred bits), so plain bytes beat packing for clarity.
using Bits = std::vector<std::uint8_t>;

inline Bits delete_positions(const Bits& x, const std::vector<std::size_t>& sorted_pos) {
    Bits out;
    out.reserve(x.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (k < sorted_pos.size() && sorted_pos[k] == i) {
            ++k;
            continue;
        }
        out.push_back(x[i]);
    }
    if (k != sorted_pos.size()) throw IndexOutOfRange("delete_positions: position past end");
    return out;
}

// Rectangular binary array with bit-packed rows. Doubles as a GF(2) matrix for
// the elimination routines in linalg.hpp.
class BitArray2D {
   public:
    BitArray2D() : rows_(0), cols_(0), words_per_row_(0) {}
    BitArray2D(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        check(r, c);
        std::uint64_t& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t m = std::uint64_t(1) << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void flip(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

    std::size_t words_per_row() const { return words_per_row_; }
    std::uint64_t* row_words(std::size_t r) { return data_.data() + r * words_per_row_; }
    const std::uint64_t* row_words(std::size_t r) const { return data_.data() + r * words_per_row_; }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row_words(dst);
        const std::uint64_t* s = row_words(src);
        for (std::size_t k = 0; k < words_per_row_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* x = row_words(a);
        std::uint64_t* y = row_words(b);
        for (std::size_t k = 0; k < words_per_row_; ++k) std::swap(x[k], y[k]);
    }

    bool rows_equal(std::size_t a, std::size_t b) const {
        const std::uint64_t* x = row_words(a);
        const std::uint64_t* y = row_words(b);
        for (std::size_t k = 0; k < words_per_row_; ++k)
            if (x[k] != y[k]) return false;
        return true;
    }

    BitArray2D transpose() const {
        BitArray2D t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    // Rectangle copy, [r0, r0+h) x [c0, c0+w).
    BitArray2D sub(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
        if (r0 + h > rows_ || c0 + w > cols_) throw DimensionMismatch("sub: rectangle out of bounds");
        BitArray2D s(h, w);
        for (std::size_t r = 0; r < h; ++r)
            for (std::size_t c = 0; c < w; ++c)
                if (get(r0 + r, c0 + c)) s.set(r, c, true);
        return s;
    }
    void blit(std::size_t r0, std::size_t c0, const BitArray2D& src) {
        if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) throw DimensionMismatch("blit: rectangle out of bounds");
        for (std::size_t r = 0; r < src.rows(); ++r)
            for (std::size_t c = 0; c < src.cols(); ++c) set(r0 + r, c0 + c, src.get(r, c));
    }

    Bits row_bits(std::size_t r, std::size_t c0, std::size_t w) const {
        Bits out(w);
        for (std::size_t c = 0; c < w; ++c) out[c] = get(r, c0 + c);
        return out;
    }
    Bits col_bits(std::size_t c, std::size_t r0, std::size_t h) const {
        Bits out(h);
        for (std::size_t r = 0; r < h; ++r) out[r] = get(r0 + r, c);
        return out;
    }

    BitArray2D delete_rows_cols(const std::vector<std::size_t>& del_rows,
                                const std::vector<std::size_t>& del_cols) const {
        std::vector<std::size_t> keep_r, keep_c;
        keep_r.reserve(rows_);
        keep_c.reserve(cols_);
        {
            std::size_t k = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (k < del_rows.size() && del_rows[k] == r) {
                    ++k;
                    continue;
                }
                keep_r.push_back(r);
            }
            if (k != del_rows.size()) throw IndexOutOfRange("delete_rows_cols: bad row index");
        }
        {
            std::size_t k = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (k < del_cols.size() && del_cols[k] == c) {
                    ++k;
                    continue;
                }
                keep_c.push_back(c);
            }
            if (k != del_cols.size()) throw IndexOutOfRange("delete_rows_cols: bad col index");
        }
        BitArray2D out(keep_r.size(), keep_c.size());
        for (std::size_t r = 0; r < keep_r.size(); ++r)
            for (std::size_t c = 0; c < keep_c.size(); ++c)
                if (get(keep_r[r], keep_c[c])) out.set(r, c, true);
        return out;
    }

    friend bool operator==(const BitArray2D& a, const BitArray2D& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const BitArray2D& a, const BitArray2D& b) { return !(a == b); }
    // Shape-tagged total order so balls of mixed shapes can live in one std::set.
    friend bool operator<(const BitArray2D& a, const BitArray2D& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.data_ < b.data_;
    }

    // Text format, used repo-wide:
    //   crisscross-array v1
    //   <rows> <cols>
    //   <rows lines of cols chars from {0,1}>
    std::string to_text() const {
        std::ostringstream os;
        os << "crisscross-array v1\n" << rows_ << ' ' << cols_ << '\n';
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
            os << '\n';
        }
        return os.str();
    }

    static BitArray2D from_text(std::istream& is) {
        std::string header;
        if (!std::getline(is, header) || header != "crisscross-array v1")
            throw IoError("bad array header: expected 'crisscross-array v1'");
        std::size_t rows = 0, cols = 0;
        std::string dims;
        if (!std::getline(is, dims)) throw IoError("missing dimension line");
        {
            std::istringstream ds(dims);
            if (!(ds >> rows >> cols)) throw IoError("malformed dimension line");
            std::string rest;
            if (ds >> rest) throw IoError("trailing content on dimension line");
        }
        BitArray2D a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            std::string line;
            if (!std::getline(is, line)) throw IoError("truncated array body");
            if (line.size() != cols) throw IoError("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) {
                if (line[c] == '1')
                    a.set(r, c, true);
                else if (line[c] != '0')
                    throw IoError("array cells must be 0 or 1");
            }
        }
        return a;
    }
    static BitArray2D from_text(const std::string& s) {
        std::istringstream is(s);
        return from_text(is);
    }

   private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw IndexOutOfRange("cell access out of bounds");
    }

    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> data_;
};

}  // namespace crisscross

#endif
