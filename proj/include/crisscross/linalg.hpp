#ifndef CRISSCROSS_LINALG_HPP
#define CRISSCROSS_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bitarray.hpp"

namespace crisscross {

// Solve A x = b over GF(2). Deterministic: forward elimination picks the
// lowest-index row with a 1 in the current column, free variables are 0.
// Returns nullopt when the system is inconsistent.
inline std::optional<Bits> solve_gf2(const BitArray2D& A, const Bits& b) {
    if (A.rows() != b.size()) throw DimensionMismatch("solve_gf2: rhs length != rows");
    const std::size_t nr = A.rows(), nc = A.cols();
    BitArray2D M = A;
    Bits rhs = b;

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && !M.get(p, col)) ++p;
        if (p == nr) continue;
        M.swap_rows(row, p);
        std::swap(rhs[row], rhs[p]);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r != row && M.get(r, col)) {
                M.xor_row(r, row);
                rhs[r] ^= rhs[row];
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nr; ++r)
        if (rhs[r]) return std::nullopt;

    Bits x(nc, 0);
    for (std::size_t r = 0; r < row; ++r) x[pivot_col_of_row[r]] = rhs[r];
    return x;
}

inline std::size_t rank_gf2(const BitArray2D& A) {
    const std::size_t nr = A.rows(), nc = A.cols();
    BitArray2D M = A;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && !M.get(p, col)) ++p;
        if (p == nr) continue;
        M.swap_rows(row, p);
        for (std::size_t r = row + 1; r < nr; ++r)
            if (M.get(r, col)) M.xor_row(r, row);
        ++row;
    }
    return row;
}

// A * x over GF(2), x given as one bit per cell of the logical vector.
inline Bits matvec_gf2(const BitArray2D& A, const Bits& x) {
    if (A.cols() != x.size()) throw DimensionMismatch("matvec_gf2: size mismatch");
    // Pack x once so each row reduces to AND + parity.
    std::vector<std::uint64_t> xw(A.words_per_row(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) xw[i / 64] |= std::uint64_t(1) << (i % 64);
    Bits y(A.rows(), 0);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        const std::uint64_t* rw = A.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < A.words_per_row(); ++k) acc ^= rw[k] & xw[k];
        y[r] = std::uint8_t(__builtin_popcountll(acc) & 1);
    }
    return y;
}

// Incremental GF(2) rank tracker for column vectors; used to pick parity cells
// and shield check positions.
class GaussBasis {
   public:
    explicit GaussBasis(std::size_t dim) : dim_(dim), words_((dim + 63) / 64) {}

    std::size_t rank() const { return basis_.size(); }

    // Returns true (and absorbs v) iff v is independent of the current basis.
    bool try_insert(std::vector<std::uint64_t> v) {
        reduce(v);
        int lead = leading_bit(v);
        if (lead < 0) return false;
        basis_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool is_independent(std::vector<std::uint64_t> v) const {
        reduce(v);
        return leading_bit(v) >= 0;
    }

   private:
    void reduce(std::vector<std::uint64_t>& v) const {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const int l = leads_[i];
            if ((v[std::size_t(l) / 64] >> (std::size_t(l) % 64)) & 1u)
                for (std::size_t k = 0; k < words_; ++k) v[k] ^= basis_[i][k];
        }
    }
    static int leading_bit(const std::vector<std::uint64_t>& v) {
        for (std::size_t k = v.size(); k-- > 0;)
            if (v[k]) return int(k * 64 + 63 - std::size_t(__builtin_clzll(v[k])));
        return -1;
    }

    std::size_t dim_, words_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<int> leads_;
};

}  // namespace crisscross

#endif
