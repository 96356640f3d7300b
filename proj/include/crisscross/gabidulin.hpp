#ifndef CRISSCROSS_GABIDULIN_HPP
#define CRISSCROSS_GABIDULIN_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "bitarray.hpp"
#include "gf2.hpp"
#include "linalg.hpp"

namespace crisscross {

namespace detail {

// Dense matrix over GF(2^m), row-major.
struct FieldMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    FieldElement& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline FieldMatrix field_inverse(const FieldMatrix& m, const FieldContext& ctx) {
    if (m.rows != m.cols) throw DimensionMismatch("field_inverse: matrix not square");
    const std::size_t n = m.rows;
    FieldMatrix w = m;
    FieldMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = ctx.one();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w.at(p, col).is_zero()) ++p;
        if (p == n) throw InvalidParams("field_inverse: singular matrix");
        if (p != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(w.at(p, c), w.at(col, c));
                std::swap(inv.at(p, c), inv.at(col, c));
            }
        const FieldElement pi = ctx.inv(w.at(col, col));
        for (std::size_t c = 0; c < n; ++c) {
            w.at(col, c) = ctx.mul(w.at(col, c), pi);
            inv.at(col, c) = ctx.mul(inv.at(col, c), pi);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            const FieldElement f = w.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                w.at(r, c) = w.at(r, c) ^ ctx.mul(f, w.at(col, c));
                inv.at(r, c) = inv.at(r, c) ^ ctx.mul(f, inv.at(col, c));
            }
        }
    }
    return inv;
}

}  // namespace detail

// Gabidulin code over F_{2^n} seen as binary n x n arrays. Codewords are
// evaluations of linearized polynomials f(x) = sum_{i<n-t} f_i x^(2^i) at the
// polynomial basis {1, alpha, ..., alpha^(n-1)}; column j of the array is the
// coefficient vector of the j-th evaluation. Minimum rank distance t+1, so any
// t_r row + t_c column erasures with t_r + t_c <= t are correctable.
class GabidulinCode {
   public:
    static GabidulinCode build(std::size_t n, std::size_t t, const FieldContext& ctx) {
        if (t < 1 || t >= n) throw InvalidParams("gabidulin: need 1 <= t < n");
        if (std::size_t(ctx.m()) != n) throw InvalidParams("gabidulin: field degree must equal n");
        GabidulinCode g(n, t, ctx);
        g.init();
        return g;
    }

    std::size_t n() const { return n_; }
    std::size_t t() const { return t_; }
    const FieldContext& ctx() const { return ctx_; }
    const std::vector<FieldElement>& eval_points() const { return eval_points_; }
    const BitArray2D& parity_check_binary() const { return parity_; }
    std::size_t message_bits() const { return (n_ - t_) * n_; }

    // Systematic over F_{2^n}: the first n-t evaluations carry the message.
    BitArray2D encode(const Bits& message) const {
        const std::size_t k = n_ - t_;
        if (message.size() != k * n_) throw LengthMismatch("gabidulin encode: bad message length");
        std::vector<FieldElement> c(k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t b = 0; b < n_; ++b)
                if (message[j * n_ + b]) c[j].set_bit(unsigned(b));
        // f = c * Ainv, then evaluate everywhere.
        std::vector<FieldElement> f(k);
        for (std::size_t i = 0; i < k; ++i) {
            FieldElement acc{};
            for (std::size_t j = 0; j < k; ++j) acc = acc ^ ctx_.mul(c[j], ainv_.at(j, i));
            f[i] = acc;
        }
        BitArray2D X(n_, n_);
        for (std::size_t j = 0; j < n_; ++j) {
            FieldElement cj{};
            for (std::size_t i = 0; i < k; ++i) cj = cj ^ ctx_.mul(f[i], moore_.at(i, j));
            for (std::size_t b = 0; b < n_; ++b)
                if (cj.bit(unsigned(b))) X.set(b, j, true);
        }
        return X;
    }

    bool is_codeword(const BitArray2D& X) const {
        if (X.rows() != n_ || X.cols() != n_) throw DimensionMismatch("is_codeword: array must be n x n");
        const Bits s = matvec_gf2(parity_, vec(X));
        for (std::uint8_t b : s)
            if (b) return false;
        return true;
    }

    // Fill erased full rows/columns; cells of X_masked inside erased lines are
    // ignored. Unique by the rank-distance argument.
    BitArray2D erasure_decode(const BitArray2D& X_masked, const std::vector<std::size_t>& erased_rows,
                              const std::vector<std::size_t>& erased_cols) const {
        if (X_masked.rows() != n_ || X_masked.cols() != n_)
            throw DimensionMismatch("erasure_decode: array must be n x n");
        const std::size_t tr = erased_rows.size(), tc = erased_cols.size();
        if (tr + tc > t_) throw TooManyErasures("erasure_decode: more than t erased lines");
        // Erased-cell count never exceeds the t*n parity budget.
        assert(tr * n_ + tc * n_ - tr * tc <= t_ * n_);

        std::vector<bool> row_erased(n_, false), col_erased(n_, false);
        for (std::size_t r : erased_rows) row_erased.at(r) = true;
        for (std::size_t c : erased_cols) col_erased.at(c) = true;

        std::vector<std::size_t> unknown;  // vec() indices
        Bits x(n_ * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (row_erased[i] || col_erased[j])
                    unknown.push_back(i * n_ + j);
                else
                    x[i * n_ + j] = X_masked.get(i, j) ? 1 : 0;
            }

        const Bits rhs = matvec_gf2(parity_, x);
        BitArray2D A(parity_.rows(), unknown.size());
        for (std::size_t r = 0; r < parity_.rows(); ++r)
            for (std::size_t u = 0; u < unknown.size(); ++u)
                if (parity_.get(r, unknown[u])) A.set(r, u, true);

        const auto sol = solve_gf2(A, rhs);
        if (!sol) throw Undecodable("erasure_decode: inconsistent parity system");

        BitArray2D X = X_masked;
        for (std::size_t u = 0; u < unknown.size(); ++u)
            X.set(unknown[u] / n_, unknown[u] % n_, (*sol)[u] != 0);
        if (!is_codeword(X)) throw Undecodable("erasure_decode: result fails parity re-check");
        return X;
    }

    static Bits vec(const BitArray2D& X) {
        Bits v(X.rows() * X.cols(), 0);
        for (std::size_t i = 0; i < X.rows(); ++i)
            for (std::size_t j = 0; j < X.cols(); ++j) v[i * X.cols() + j] = X.get(i, j) ? 1 : 0;
        return v;
    }

   private:
    GabidulinCode(std::size_t n, std::size_t t, const FieldContext& ctx) : n_(n), t_(t), ctx_(ctx) {}

    void init() {
        const std::size_t k = n_ - t_;
        eval_points_.resize(n_);
        FieldElement g = ctx_.one();
        for (std::size_t j = 0; j < n_; ++j) {
            eval_points_[j] = g;
            g = ctx_.mul_by_x(g);
        }

        // Moore matrix: row i = the 2^i-powers of the eval points.
        moore_ = detail::FieldMatrix(n_, n_);
        for (std::size_t j = 0; j < n_; ++j) moore_.at(0, j) = eval_points_[j];
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) moore_.at(i, j) = ctx_.sqr(moore_.at(i - 1, j));

        // c = f * M with f_(k..n-1) = 0, so the last t coordinates of c * M^-1
        // vanish: those columns of M^-1 are the parity functionals.
        detail::FieldMatrix minv = detail::field_inverse(moore_, ctx_);

        parity_ = BitArray2D(t_ * n_, n_ * n_);
        for (std::size_t kk = 0; kk < t_; ++kk) {
            for (std::size_t j = 0; j < n_; ++j) {
                FieldElement v = minv.at(j, k + kk);  // coefficient of c_j
                // beta-th basis element times v, expanded bit by bit
                for (std::size_t beta = 0; beta < n_; ++beta) {
                    for (std::size_t b = 0; b < n_; ++b)
                        if (v.bit(unsigned(b))) parity_.set(kk * n_ + b, beta * n_ + j, true);
                    v = ctx_.mul_by_x(v);
                }
            }
        }

        // Systematic encoder support: inverse of the top-left k x k Moore block.
        detail::FieldMatrix a(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a.at(i, j) = moore_.at(i, j);
        ainv_ = detail::field_inverse(a, ctx_);
    }

    std::size_t n_, t_;
    FieldContext ctx_;
    std::vector<FieldElement> eval_points_;
    detail::FieldMatrix moore_, ainv_;
    BitArray2D parity_;
};

}  // namespace crisscross

#endif
