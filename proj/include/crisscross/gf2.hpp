#ifndef CRISSCROSS_GF2_HPP
#define CRISSCROSS_GF2_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace crisscross {

inline constexpr int kMaxFieldDegree = 512;
inline constexpr std::size_t kFieldWords = kMaxFieldDegree / 64;

// Element of GF(2^m), m <= 512, polynomial-basis coefficients packed
// little-endian. Sized for the largest supported field; contexts only touch
// the words their degree needs.
struct FieldElement {
    std::array<std::uint64_t, kFieldWords> w{};

    bool is_zero() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool bit(unsigned i) const { return (w[i / 64] >> (i % 64)) & 1u; }
    void set_bit(unsigned i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }

    friend FieldElement operator^(FieldElement a, const FieldElement& b) {
        for (std::size_t k = 0; k < kFieldWords; ++k) a.w[k] ^= b.w[k];
        return a;
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.w == b.w; }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        for (std::size_t k = kFieldWords; k-- > 0;)
            if (a.w[k] != b.w[k]) return a.w[k] < b.w[k];
        return false;
    }
};

inline FieldElement fe_from_u64(std::uint64_t v) {
    FieldElement e;
    e.w[0] = v;
    return e;
}

namespace detail {

// Polynomials over GF(2) of degree <= kMaxFieldDegree; one spare word so the
// leading x^m term of a modulus always fits.
struct FieldPoly {
    std::array<std::uint64_t, kFieldWords + 1> w{};

    bool is_zero() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool bit(unsigned i) const { return (w[i / 64] >> (i % 64)) & 1u; }
    void set_bit(unsigned i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    void operator^=(const FieldPoly& p) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= p.w[k];
    }
    void shl1() {
        for (std::size_t k = w.size(); k-- > 1;) w[k] = (w[k] << 1) | (w[k - 1] >> 63);
        w[0] <<= 1;
    }
    void xor_shifted(const FieldPoly& p, unsigned s) {  // *this ^= p << s
        const unsigned wq = s / 64, wr = s % 64;
        for (std::size_t i = w.size(); i-- > 0;) {
            if (i < wq) break;
            std::uint64_t v = p.w[i - wq] << wr;
            if (wr && i - wq >= 1) v |= p.w[i - wq - 1] >> (64 - wr);
            w[i] ^= v;
        }
    }
    int degree() const {
        for (std::size_t i = w.size(); i-- > 0;)
            if (w[i]) {
                unsigned b = 63;
                while (!((w[i] >> b) & 1u)) --b;
                return int(i * 64 + b);
            }
        return -1;
    }
};

inline FieldPoly poly_mod(FieldPoly a, const FieldPoly& f) {
    const int df = f.degree();
    for (int d = a.degree(); d >= df; d = a.degree()) a.xor_shifted(f, unsigned(d - df));
    return a;
}

inline FieldPoly poly_gcd(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        FieldPoly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace detail

// GF(2^m) context. The modulus is stored without its leading x^m term (monic
// implied); irreducibility is verified at construction.
class FieldContext {
   public:
    FieldContext(int m, FieldElement modulus_low) : m_(m), nw_((m + 63) / 64), mod_(modulus_low) {
        if (m < 1 || m > kMaxFieldDegree) throw InvalidParams("field degree must be in [1,512]");
        if (!is_irreducible(m, modulus_low)) throw InvalidParams("modulus is not irreducible");
        // x^(m+j) mod f for j in [0,4), then all 4-bit overflow combinations.
        FieldElement e = mod_;
        std::array<FieldElement, 4> pow_over;
        for (int j = 0; j < 4; ++j) {
            pow_over[std::size_t(j)] = e;
            e = mul_by_x(e);
        }
        for (unsigned u = 0; u < 16; ++u) {
            FieldElement r{};
            for (int j = 0; j < 4; ++j)
                if ((u >> j) & 1u) r = xor_n(r, pow_over[std::size_t(j)]);
            red4_[u] = r;
        }
    }
    explicit FieldContext(int m) : FieldContext(m, default_modulus(m)) {}

    int m() const { return m_; }
    FieldElement modulus_low() const { return mod_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return fe_from_u64(1); }
    // The class of x, written alpha throughout.
    FieldElement gen() const { return fe_from_u64(m_ == 1 ? 1 : 2); }

    FieldElement mul_by_x(FieldElement a) const {
        const bool carry = a.bit(unsigned(m_ - 1));
        for (std::size_t k = nw_; k-- > 1;) a.w[k] = (a.w[k] << 1) | (a.w[k - 1] >> 63);
        a.w[0] <<= 1;
        mask(a);
        if (carry) a = xor_n(a, mod_);
        return a;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        if (m_ < 8) {
            FieldElement acc{};
            FieldElement t = a;
            for (int i = 0; i < m_; ++i) {
                if (b.bit(unsigned(i))) acc = xor_n(acc, t);
                t = mul_by_x(t);
            }
            return acc;
        }
        // 4-bit windowed multiply: acc <- acc*x^4 + a*nibble, high nibble
        // first. All arithmetic stays within the nw_ active words.
        const std::size_t nw = nw_;
        std::array<std::array<std::uint64_t, kFieldWords>, 16> tab;
        auto cp = [&](std::size_t dst, const std::uint64_t* src) {
            for (std::size_t k = 0; k < nw; ++k) tab[dst][k] = src[k];
        };
        auto xr = [&](std::size_t dst, std::size_t x, std::size_t y) {
            for (std::size_t k = 0; k < nw; ++k) tab[dst][k] = tab[x][k] ^ tab[y][k];
        };
        for (std::size_t k = 0; k < nw; ++k) tab[0][k] = 0;
        cp(1, a.w.data());
        {
            FieldElement t = mul_by_x(a);
            cp(2, t.w.data());
            t = mul_by_x(t);
            cp(4, t.w.data());
            t = mul_by_x(t);
            cp(8, t.w.data());
        }
        xr(3, 2, 1);
        xr(5, 4, 1);
        xr(6, 4, 2);
        xr(7, 6, 1);
        xr(9, 8, 1);
        xr(10, 8, 2);
        xr(11, 10, 1);
        xr(12, 8, 4);
        xr(13, 12, 1);
        xr(14, 12, 2);
        xr(15, 14, 1);

        std::array<std::uint64_t, kFieldWords> acc{};
        const int nibbles = (m_ + 3) / 4;
        const unsigned top = unsigned(m_ - 4);
        const std::size_t ti = top / 64, to = top % 64;
        const unsigned rem = unsigned(m_) % 64;
        const std::uint64_t top_mask = rem ? (std::uint64_t(1) << rem) - 1 : ~std::uint64_t(0);
        for (int i = nibbles - 1; i >= 0; --i) {
            unsigned over = unsigned(acc[ti] >> to);
            if (to > 60 && ti + 1 < nw) over |= unsigned(acc[ti + 1] << (64 - to));
            over &= 0xFu;
            for (std::size_t k = nw; k-- > 1;) acc[k] = (acc[k] << 4) | (acc[k - 1] >> 60);
            acc[0] <<= 4;
            acc[nw - 1] &= top_mask;
            const std::uint64_t* red = red4_[over].w.data();
            const std::uint64_t* tb =
                tab[(b.w[std::size_t(i) / 16] >> ((std::size_t(i) % 16) * 4)) & 0xFu].data();
            for (std::size_t k = 0; k < nw; ++k) acc[k] ^= red[k] ^ tb[k];
        }
        FieldElement out{};
        for (std::size_t k = 0; k < nw; ++k) out.w[k] = acc[k];
        return out;
    }

    FieldElement sqr(const FieldElement& a) const { return mul(a, a); }

    // a^(2^k); additive in a.
    FieldElement frobenius(FieldElement a, std::size_t k) const {
        if (k >= std::size_t(m_)) k %= std::size_t(m_);
        for (std::size_t i = 0; i < k; ++i) a = sqr(a);
        return a;
    }

    FieldElement inv(const FieldElement& a) const {
        if (a.is_zero()) throw ZeroInverse();
        // a^(2^m - 2) = prod_{i=1..m-1} a^(2^i)
        FieldElement r = one();
        FieldElement t = a;
        for (int i = 1; i < m_; ++i) {
            t = sqr(t);
            r = mul(r, t);
        }
        return r;
    }

    // Smallest-value irreducible of degree m; deterministic so default-modulus
    // codewords are byte-identical across builds.
    static FieldElement default_modulus(int m) {
        if (m < 1 || m > kMaxFieldDegree) throw InvalidParams("field degree must be in [1,512]");
        for (std::uint64_t low = 1;; low += 2) {
            if (m < 64 && (low >> m) != 0) throw InvalidParams("no irreducible of this degree");
            FieldElement c{};
            c.w[0] = low;
            if (is_irreducible(m, c)) return c;
        }
    }

    // Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1 for each
    // prime p dividing m.
    static bool is_irreducible(int m, FieldElement modulus_low) {
        using detail::FieldPoly;
        if (m < 1 || m > kMaxFieldDegree) return false;
        if (m == 1) return true;  // x and x+1
        FieldPoly f;
        for (std::size_t k = 0; k < kFieldWords; ++k) f.w[k] = modulus_low.w[k];
        {
            // reject a "low part" that already reaches degree m
            FieldPoly probe = f;
            if (probe.degree() >= m) return false;
        }
        f.set_bit(unsigned(m));
        if (!(f.w[0] & 1)) return false;  // x divides f

        auto mulx_mod = [&](FieldPoly t) {
            const bool top = t.bit(unsigned(m - 1));
            t.shl1();
            if (top) t ^= f;  // f's x^m bit cancels the shifted-in one
            return t;
        };
        auto mul_mod = [&](const FieldPoly& a, const FieldPoly& b) {
            FieldPoly res{};
            FieldPoly t = a;
            for (int i = 0; i < m; ++i) {
                if (b.bit(unsigned(i))) res ^= t;
                t = mulx_mod(t);
            }
            return res;
        };

        std::vector<int> checkpoints;
        for (int p = 2, mm = m; mm > 1; ++p)
            if (mm % p == 0) {
                checkpoints.push_back(m / p);
                while (mm % p == 0) mm /= p;
            }

        FieldPoly x{};
        x.set_bit(1);
        FieldPoly h = x;
        std::vector<FieldPoly> at_checkpoint(checkpoints.size());
        for (int k = 1; k <= m; ++k) {
            h = mul_mod(h, h);
            for (std::size_t ci = 0; ci < checkpoints.size(); ++ci)
                if (checkpoints[ci] == k) at_checkpoint[ci] = h;
        }
        if (!(h.w == x.w)) return false;
        for (FieldPoly g : at_checkpoint) {
            g ^= x;
            if (g.is_zero()) return false;
            if (detail::poly_gcd(f, g).degree() != 0) return false;
        }
        return true;
    }

   private:
    FieldElement xor_n(FieldElement a, const FieldElement& b) const {
        for (std::size_t k = 0; k < nw_; ++k) a.w[k] ^= b.w[k];
        return a;
    }
    void mask(FieldElement& a) const {
        const unsigned rem = unsigned(m_) % 64;
        if (rem) a.w[nw_ - 1] &= (std::uint64_t(1) << rem) - 1;
        for (std::size_t k = nw_; k < kFieldWords; ++k) a.w[k] = 0;
    }

    int m_;
    std::size_t nw_;
    FieldElement mod_;
    std::array<FieldElement, 16> red4_;
};

inline FieldElement gf_add(const FieldElement& a, const FieldElement& b) { return a ^ b; }
inline FieldElement gf_mul(const FieldElement& a, const FieldElement& b, const FieldContext& ctx) {
    return ctx.mul(a, b);
}
inline FieldElement gf_inv(const FieldElement& a, const FieldContext& ctx) { return ctx.inv(a); }
inline FieldElement frobenius(const FieldElement& a, std::size_t k, const FieldContext& ctx) {
    return ctx.frobenius(a, k);
}

}  // namespace crisscross

#endif
