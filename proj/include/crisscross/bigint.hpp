#ifndef CRISSCROSS_BIGINT_HPP
#define CRISSCROSS_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bitarray.hpp"
#include "errors.hpp"

namespace crisscross {

// Unsigned big integer, 32-bit limbs little-endian. Just enough arithmetic for
// enumerative coding: the window module needs pow, mul/add by small, divmod by
// small, compare, and bit import/export.
class BigUint {
   public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        while (v) {
            limbs_.push_back(std::uint32_t(v));
            v >>= 32;
        }
    }

    static BigUint pow(std::uint32_t base, std::size_t exp) {
        BigUint r(1);
        for (std::size_t i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            const std::uint64_t p = std::uint64_t(l) * m + carry;
            l = std::uint32_t(p);
            carry = p >> 32;
        }
        if (carry) limbs_.push_back(std::uint32_t(carry));
        trim();
    }

    void add_small(std::uint32_t a) {
        std::uint64_t carry = a;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            const std::uint64_t s = std::uint64_t(limbs_[i]) + carry;
            limbs_[i] = std::uint32_t(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(std::uint32_t(carry));
    }

    // Divides in place, returns the remainder.
    std::uint32_t divmod_small(std::uint32_t d) {
        if (d == 0) throw InvalidParams("BigUint: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = std::uint32_t(cur / d);
            rem = cur % d;
        }
        trim();
        return std::uint32_t(rem);
    }

    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        return 0;
    }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    // Big-endian bit import/export (bit 0 of the vector = most significant).
    static BigUint from_bits_msb(const Bits& bits) {
        BigUint r;
        for (std::uint8_t b : bits) {
            r.mul_small(2);
            if (b) r.add_small(1);
        }
        return r;
    }
    Bits to_bits_msb(std::size_t width) const {
        if (bit_length() > width) throw OutOfRange("BigUint: value does not fit requested width");
        Bits out(width, 0);
        for (std::size_t i = 0; i < width; ++i) {
            const std::size_t bit = width - 1 - i;  // bit index from LSB
            const std::size_t limb = bit / 32, off = bit % 32;
            if (limb < limbs_.size() && ((limbs_[limb] >> off) & 1u)) out[i] = 1;
        }
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint t = *this;
        std::string s;
        while (!t.is_zero()) s.push_back(char('0' + t.divmod_small(10)));
        return std::string(s.rbegin(), s.rend());
    }

   private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint32_t> limbs_;
};

}  // namespace crisscross

#endif
