#ifndef CRISSCROSS_INDEL1D_HPP
#define CRISSCROSS_INDEL1D_HPP

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "bitarray.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "linalg.hpp"

namespace crisscross {

enum class RowCodeMode { VT, HASH };

// Redundancy bits with known-position erasures.
struct MaskedBits {
    Bits bits;                         // values at erased positions are ignored
    std::vector<std::uint8_t> erased;  // same length, 1 = erased

    static MaskedBits intact(Bits b) {
        MaskedBits m;
        m.erased.assign(b.size(), 0);
        m.bits = std::move(b);
        return m;
    }
    std::size_t erased_count() const {
        std::size_t k = 0;
        for (auto e : erased) k += e;
        return k;
    }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::size_t ceil_log2(std::size_t v) {
    std::size_t b = 0;
    while ((std::size_t(1) << b) < v) ++b;
    return b;
}

// Parity-check columns such that any t of them are linearly independent
// (distance >= t+1): overall parity (t=1), Hamming (t=2), extended Hamming
// (t=3), two-error BCH image (t=4).
inline BitArray2D shield_matrix(std::size_t m, std::size_t t, std::size_t& rho_out) {
    if (t < 1 || t > 4) throw InvalidParams("shield_matrix: t must be in [1,4]");
    const std::size_t r1 = ceil_log2(m + 1);
    std::size_t rho;
    switch (t) {
        case 1: rho = 1; break;
        case 2: rho = r1; break;
        case 3: rho = r1 + 1; break;
        default: rho = 2 * r1; break;
    }
    BitArray2D H(rho, m);
    const FieldContext bch_field = (t == 4) ? FieldContext(int(r1)) : FieldContext(1);
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t e = j + 1;
        switch (t) {
            case 1:
                H.set(0, j, true);
                break;
            case 2:
                for (std::size_t b = 0; b < r1; ++b)
                    if ((e >> b) & 1u) H.set(b, j, true);
                break;
            case 3:
                for (std::size_t b = 0; b < r1; ++b)
                    if ((e >> b) & 1u) H.set(b, j, true);
                H.set(r1, j, true);
                break;
            default: {
                const FieldElement ej = fe_from_u64(e);
                const FieldElement e3 = bch_field.mul(bch_field.sqr(ej), ej);
                for (std::size_t b = 0; b < r1; ++b) {
                    if ((e >> b) & 1u) H.set(b, j, true);
                    if (e3.bit(unsigned(b))) H.set(r1 + b, j, true);
                }
                break;
            }
        }
    }
    rho_out = rho;
    return H;
}

}  // namespace detail

inline std::size_t vt_bits_for(std::size_t w) {
    const std::size_t b = detail::ceil_log2(w + 1);
    return b == 0 ? 1 : b;
}

// VT syndrome: sum of i * x_i over 1-based positions, mod w+1.
inline std::size_t vt_syndrome(const Bits& row) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i]) s += i + 1;
    return s % (row.size() + 1);
}

struct RowCodeConfig {
    std::size_t w = 0;
    std::size_t t = 0;
    std::size_t r_w = 0;
    std::uint64_t salt = 0;
    RowCodeMode mode = RowCodeMode::VT;

    std::size_t payload_bits = 0;  // check-value width before replication/shield

    // HASH mode: per-(position, bit) mixing words; hash = xor of selected words,
    // truncated to payload_bits.
    std::vector<std::array<std::uint64_t, 2>> hash_table;

    // Shield code (HASH mode).
    BitArray2D shield_parity;  // rho x r_w
    std::vector<std::size_t> shield_check_pos;
    std::vector<std::size_t> shield_data_pos;

    std::uint64_t hash(const Bits& row) const {
        std::uint64_t h = 0;
        for (std::size_t i = 0; i < row.size(); ++i) h ^= hash_table[i][row[i] ? 1 : 0];
        if (payload_bits < 64) h &= (std::uint64_t(1) << payload_bits) - 1;
        return h;
    }
};

// Build a config. For VT the payload is the syndrome replicated t+1 times; for
// HASH the payload is an r_w - rho bit hash wrapped in the shield code.
inline RowCodeConfig make_row_config(std::size_t w, std::size_t t, std::size_t r_w, std::uint64_t salt,
                                     RowCodeMode mode) {
    if (w == 0) throw InvalidParams("row config: w must be positive");
    if (t < 1 || t > 4) throw InvalidParams("row config: t must be in [1,4]");
    if (mode == RowCodeMode::VT && t != 1) throw InvalidParams("row config: VT mode requires t = 1");
    RowCodeConfig cfg;
    cfg.w = w;
    cfg.t = t;
    cfg.r_w = r_w;
    cfg.salt = salt;
    cfg.mode = mode;

    if (mode == RowCodeMode::VT) {
        cfg.payload_bits = vt_bits_for(w);
        if (cfg.payload_bits * (t + 1) > r_w)
            throw BudgetExceeded("row config: replicated VT syndrome exceeds r_w");
    } else {
        std::size_t rho = 0;
        cfg.shield_parity = detail::shield_matrix(r_w, t, rho);
        if (r_w <= rho) throw BudgetExceeded("row config: r_w leaves no room for a hash payload");
        cfg.payload_bits = std::min<std::size_t>(r_w - rho, 64);

        // Check positions: greedy from the tail so the data part sits in front.
        GaussBasis basis(rho);
        std::vector<std::uint8_t> is_check(r_w, 0);
        for (std::size_t j = r_w; j-- > 0 && basis.rank() < rho;) {
            std::vector<std::uint64_t> col((rho + 63) / 64, 0);
            for (std::size_t b = 0; b < rho; ++b)
                if (cfg.shield_parity.get(b, j)) col[b / 64] |= std::uint64_t(1) << (b % 64);
            if (basis.try_insert(std::move(col))) is_check[j] = 1;
        }
        if (basis.rank() < rho) throw InvalidParams("row config: shield parity not full rank");
        for (std::size_t j = 0; j < r_w; ++j)
            (is_check[j] ? cfg.shield_check_pos : cfg.shield_data_pos).push_back(j);
        if (cfg.shield_data_pos.size() < cfg.payload_bits)
            cfg.payload_bits = cfg.shield_data_pos.size();

        cfg.hash_table.resize(w);
        for (std::size_t i = 0; i < w; ++i) {
            cfg.hash_table[i][0] = detail::mix64(salt ^ detail::mix64(2 * i));
            cfg.hash_table[i][1] = detail::mix64(salt ^ detail::mix64(2 * i + 1));
        }
    }
    return cfg;
}

// Default widths: VT with (t+1)-fold replication for t=1, otherwise a
// 48-bit-target hash in a shield.
inline RowCodeConfig default_row_config(std::size_t w, std::size_t t, std::uint64_t salt = 0) {
    if (t == 1) return make_row_config(w, t, 2 * vt_bits_for(w), salt, RowCodeMode::VT);
    std::size_t r_w = 8;
    for (;; ++r_w) {
        std::size_t rho = 0;
        (void)detail::shield_matrix(r_w, t, rho);
        if (r_w >= rho && r_w - rho >= std::min<std::size_t>(48, 64)) break;
    }
    return make_row_config(w, t, r_w, salt, RowCodeMode::HASH);
}

namespace detail {

inline Bits payload_of(const Bits& row, const RowCodeConfig& cfg) {
    Bits p(cfg.payload_bits, 0);
    if (cfg.mode == RowCodeMode::VT) {
        const std::size_t s = vt_syndrome(row);
        for (std::size_t b = 0; b < cfg.payload_bits; ++b) p[b] = (s >> b) & 1u;
    } else {
        const std::uint64_t h = cfg.hash(row);
        for (std::size_t b = 0; b < cfg.payload_bits; ++b) p[b] = (h >> b) & 1u;
    }
    return p;
}

}  // namespace detail

// Deterministic r_w-bit redundancy for one row.
inline Bits encode_redundancy(const Bits& row, const RowCodeConfig& cfg) {
    if (row.size() != cfg.w) throw LengthMismatch("encode_redundancy: row length != w");
    const Bits p = detail::payload_of(row, cfg);
    Bits out(cfg.r_w, 0);
    if (cfg.mode == RowCodeMode::VT) {
        if (p.size() * (cfg.t + 1) > cfg.r_w) throw BudgetExceeded("encode_redundancy: replication over budget");
        for (std::size_t j = 0; j < p.size(); ++j)
            for (std::size_t c = 0; c <= cfg.t; ++c) out[j * (cfg.t + 1) + c] = p[j];
    } else {
        // Shield codeword: payload at data positions, checks solved from H s = 0.
        for (std::size_t b = 0; b < cfg.payload_bits; ++b) out[cfg.shield_data_pos[b]] = p[b];
        const std::size_t rho = cfg.shield_parity.rows();
        Bits rhs(rho, 0);
        {
            const Bits partial = matvec_gf2(cfg.shield_parity, out);
            rhs = partial;
        }
        BitArray2D A(rho, cfg.shield_check_pos.size());
        for (std::size_t r = 0; r < rho; ++r)
            for (std::size_t u = 0; u < cfg.shield_check_pos.size(); ++u)
                if (cfg.shield_parity.get(r, cfg.shield_check_pos[u])) A.set(r, u, true);
        const auto sol = solve_gf2(A, rhs);
        if (!sol) throw EncodingFailure("encode_redundancy: shield check solve failed");
        for (std::size_t u = 0; u < cfg.shield_check_pos.size(); ++u) out[cfg.shield_check_pos[u]] = (*sol)[u];
    }
    return out;
}

// Recover the check value from redundancy with <= t known-position erasures.
inline Bits extract_check_value(const MaskedBits& red, const RowCodeConfig& cfg) {
    if (red.bits.size() != cfg.r_w || red.erased.size() != cfg.r_w)
        throw LengthMismatch("extract_check_value: redundancy length != r_w");
    if (red.erased_count() > cfg.t) throw Undecodable("extract_check_value: more than t erasures");
    Bits p(cfg.payload_bits, 0);
    if (cfg.mode == RowCodeMode::VT) {
        for (std::size_t j = 0; j < cfg.payload_bits; ++j) {
            bool found = false;
            std::uint8_t v = 0;
            for (std::size_t c = 0; c <= cfg.t; ++c) {
                const std::size_t pos = j * (cfg.t + 1) + c;
                if (red.erased[pos]) continue;
                if (!found) {
                    v = red.bits[pos];
                    found = true;
                } else if (red.bits[pos] != v) {
                    throw Undecodable("extract_check_value: replica disagreement");
                }
            }
            if (!found) throw Undecodable("extract_check_value: all replicas erased");
            p[j] = v;
        }
        return p;
    }
    // Shield: solve the erased positions from H s = 0.
    std::vector<std::size_t> unknown;
    Bits s(cfg.r_w, 0);
    for (std::size_t j = 0; j < cfg.r_w; ++j) {
        if (red.erased[j])
            unknown.push_back(j);
        else
            s[j] = red.bits[j];
    }
    if (!unknown.empty()) {
        const Bits rhs = matvec_gf2(cfg.shield_parity, s);
        BitArray2D A(cfg.shield_parity.rows(), unknown.size());
        for (std::size_t r = 0; r < cfg.shield_parity.rows(); ++r)
            for (std::size_t u = 0; u < unknown.size(); ++u)
                if (cfg.shield_parity.get(r, unknown[u])) A.set(r, u, true);
        const auto sol = solve_gf2(A, rhs);
        if (!sol) throw Undecodable("extract_check_value: shield system inconsistent");
        for (std::size_t u = 0; u < unknown.size(); ++u) s[unknown[u]] = (*sol)[u];
    }
    {
        const Bits chk = matvec_gf2(cfg.shield_parity, s);
        for (auto b : chk)
            if (b) throw Undecodable("extract_check_value: shield re-check failed");
    }
    for (std::size_t b = 0; b < cfg.payload_bits; ++b) p[b] = s[cfg.shield_data_pos[b]];
    return p;
}

namespace detail {

inline bool payload_matches(const Bits& row, const Bits& payload, const RowCodeConfig& cfg) {
    return payload_of(row, cfg) == payload;
}

inline std::set<Bits> all_supersequences(const Bits& s, std::size_t extra) {
    std::set<Bits> cur{s};
    for (std::size_t round = 0; round < extra; ++round) {
        std::set<Bits> next;
        for (const Bits& x : cur) {
            for (std::size_t p = 0; p <= x.size(); ++p) {
                for (std::uint8_t b = 0; b <= 1; ++b) {
                    Bits y;
                    y.reserve(x.size() + 1);
                    y.insert(y.end(), x.begin(), x.begin() + long(p));
                    y.push_back(b);
                    y.insert(y.end(), x.begin() + long(p), x.end());
                    next.insert(std::move(y));
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline std::set<Bits> all_subsequences(const Bits& s, std::size_t remove) {
    std::set<Bits> cur{s};
    for (std::size_t round = 0; round < remove; ++round) {
        std::set<Bits> next;
        for (const Bits& x : cur) {
            for (std::size_t p = 0; p < x.size(); ++p) {
                Bits y;
                y.reserve(x.size() - 1);
                y.insert(y.end(), x.begin(), x.begin() + long(p));
                y.insert(y.end(), x.begin() + long(p) + 1, x.end());
                next.insert(std::move(y));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline Bits unique_match_or_throw(const std::set<Bits>& candidates, const Bits& payload, const RowCodeConfig& cfg) {
    const Bits* found = nullptr;
    for (const Bits& c : candidates) {
        if (payload_matches(c, payload, cfg)) {
            if (found) throw Ambiguous("row decode: two candidates match the check value");
            found = &c;
        }
    }
    if (!found) throw Undecodable("row decode: no candidate matches the check value");
    return *found;
}

}  // namespace detail

// Recover the original w-bit row from a deletion-shortened copy.
inline Bits decode_deletions(const Bits& received, std::size_t w, const MaskedBits& redundancy, std::size_t num_del,
                             const RowCodeConfig& cfg) {
    if (w != cfg.w) throw LengthMismatch("decode_deletions: w != cfg.w");
    if (num_del > cfg.t) throw InvalidParams("decode_deletions: num_del > t");
    if (received.size() + num_del != w) throw LengthMismatch("decode_deletions: received length mismatch");
    const Bits payload = extract_check_value(redundancy, cfg);
    if (num_del == 0) {
        if (!detail::payload_matches(received, payload, cfg))
            throw Undecodable("decode_deletions: intact row fails its check");
        return received;
    }
    return detail::unique_match_or_throw(detail::all_supersequences(received, num_del), payload, cfg);
}

// Recover the original w-bit row from an insertion-lengthened copy.
inline Bits decode_insertions(const Bits& received, std::size_t w, const MaskedBits& redundancy, std::size_t num_ins,
                              const RowCodeConfig& cfg) {
    if (w != cfg.w) throw LengthMismatch("decode_insertions: w != cfg.w");
    if (num_ins > cfg.t) throw InvalidParams("decode_insertions: num_ins > t");
    if (received.size() != w + num_ins) throw LengthMismatch("decode_insertions: received length mismatch");
    const Bits payload = extract_check_value(redundancy, cfg);
    if (num_ins == 0) {
        if (!detail::payload_matches(received, payload, cfg))
            throw Undecodable("decode_insertions: intact row fails its check");
        return received;
    }
    return detail::unique_match_or_throw(detail::all_subsequences(received, num_ins), payload, cfg);
}

// VT-only extra: one deletion anywhere in (row | redundancy), position unknown.
// Tries the data-part and redundancy-part hypotheses and demands a unique row.
inline Bits decode_row_indel_vt(const Bits& full_received, const RowCodeConfig& cfg) {
    if (cfg.mode != RowCodeMode::VT) throw InvalidParams("decode_row_indel_vt: VT mode only");
    if (full_received.size() != cfg.w + cfg.r_w - 1)
        throw LengthMismatch("decode_row_indel_vt: expected one missing symbol");
    std::set<Bits> results;
    // (a) deletion in the data part, redundancy intact
    {
        Bits data(full_received.begin(), full_received.begin() + long(cfg.w - 1));
        Bits red(full_received.begin() + long(cfg.w - 1), full_received.end());
        try {
            results.insert(decode_deletions(data, cfg.w, MaskedBits::intact(red), 1, cfg));
        } catch (const Error&) {
        }
    }
    // (b) deletion in the redundancy: data intact, mark each position erased
    {
        Bits data(full_received.begin(), full_received.begin() + long(cfg.w));
        Bits red_short(full_received.begin() + long(cfg.w), full_received.end());
        for (std::size_t p = 0; p < cfg.r_w; ++p) {
            MaskedBits red;
            red.bits.assign(cfg.r_w, 0);
            red.erased.assign(cfg.r_w, 0);
            for (std::size_t j = 0, k = 0; j < cfg.r_w; ++j) {
                if (j == p) {
                    red.erased[j] = 1;
                    continue;
                }
                red.bits[j] = red_short[k++];
            }
            try {
                results.insert(decode_deletions(data, cfg.w, red, 0, cfg));
            } catch (const Error&) {
            }
        }
    }
    if (results.empty()) throw Undecodable("decode_row_indel_vt: no consistent hypothesis");
    if (results.size() > 1) throw Ambiguous("decode_row_indel_vt: hypotheses disagree");
    return *results.begin();
}

struct CandidatePatternSet {
    std::set<std::vector<std::size_t>> patterns;
};

namespace detail {

template <typename F>
inline void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        f(idx);
        return;
    }
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace detail

// Exact set of sorted d-tuples P with delete(original, P) = received.
inline CandidatePatternSet candidate_deletion_patterns(const Bits& original, const Bits& received) {
    if (received.size() > original.size()) throw NotASubsequence("candidate_deletion_patterns: received longer");
    const std::size_t d = original.size() - received.size();
    CandidatePatternSet out;
    detail::for_each_combination(original.size(), d, [&](const std::vector<std::size_t>& tuple) {
        if (delete_positions(original, tuple) == received) out.patterns.insert(tuple);
    });
    if (out.patterns.empty()) throw NotASubsequence("candidate_deletion_patterns: not a subsequence");
    return out;
}

// Exact set of sorted d-tuples of received indices whose removal yields original.
inline CandidatePatternSet candidate_insertion_patterns(const Bits& original, const Bits& received) {
    if (received.size() < original.size()) throw NotASupersequence("candidate_insertion_patterns: received shorter");
    const std::size_t d = received.size() - original.size();
    CandidatePatternSet out;
    detail::for_each_combination(received.size(), d, [&](const std::vector<std::size_t>& tuple) {
        if (delete_positions(received, tuple) == original) out.patterns.insert(tuple);
    });
    if (out.patterns.empty()) throw NotASupersequence("candidate_insertion_patterns: not a supersequence");
    return out;
}

// Encode-time separation check: no row in the indel confusion set of `row` may
// share its check value. Exhaustive, so meant for small w.
inline bool certify_separation(const Bits& row, const RowCodeConfig& cfg) {
    const Bits payload = detail::payload_of(row, cfg);
    for (std::size_t d = 1; d <= cfg.t; ++d) {
        for (const Bits& shorter : detail::all_subsequences(row, d)) {
            for (const Bits& other : detail::all_supersequences(shorter, d)) {
                if (other != row && detail::payload_matches(other, payload, cfg)) return false;
            }
        }
    }
    return true;
}

}  // namespace crisscross

#endif
