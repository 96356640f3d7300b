#ifndef CRISSCROSS_WINDOW_HPP
#define CRISSCROSS_WINDOW_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "bitarray.hpp"
#include "errors.hpp"
#include "indel1d.hpp"

namespace crisscross {

// Block of w columns of ell bits each; any column differs from the t before it.
struct WindowBlock {
    std::size_t ell = 0, w = 0, t = 0;
    std::vector<std::uint32_t> columns;
};

// Interval of received indices that a set of insertion candidates cannot be
// narrowed below; holds original_count original lines.
struct ConfusionInterval {
    std::size_t start = 0, end = 0;  // inclusive
    std::size_t original_count = 0;

    std::size_t length() const { return end - start + 1; }
};

// Exact index or a confusion interval.
struct LocFinding {
    bool exact = true;
    std::size_t index = 0;
    ConfusionInterval interval;

    static LocFinding at(std::size_t i) {
        LocFinding f;
        f.exact = true;
        f.index = i;
        return f;
    }
    static LocFinding window(ConfusionInterval iv) {
        LocFinding f;
        f.exact = false;
        f.interval = iv;
        return f;
    }
};

inline bool window_valid(const WindowBlock& b) {
    for (std::size_t i = 0; i + b.t < b.w; ++i)
        for (std::size_t j = 1; j <= b.t; ++j)
            if (b.columns[i] == b.columns[i + j]) return false;
    return true;
}

// Number of enumeratively encodable blocks: (2^ell - t)^w.
inline BigUint window_capacity(std::size_t ell, std::size_t t, std::size_t w) {
    if (ell == 0 || ell >= 31) throw InvalidParams("window_capacity: ell out of range");
    const std::uint64_t full = std::uint64_t(1) << ell;
    if (full <= t) throw InvalidParams("window_capacity: need 2^ell > t");
    return BigUint::pow(std::uint32_t(full - t), w);
}

// Whole bits extractable from one block.
inline std::size_t window_message_bits(std::size_t ell, std::size_t t, std::size_t w) {
    const std::size_t bl = window_capacity(ell, t, w).bit_length();
    return bl == 0 ? 0 : bl - 1;  // floor(log2 capacity); capacity >= 1
}

namespace detail {

// d-th smallest value in [0, 2^ell) not among `forbidden` (sorted ascending).
inline std::uint32_t nth_allowed(std::uint32_t d, const std::vector<std::uint32_t>& forbidden) {
    std::uint32_t v = d;
    for (std::uint32_t f : forbidden)
        if (f <= v) ++v;
    return v;
}

inline std::vector<std::uint32_t> forbidden_at(const std::vector<std::uint32_t>& cols, std::size_t i, std::size_t t) {
    const std::size_t k = std::min(i, t);
    std::vector<std::uint32_t> f(cols.begin() + long(i - k), cols.begin() + long(i));
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace detail

// Mixed-radix unranking, base 2^ell - t, most significant digit first. Digit d
// at position i picks the d-th smallest column distinct from the previous
// min(i, t) columns; position 0 is restricted to the first 2^ell - t values.
inline WindowBlock window_unrank(const BigUint& msg, std::size_t ell, std::size_t t, std::size_t w) {
    const BigUint cap = window_capacity(ell, t, w);
    if (!(msg < cap)) throw OutOfRange("window_unrank: message >= capacity");
    const std::uint32_t base = std::uint32_t((std::uint64_t(1) << ell) - t);

    std::vector<std::uint32_t> digits(w, 0);
    BigUint m = msg;
    for (std::size_t i = w; i-- > 0;) digits[i] = m.divmod_small(base);

    WindowBlock b;
    b.ell = ell;
    b.w = w;
    b.t = t;
    b.columns.resize(w);
    for (std::size_t i = 0; i < w; ++i) {
        const auto forb = detail::forbidden_at(b.columns, i, t);
        b.columns[i] = detail::nth_allowed(digits[i], forb);
    }
    return b;
}

// Exact inverse of window_unrank.
inline BigUint window_rank(const WindowBlock& b) {
    const std::uint32_t base = std::uint32_t((std::uint64_t(1) << b.ell) - b.t);
    BigUint acc;
    for (std::size_t i = 0; i < b.w; ++i) {
        const auto forb = detail::forbidden_at(b.columns, i, b.t);
        const std::uint32_t c = b.columns[i];
        if (std::binary_search(forb.begin(), forb.end(), c))
            throw NotEncodable("window_rank: column equals a forbidden neighbour");
        std::uint32_t smaller_forbidden = 0;
        for (std::uint32_t f : forb)
            if (f < c) ++smaller_forbidden;
        const std::uint32_t d = c - smaller_forbidden;
        if (d >= base) throw NotEncodable("window_rank: column outside the enumerable subset");
        acc.mul_small(base);
        acc.add_small(d);
    }
    return acc;
}

// Column i of the block as array content: row r carries bit ell-1-r (top row =
// most significant bit).
inline std::vector<Bits> block_rows(const WindowBlock& b) {
    std::vector<Bits> rows(b.ell, Bits(b.w, 0));
    for (std::size_t i = 0; i < b.w; ++i)
        for (std::size_t r = 0; r < b.ell; ++r) rows[r][i] = (b.columns[i] >> (b.ell - 1 - r)) & 1u;
    return rows;
}

inline WindowBlock block_from_rows(const std::vector<Bits>& rows, std::size_t t) {
    if (rows.empty()) throw InvalidParams("block_from_rows: no rows");
    WindowBlock b;
    b.ell = rows.size();
    b.w = rows[0].size();
    b.t = t;
    b.columns.assign(b.w, 0);
    for (std::size_t r = 0; r < b.ell; ++r) {
        if (rows[r].size() != b.w) throw DimensionMismatch("block_from_rows: ragged rows");
        for (std::size_t i = 0; i < b.w; ++i)
            if (rows[r][i]) b.columns[i] |= std::uint32_t(1) << (b.ell - 1 - r);
    }
    return b;
}

// Collapse a set of insertion-position candidates (sorted tuples of received
// indices, all the same size) into exact indices plus confusion intervals.
// Intervals start as maximal runs of consecutive indices in the union and are
// merged until every candidate places the same count in each interval.
inline std::vector<LocFinding> merge_insertion_candidates(const std::set<std::vector<std::size_t>>& candidates) {
    std::vector<LocFinding> out;
    if (candidates.empty()) return out;
    if (candidates.size() == 1) {
        for (std::size_t p : *candidates.begin()) out.push_back(LocFinding::at(p));
        return out;
    }

    std::set<std::size_t> uni;
    for (const auto& p : candidates) uni.insert(p.begin(), p.end());
    std::vector<std::pair<std::size_t, std::size_t>> ivs;
    for (std::size_t pos : uni) {
        if (!ivs.empty() && pos == ivs.back().second + 1)
            ivs.back().second = pos;
        else
            ivs.emplace_back(pos, pos);
    }
    auto counts_for = [&](const std::vector<std::size_t>& pat) {
        std::vector<std::size_t> c(ivs.size(), 0);
        for (std::size_t pos : pat)
            for (std::size_t k = 0; k < ivs.size(); ++k)
                if (pos >= ivs[k].first && pos <= ivs[k].second) ++c[k];
        return c;
    };
    while (ivs.size() > 1) {
        bool stable = true;
        const auto ref = counts_for(*candidates.begin());
        for (const auto& p : candidates) {
            const auto c = counts_for(p);
            for (std::size_t k = 0; k < ivs.size(); ++k) {
                if (c[k] != ref[k]) {
                    const std::size_t m = std::min(k, ivs.size() - 2);
                    ivs[m].second = ivs[m + 1].second;
                    ivs.erase(ivs.begin() + long(m) + 1);
                    stable = false;
                    break;
                }
            }
            if (!stable) break;
        }
        if (stable) break;
    }

    const auto ref = counts_for(*candidates.begin());
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        const std::size_t len = ivs[k].second - ivs[k].first + 1;
        if (len == ref[k]) {
            for (std::size_t p = ivs[k].first; p <= ivs[k].second; ++p) out.push_back(LocFinding::at(p));
        } else {
            ConfusionInterval iv;
            iv.start = ivs[k].first;
            iv.end = ivs[k].second;
            iv.original_count = len - ref[k];
            out.push_back(LocFinding::window(iv));
        }
    }
    return out;
}

namespace detail {

// Intersection of per-row candidate pattern sets.
inline std::set<std::vector<std::size_t>> intersect_row_patterns(const std::vector<Bits>& originals,
                                                                 const std::vector<Bits>& receiveds, bool deletions) {
    if (originals.size() != receiveds.size() || originals.empty())
        throw DimensionMismatch("pattern intersection: row count mismatch");
    std::set<std::vector<std::size_t>> acc;
    for (std::size_t r = 0; r < originals.size(); ++r) {
        CandidatePatternSet row;
        try {
            row = deletions ? candidate_deletion_patterns(originals[r], receiveds[r])
                            : candidate_insertion_patterns(originals[r], receiveds[r]);
        } catch (const Error&) {
            throw NoConsistentPattern("pattern intersection: a row admits no pattern");
        }
        if (r == 0) {
            acc = std::move(row.patterns);
        } else {
            std::set<std::vector<std::size_t>> keep;
            for (const auto& p : acc)
                if (row.patterns.count(p)) keep.insert(p);
            acc = std::move(keep);
        }
        if (acc.empty()) throw NoConsistentPattern("pattern intersection: no pattern fits every row");
    }
    return acc;
}

}  // namespace detail

// Exact deleted-column indices of a window block, by intersecting per-row
// deletion patterns. The window constraint makes the survivor unique.
inline std::vector<std::size_t> localize_deleted_columns(const std::vector<Bits>& originals,
                                                         const std::vector<Bits>& receiveds, std::size_t t) {
    const std::size_t d = originals[0].size() - receiveds[0].size();
    if (d == 0) return {};
    if (d > t) throw InvalidParams("localize_deleted_columns: more than t deletions");
    auto acc = detail::intersect_row_patterns(originals, receiveds, true);
    if (acc.size() > 1) throw AmbiguousPattern("localize_deleted_columns: several patterns survive");
    const auto& p = *acc.begin();
    for (std::size_t r = 0; r < originals.size(); ++r)
        if (delete_positions(originals[r], p) != receiveds[r])
            throw NoConsistentPattern("localize_deleted_columns: self-check failed");
    return p;
}

// Inserted-column findings: exact indices where the intersection is unique,
// confusion intervals (length <= 2t+1, holding 1..t original columns) elsewhere.
inline std::vector<LocFinding> localize_inserted_columns(const std::vector<Bits>& originals,
                                                         const std::vector<Bits>& receiveds, std::size_t t) {
    const std::size_t d = receiveds[0].size() - originals[0].size();
    if (d == 0) return {};
    if (d > t) throw InvalidParams("localize_inserted_columns: more than t insertions");
    auto acc = detail::intersect_row_patterns(originals, receiveds, false);

    auto out = merge_insertion_candidates(acc);
    for (const LocFinding& f : out)
        if (!f.exact && (f.interval.length() > 2 * t + 1 || f.interval.original_count > t))
            throw NoConsistentPattern("localize_inserted_columns: confusion exceeds its bound");
    return out;
}

}  // namespace crisscross

#endif
