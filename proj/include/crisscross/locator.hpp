#ifndef CRISSCROSS_LOCATOR_HPP
#define CRISSCROSS_LOCATOR_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "bitarray.hpp"
#include "errors.hpp"
#include "window.hpp"

namespace crisscross {

enum class LocatorOrientation { L, T };

// Kronecker locator: L' = I_{t+1} (x) 1_{t+1}, stacked s/(t+1) times; T is the
// transpose. Any t+1 consecutive rows of an L-locator are pairwise distinct,
// which pins row deletions exactly; its columns come in constant runs of t+1.
struct LocatorArray {
    std::size_t s = 0, t = 0;
    LocatorOrientation orientation = LocatorOrientation::L;
    BitArray2D cells;
};

namespace detail {

// The stacked Kronecker pattern itself, without the detection size check.
inline BitArray2D locator_pattern(std::size_t s, std::size_t t) {
    const std::size_t tp1 = t + 1;
    BitArray2D L(s, tp1 * tp1);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < tp1 * tp1; ++j)
            if (j / tp1 == i % tp1) L.set(i, j, true);
    return L;
}

}  // namespace detail

inline LocatorArray build_locator(std::size_t s, std::size_t t, LocatorOrientation orientation) {
    if (t < 1) throw InvalidParams("build_locator: t must be >= 1");
    const std::size_t tp1 = t + 1;
    if (s % tp1 != 0 || s < ((t + 1) / 2) * tp1)
        throw InvalidSize("build_locator: s must be a multiple of t+1 and >= ceil(t/2)(t+1)");
    LocatorArray out;
    out.s = s;
    out.t = t;
    out.orientation = orientation;
    const BitArray2D L = detail::locator_pattern(s, t);
    out.cells = (orientation == LocatorOrientation::L) ? L : L.transpose();
    return out;
}

struct MarkerSet {
    BitArray2D e11, e12, e21, e22;  // each (t+1) x (t+1)
};

inline MarkerSet build_markers(std::size_t t) {
    if (t < 1) throw InvalidParams("build_markers: t must be >= 1");
    const std::size_t tp1 = t + 1;
    const BitArray2D lp = detail::locator_pattern(tp1, t);  // L' itself
    MarkerSet m;
    m.e21 = lp.sub(0, 0, tp1, tp1);
    m.e22 = lp.sub(0, tp1 * tp1 - tp1, tp1, tp1);
    for (std::size_t i = 0; i < tp1; ++i)
        for (std::size_t j = 0; j < tp1; ++j) m.e22.flip(i, j);
    m.e11 = m.e21.transpose();
    m.e12 = m.e22.transpose();
    return m;
}

struct LocatorDeletionReport {
    std::vector<std::size_t> deleted_rows;       // exact original indices (0-based)
    std::vector<std::size_t> col_del_counts;     // one per (t+1)-column subarray
};

struct LocatorInsertionReport {
    std::vector<LocFinding> row_findings;           // received-frame
    std::vector<std::size_t> col_ins_counts;        // per original subarray
    std::vector<std::uint8_t> col_count_ambiguous;  // per subarray, attribution uncertain
    std::set<std::vector<std::size_t>> row_candidates;  // raw surviving row patterns
    std::set<std::vector<std::size_t>> col_candidates;  // raw surviving column patterns
};

namespace detail {

template <typename F>
inline void for_each_subset_pair(std::size_t n1, std::size_t k1, std::size_t n2, std::size_t k2, F&& f) {
    for_each_combination(n1, k1, [&](const std::vector<std::size_t>& a) {
        for_each_combination(n2, k2, [&](const std::vector<std::size_t>& b) { f(a, b); });
    });
}

}  // namespace detail

// Canonical exact indices for run-located column deletions: a count of k in
// subarray a is pinned to the k highest indices of that run. Any index inside
// the run yields the same erasure set downstream; the canonical choice keeps
// reports deterministic.
inline std::vector<std::size_t> canonical_run_deletions(const std::vector<std::size_t>& counts, std::size_t t) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < counts.size(); ++a)
        for (std::size_t k = 0; k < counts[a]; ++k) out.push_back((a + 1) * (t + 1) - 1 - k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::uint64_t pack_row(const BitArray2D& a, std::size_t r) {
    if (a.cols() > 64) throw TooLarge("pack_row: more than 64 columns");
    std::uint64_t v = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (a.get(r, c)) v |= std::uint64_t(1) << c;
    return v;
}

// Masked L' row classes: bit pattern of L' row `cls` with the columns in the
// sorted set `dropped` removed.
inline std::vector<std::uint64_t> masked_classes(std::size_t t, const std::vector<std::size_t>& dropped) {
    const std::size_t tp1 = t + 1;
    std::vector<std::uint64_t> out(tp1, 0);
    for (std::size_t cls = 0; cls < tp1; ++cls) {
        std::uint64_t v = 0;
        std::size_t out_c = 0, k = 0;
        for (std::size_t j = 0; j < tp1 * tp1; ++j) {
            if (k < dropped.size() && dropped[k] == j) {
                ++k;
                continue;
            }
            if (j / tp1 == cls) v |= std::uint64_t(1) << out_c;
            ++out_c;
        }
        out[cls] = v;
    }
    return out;
}

// Enumerate all row-deletion sets turning the length-s class pattern into the
// packed received rows. Branches only where a deletion is possible.
inline void align_deletions(const std::vector<std::uint64_t>& pattern, const std::vector<std::uint64_t>& rr,
                            std::size_t dr, std::vector<std::size_t>& cur, std::size_t li, std::size_t ri,
                            const std::function<void(const std::vector<std::size_t>&)>& emit) {
    const std::size_t s = pattern.size();
    if (ri == rr.size()) {
        if (s - li == dr - cur.size()) {
            std::vector<std::size_t> full = cur;
            for (std::size_t x = li; x < s; ++x) full.push_back(x);
            emit(full);
        }
        return;
    }
    if (li == s) return;
    if (s - li < rr.size() - ri) return;
    if (pattern[li] == rr[ri]) align_deletions(pattern, rr, dr, cur, li + 1, ri + 1, emit);
    if (cur.size() < dr) {
        cur.push_back(li);
        align_deletions(pattern, rr, dr, cur, li + 1, ri, emit);
        cur.pop_back();
    }
}

// Enumerate all received-row insertion sets: removing them leaves the pattern.
inline void align_insertions(const std::vector<std::uint64_t>& pattern, const std::vector<std::uint64_t>& rr,
                             std::size_t ir, std::vector<std::size_t>& cur, std::size_t li, std::size_t ri,
                             const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (li == pattern.size()) {
        if (rr.size() - ri == ir - cur.size()) {
            std::vector<std::size_t> full = cur;
            for (std::size_t x = ri; x < rr.size(); ++x) full.push_back(x);
            emit(full);
        }
        return;
    }
    if (ri == rr.size()) return;
    if (rr.size() - ri < pattern.size() - li) return;
    if (pattern[li] == rr[ri]) align_insertions(pattern, rr, ir, cur, li + 1, ri + 1, emit);
    if (cur.size() < ir) {
        cur.push_back(ri);
        align_insertions(pattern, rr, ir, cur, li, ri + 1, emit);
        cur.pop_back();
    }
}

}  // namespace detail

// Deletion detection against the public L_s pattern: exact deleted-row indices
// plus the number of column deletions per (t+1)-column subarray. Matching over
// deletion hypotheses; the pattern structure makes the row part unique (and
// the count vector with it).
inline LocatorDeletionReport locate_deletions_L(const BitArray2D& received, std::size_t s, std::size_t t) {
    const std::size_t tp1 = t + 1;
    (void)build_locator(s, t, LocatorOrientation::L);  // validates s
    if (received.rows() > s || received.cols() > tp1 * tp1)
        throw NotALocatorSubpattern("locate_deletions_L: received larger than the locator");
    const std::size_t dr = s - received.rows();
    const std::size_t dc = tp1 * tp1 - received.cols();
    if (dr + dc > t) throw NotALocatorSubpattern("locate_deletions_L: too many deletions for budget t");

    std::vector<std::uint64_t> rr(received.rows());
    for (std::size_t r = 0; r < received.rows(); ++r) rr[r] = detail::pack_row(received, r);

    std::set<std::vector<std::size_t>> row_sets;
    std::set<std::vector<std::size_t>> count_vecs;
    detail::for_each_combination(tp1 * tp1, dc, [&](const std::vector<std::size_t>& C) {
        const auto classes = detail::masked_classes(t, C);
        std::vector<std::uint64_t> pattern(s);
        for (std::size_t i = 0; i < s; ++i) pattern[i] = classes[i % tp1];
        std::vector<std::size_t> cur;
        detail::align_deletions(pattern, rr, dr, cur, 0, 0, [&](const std::vector<std::size_t>& R) {
            row_sets.insert(R);
            std::vector<std::size_t> counts(tp1, 0);
            for (std::size_t c : C) ++counts[c / tp1];
            count_vecs.insert(counts);
        });
    });
    if (row_sets.empty()) throw NotALocatorSubpattern("locate_deletions_L: no deletion pattern matches");
    if (row_sets.size() > 1 || count_vecs.size() > 1)
        throw AmbiguousPattern("locate_deletions_L: detection not unique");
    LocatorDeletionReport rep;
    rep.deleted_rows = *row_sets.begin();
    rep.col_del_counts = *count_vecs.begin();
    return rep;
}

// Same statement transposed: exact deleted columns of T_s and per-(t+1)-row
// subarray deletion counts.
struct LocatorDeletionReportT {
    std::vector<std::size_t> deleted_cols;
    std::vector<std::size_t> row_del_counts;
};

inline LocatorDeletionReportT locate_deletions_T(const BitArray2D& received, std::size_t s, std::size_t t) {
    const LocatorDeletionReport r = locate_deletions_L(received.transpose(), s, t);
    return LocatorDeletionReportT{r.deleted_rows, r.col_del_counts};
}

// Insertion detection in L_s: row findings exact or confusion windows of
// length <= 2t holding <= t original rows, plus per-subarray insertion counts.
inline LocatorInsertionReport locate_insertions_L(const BitArray2D& received, std::size_t s, std::size_t t) {
    const std::size_t tp1 = t + 1;
    (void)build_locator(s, t, LocatorOrientation::L);  // validates s
    if (received.rows() < s || received.cols() < tp1 * tp1)
        throw NotALocatorSuperpattern("locate_insertions_L: received smaller than the locator");
    const std::size_t ir = received.rows() - s;
    const std::size_t ic = received.cols() - tp1 * tp1;
    if (ir + ic > t) throw NotALocatorSuperpattern("locate_insertions_L: too many insertions for budget t");

    std::set<std::vector<std::size_t>> row_cands;
    std::set<std::vector<std::size_t>> col_cands;
    bool any = false;
    detail::for_each_combination(received.cols(), ic, [&](const std::vector<std::size_t>& C) {
        // Drop the candidate inserted columns from the received array, then
        // align its rows against the pattern allowing ir inserted rows.
        BitArray2D stripped = received.delete_rows_cols({}, C);
        std::vector<std::uint64_t> rr(stripped.rows());
        for (std::size_t r = 0; r < stripped.rows(); ++r) rr[r] = detail::pack_row(stripped, r);
        const auto classes = detail::masked_classes(t, {});
        std::vector<std::uint64_t> pattern(s);
        for (std::size_t i = 0; i < s; ++i) pattern[i] = classes[i % tp1];
        std::vector<std::size_t> cur;
        detail::align_insertions(pattern, rr, ir, cur, 0, 0, [&](const std::vector<std::size_t>& R) {
            any = true;
            row_cands.insert(R);
            col_cands.insert(C);
        });
    });
    if (!any) throw NotALocatorSuperpattern("locate_insertions_L: no insertion pattern matches");

    LocatorInsertionReport rep;
    rep.row_findings = merge_insertion_candidates(row_cands);
    for (const LocFinding& f : rep.row_findings)
        if (!f.exact && (f.interval.length() > 2 * t || f.interval.original_count > t))
            throw AmbiguousPattern("locate_insertions_L: row confusion exceeds the 2t bound");

    rep.col_ins_counts.assign(tp1, 0);
    rep.col_count_ambiguous.assign(tp1, 0);
    // Count per original subarray using each candidate's original-gap mapping;
    // flag subarrays whose count differs across candidates or whose insertions
    // sit on a subarray boundary.
    std::vector<std::vector<std::size_t>> per_cand;
    for (const auto& C : col_cands) {
        std::vector<std::size_t> counts(tp1, 0);
        std::size_t seen = 0;
        for (std::size_t p : C) {
            const std::size_t gap = p - seen;  // insertion sits before original column `gap`
            std::size_t sub = gap / tp1;
            if (sub >= tp1) sub = tp1 - 1;
            ++counts[sub];
            if (gap % tp1 == 0 && gap != 0 && gap != tp1 * tp1) {
                rep.col_count_ambiguous[sub] = 1;
                if (sub > 0) rep.col_count_ambiguous[sub - 1] = 1;
            }
            ++seen;
        }
        per_cand.push_back(counts);
    }
    rep.col_ins_counts = per_cand.front();
    for (const auto& c : per_cand)
        for (std::size_t a = 0; a < tp1; ++a)
            if (c[a] != rep.col_ins_counts[a]) rep.col_count_ambiguous[a] = 1;
    rep.row_candidates = std::move(row_cands);
    rep.col_candidates = std::move(col_cands);
    return rep;
}

struct LocatorInsertionReportT {
    std::vector<LocFinding> col_findings;
    std::vector<std::size_t> row_ins_counts;
    std::vector<std::uint8_t> row_count_ambiguous;
    std::set<std::vector<std::size_t>> col_candidates;
    std::set<std::vector<std::size_t>> row_candidates;
};

inline LocatorInsertionReportT locate_insertions_T(const BitArray2D& received, std::size_t s, std::size_t t) {
    LocatorInsertionReport r = locate_insertions_L(received.transpose(), s, t);
    return LocatorInsertionReportT{std::move(r.row_findings), std::move(r.col_ins_counts),
                                   std::move(r.col_count_ambiguous), std::move(r.row_candidates),
                                   std::move(r.col_candidates)};
}

// All column offsets in `strip` where `marker` matches after <= t row/column
// deletions (mode del) or insertions (mode ins).
enum class MarkerScanMode { Del, Ins };

inline std::vector<std::size_t> scan_for_marker(const BitArray2D& strip, const BitArray2D& marker, std::size_t t,
                                                MarkerScanMode mode) {
    std::set<std::size_t> offsets;
    const std::size_t mr = marker.rows(), mc = marker.cols();
    for (std::size_t dr = 0; dr <= t; ++dr) {
        for (std::size_t dc = 0; dc + dr <= t; ++dc) {
            const std::size_t hr = (mode == MarkerScanMode::Del) ? mr - dr : mr + dr;
            const std::size_t wc = (mode == MarkerScanMode::Del) ? mc - dc : mc + dc;
            if (hr == 0 || wc == 0 || hr > strip.rows() || wc > strip.cols()) continue;
            for (std::size_t off = 0; off + wc <= strip.cols(); ++off) {
                const BitArray2D window = strip.sub(0, off, hr, wc);
                bool hit = false;
                if (mode == MarkerScanMode::Del) {
                    detail::for_each_subset_pair(mr, dr, mc, dc,
                                                 [&](const std::vector<std::size_t>& R,
                                                     const std::vector<std::size_t>& C) {
                                                     if (!hit && marker.delete_rows_cols(R, C) == window) hit = true;
                                                 });
                } else {
                    detail::for_each_subset_pair(hr, dr, wc, dc,
                                                 [&](const std::vector<std::size_t>& R,
                                                     const std::vector<std::size_t>& C) {
                                                     if (!hit && window.delete_rows_cols(R, C) == marker) hit = true;
                                                 });
                }
                if (hit) offsets.insert(off);
            }
        }
    }
    if (offsets.empty()) throw MarkerNotFound("scan_for_marker: no candidate offset");
    return std::vector<std::size_t>(offsets.begin(), offsets.end());
}

}  // namespace crisscross

#endif
