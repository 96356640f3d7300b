#ifndef CRISSCROSS_CODEC_DECODE_HPP
#define CRISSCROSS_CODEC_DECODE_HPP

// Decoder half of codec.hpp; included from there.

#include <map>
#include <optional>

namespace crisscross {

struct ReportConfusion {
    char axis = 'r';  // 'r' or 'c'
    std::size_t start = 0, end = 0;  // received frame, inclusive
    std::size_t original_count = 0;
};

struct DecodeReport {
    ChannelMode mode = ChannelMode::Deletion;
    std::size_t t_r = 0, t_c = 0;
    std::vector<std::size_t> located_rows, located_cols;
    std::vector<ReportConfusion> confusions;
    std::size_t erasures_used = 0;
    bool success = false;
};

struct DecodeResult {
    BitArray2D codeword;
    Bits message;
    DecodeReport report;
};

namespace detail {

inline std::vector<std::array<std::size_t, 3>> compositions3(std::size_t total) {
    std::vector<std::array<std::size_t, 3>> v;
    for (std::size_t a = 0; a <= total; ++a)
        for (std::size_t b = 0; a + b <= total; ++b) v.push_back({a, b, total - a - b});
    return v;
}

// ---------------------------------------------------------------------------
// Deletion path
// ---------------------------------------------------------------------------

// Locate the b3 deleted middle columns through an intact horizontal block of
// the given view (pass the transposed array to do the same for rows).
inline std::optional<std::vector<std::size_t>> middle_deleted_lines(
    const CodeParams& p, const BitArray2D& view, const std::vector<std::size_t>& top_del, std::size_t b1,
    std::size_t b3, const std::vector<std::size_t>& right_del, const std::vector<RowCodeConfig>& cfgs) {
    const std::size_t TL = p.top(), B0 = p.bot0();
    std::size_t a_star = p.t;
    for (std::size_t a = 0; a < p.t; ++a) {
        bool hit = false;
        for (std::size_t r : top_del)
            if (r >= a * p.ell && r < (a + 1) * p.ell) hit = true;
        if (!hit) {
            a_star = a;
            break;
        }
    }
    if (a_star == p.t) return std::nullopt;
    std::size_t shift = 0;
    for (std::size_t r : top_del)
        if (r < a_star * p.ell) ++shift;

    if (TL < b1 || TL - b1 + p.w - b3 > view.cols()) return std::nullopt;
    std::vector<Bits> datas, origs;
    for (std::size_t r = 0; r < p.ell; ++r) {
        const std::size_t row = a_star * p.ell + r - shift;
        if (row >= view.rows()) return std::nullopt;
        datas.push_back(view.row_bits(row, TL - b1, p.w - b3));
    }
    for (std::size_t r = 0; r < p.ell; ++r) {
        MaskedBits red;
        red.bits.assign(p.r_w, 0);
        red.erased.assign(p.r_w, 0);
        std::size_t before = 0;
        for (std::size_t j = 0; j < p.r_w; ++j) {
            const std::size_t c = B0 + j;
            if (before < right_del.size() && right_del[before] == c) {
                red.erased[j] = 1;
                ++before;
                continue;
            }
            const std::size_t col = c - (b1 + b3 + before);
            if (col >= view.cols()) return std::nullopt;
            red.bits[j] = view.get(a_star * p.ell + r - shift, col) ? 1 : 0;
        }
        try {
            origs.push_back(decode_deletions(datas[r], p.w, red, b3, cfgs[a_star * p.ell + r]));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    try {
        const auto rel = localize_deleted_columns(origs, datas, p.t);
        std::vector<std::size_t> abs;
        for (std::size_t q : rel) abs.push_back(TL + q);
        return abs;
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct DeletionDecoder {
    const CodeParams& p;
    const GabidulinCode& gab;
    const BitArray2D& rc;
    std::size_t tr, tc;

    std::map<std::array<std::size_t, 5>, std::optional<LocatorDeletionReport>> memo_l;
    std::map<std::array<std::size_t, 5>, std::optional<LocatorDeletionReportT>> memo_t;

    std::optional<BitArray2D> extract(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
        if (r0 + h > rc.rows() || c0 + w > rc.cols()) return std::nullopt;
        if (h > rc.rows() || w > rc.cols()) return std::nullopt;
        return rc.sub(r0, c0, h, w);
    }

    const std::optional<LocatorDeletionReport>& detect_l(std::size_t r0, std::size_t c0, std::size_t h,
                                                         std::size_t w, std::size_t s) {
        const std::array<std::size_t, 5> key{r0, c0, h, w, s};
        auto it = memo_l.find(key);
        if (it != memo_l.end()) return it->second;
        std::optional<LocatorDeletionReport> res;
        if (auto block = extract(r0, c0, h, w)) {
            try {
                res = locate_deletions_L(*block, s, p.t);
            } catch (const Error&) {
            }
        }
        return memo_l.emplace(key, std::move(res)).first->second;
    }

    const std::optional<LocatorDeletionReportT>& detect_t(std::size_t r0, std::size_t c0, std::size_t h,
                                                          std::size_t w, std::size_t s) {
        const std::array<std::size_t, 5> key{r0, c0, h, w, s};
        auto it = memo_t.find(key);
        if (it != memo_t.end()) return it->second;
        std::optional<LocatorDeletionReportT> res;
        if (auto block = extract(r0, c0, h, w)) {
            try {
                res = locate_deletions_T(*block, s, p.t);
            } catch (const Error&) {
            }
        }
        return memo_t.emplace(key, std::move(res)).first->second;
    }

    // Per-subarray distribution of hits inside [span0, span0 + (t+1)^2).
    static std::vector<std::size_t> span_counts(const std::vector<std::size_t>& xs, std::size_t span0,
                                                std::size_t tp1) {
        std::vector<std::size_t> counts(tp1, 0);
        for (std::size_t x : xs)
            if (x >= span0 && x < span0 + tp1 * tp1) ++counts[(x - span0) / tp1];
        return counts;
    }

    std::optional<DecodeResult> run() {
        const std::size_t n = p.n, TL = p.top(), B0 = p.bot0(), M = p.marker_dim(), tp1 = p.tp1();
        const std::size_t Nr = rc.rows(), Nc = rc.cols();

        for (const auto& [a1, a3, a4] : compositions3(tr)) {
            for (const auto& [b1, b3, b4] : compositions3(tc)) {
                if (a1 > TL || b1 > TL || b3 > p.w) continue;
                for (std::size_t gamma1 = 0; gamma1 <= a3 && gamma1 <= M; ++gamma1) {
                    // T1 pins the right-region columns exactly.
                    const auto& t1 = detect_t(TL - a1, Nc - (p.s_T - b4), M - gamma1, p.s_T - b4, p.s_T);
                    if (!t1) continue;
                    std::vector<std::size_t> c_right;
                    for (std::size_t c : t1->deleted_cols) c_right.push_back(B0 + c);
                    if (c_right.size() != b4) continue;

                    // L1 pins the top rows; its column counts must agree with T1.
                    std::size_t beta = 0;
                    for (std::size_t c : c_right)
                        if (c >= n - M) ++beta;
                    const auto& l1 = detect_l(0, Nc - (M - beta), TL - a1, M - beta, p.s_L);
                    if (!l1 || l1->deleted_rows.size() != a1) continue;
                    const std::vector<std::size_t> r_top = l1->deleted_rows;
                    if (span_counts(c_right, n - M, tp1) != l1->col_del_counts) continue;

                    for (std::size_t eps = 0; eps <= b3 && eps <= M; ++eps) {
                        // L2 pins the bottom rows.
                        const auto& l2 = detect_l(Nr - (p.s_T - a4), TL - b1, p.s_T - a4, M - eps, p.s_T);
                        if (!l2 || l2->deleted_rows.size() != a4) continue;
                        std::vector<std::size_t> r_bot;
                        for (std::size_t r : l2->deleted_rows) r_bot.push_back(B0 + r);

                        // T2 pins the left columns; row counts must agree with L2's rows.
                        std::size_t delta2 = 0;
                        for (std::size_t r : r_bot)
                            if (r >= n - M) ++delta2;
                        const auto& t2 = detect_t(Nr - (M - delta2), 0, M - delta2, TL - b1, p.s_L);
                        if (!t2 || t2->deleted_cols.size() != b1) continue;
                        const std::vector<std::size_t> c_left = t2->deleted_cols;
                        if (span_counts(r_bot, n - M, tp1) != t2->row_del_counts) continue;

                        // Middle columns via an intact horizontal block.
                        std::vector<std::size_t> c_mid;
                        if (b3 > 0) {
                            auto got = middle_deleted_lines(p, rc, r_top, b1, b3, c_right, p.h_cfgs);
                            if (!got) continue;
                            c_mid = *got;
                            if (span_counts(c_mid, TL, tp1) != l2->col_del_counts) continue;
                        } else if (l2->col_del_counts != std::vector<std::size_t>(tp1, 0)) {
                            continue;
                        }

                        // Middle rows: the same machinery on the transpose.
                        std::vector<std::size_t> r_mid;
                        if (a3 > 0) {
                            const BitArray2D tv = rc.transpose();
                            auto got = middle_deleted_lines(p, tv, c_left, a1, a3, r_bot, p.v_cfgs);
                            if (!got) continue;
                            r_mid = *got;
                            if (span_counts(r_mid, TL, tp1) != t1->row_del_counts) continue;
                        } else if (t1->row_del_counts != std::vector<std::size_t>(tp1, 0)) {
                            continue;
                        }

                        std::vector<std::size_t> I_r = r_top;
                        I_r.insert(I_r.end(), r_mid.begin(), r_mid.end());
                        I_r.insert(I_r.end(), r_bot.begin(), r_bot.end());
                        std::sort(I_r.begin(), I_r.end());
                        std::vector<std::size_t> I_c = c_left;
                        I_c.insert(I_c.end(), c_mid.begin(), c_mid.end());
                        I_c.insert(I_c.end(), c_right.begin(), c_right.end());
                        std::sort(I_c.begin(), I_c.end());
                        if (I_r.size() != tr || I_c.size() != tc) continue;
                        if (std::adjacent_find(I_r.begin(), I_r.end()) != I_r.end()) continue;
                        if (std::adjacent_find(I_c.begin(), I_c.end()) != I_c.end()) continue;

                        // Re-insert erased lines (ascending) and erasure-decode.
                        std::vector<std::size_t> rshift(n, 0), cshift(n, 0);
                        {
                            std::size_t k = 0;
                            for (std::size_t i = 0; i < n; ++i) {
                                if (k < I_r.size() && I_r[k] == i) ++k;
                                rshift[i] = k;
                            }
                            k = 0;
                            for (std::size_t j = 0; j < n; ++j) {
                                if (k < I_c.size() && I_c[k] == j) ++k;
                                cshift[j] = k;
                            }
                        }
                        BitArray2D Xm(n, n);
                        bool ok = true;
                        for (std::size_t i = 0; i < n && ok; ++i) {
                            if (rshift[i] > 0 && I_r[rshift[i] - 1] == i) continue;  // erased row
                            for (std::size_t j = 0; j < n; ++j) {
                                if (cshift[j] > 0 && I_c[cshift[j] - 1] == j) continue;
                                const std::size_t r = i - rshift[i], c = j - cshift[j];
                                if (r >= Nr || c >= Nc) {
                                    ok = false;
                                    break;
                                }
                                Xm.set(i, j, rc.get(r, c));
                            }
                        }
                        if (!ok) continue;

                        BitArray2D cw(0, 0);
                        try {
                            cw = gab.erasure_decode(Xm, I_r, I_c);
                        } catch (const Error&) {
                            continue;
                        }
                        if (!validate_locator_set_membership(p, cw).all()) continue;

                        DecodeResult res{cw, extract_message(p, cw), {}};
                        res.report.mode = ChannelMode::Deletion;
                        res.report.t_r = tr;
                        res.report.t_c = tc;
                        res.report.located_rows = I_r;
                        res.report.located_cols = I_c;
                        res.report.erasures_used = tr + tc;
                        res.report.success = true;
                        return res;
                    }
                }
            }
        }
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// Insertion path
// ---------------------------------------------------------------------------

struct InsItem {
    bool exact = true;
    std::size_t start = 0, end = 0;     // received frame, inclusive
    std::size_t original_count = 0;      // originals inside a window
    std::size_t ins_count() const { return exact ? 1 : (end - start + 1) - original_count; }
};

inline std::vector<InsItem> items_from_findings(const std::vector<LocFinding>& fs, std::size_t offset) {
    std::vector<InsItem> out;
    for (const auto& f : fs) {
        InsItem it;
        if (f.exact) {
            it.exact = true;
            it.start = it.end = f.index + offset;
        } else {
            it.exact = false;
            it.start = f.interval.start + offset;
            it.end = f.interval.end + offset;
            it.original_count = f.interval.original_count;
        }
        out.push_back(it);
    }
    return out;
}

// Received index -> original index map under a removal plan; -1 = removed.
struct LineMap {
    std::vector<long> orig_of_received;
    std::vector<std::size_t> erased_orig;
    std::vector<std::pair<InsItem, std::vector<std::size_t>>> windows;  // window + erased originals

    static std::optional<LineMap> build(std::vector<InsItem> items, std::size_t received_len, std::size_t n) {
        std::sort(items.begin(), items.end(), [](const InsItem& a, const InsItem& b) { return a.start < b.start; });
        for (std::size_t k = 1; k < items.size(); ++k)
            if (items[k].start <= items[k - 1].end) return std::nullopt;
        LineMap m;
        m.orig_of_received.assign(received_len, -1);
        std::size_t orig = 0, k = 0;
        for (std::size_t r = 0; r < received_len; ++r) {
            if (k < items.size() && r == items[k].start) {
                if (items[k].end >= received_len) return std::nullopt;
                if (items[k].exact) {
                    // removed, no original consumed
                } else {
                    std::vector<std::size_t> er;
                    for (std::size_t q = 0; q < items[k].original_count; ++q) {
                        if (orig >= n) return std::nullopt;
                        er.push_back(orig);
                        m.erased_orig.push_back(orig);
                        ++orig;
                    }
                    m.windows.emplace_back(items[k], std::move(er));
                }
                r = items[k].end;
                ++k;
                continue;
            }
            if (orig >= n) return std::nullopt;
            m.orig_of_received[r] = long(orig++);
        }
        if (orig != n || k != items.size()) return std::nullopt;
        return m;
    }
};

struct InsertionDecoder {
    const CodeParams& p;
    const GabidulinCode& gab;
    const BitArray2D& rc;
    std::size_t tr, tc;

    std::map<std::array<std::size_t, 5>, std::optional<LocatorInsertionReport>> memo_l;
    std::map<std::array<std::size_t, 5>, std::optional<LocatorInsertionReportT>> memo_t;

    std::optional<BitArray2D> extract(const BitArray2D& src, std::size_t r0, std::size_t c0, std::size_t h,
                                      std::size_t w) const {
        if (r0 + h > src.rows() || c0 + w > src.cols()) return std::nullopt;
        return src.sub(r0, c0, h, w);
    }

    const std::optional<LocatorInsertionReport>& detect_l(std::size_t r0, std::size_t c0, std::size_t h,
                                                          std::size_t w, std::size_t s) {
        const std::array<std::size_t, 5> key{r0, c0, h, w, s};
        auto it = memo_l.find(key);
        if (it != memo_l.end()) return it->second;
        std::optional<LocatorInsertionReport> res;
        if (auto block = extract(rc, r0, c0, h, w)) {
            try {
                res = locate_insertions_L(*block, s, p.t);
            } catch (const Error&) {
            }
        }
        return memo_l.emplace(key, std::move(res)).first->second;
    }

    const std::optional<LocatorInsertionReportT>& detect_t(std::size_t r0, std::size_t c0, std::size_t h,
                                                           std::size_t w, std::size_t s) {
        const std::array<std::size_t, 5> key{r0, c0, h, w, s};
        auto it = memo_t.find(key);
        if (it != memo_t.end()) return it->second;
        std::optional<LocatorInsertionReportT> res;
        if (auto block = extract(rc, r0, c0, h, w)) {
            try {
                res = locate_insertions_T(*block, s, p.t);
            } catch (const Error&) {
            }
        }
        return memo_t.emplace(key, std::move(res)).first->second;
    }

    // Middle insertion localization through an intact horizontal block of
    // `view`. top_raw are the raw insertion candidates for view rows < TL+a1;
    // right_items describe the right-region column insertions.
    std::optional<std::vector<LocFinding>> middle_inserted_lines(const BitArray2D& view, std::size_t a1,
                                                                 const std::set<std::vector<std::size_t>>& top_raw,
                                                                 std::size_t b1, std::size_t b3, std::size_t b4,
                                                                 const std::vector<InsItem>& right_items,
                                                                 const std::vector<RowCodeConfig>& cfgs) const {
        const std::size_t TL = p.top(), B0 = p.bot0();
        std::set<std::vector<std::size_t>> raws = top_raw;
        if (raws.empty()) raws.insert({});
        for (const auto& S : raws) {
            // Received rows of the top region with the candidate insertions removed.
            std::vector<std::size_t> remaining;
            for (std::size_t r = 0; r < TL + a1 && r < view.rows(); ++r) {
                if (std::binary_search(S.begin(), S.end(), r)) continue;
                remaining.push_back(r);
            }
            if (remaining.size() != TL) continue;
            for (std::size_t a = 0; a < p.t; ++a) {
                std::vector<Bits> datas, origs;
                bool ok = true;
                if (TL + b1 + p.w + b3 > view.cols()) return std::nullopt;
                for (std::size_t r = 0; r < p.ell && ok; ++r) {
                    const std::size_t row = remaining[a * p.ell + r];
                    datas.push_back(view.row_bits(row, TL + b1, p.w + b3));
                }
                for (std::size_t r = 0; r < p.ell && ok; ++r) {
                    const std::size_t row = remaining[a * p.ell + r];
                    MaskedBits red;
                    red.bits.assign(p.r_w, 0);
                    red.erased.assign(p.r_w, 0);
                    // Walk the right region, skipping exact insertions and
                    // erasing window spans.
                    std::size_t rcol = view.cols() - (p.s_T + b4);
                    std::size_t oc = B0;
                    std::size_t k = 0;
                    while (oc < B0 + p.r_w && rcol < view.cols()) {
                        if (k < right_items.size() && rcol == right_items[k].start) {
                            if (right_items[k].exact) {
                                rcol = right_items[k].end + 1;
                            } else {
                                for (std::size_t q = 0; q < right_items[k].original_count && oc < B0 + p.r_w; ++q) {
                                    red.erased[oc - B0] = 1;
                                    ++oc;
                                }
                                rcol = right_items[k].end + 1;
                            }
                            ++k;
                            continue;
                        }
                        red.bits[oc - B0] = view.get(row, rcol) ? 1 : 0;
                        ++oc;
                        ++rcol;
                    }
                    if (oc < B0 + p.r_w) {
                        ok = false;
                        break;
                    }
                    try {
                        origs.push_back(decode_insertions(datas[r], p.w, red, b3, cfgs[a * p.ell + r]));
                    } catch (const Error&) {
                        ok = false;
                    }
                }
                if (!ok) continue;
                try {
                    auto findings = localize_inserted_columns(origs, datas, p.t);
                    for (auto& f : findings) {
                        if (f.exact)
                            f.index += TL + b1;
                        else {
                            f.interval.start += TL + b1;
                            f.interval.end += TL + b1;
                        }
                    }
                    return findings;
                } catch (const Error&) {
                }
            }
        }
        return std::nullopt;
    }

    // Greedy containment: the erased original lines of a window must embed, in
    // order, into the window's received lines.
    bool window_rows_contain(const BitArray2D& cw, const LineMap& rows, const LineMap& cols) const {
        for (const auto& [win, origs] : rows.windows) {
            std::size_t r = win.start;
            for (std::size_t i : origs) {
                bool found = false;
                for (; r <= win.end; ++r) {
                    bool eq = true;
                    for (std::size_t c = 0; c < rc.cols() && eq; ++c) {
                        const long j = cols.orig_of_received[c];
                        if (j < 0) continue;
                        if (rc.get(r, c) != cw.get(i, std::size_t(j))) eq = false;
                    }
                    if (eq) {
                        found = true;
                        ++r;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
        return true;
    }

    bool window_cols_contain(const BitArray2D& cw, const LineMap& rows, const LineMap& cols) const {
        for (const auto& [win, origs] : cols.windows) {
            std::size_t c = win.start;
            for (std::size_t j : origs) {
                bool found = false;
                for (; c <= win.end; ++c) {
                    bool eq = true;
                    for (std::size_t r = 0; r < rc.rows() && eq; ++r) {
                        const long i = rows.orig_of_received[r];
                        if (i < 0) continue;
                        if (rc.get(r, c) != cw.get(std::size_t(i), j)) eq = false;
                    }
                    if (eq) {
                        found = true;
                        ++c;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
        return true;
    }

    std::optional<DecodeResult> run() {
        const std::size_t n = p.n, TL = p.top(), M = p.marker_dim();
        const std::size_t Nr = rc.rows(), Nc = rc.cols();

        for (const auto& [a1, a3, a4] : compositions3(tr)) {
            for (const auto& [b1, b3, b4] : compositions3(tc)) {
                for (std::size_t beta = 0; beta <= b4; ++beta) {
                    const auto& l1 = detect_l(0, Nc - (M + beta), TL + a1, M + beta, p.s_L);
                    if (!l1) continue;
                    for (std::size_t gamma1 = 0; gamma1 <= a3; ++gamma1) {
                        const auto& t1 = detect_t(TL + a1, Nc - (p.s_T + b4), M + gamma1, p.s_T + b4, p.s_T);
                        if (!t1) continue;
                        const auto right_items = items_from_findings(t1->col_findings, Nc - (p.s_T + b4));
                        for (std::size_t eps = 0; eps <= b3; ++eps) {
                            const auto& l2 = detect_l(Nr - (p.s_T + a4), TL + b1, p.s_T + a4, M + eps, p.s_T);
                            if (!l2) continue;
                            for (std::size_t delta2 = 0; delta2 <= a4; ++delta2) {
                                const auto& t2 = detect_t(Nr - (M + delta2), 0, M + delta2, TL + b1, p.s_L);
                                if (!t2) continue;

                                // Middle columns / rows.
                                std::vector<LocFinding> mid_cols, mid_rows;
                                if (b3 > 0) {
                                    auto got = middle_inserted_lines(rc, a1, l1->row_candidates, b1, b3, b4,
                                                                     right_items, p.h_cfgs);
                                    if (!got) continue;
                                    mid_cols = *got;
                                }
                                if (a3 > 0) {
                                    const BitArray2D tv = rc.transpose();
                                    const auto bottom_items =
                                        items_from_findings(l2->row_findings, Nr - (p.s_T + a4));
                                    auto got = middle_inserted_lines(tv, b1, t2->col_candidates, a1, a3, a4,
                                                                     bottom_items, p.v_cfgs);
                                    if (!got) continue;
                                    mid_rows = *got;
                                }

                                // Assemble removal plans.
                                std::vector<InsItem> row_items = items_from_findings(l1->row_findings, 0);
                                {
                                    auto mid = items_from_findings(mid_rows, 0);
                                    row_items.insert(row_items.end(), mid.begin(), mid.end());
                                    auto bot = items_from_findings(l2->row_findings, Nr - (p.s_T + a4));
                                    row_items.insert(row_items.end(), bot.begin(), bot.end());
                                }
                                std::vector<InsItem> col_items = items_from_findings(t2->col_findings, 0);
                                {
                                    auto mid = items_from_findings(mid_cols, 0);
                                    col_items.insert(col_items.end(), mid.begin(), mid.end());
                                    col_items.insert(col_items.end(), right_items.begin(), right_items.end());
                                }

                                auto rows = LineMap::build(row_items, Nr, n);
                                auto cols = LineMap::build(col_items, Nc, n);
                                if (!rows || !cols) continue;
                                const std::size_t erasures = rows->erased_orig.size() + cols->erased_orig.size();
                                if (erasures > p.t) continue;

                                BitArray2D Xm(n, n);
                                for (std::size_t r = 0; r < Nr; ++r) {
                                    const long i = rows->orig_of_received[r];
                                    if (i < 0) continue;
                                    for (std::size_t c = 0; c < Nc; ++c) {
                                        const long j = cols->orig_of_received[c];
                                        if (j < 0) continue;
                                        Xm.set(std::size_t(i), std::size_t(j), rc.get(r, c));
                                    }
                                }
                                BitArray2D cw(0, 0);
                                try {
                                    cw = gab.erasure_decode(Xm, rows->erased_orig, cols->erased_orig);
                                } catch (const Error&) {
                                    continue;
                                }
                                if (!validate_locator_set_membership(p, cw).all()) continue;
                                if (!window_rows_contain(cw, *rows, *cols)) continue;
                                if (!window_cols_contain(cw, *rows, *cols)) continue;

                                DecodeResult res{cw, extract_message(p, cw), {}};
                                res.report.mode = ChannelMode::Insertion;
                                res.report.t_r = tr;
                                res.report.t_c = tc;
                                for (const auto& it : row_items)
                                    if (it.exact) res.report.located_rows.push_back(it.start);
                                for (const auto& it : col_items)
                                    if (it.exact) res.report.located_cols.push_back(it.start);
                                std::sort(res.report.located_rows.begin(), res.report.located_rows.end());
                                std::sort(res.report.located_cols.begin(), res.report.located_cols.end());
                                for (const auto& [win, origs] : rows->windows)
                                    res.report.confusions.push_back(
                                        ReportConfusion{'r', win.start, win.end, origs.size()});
                                for (const auto& [win, origs] : cols->windows)
                                    res.report.confusions.push_back(
                                        ReportConfusion{'c', win.start, win.end, origs.size()});
                                res.report.erasures_used = erasures;
                                res.report.success = true;
                                return res;
                            }
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

// The locate-then-erase decoder. The received shape selects the mode and the
// (t_r, t_c) split; shapes implying fewer than t indels decode with the
// smaller budget.
inline DecodeResult decode(const CodeParams& p, const GabidulinCode& gab, const BitArray2D& received) {
    if (!p.parity_ready) throw InvalidParams("decode: parity cells not selected");
    const std::size_t n = p.n;

    if (received.rows() == n && received.cols() == n) {
        if (!gab.is_codeword(received) || !validate_locator_set_membership(p, received).all())
            throw Undecodable("decode: n x n input is not a codeword");
        DecodeResult res{received, extract_message(p, received), {}};
        res.report.mode = ChannelMode::Deletion;
        res.report.success = true;
        return res;
    }
    if (received.rows() <= n && received.cols() <= n) {
        const std::size_t tr = n - received.rows(), tc = n - received.cols();
        if (tr + tc > p.t) throw ShapeMismatch("decode: shape implies more than t deletions");
        detail::DeletionDecoder d{p, gab, received, tr, tc, {}, {}};
        auto res = d.run();
        if (!res) throw LocalizationFailure("decode: no consistent deletion hypothesis");
        return *res;
    }
    if (received.rows() >= n && received.cols() >= n) {
        const std::size_t tr = received.rows() - n, tc = received.cols() - n;
        if (tr + tc > p.t) throw ShapeMismatch("decode: shape implies more than t insertions");
        detail::InsertionDecoder d{p, gab, received, tr, tc, {}, {}};
        auto res = d.run();
        if (!res) throw LocalizationFailure("decode: no consistent insertion hypothesis");
        return *res;
    }
    throw ShapeMismatch("decode: shape mixes row insertions with column deletions");
}

}  // namespace crisscross

#endif
