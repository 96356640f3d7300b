// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Seeds are fixed so runs are reproducible.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <crisscross/analysis.hpp>
#include <crisscross/codec.hpp>

using namespace crisscross;
using Clock = std::chrono::steady_clock;

namespace {

Bits random_bits(std::size_t len, std::mt19937_64& rng) {
    Bits b(len);
    for (auto& x : b) x = std::uint8_t(rng() & 1);
    return b;
}

BitArray2D random_array(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    BitArray2D a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a.set(i, j, rng() & 1);
    return a;
}

const CodecInstance& codec64() {
    static CodecInstance inst = make_codec(64, 1);
    return inst;
}
const CodecInstance& codec128() {
    static CodecInstance inst = make_codec(128, 2);
    return inst;
}

bool roundtrip_once(const CodecInstance& inst, const BitArray2D& cw, const Bits& msg, const ChannelPattern& pat,
                    std::size_t t, std::ostream& log, const char* tag) {
    const BitArray2D recv = channel_apply(cw, pat);
    try {
        const DecodeResult res = decode(inst.params, inst.gab, recv);
        if (res.codeword != cw || res.message != msg) {
            log << "    " << tag << ": wrong codeword or message\n";
            return false;
        }
        if (res.report.erasures_used > t) {
            log << "    " << tag << ": erasure budget exceeded (" << res.report.erasures_used << ")\n";
            return false;
        }
        return true;
    } catch (const Error& e) {
        log << "    " << tag << ": " << e.what() << "\n";
        return false;
    }
}

// --- criterion 1: exhaustive single-line deletions at n=64, t=1 -------------

bool criterion1(std::ostream& log) {
    const CodecInstance& inst = codec64();
    std::mt19937_64 rng(0x0101);
    std::size_t ok = 0, total = 0;
    for (int msg_i = 0; msg_i < 20; ++msg_i) {
        const Bits m = random_bits(inst.params.message_bits, rng);
        const BitArray2D c = encode(inst.params, inst.gab, m);
        for (std::size_t r = 0; r < 64; ++r) {
            ChannelPattern p;
            p.mode = ChannelMode::Deletion;
            p.row_ops = {{r, {}}};
            ++total;
            ok += roundtrip_once(inst, c, m, p, 1, log, "row del");
        }
        for (std::size_t cc = 0; cc < 64; ++cc) {
            ChannelPattern p;
            p.mode = ChannelMode::Deletion;
            p.col_ops = {{cc, {}}};
            ++total;
            ok += roundtrip_once(inst, c, m, p, 1, log, "col del");
        }
    }
    log << "    " << ok << "/" << total << " exhaustive deletion patterns\n";
    return ok == total && total == 20 * 128;
}

// --- criterion 2: sampled deletions at n=128, t=2 ---------------------------

bool criterion2(std::ostream& log) {
    const CodecInstance& inst = codec128();
    std::mt19937_64 rng(0x0202);
    std::size_t ok = 0, total = 0;
    std::set<std::pair<std::size_t, std::size_t>> splits_seen;
    for (int msg_i = 0; msg_i < 25; ++msg_i) {
        const Bits m = random_bits(inst.params.message_bits, rng);
        const BitArray2D c = encode(inst.params, inst.gab, m);
        for (int k = 0; k < 20; ++k) {
            const ChannelPattern p = random_pattern(128, 128, 2, ChannelMode::Deletion, rng());
            splits_seen.insert({p.t_r(), p.t_c()});
            ++total;
            ok += roundtrip_once(inst, c, m, p, 2, log, "del");
        }
    }
    log << "    " << ok << "/" << total << " sampled deletion patterns, " << splits_seen.size() << " splits\n";
    return ok == total && total == 500 && splits_seen.size() == 3;
}

// --- criterion 3: insertions with random and adversarial content ------------

bool criterion3(std::ostream& log) {
    std::size_t ok = 0, total = 0;
    {
        const CodecInstance& inst = codec64();
        std::mt19937_64 rng(0x0303);
        for (int msg_i = 0; msg_i < 10; ++msg_i) {
            const Bits m = random_bits(inst.params.message_bits, rng);
            const BitArray2D c = encode(inst.params, inst.gab, m);
            for (int k = 0; k < 8; ++k) {
                ++total;
                ok += roundtrip_once(inst, c, m, random_pattern(64, 64, 1, ChannelMode::Insertion, rng()), 1, log,
                                     "ins64 random");
            }
        }
        // every insertion position, content copied from the adjacent line so a
        // block confusion is forced wherever one is possible
        {
            const Bits m = random_bits(inst.params.message_bits, rng);
            const BitArray2D c = encode(inst.params, inst.gab, m);
            for (std::size_t pos = 0; pos <= 64; ++pos) {
                const std::size_t src = pos < 64 ? pos : 63;
                ChannelPattern pr;
                pr.mode = ChannelMode::Insertion;
                pr.row_ops = {{pos, c.row_bits(src, 0, 64)}};
                ++total;
                ok += roundtrip_once(inst, c, m, pr, 1, log, "ins64 dup-row sweep");
                ChannelPattern pc;
                pc.mode = ChannelMode::Insertion;
                pc.col_ops = {{pos, c.col_bits(src, 0, 64)}};
                ++total;
                ok += roundtrip_once(inst, c, m, pc, 1, log, "ins64 dup-col sweep");
            }
        }
    }
    {
        const CodecInstance& inst = codec128();
        std::mt19937_64 rng(0x0304);
        for (int msg_i = 0; msg_i < 5; ++msg_i) {
            const Bits m = random_bits(inst.params.message_bits, rng);
            const BitArray2D c = encode(inst.params, inst.gab, m);
            for (int k = 0; k < 20; ++k) {
                ++total;
                ok += roundtrip_once(inst, c, m, random_pattern(128, 128, 2, ChannelMode::Insertion, rng()), 2, log,
                                     "ins128 random");
            }
            for (std::size_t r : {std::size_t(4), std::size_t(13), std::size_t(66), std::size_t(126)}) {
                ChannelPattern p;
                p.mode = ChannelMode::Insertion;
                const Bits content = c.row_bits(r, 0, 128);
                p.row_ops = {{r, content}, {r + 1, content}};
                ++total;
                ok += roundtrip_once(inst, c, m, p, 2, log, "ins128 dup-row2");
            }
            for (std::size_t cc : {std::size_t(3), std::size_t(14), std::size_t(70), std::size_t(125)}) {
                ChannelPattern p;
                p.mode = ChannelMode::Insertion;
                const Bits content = c.col_bits(cc, 0, 128);
                p.col_ops = {{cc, content}, {cc + 1, content}};
                ++total;
                ok += roundtrip_once(inst, c, m, p, 2, log, "ins128 dup-col2");
            }
            for (std::size_t r : {std::size_t(8), std::size_t(90)}) {
                ChannelPattern p1;
                p1.mode = ChannelMode::Insertion;
                p1.row_ops = {{r + 1, c.row_bits(r, 0, 128)}};
                const BitArray2D mid = channel_apply(c, p1);
                for (std::size_t cc : {std::size_t(9), std::size_t(100)}) {
                    ChannelPattern p2;
                    p2.mode = ChannelMode::Insertion;
                    p2.col_ops = {{cc + 1, mid.col_bits(cc, 0, mid.rows())}};
                    const BitArray2D recv = channel_apply(mid, p2);
                    ++total;
                    try {
                        const DecodeResult res = decode(inst.params, inst.gab, recv);
                        if (res.codeword == c && res.message == m && res.report.erasures_used <= 2) ++ok;
                    } catch (const Error& e) {
                        log << "    ins128 dup-mixed: " << e.what() << "\n";
                    }
                }
            }
        }
    }
    log << "    " << ok << "/" << total << " insertion roundtrips (random + adversarial)\n";
    return ok == total;
}

// --- criterion 4: the insertion/deletion equivalence property ---------------

bool criterion4(std::ostream& log) {
    std::size_t counterexamples = 0;
    {
        std::mt19937_64 rng(0x0404);
        for (int it = 0; it < 10000; ++it) {
            const BitArray2D x1 = random_array(3, 3, rng), x2 = random_array(3, 3, rng);
            if (!equivalence_check(x1, x2, 1)) ++counterexamples;
        }
    }
    {
        std::mt19937_64 rng(0x0405);
        for (int it = 0; it < 1000; ++it) {
            const BitArray2D x1 = random_array(4, 4, rng), x2 = random_array(4, 4, rng);
            if (!equivalence_check(x1, x2, 2)) ++counterexamples;
        }
    }
    log << "    11000 pairs tested, " << counterexamples << " counterexamples\n";
    return counterexamples == 0;
}

// --- criterion 5: locator deletion detection, exhaustive --------------------

bool criterion5(std::ostream& log) {
    std::size_t ok = 0, total = 0;
    for (std::size_t t : {1, 2}) {
        const std::size_t tp1 = t + 1;
        const std::size_t smin = ((t + 1) / 2) * tp1;
        for (std::size_t s : {smin, smin + tp1}) {
            const BitArray2D L = build_locator(s, t, LocatorOrientation::L).cells;
            for (std::size_t dr = 0; dr <= t; ++dr) {
                const std::size_t dc = t - dr;
                detail::for_each_combination(s, dr, [&](const std::vector<std::size_t>& R) {
                    detail::for_each_combination(tp1 * tp1, dc, [&](const std::vector<std::size_t>& C) {
                        ++total;
                        try {
                            const LocatorDeletionReport rep = locate_deletions_L(L.delete_rows_cols(R, C), s, t);
                            std::vector<std::size_t> counts(tp1, 0);
                            for (std::size_t c : C) ++counts[c / tp1];
                            if (rep.deleted_rows == R && rep.col_del_counts == counts) ++ok;
                        } catch (const Error&) {
                        }
                    });
                });
            }
        }
    }
    log << "    " << ok << "/" << total << " deletion patterns recovered exactly\n";
    return ok == total;
}

// --- criterion 6: window localization, exhaustive over deletion patterns ----

bool criterion6(std::ostream& log) {
    std::mt19937_64 rng(0x0606);
    std::size_t ok = 0, total = 0, ambiguous = 0;
    for (std::size_t t : {1, 2}) {
        const std::size_t ell = 4, w = 10;
        const BigUint cap = window_capacity(ell, t, w);
        for (int it = 0; it < 120; ++it) {
            Bits bits = random_bits(cap.bit_length() - 1, rng);
            const WindowBlock blk = window_unrank(BigUint::from_bits_msb(bits), ell, t, w);
            const std::vector<Bits> rows = block_rows(blk);
            for (std::size_t d = 1; d <= t; ++d) {
                detail::for_each_combination(w, d, [&](const std::vector<std::size_t>& P) {
                    std::vector<Bits> recv;
                    for (const Bits& r : rows) recv.push_back(delete_positions(r, P));
                    ++total;
                    try {
                        if (localize_deleted_columns(rows, recv, t) == P) ++ok;
                    } catch (const AmbiguousPattern&) {
                        ++ambiguous;
                    } catch (const Error&) {
                    }
                });
            }
        }
    }
    log << "    " << ok << "/" << total << " patterns localized exactly, " << ambiguous << " ambiguous\n";
    return ok == total && ambiguous == 0;
}

// --- criterion 7: Gabidulin erasure decoding and rank distance --------------

bool criterion7(std::ostream& log) {
    FieldContext f8{8};
    const GabidulinCode code = GabidulinCode::build(8, 2, f8);
    std::mt19937_64 rng(0x0707);
    std::size_t ok = 0, total = 0;
    for (int cw = 0; cw < 100; ++cw) {
        const Bits m = random_bits(code.message_bits(), rng);
        const BitArray2D c = code.encode(m);
        auto masks_ok = [&](const std::vector<std::size_t>& er, const std::vector<std::size_t>& ec) {
            BitArray2D masked = c;
            for (std::size_t r : er)
                for (std::size_t j = 0; j < 8; ++j) masked.set(r, j, false);
            for (std::size_t cc : ec)
                for (std::size_t i = 0; i < 8; ++i) masked.set(i, cc, false);
            ++total;
            try {
                if (code.erasure_decode(masked, er, ec) == c) ++ok;
            } catch (const Error&) {
            }
        };
        masks_ok({}, {});
        for (std::size_t a = 0; a < 8; ++a) {
            masks_ok({a}, {});
            masks_ok({}, {a});
            for (std::size_t b = 0; b < 8; ++b) masks_ok({a}, {b});
            for (std::size_t b = a + 1; b < 8; ++b) {
                masks_ok({a, b}, {});
                masks_ok({}, {a, b});
            }
        }
    }
    std::size_t rank_ok = 0;
    for (int it = 0; it < 10000; ++it) {
        Bits m = random_bits(code.message_bits(), rng);
        bool zero = true;
        for (auto b : m) zero = zero && !b;
        if (zero) m[0] = 1;
        if (rank_gf2(code.encode(m)) >= 3) ++rank_ok;
    }
    log << "    " << ok << "/" << total << " erasure masks, " << rank_ok << "/10000 rank >= t+1\n";
    return ok == total && rank_ok == 10000;
}

// --- criterion 8: redundancy arithmetic ------------------------------------

bool criterion8(std::ostream& log) {
    bool pass = true;

    const double lb = lower_bound_redundancy(64, 2);
    if (lb != 139.0) {
        log << "    lower_bound_redundancy(64,2) = " << lb << " != 139\n";
        pass = false;
    }
    for (std::size_t t : {1, 2, 3}) {
        const std::size_t n = (t == 1) ? 64 : 128;
        const CodeParams p = make_params(n, t);
        const RedundancyBreakdown rb = redundancy_accounting(p);
        if (rb.r_m_actual != 4 * (t + 1) * (t + 1)) {
            log << "    R_M mismatch at t=" << t << "\n";
            pass = false;
        }
        if (rb.r_g != t * n) {
            log << "    R_G mismatch at t=" << t << "\n";
            pass = false;
        }
    }
    for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{64, 1}, {128, 2}}) {
        const CodecInstance& inst = (n == 64) ? codec64() : codec128();
        const CapacityBreakdown cb = message_capacity(inst.params);
        const std::size_t actual = n * n - cb.total;
        const double lower = lower_bound_redundancy(n, t);
        const double upper = construction_upper_bound_bits(n, t);
        log << "    (" << n << "," << t << "): actual " << actual << " in [" << lower << ", " << upper << "]\n";
        if (double(actual) < lower - 1e-9 * lower || double(actual) > upper + 1e-9 * upper) pass = false;
        if (actual != redundancy_accounting(inst.params).total_actual) pass = false;
    }
    return pass;
}

// --- criterion 9: row code exhaustive decode + candidate oracle -------------

void oracle_del_patterns(const Bits& orig, const Bits& recv, std::size_t oi, std::size_t ri,
                         std::vector<std::size_t>& cur, std::size_t budget,
                         std::set<std::vector<std::size_t>>& out) {
    if (ri == recv.size()) {
        if (orig.size() - oi == budget - cur.size()) {
            auto full = cur;
            for (std::size_t x = oi; x < orig.size(); ++x) full.push_back(x);
            out.insert(full);
        }
        return;
    }
    if (oi == orig.size()) return;
    if (orig[oi] == recv[ri]) oracle_del_patterns(orig, recv, oi + 1, ri + 1, cur, budget, out);
    if (cur.size() < budget) {
        cur.push_back(oi);
        oracle_del_patterns(orig, recv, oi + 1, ri, cur, budget, out);
        cur.pop_back();
    }
}

bool criterion9(std::ostream& log) {
    std::mt19937_64 rng(0x0909);
    std::size_t ok = 0, total = 0;
    for (std::size_t t : {1, 2}) {
        for (std::size_t w : {14, 20}) {
            const RowCodeConfig cfg = (t == 1) ? make_row_config(w, 1, 2 * vt_bits_for(w), 0, RowCodeMode::VT)
                                               : default_row_config(w, t, 0x99);
            for (int row_i = 0; row_i < 200; ++row_i) {
                const Bits row = random_bits(w, rng);
                const MaskedBits red = MaskedBits::intact(encode_redundancy(row, cfg));
                std::set<Bits> dels;
                detail::for_each_combination(w, t, [&](const std::vector<std::size_t>& P) {
                    dels.insert(delete_positions(row, P));
                });
                for (const Bits& r : dels) {
                    ++total;
                    try {
                        if (decode_deletions(r, w, red, t, cfg) == row) ++ok;
                    } catch (const Error&) {
                    }
                }
                for (const Bits& r : detail::all_supersequences(row, t)) {
                    ++total;
                    try {
                        if (decode_insertions(r, w, red, t, cfg) == row) ++ok;
                    } catch (const Error&) {
                    }
                }
            }
        }
    }

    std::size_t oracle_ok = 0, oracle_total = 0;
    for (int it = 0; it < 400; ++it) {
        const std::size_t w = 3 + rng() % 10;  // w <= 12
        const std::size_t d = rng() % std::min<std::size_t>(3, w);
        const Bits orig = random_bits(w, rng);
        std::set<std::size_t> pos;
        while (pos.size() < d) pos.insert(rng() % w);
        const std::vector<std::size_t> pat(pos.begin(), pos.end());
        const Bits recv = delete_positions(orig, pat);
        std::set<std::vector<std::size_t>> want;
        std::vector<std::size_t> cur;
        oracle_del_patterns(orig, recv, 0, 0, cur, d, want);
        ++oracle_total;
        if (candidate_deletion_patterns(orig, recv).patterns == want) ++oracle_ok;
    }
    log << "    " << ok << "/" << total << " row decodes, " << oracle_ok << "/" << oracle_total
        << " oracle agreements\n";
    return ok == total && oracle_ok == oracle_total;
}

// --- criterion 10: enumerative coding bijection, exhaustive -----------------

bool criterion10(std::ostream& log) {
    std::size_t ok = 0;
    for (std::uint64_t m = 0; m < 2401; ++m) {
        const WindowBlock b = window_unrank(BigUint(m), 3, 1, 4);
        if (window_valid(b) && window_rank(b) == BigUint(m)) ++ok;
    }
    log << "    " << ok << "/2401 messages round-trip\n";
    return ok == 2401;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "deletion roundtrip, exhaustive single lines at n=64 t=1", criterion1},
        {2, "deletion roundtrip, 500 sampled patterns at n=128 t=2", criterion2},
        {3, "insertion roundtrip with random and adversarial content", criterion3},
        {4, "insertion/deletion equivalence property on sampled pairs", criterion4},
        {5, "locator deletion detection, exhaustive patterns", criterion5},
        {6, "window-block column localization, exhaustive patterns", criterion6},
        {7, "Gabidulin criss-cross erasure decoding and rank distance", criterion7},
        {8, "redundancy arithmetic and bound bracketing", criterion8},
        {9, "row indel code exhaustive decode and candidate oracle", criterion9},
        {10, "enumerative window coding bijection, exhaustive", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        const auto t0 = Clock::now();
        bool pass = false;
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            log << "    exception: " << e.what() << "\n";
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name << " ("
                  << std::fixed << std::setprecision(1) << secs << "s)\n"
                  << log.str();
        if (!pass) ++failures;
    }
    if (failures == 0)
        std::cout << "all 10 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
