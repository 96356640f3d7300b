#include <doctest.h>

#include <functional>
#include <random>

#include <crisscross/indel1d.hpp>

using namespace crisscross;

namespace {

Bits random_row(std::size_t w, std::mt19937_64& rng) {
    Bits r(w);
    for (auto& b : r) b = std::uint8_t(rng() & 1);
    return r;
}

// Independent oracle: recursive embedding enumerator for deletion tuples,
// structured differently from the combination loop under test.
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

}  // namespace

TEST_CASE("indel1d: VT syndrome worked examples") {
    CHECK(vt_syndrome(Bits{1, 0, 1, 1}) == 3);  // (1 + 3 + 4) mod 5
    CHECK(vt_syndrome(Bits{0, 0, 0, 0}) == 0);
    CHECK(vt_syndrome(Bits{1, 1, 1, 1}) == 0);  // 10 mod 5
}

TEST_CASE("indel1d: redundancy is deterministic and budget-checked") {
    const RowCodeConfig cfg = make_row_config(4, 1, 6, 7, RowCodeMode::VT);
    const Bits row{1, 0, 1, 1};
    CHECK(encode_redundancy(row, cfg) == encode_redundancy(row, cfg));
    // syndrome 3 = bits 110 (lsb first), each replicated twice
    CHECK(encode_redundancy(row, cfg) == Bits{1, 1, 1, 1, 0, 0});
    CHECK(encode_redundancy(Bits{0, 0, 0, 0}, cfg) == Bits(6, 0));
    CHECK_THROWS_AS(make_row_config(40, 1, 3, 0, RowCodeMode::VT), BudgetExceeded);
}

TEST_CASE("indel1d: VT replication survives t known erasures") {
    const RowCodeConfig cfg = make_row_config(12, 1, 2 * vt_bits_for(12), 0, RowCodeMode::VT);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        const Bits row = random_row(12, rng);
        const Bits red = encode_redundancy(row, cfg);
        const Bits want = detail::payload_of(row, cfg);
        for (std::size_t e = 0; e < cfg.r_w; ++e) {
            MaskedBits m = MaskedBits::intact(red);
            m.erased[e] = 1;
            CHECK(extract_check_value(m, cfg) == want);
        }
    }
}

TEST_CASE("indel1d: shield recovers the hash payload under t known erasures") {
    for (std::size_t t : {2, 3, 4}) {
        const RowCodeConfig cfg = make_row_config(10, t, 16 + t, 9, RowCodeMode::HASH);
        std::mt19937_64 rng(6 + t);
        for (int it = 0; it < 30; ++it) {
            const Bits row = random_row(10, rng);
            const Bits red = encode_redundancy(row, cfg);
            const Bits want = detail::payload_of(row, cfg);
            for (int trial = 0; trial < 20; ++trial) {
                MaskedBits m = MaskedBits::intact(red);
                std::set<std::size_t> er;
                while (er.size() < t) er.insert(rng() % cfg.r_w);
                for (std::size_t e : er) m.erased[e] = 1;
                CHECK(extract_check_value(m, cfg) == want);
            }
        }
    }
}

TEST_CASE("indel1d: shield columns are t-wise independent (small m, exhaustive)") {
    for (std::size_t t : {1, 2, 3, 4}) {
        const std::size_t m = 18;
        std::size_t rho = 0;
        const BitArray2D H = detail::shield_matrix(m, t, rho);
        // every t columns independent <=> no nonzero combination of <= t columns is zero
        std::vector<std::size_t> idx;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
            if (!idx.empty()) {
                Bits sum(rho, 0);
                for (std::size_t j : idx)
                    for (std::size_t r = 0; r < rho; ++r) sum[r] ^= H.get(r, j);
                bool zero = true;
                for (auto b : sum) zero = zero && !b;
                CHECK_FALSE(zero);
            }
            if (left == 0) return;
            for (std::size_t j = start; j < m; ++j) {
                idx.push_back(j);
                rec(j + 1, left - 1);
                idx.pop_back();
            }
        };
        rec(0, t);
    }
}

TEST_CASE("indel1d: worked decode examples") {
    const RowCodeConfig cfg = make_row_config(4, 1, 6, 0, RowCodeMode::VT);
    const Bits orig{0, 1, 0, 1};
    const Bits red = encode_redundancy(orig, cfg);

    CHECK(decode_deletions(orig, 4, MaskedBits::intact(red), 0, cfg) == orig);
    CHECK(decode_deletions(Bits{0, 0, 1}, 4, MaskedBits::intact(red), 1, cfg) == orig);
    CHECK(decode_insertions(orig, 4, MaskedBits::intact(red), 0, cfg) == orig);
    CHECK(decode_insertions(Bits{1, 0, 1, 0, 1}, 4, MaskedBits::intact(red), 1, cfg) == orig);

    // A check value from an unrelated row matches no supersequence of the
    // received string (VT cannot exhibit this: supersequences cover every
    // syndrome class, so use the hash mode).
    const RowCodeConfig hcfg = default_row_config(12, 2, 5);
    std::mt19937_64 rng(11);
    const Bits row_a = random_row(12, rng);
    const Bits row_b = random_row(12, rng);
    REQUIRE(row_a != row_b);
    const Bits red_b = encode_redundancy(row_b, hcfg);
    Bits shortened = row_a;
    shortened.erase(shortened.begin() + 3);
    shortened.erase(shortened.begin() + 7);
    CHECK_THROWS_AS((void)decode_deletions(shortened, 12, MaskedBits::intact(red_b), 2, hcfg), Undecodable);
}

TEST_CASE("indel1d: exhaustive deletion/insertion decode, w <= 20, t <= 2") {
    std::mt19937_64 rng(77);
    for (std::size_t t : {1, 2}) {
        for (std::size_t w : {6, 13, 20}) {
            const RowCodeConfig cfg = (t == 1) ? make_row_config(w, 1, 2 * vt_bits_for(w), 0, RowCodeMode::VT)
                                               : default_row_config(w, t, 123);
            for (int it = 0; it < 25; ++it) {
                const Bits row = random_row(w, rng);
                const Bits red = encode_redundancy(row, cfg);
                const MaskedBits mred = MaskedBits::intact(red);
                // all deletion patterns of size t
                std::set<Bits> dels;
                detail::for_each_combination(w, t, [&](const std::vector<std::size_t>& P) {
                    dels.insert(delete_positions(row, P));
                });
                for (const Bits& r : dels) CHECK(decode_deletions(r, w, mred, t, cfg) == row);
                // sampled insertion patterns of size t
                for (int jt = 0; jt < 10; ++jt) {
                    Bits cur = row;
                    for (std::size_t k = 0; k < t; ++k) {
                        const std::size_t pos = rng() % (cur.size() + 1);
                        cur.insert(cur.begin() + long(pos), std::uint8_t(rng() & 1));
                    }
                    CHECK(decode_insertions(cur, w, mred, t, cfg) == row);
                }
            }
        }
    }
}

TEST_CASE("indel1d: candidate pattern sets match the oracle") {
    // worked examples (0-based indices)
    CHECK(candidate_deletion_patterns(Bits{0, 1, 0, 1}, Bits{0, 0, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{1}});
    CHECK(candidate_deletion_patterns(Bits{0, 0, 1, 1}, Bits{0, 1, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{0}, {1}});
    CHECK(candidate_deletion_patterns(Bits{0, 1}, Bits{0, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{}});
    CHECK(candidate_insertion_patterns(Bits{0, 1}, Bits{0, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{}});
    CHECK(candidate_insertion_patterns(Bits{0, 1}, Bits{0, 0, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{0}, {1}});
    CHECK(candidate_insertion_patterns(Bits{0, 1}, Bits{1, 0, 1}).patterns ==
          std::set<std::vector<std::size_t>>{{0}});
    CHECK_THROWS_AS(candidate_deletion_patterns(Bits{0, 0}, Bits{1}), NotASubsequence);
    CHECK_THROWS_AS(candidate_insertion_patterns(Bits{1, 1}, Bits{1, 0, 0}), NotASupersequence);

    // random agreement with the recursive oracle, w <= 12
    std::mt19937_64 rng(88);
    for (int it = 0; it < 300; ++it) {
        const std::size_t w = 3 + rng() % 10;
        const std::size_t d = rng() % std::min<std::size_t>(3, w);
        const Bits orig = random_row(w, rng);
        std::vector<std::size_t> pat;
        {
            std::set<std::size_t> s;
            while (s.size() < d) s.insert(rng() % w);
            pat.assign(s.begin(), s.end());
        }
        const Bits recv = delete_positions(orig, pat);
        std::set<std::vector<std::size_t>> want;
        std::vector<std::size_t> cur;
        oracle_del_patterns(orig, recv, 0, 0, cur, d, want);
        CHECK(candidate_deletion_patterns(orig, recv).patterns == want);
    }
}

TEST_CASE("indel1d: VT decodes one deletion anywhere in (row | redundancy)") {
    std::mt19937_64 rng(99);
    const std::size_t w = 10;
    const RowCodeConfig cfg = make_row_config(w, 1, 2 * vt_bits_for(w), 0, RowCodeMode::VT);
    for (int it = 0; it < 100; ++it) {
        const Bits row = random_row(w, rng);
        const Bits red = encode_redundancy(row, cfg);
        Bits full = row;
        full.insert(full.end(), red.begin(), red.end());
        for (std::size_t pos = 0; pos < full.size(); ++pos) {
            Bits shortened = full;
            shortened.erase(shortened.begin() + long(pos));
            CHECK(decode_row_indel_vt(shortened, cfg) == row);
        }
    }
}

TEST_CASE("indel1d: tiny hash payloads collide and surface as Ambiguous") {
    // r_w = 9 at t = 2 leaves a 5-bit hash: collisions are easy to engineer.
    const RowCodeConfig cfg = make_row_config(8, 2, 9, 1, RowCodeMode::HASH);
    REQUIRE(cfg.payload_bits <= 6);
    std::mt19937_64 rng(123);
    bool found_ambiguous = false;
    for (int it = 0; it < 4000 && !found_ambiguous; ++it) {
        const Bits row = random_row(8, rng);
        if (certify_separation(row, cfg)) continue;
        const Bits red = encode_redundancy(row, cfg);
        detail::for_each_combination(8, 2, [&](const std::vector<std::size_t>& P) {
            if (found_ambiguous) return;
            try {
                (void)decode_deletions(delete_positions(row, P), 8, MaskedBits::intact(red), 2, cfg);
            } catch (const Ambiguous&) {
                found_ambiguous = true;
            } catch (const Error&) {
            }
        });
    }
    CHECK(found_ambiguous);

    // the insertion side trips over the same collisions
    bool ins_ambiguous = false;
    std::mt19937_64 rng3(456);
    for (int it = 0; it < 4000 && !ins_ambiguous; ++it) {
        const Bits row = random_row(8, rng3);
        if (certify_separation(row, cfg)) continue;
        const Bits red = encode_redundancy(row, cfg);
        for (const Bits& r : detail::all_supersequences(row, 2)) {
            try {
                (void)decode_insertions(r, 8, MaskedBits::intact(red), 2, cfg);
            } catch (const Ambiguous&) {
                ins_ambiguous = true;
                break;
            } catch (const Error&) {
            }
        }
    }
    CHECK(ins_ambiguous);

    // a healthy payload width certifies the same rows
    const RowCodeConfig good = default_row_config(8, 2, 1);
    std::mt19937_64 rng2(321);
    for (int it = 0; it < 50; ++it) CHECK(certify_separation(random_row(8, rng2), good));
}
