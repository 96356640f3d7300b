#include <doctest.h>

#include <random>

#include <crisscross/window.hpp>

using namespace crisscross;

TEST_CASE("window: capacity formula") {
    CHECK(window_capacity(3, 1, 4) == BigUint(2401));  // 7^4
    CHECK(window_capacity(4, 0, 3) == BigUint(4096));  // unconstrained 2^(l w)
    CHECK(window_capacity(1, 1, 2) == BigUint(1));     // alternating forced
    CHECK_THROWS_AS(window_capacity(1, 2, 4), InvalidParams);
    CHECK(window_message_bits(3, 1, 4) == 11);  // floor(log2 2401)
}

TEST_CASE("window: unrank worked examples") {
    const WindowBlock b0 = window_unrank(BigUint(0), 3, 1, 4);
    CHECK(b0.columns == std::vector<std::uint32_t>{0, 1, 0, 1});  // 000 001 000 001
    CHECK(window_valid(b0));

    // the maximum message is all digits 6 in the mixed-radix expansion
    const WindowBlock bmax = window_unrank(BigUint(2400), 3, 1, 4);
    CHECK(bmax.columns == std::vector<std::uint32_t>{6, 7, 6, 7});
    CHECK(window_valid(bmax));
    CHECK(window_rank(bmax) == BigUint(2400));
    CHECK(window_rank(b0) == BigUint(0));

    CHECK_THROWS_AS(window_unrank(BigUint(2401), 3, 1, 4), OutOfRange);
}

TEST_CASE("window: rank is the exact inverse of unrank, exhaustive at (3,1,4)") {
    for (std::uint64_t m = 0; m < 2401; ++m) {
        const WindowBlock b = window_unrank(BigUint(m), 3, 1, 4);
        CHECK(window_valid(b));
        CHECK(window_rank(b) == BigUint(m));
    }
}

TEST_CASE("window: sampled bijection at larger parameters") {
    std::mt19937_64 rng(13);
    const BigUint cap = window_capacity(6, 2, 30);
    for (int it = 0; it < 200; ++it) {
        // random value below capacity via random bits of its width
        Bits bits(cap.bit_length() - 1);
        for (auto& b : bits) b = std::uint8_t(rng() & 1);
        const BigUint m = BigUint::from_bits_msb(bits);
        const WindowBlock b = window_unrank(m, 6, 2, 30);
        CHECK(window_valid(b));
        CHECK(window_rank(b) == m);
    }
}

TEST_CASE("window: rank rejects blocks outside the enumerable subset") {
    WindowBlock b;
    b.ell = 3;
    b.t = 1;
    b.w = 3;
    b.columns = {2, 2, 5};  // violates the window constraint
    CHECK_FALSE(window_valid(b));
    CHECK_THROWS_AS(window_rank(b), NotEncodable);
    b.columns = {7, 0, 1};  // first column outside the restricted first radix
    CHECK(window_valid(b));
    CHECK_THROWS_AS(window_rank(b), NotEncodable);
}

TEST_CASE("window: localize deleted columns, worked example") {
    const std::vector<Bits> originals{{0, 1, 0, 1}, {0, 0, 1, 1}};
    const std::vector<Bits> receiveds{{0, 0, 1}, {0, 1, 1}};
    CHECK(localize_deleted_columns(originals, receiveds, 1) == std::vector<std::size_t>{1});
    CHECK(localize_deleted_columns(originals, originals, 1).empty());
}

TEST_CASE("window: localization of all deletion patterns on random valid blocks") {
    std::mt19937_64 rng(14);
    for (std::size_t t : {1, 2}) {
        const std::size_t ell = 4, w = 10;
        const BigUint cap = window_capacity(ell, t, w);
        for (int it = 0; it < 60; ++it) {
            Bits bits(cap.bit_length() - 1);
            for (auto& b : bits) b = std::uint8_t(rng() & 1);
            const WindowBlock blk = window_unrank(BigUint::from_bits_msb(bits), ell, t, w);
            const std::vector<Bits> rows = block_rows(blk);
            detail::for_each_combination(w, t, [&](const std::vector<std::size_t>& P) {
                std::vector<Bits> recv;
                for (const Bits& r : rows) recv.push_back(delete_positions(r, P));
                CHECK(localize_deleted_columns(rows, recv, t) == P);
            });
        }
    }
}

TEST_CASE("window: localize inserted columns") {
    std::mt19937_64 rng(15);
    const std::size_t ell = 4, w = 10, t = 2;
    const BigUint cap = window_capacity(ell, t, w);
    Bits bits(cap.bit_length() - 1);
    for (auto& b : bits) b = std::uint8_t(rng() & 1);
    const WindowBlock blk = window_unrank(BigUint::from_bits_msb(bits), ell, t, w);
    const std::vector<Bits> rows = block_rows(blk);

    SUBCASE("no insertions") { CHECK(localize_inserted_columns(rows, rows, t).empty()); }

    SUBCASE("a column distinct from both neighbours is located exactly") {
        // insert the complement of column 4 at position 4
        std::vector<Bits> recv = rows;
        for (std::size_t r = 0; r < ell; ++r) recv[r].insert(recv[r].begin() + 4, rows[r][4] ? 0 : 1);
        // the inserted column must also differ from its left neighbour for exactness
        bool differs_left = false;
        for (std::size_t r = 0; r < ell; ++r)
            if ((rows[r][3] != 0) != (rows[r][4] == 0)) differs_left = true;
        if (differs_left) {
            const auto fs = localize_inserted_columns(rows, recv, t);
            REQUIRE(fs.size() == 1);
            CHECK(fs[0].exact);
            CHECK(fs[0].index == 4);
        }
    }

    SUBCASE("a duplicated column yields a two-wide confusion with one original") {
        std::vector<Bits> recv = rows;
        for (std::size_t r = 0; r < ell; ++r) recv[r].insert(recv[r].begin() + 6, rows[r][6]);
        const auto fs = localize_inserted_columns(rows, recv, t);
        REQUIRE(fs.size() == 1);
        CHECK_FALSE(fs[0].exact);
        CHECK(fs[0].interval.length() == 2);
        CHECK(fs[0].interval.start == 6);
        CHECK(fs[0].interval.original_count == 1);
    }

    SUBCASE("interval bounds hold under random double insertions") {
        for (int it = 0; it < 100; ++it) {
            std::vector<Bits> recv = rows;
            for (int k = 0; k < 2; ++k) {
                const std::size_t pos = rng() % (recv[0].size() + 1);
                for (std::size_t r = 0; r < ell; ++r)
                    recv[r].insert(recv[r].begin() + long(pos), std::uint8_t(rng() & 1));
            }
            const auto fs = localize_inserted_columns(rows, recv, t);
            std::size_t total_ins = 0;
            for (const auto& f : fs) {
                if (f.exact) {
                    ++total_ins;
                } else {
                    CHECK(f.interval.length() <= 2 * t + 1);
                    CHECK(f.interval.original_count >= 1);
                    CHECK(f.interval.original_count <= t);
                    total_ins += f.interval.length() - f.interval.original_count;
                }
            }
            CHECK(total_ins == 2);
        }
    }
}
