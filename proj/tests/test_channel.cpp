#include <doctest.h>

#include <random>

#include <crisscross/channel.hpp>

using namespace crisscross;

namespace {

BitArray2D make(std::initializer_list<std::initializer_list<int>> rows) {
    BitArray2D a(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) a.set(r, c++, v != 0);
        ++r;
    }
    return a;
}

}  // namespace

TEST_CASE("channel: apply worked examples") {
    const BitArray2D x = make({{1, 0}, {1, 1}});
    ChannelPattern empty;
    CHECK(channel_apply(x, empty) == x);

    ChannelPattern p;
    p.mode = ChannelMode::Deletion;
    p.row_ops = {{0, {}}};
    p.col_ops = {{0, {}}};
    const BitArray2D y = channel_apply(x, p);
    CHECK(y.rows() == 1);
    CHECK(y.cols() == 1);
    CHECK(y.get(0, 0) == x.get(1, 1));

    BitArray2D z(2, 2);
    ChannelPattern ins;
    ins.mode = ChannelMode::Insertion;
    ins.row_ops = {{0, Bits{0, 0}}};
    const BitArray2D zi = channel_apply(z, ins);
    CHECK(zi.rows() == 3);
    CHECK(zi == BitArray2D(3, 2));

    ChannelPattern bad;
    bad.mode = ChannelMode::Insertion;
    bad.row_ops = {{0, Bits{0}}};
    CHECK_THROWS_AS(channel_apply(z, bad), ContentLengthMismatch);
}

TEST_CASE("channel: insertion indices are received-frame, applied ascending") {
    const BitArray2D x = make({{1, 1}});
    ChannelPattern p;
    p.mode = ChannelMode::Insertion;
    p.row_ops = {{0, Bits{0, 0}}, {2, Bits{0, 0}}};
    const BitArray2D y = channel_apply(x, p);
    REQUIRE(y.rows() == 3);
    CHECK_FALSE(y.get(0, 0));
    CHECK(y.get(1, 0));
    CHECK_FALSE(y.get(2, 0));  // inserted rows land exactly at received indices 0 and 2
}

TEST_CASE("channel: deletion ball examples") {
    CHECK(deletion_ball(BitArray2D(2, 2), 1, 0).size() == 1);
    CHECK(deletion_ball(make({{0, 1}, {0, 1}}), 0, 1).size() == 2);
    CHECK(deletion_ball(make({{0, 1}, {1, 0}}), 0, 1).size() == 2);
}

TEST_CASE("channel: insertion ball examples") {
    const BitArray2D x1 = make({{0}});
    const auto ball = insertion_ball(x1, 1, 0);
    CHECK(ball.size() == 3);  // 00, 01, 10 as columns
    CHECK(insertion_ball(x1, 0, 0) == std::set<BitArray2D>{x1});

    // size of I_{1,0} for the all-zero 2x2 computed by an independent loop
    const BitArray2D z(2, 2);
    std::set<BitArray2D> oracle;
    for (std::size_t pos = 0; pos <= 2; ++pos)
        for (unsigned bits = 0; bits < 4; ++bits)
            oracle.insert(detail::insert_row(z, pos, Bits{std::uint8_t(bits & 1), std::uint8_t((bits >> 1) & 1)}));
    CHECK(insertion_ball(z, 1, 0) == oracle);
}

TEST_CASE("channel: t_ball is the union over splits") {
    const BitArray2D x = make({{0, 1}, {1, 1}});
    CHECK(t_ball(x, 0, ChannelMode::Deletion) == std::set<BitArray2D>{x});
    std::set<BitArray2D> expect = deletion_ball(x, 1, 0);
    for (const auto& y : deletion_ball(x, 0, 1)) expect.insert(y);
    CHECK(t_ball(x, 1, ChannelMode::Deletion) == expect);

    const BitArray2D x3(3, 3);
    std::set<BitArray2D> e2;
    for (std::size_t tr = 0; tr <= 2; ++tr)
        for (const auto& y : deletion_ball(x3, tr, 2 - tr)) e2.insert(y);
    CHECK(t_ball(x3, 2, ChannelMode::Deletion) == e2);
}

TEST_CASE("channel: ball sizes match a per-pattern recount") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        BitArray2D x(3, 4);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 4; ++c) x.set(r, c, rng() & 1);
        for (std::size_t tr = 0; tr <= 1; ++tr)
            for (std::size_t tc = 0; tc <= 1; ++tc) {
                std::set<BitArray2D> oracle;
                detail::for_each_combination(3, tr, [&](const std::vector<std::size_t>& R) {
                    detail::for_each_combination(4, tc, [&](const std::vector<std::size_t>& C) {
                        oracle.insert(x.delete_rows_cols(R, C));
                    });
                });
                CHECK(deletion_ball(x, tr, tc) == oracle);
            }
    }
}

TEST_CASE("channel: deletions are members of the insertion ball of their result") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 10; ++it) {
        BitArray2D x(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) x.set(r, c, rng() & 1);
        for (const auto& y : deletion_ball(x, 1, 0)) {
            const auto back = insertion_ball(y, 1, 0);
            CHECK(back.count(x) == 1);
        }
    }
}

TEST_CASE("channel: enumeration caps") {
    CHECK_THROWS_AS(deletion_ball(BitArray2D(8, 8), 1, 0), TooLarge);
    CHECK_THROWS_AS(insertion_ball(BitArray2D(6, 6), 1, 1), TooLarge);
}

TEST_CASE("channel: random patterns are reproducible and well formed") {
    const ChannelPattern a = random_pattern(10, 10, 2, ChannelMode::Insertion, 77);
    const ChannelPattern b = random_pattern(10, 10, 2, ChannelMode::Insertion, 77);
    CHECK(a.row_ops.size() == b.row_ops.size());
    for (std::size_t i = 0; i < a.row_ops.size(); ++i) {
        CHECK(a.row_ops[i].index == b.row_ops[i].index);
        CHECK(a.row_ops[i].content == b.row_ops[i].content);
    }
    CHECK(a.row_ops.size() + a.col_ops.size() == 2);

    const ChannelPattern c = random_pattern(10, 10, 1, ChannelMode::Deletion, 5);
    CHECK(c.row_ops.size() + c.col_ops.size() == 1);

    // all three splits of t=2 occur across many draws
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ChannelPattern p = random_pattern(10, 10, 2, ChannelMode::Deletion, seed);
        seen.insert({p.row_ops.size(), p.col_ops.size()});
        const BitArray2D out = channel_apply(BitArray2D(10, 10), p);
        CHECK(out.rows() == 10 - p.row_ops.size());
        CHECK(out.cols() == 10 - p.col_ops.size());
    }
    CHECK(seen.size() == 3);

    CHECK_THROWS_AS(random_pattern(1, 1, 3, ChannelMode::Deletion, 0), Infeasible);
}
