#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include <crisscross/analysis.hpp>

using namespace crisscross;

namespace {

BitArray2D random_array(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    BitArray2D a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a.set(i, j, rng() & 1);
    return a;
}

}  // namespace

TEST_CASE("analysis: redundancy lower bound") {
    CHECK(lower_bound_redundancy(64, 2) == doctest::Approx(139.0).epsilon(1e-12));
    CHECK(lower_bound_redundancy(64, 1) == doctest::Approx(64 + 6).epsilon(1e-12));
    CHECK(lower_bound_redundancy(128, 1) == doctest::Approx(128 + 7).epsilon(1e-12));
    // monotone in n and t
    double prev = 0;
    for (std::size_t n : {8, 16, 32, 64}) {
        const double v = lower_bound_redundancy(n, 2);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(lower_bound_redundancy(64, 3) > lower_bound_redundancy(64, 2));
}

TEST_CASE("analysis: cardinality upper bound") {
    CHECK(cardinality_upper_bound_log2(4, 0) == doctest::Approx(16.0));
    const double v = cardinality_upper_bound_log2(4, 1);
    CHECK(v == doctest::Approx(16.0 - std::log2(15.0) - 2.0).epsilon(1e-12));  // ~10.093
    CHECK(v == doctest::Approx(10.0931094).epsilon(1e-6));

    // n^2 - bound agrees with the lower bound up to the (2^n - 1 vs 2^n) term
    for (std::size_t n : {8, 16, 32}) {
        for (std::size_t t : {1, 2, 3}) {
            const double diff =
                std::abs((n * double(n) - cardinality_upper_bound_log2(n, t)) - lower_bound_redundancy(n, t));
            CHECK(diff < double(t) * std::ldexp(1.0, -int(n) + 1) * std::log2(std::exp(1.0)) + 1e-12);
        }
    }
}

TEST_CASE("analysis: construction upper bound structure") {
    // the marker term for t=2 contributes exactly 4(t+1)^2 = 36
    const double with36 = construction_upper_bound_bits(64, 2);
    CHECK(with36 > 36);
    // dominant redundancy at (256, 1): t n + (8t^2+2t) log^2 n = 256 + 640
    const double lg = 8.0;
    const double expect_lower_order = 2 * 6 * lg + 4 * 1 * 4 + 28 * lg + 16;
    CHECK(construction_upper_bound_bits(256, 1) ==
          doctest::Approx(256 + 10 * lg * lg + expect_lower_order).epsilon(1e-12));

    for (std::size_t n : {32, 64, 128, 256})
        for (std::size_t t : {1, 2, 3})
            CHECK(construction_upper_bound_bits(n, t) >= lower_bound_redundancy(n, t));
}

TEST_CASE("analysis: bounds CSV") {
    std::ostringstream os;
    write_bounds_csv(os, {bounds_record(64, 2)});
    const std::string s = os.str();
    CHECK(s.find("n,t,lower,construction_upper,cardinality_upper_log2\n") == 0);
    CHECK(s.find("64,2,139.0") != std::string::npos);
}

TEST_CASE("analysis: ball disjointness") {
    BitArray2D zero(2, 2), ones(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.set(i, j, true);
    CHECK_FALSE(balls_disjoint(zero, zero, 1, ChannelMode::Deletion));
    CHECK(balls_disjoint(zero, ones, 1, ChannelMode::Deletion));

    // agreement with direct set intersection, and symmetry
    std::mt19937_64 rng(41);
    for (int it = 0; it < 60; ++it) {
        const BitArray2D x1 = random_array(3, 3, rng), x2 = random_array(3, 3, rng);
        const auto b1 = t_ball(x1, 1, ChannelMode::Deletion);
        const auto b2 = t_ball(x2, 1, ChannelMode::Deletion);
        bool inter = false;
        for (const auto& y : b2) inter = inter || b1.count(y);
        CHECK(balls_disjoint(x1, x2, 1, ChannelMode::Deletion) == !inter);
        CHECK(balls_disjoint(x2, x1, 1, ChannelMode::Deletion) ==
              balls_disjoint(x1, x2, 1, ChannelMode::Deletion));
    }
}

TEST_CASE("analysis: insertion/deletion equivalence property, sampled") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        const BitArray2D x1 = random_array(3, 3, rng), x2 = random_array(3, 3, rng);
        CHECK(equivalence_check(x1, x2, 1));
    }
    for (int it = 0; it < 20; ++it) {
        const BitArray2D x1 = random_array(4, 4, rng), x2 = random_array(4, 4, rng);
        CHECK(equivalence_check(x1, x2, 2));
    }
    const BitArray2D x = random_array(3, 3, rng);
    CHECK(equivalence_check(x, x, 1));  // both sides non-disjoint
}
