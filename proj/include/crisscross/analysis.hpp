#ifndef CRISSCROSS_ANALYSIS_HPP
#define CRISSCROSS_ANALYSIS_HPP

#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

#include "channel.hpp"

namespace crisscross {

// All logarithms base 2, as the source bounds declare.

inline double log2_factorial(std::size_t t) {
    double s = 0.0;
    for (std::size_t i = 2; i <= t; ++i) s += std::log2(double(i));
    return s;
}

// R >= t n + t log n - log t!
inline double lower_bound_redundancy(std::size_t n, std::size_t t) {
    if (n < 2 || t < 1) throw InvalidParams("lower_bound_redundancy: need n >= 2, t >= 1");
    return double(t) * double(n) + double(t) * std::log2(double(n)) - log2_factorial(t);
}

// log2 of the cardinality bound t! 2^(n^2) / ((2^n - 1)^t n^t).
inline double cardinality_upper_bound_log2(std::size_t n, std::size_t t) {
    if (n < 2) throw InvalidParams("cardinality_upper_bound_log2: need n >= 2");
    if (t == 0) return double(n) * double(n);
    // log2(2^n - 1) = n + log2(1 - 2^-n)
    const double log_2n_minus_1 = double(n) + std::log2(1.0 - std::ldexp(1.0, -int(n)));
    return log2_factorial(t) + double(n) * double(n) - double(t) * log_2n_minus_1 -
           double(t) * std::log2(double(n));
}

// Construction redundancy upper bound with its explicit lower-order terms:
// t n + 2(4t^2+t) log^2 n + 2(5t^2+t) log n + 4t(t+1)^2 + (6t^3+13t^2+8t+1) log n + 4(t+1)^2.
inline double construction_upper_bound_bits(std::size_t n, std::size_t t) {
    const double lg = std::log2(double(n));
    const double td = double(t);
    return td * double(n) + 2.0 * (4 * td * td + td) * lg * lg + 2.0 * (5 * td * td + td) * lg +
           4.0 * td * (td + 1) * (td + 1) + (6 * td * td * td + 13 * td * td + 8 * td + 1) * lg +
           4.0 * (td + 1) * (td + 1);
}

struct BoundsRecord {
    std::size_t n = 0, t = 0;
    double lower_bound_bits = 0;
    double construction_upper_bound = 0;
    double cardinality_upper_log2 = 0;
};

inline BoundsRecord bounds_record(std::size_t n, std::size_t t) {
    BoundsRecord r;
    r.n = n;
    r.t = t;
    r.lower_bound_bits = lower_bound_redundancy(n, t);
    r.construction_upper_bound = construction_upper_bound_bits(n, t);
    r.cardinality_upper_log2 = cardinality_upper_bound_log2(n, t);
    return r;
}

inline void write_bounds_csv(std::ostream& os, const std::vector<BoundsRecord>& rows) {
    os << "n,t,lower,construction_upper,cardinality_upper_log2\n";
    os.setf(std::ios::fixed);
    const auto old_precision = os.precision(9);
    for (const auto& r : rows)
        os << r.n << ',' << r.t << ',' << r.lower_bound_bits << ',' << r.construction_upper_bound << ','
           << r.cardinality_upper_log2 << '\n';
    os.precision(old_precision);
    os.unsetf(std::ios::fixed);
}

// Whether the t-balls of X1 and X2 are disjoint; streaming membership test
// against the enumerated ball of X1.
inline bool balls_disjoint(const BitArray2D& X1, const BitArray2D& X2, std::size_t t, ChannelMode mode) {
    if (X1.rows() != X2.rows() || X1.cols() != X2.cols())
        throw DimensionMismatch("balls_disjoint: arrays must share a shape");
    const std::set<BitArray2D> ball1 = t_ball(X1, t, mode);
    bool hit = false;
    for (std::size_t tr = 0; tr <= t && !hit; ++tr) {
        const std::size_t tc = t - tr;
        if (mode == ChannelMode::Deletion) {
            if (tr > X2.rows() || tc > X2.cols()) continue;
            detail::visit_deletion_ball(X2, tr, tc, [&](const BitArray2D& Y) {
                if (!hit && ball1.count(Y)) hit = true;
            });
        } else {
            detail::visit_insertion_ball(X2, tr, tc, [&](const BitArray2D& Y) {
                if (!hit && ball1.count(Y)) hit = true;
            });
        }
    }
    return !hit;
}

// The equivalence theorem as an executable property: deletion-ball disjointness
// must coincide with insertion-ball disjointness. A false return is a
// counterexample.
inline bool equivalence_check(const BitArray2D& X1, const BitArray2D& X2, std::size_t t) {
    const bool del = balls_disjoint(X1, X2, t, ChannelMode::Deletion);
    const bool ins = balls_disjoint(X1, X2, t, ChannelMode::Insertion);
    return del == ins;
}

}  // namespace crisscross

#endif
