#ifndef CRISSCROSS_CHANNEL_HPP
#define CRISSCROSS_CHANNEL_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bitarray.hpp"
#include "errors.hpp"
#include "indel1d.hpp"

namespace crisscross {

enum class ChannelMode { Deletion, Insertion };

struct ChannelOp {
    std::size_t index = 0;  // original frame for deletions, received frame for insertions
    Bits content;           // insertion payload; empty for deletions
};

// A (t_r, t_c) criss-cross deletion or insertion specification.
struct ChannelPattern {
    ChannelMode mode = ChannelMode::Deletion;
    std::vector<ChannelOp> row_ops;  // sorted by index
    std::vector<ChannelOp> col_ops;
    std::uint64_t seed = 0;
    bool has_seed = false;

    std::size_t t_r() const { return row_ops.size(); }
    std::size_t t_c() const { return col_ops.size(); }
};

// Enumeration guard for the exhaustive ball routines; CRISSCROSS_MAX_ENUM
// overrides the cell-count cap.
inline std::size_t enum_cell_cap(std::size_t fallback) {
    if (const char* s = std::getenv("CRISSCROSS_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return std::size_t(v);
    }
    return fallback;
}

namespace detail {

inline BitArray2D insert_row(const BitArray2D& X, std::size_t idx, const Bits& content) {
    if (idx > X.rows()) throw IndexOutOfRange("insert_row: index out of range");
    if (content.size() != X.cols()) throw ContentLengthMismatch("insert_row: content width mismatch");
    BitArray2D Y(X.rows() + 1, X.cols());
    for (std::size_t r = 0; r < idx; ++r)
        for (std::size_t c = 0; c < X.cols(); ++c) Y.set(r, c, X.get(r, c));
    for (std::size_t c = 0; c < X.cols(); ++c) Y.set(idx, c, content[c]);
    for (std::size_t r = idx; r < X.rows(); ++r)
        for (std::size_t c = 0; c < X.cols(); ++c) Y.set(r + 1, c, X.get(r, c));
    return Y;
}

inline BitArray2D insert_col(const BitArray2D& X, std::size_t idx, const Bits& content) {
    if (idx > X.cols()) throw IndexOutOfRange("insert_col: index out of range");
    if (content.size() != X.rows()) throw ContentLengthMismatch("insert_col: content height mismatch");
    BitArray2D Y(X.rows(), X.cols() + 1);
    for (std::size_t r = 0; r < X.rows(); ++r) {
        for (std::size_t c = 0; c < idx; ++c) Y.set(r, c, X.get(r, c));
        Y.set(r, idx, content[r]);
        for (std::size_t c = idx; c < X.cols(); ++c) Y.set(r, c + 1, X.get(r, c));
    }
    return Y;
}

}  // namespace detail

// Apply a pattern. Deletions use original-frame indices (rows then columns,
// order-invariant); insertions use received-frame indices applied ascending,
// rows first, column contents sized for the post-row-insertion frame.
inline BitArray2D channel_apply(const BitArray2D& X, const ChannelPattern& p) {
    if (p.mode == ChannelMode::Deletion) {
        std::vector<std::size_t> dr, dc;
        for (const auto& op : p.row_ops) dr.push_back(op.index);
        for (const auto& op : p.col_ops) dc.push_back(op.index);
        for (std::size_t i = 1; i < dr.size(); ++i)
            if (dr[i] <= dr[i - 1]) throw InvalidParams("channel_apply: row deletions must be sorted unique");
        for (std::size_t i = 1; i < dc.size(); ++i)
            if (dc[i] <= dc[i - 1]) throw InvalidParams("channel_apply: col deletions must be sorted unique");
        return X.delete_rows_cols(dr, dc);
    }
    BitArray2D Y = X;
    for (std::size_t i = 1; i < p.row_ops.size(); ++i)
        if (p.row_ops[i].index <= p.row_ops[i - 1].index)
            throw InvalidParams("channel_apply: row insertions must be sorted unique");
    for (std::size_t i = 1; i < p.col_ops.size(); ++i)
        if (p.col_ops[i].index <= p.col_ops[i - 1].index)
            throw InvalidParams("channel_apply: col insertions must be sorted unique");
    for (const auto& op : p.row_ops) Y = detail::insert_row(Y, op.index, op.content);
    for (const auto& op : p.col_ops) Y = detail::insert_col(Y, op.index, op.content);
    return Y;
}

namespace detail {

// Visit every member of D_{tr,tc}(X); duplicates may repeat.
template <typename F>
inline void visit_deletion_ball(const BitArray2D& X, std::size_t tr, std::size_t tc, F&& f) {
    for_each_combination(X.rows(), tr, [&](const std::vector<std::size_t>& R) {
        for_each_combination(X.cols(), tc, [&](const std::vector<std::size_t>& C) { f(X.delete_rows_cols(R, C)); });
    });
}

template <typename F>
inline void visit_row_insertions(const BitArray2D& X, std::size_t tr, F&& f) {
    if (tr == 0) {
        f(X);
        return;
    }
    for (std::size_t idx = 0; idx <= X.rows(); ++idx) {
        Bits content(X.cols(), 0);
        while (true) {
            visit_row_insertions(insert_row(X, idx, content), tr - 1, f);
            std::size_t k = 0;
            while (k < content.size() && content[k] == 1) content[k++] = 0;
            if (k == content.size()) break;
            content[k] = 1;
        }
    }
}

template <typename F>
inline void visit_col_insertions(const BitArray2D& X, std::size_t tc, F&& f) {
    if (tc == 0) {
        f(X);
        return;
    }
    for (std::size_t idx = 0; idx <= X.cols(); ++idx) {
        Bits content(X.rows(), 0);
        while (true) {
            visit_col_insertions(insert_col(X, idx, content), tc - 1, f);
            std::size_t k = 0;
            while (k < content.size() && content[k] == 1) content[k++] = 0;
            if (k == content.size()) break;
            content[k] = 1;
        }
    }
}

template <typename F>
inline void visit_insertion_ball(const BitArray2D& X, std::size_t tr, std::size_t tc, F&& f) {
    visit_row_insertions(X, tr, [&](const BitArray2D& Y) { visit_col_insertions(Y, tc, f); });
}

}  // namespace detail

// Exact deduplicated D_{tr,tc}(X); exhaustive desk scale only.
inline std::set<BitArray2D> deletion_ball(const BitArray2D& X, std::size_t tr, std::size_t tc) {
    if (tr > X.rows() || tc > X.cols()) throw InvalidParams("deletion_ball: more deletions than lines");
    if (X.rows() * X.cols() > enum_cell_cap(36)) throw TooLarge("deletion_ball: array too large for enumeration");
    std::set<BitArray2D> out;
    detail::visit_deletion_ball(X, tr, tc, [&](const BitArray2D& Y) { out.insert(Y); });
    return out;
}

// Exact deduplicated I_{tr,tc}(X): all positions and all inserted contents.
inline std::set<BitArray2D> insertion_ball(const BitArray2D& X, std::size_t tr, std::size_t tc) {
    if ((X.rows() + tr) * (X.cols() + tc) > enum_cell_cap(30))
        throw TooLarge("insertion_ball: output frame too large for enumeration");
    std::set<BitArray2D> out;
    detail::visit_insertion_ball(X, tr, tc, [&](const BitArray2D& Y) { out.insert(Y); });
    return out;
}

// Union over all splits t_r + t_c = t; members differ in shape, the set is
// shape-tagged by the array ordering.
inline std::set<BitArray2D> t_ball(const BitArray2D& X, std::size_t t, ChannelMode mode) {
    std::set<BitArray2D> out;
    for (std::size_t tr = 0; tr <= t; ++tr) {
        const std::size_t tc = t - tr;
        if (mode == ChannelMode::Deletion) {
            if (tr > X.rows() || tc > X.cols()) continue;
            for (const auto& Y : deletion_ball(X, tr, tc)) out.insert(Y);
        } else {
            for (const auto& Y : insertion_ball(X, tr, tc)) out.insert(Y);
        }
    }
    if (out.empty()) throw InvalidParams("t_ball: no feasible split");
    return out;
}

// Uniform feasible split, then uniform indices and contents; reproducible.
inline ChannelPattern random_pattern(std::size_t rows, std::size_t cols, std::size_t t, ChannelMode mode,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> splits;
    for (std::size_t tr = 0; tr <= t; ++tr) {
        const std::size_t tc = t - tr;
        if (mode == ChannelMode::Deletion && (tr > rows || tc > cols)) continue;
        splits.emplace_back(tr, tc);
    }
    if (splits.empty()) throw Infeasible("random_pattern: no feasible (t_r, t_c) split");
    const auto [tr, tc] = splits[std::uniform_int_distribution<std::size_t>(0, splits.size() - 1)(rng)];

    auto pick_sorted = [&](std::size_t t_cnt, std::size_t range) {
        std::set<std::size_t> s;
        std::uniform_int_distribution<std::size_t> d(0, range - 1);
        while (s.size() < t_cnt) s.insert(d(rng));
        return std::vector<std::size_t>(s.begin(), s.end());
    };
    auto random_bits = [&](std::size_t len) {
        Bits b(len);
        std::uniform_int_distribution<int> d(0, 1);
        for (auto& x : b) x = std::uint8_t(d(rng));
        return b;
    };

    ChannelPattern p;
    p.mode = mode;
    p.seed = seed;
    p.has_seed = true;
    if (mode == ChannelMode::Deletion) {
        for (std::size_t i : pick_sorted(tr, rows)) p.row_ops.push_back({i, {}});
        for (std::size_t i : pick_sorted(tc, cols)) p.col_ops.push_back({i, {}});
    } else {
        for (std::size_t i : pick_sorted(tr, rows + tr)) p.row_ops.push_back({i, random_bits(cols)});
        for (std::size_t i : pick_sorted(tc, cols + tc)) p.col_ops.push_back({i, random_bits(rows + tr)});
    }
    return p;
}

}  // namespace crisscross

#endif
