#ifndef CRISSCROSS_CODEC_HPP
#define CRISSCROSS_CODEC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "bitarray.hpp"
#include "channel.hpp"
#include "gabidulin.hpp"
#include "indel1d.hpp"
#include "locator.hpp"
#include "window.hpp"

namespace crisscross {

struct Rect {
    std::size_t r0 = 0, c0 = 0, rows = 0, cols = 0;  // half-open extents
};

enum class CellKind : std::uint8_t { Free, HSys, HRed, VSys, VRed, L1, T1, T2, L2, E11, E12, E21, E22 };

struct RegionMap {
    Rect h_sys, h_red, v_sys, v_red;
    Rect l1, t1, t2, l2;
    Rect e11, e12, e21, e22;
    std::vector<std::pair<std::size_t, std::size_t>> parity_cells;        // t*n cells, interior free
    std::vector<std::pair<std::size_t, std::size_t>> free_message_cells;  // row-major, excludes parity
    std::vector<CellKind> kind;                                           // n*n row-major
};

// All derived layout parameters of one (n, t) instance.
struct CodeParams {
    std::size_t n = 0, t = 0, ell = 0, w = 0, r_w = 0;
    std::size_t s_L = 0, s_T = 0;
    RowCodeMode row_mode = RowCodeMode::VT;
    std::uint64_t base_salt = 0;
    std::size_t certify_below_w = 24;  // encode-time hash certification threshold

    RegionMap regions;
    std::vector<RowCodeConfig> h_cfgs, v_cfgs;  // one per protected line (t*ell each)

    std::size_t window_bits_per_block = 0;
    std::size_t message_bits = 0;
    bool parity_ready = false;

    std::size_t top() const { return t * ell; }          // margin size t*ell
    std::size_t bot0() const { return n - s_T; }         // first bottom-region line
    std::size_t tp1() const { return t + 1; }
    std::size_t marker_dim() const { return (t + 1) * (t + 1); }
};

namespace detail {

inline std::size_t vt_rw_fixed_point(std::size_t n, std::size_t ell, std::size_t t) {
    // r_w = (t+1) * vt_bits(w) with w = n - t*ell - r_w - (t+1)^2, padded to a
    // multiple of t+1 (already is). Iterate to the fixed point.
    const std::size_t fixed = t * ell + (t + 1) * (t + 1);
    if (n <= fixed) throw TooSmall("layout: n too small for the margins");
    std::size_t r = (t + 1) * vt_bits_for(n - fixed);
    for (int iter = 0; iter < 64; ++iter) {
        if (n <= fixed + r) throw TooSmall("layout: no room for the VT redundancy");
        const std::size_t w = n - fixed - r;
        const std::size_t need = (t + 1) * vt_bits_for(w);
        if (need == r) return r;
        r = need;
    }
    throw TooSmall("layout: VT redundancy width does not stabilize");
}

inline std::size_t hash_rw(std::size_t t) {
    // Smallest multiple of t+1 whose shield leaves at least 48 payload bits.
    for (std::size_t r = t + 1;; r += t + 1) {
        std::size_t rho = 0;
        (void)shield_matrix(r, t, rho);
        if (r > rho && r - rho >= 48) return r;
    }
}

}  // namespace detail

namespace detail {

// t*ell must be a multiple of t+1 (so ell must be, since gcd(t, t+1) = 1) and
// t*ell >= ceil(t/2)(t+1); the window radix needs 2^ell > t.
inline bool ell_valid(std::size_t t, std::size_t ell) {
    if (ell == 0 || ell >= 31) return false;
    if ((t * ell) % (t + 1) != 0) return false;
    const std::size_t ceil_t_half = (t + 1) / 2;
    if (t * ell < ceil_t_half * (t + 1)) return false;
    if ((std::size_t(1) << ell) <= t) return false;
    return true;
}

// Layout arithmetic only; throws TooSmall when the regions do not fit.
inline CodeParams layout_params(std::size_t n, std::size_t t, std::size_t ell, std::uint64_t base_salt) {
    if (!ell_valid(t, ell)) throw InvalidParams("layout: ell incompatible with t");
    CodeParams p;
    p.n = n;
    p.t = t;
    p.ell = ell;
    p.base_salt = base_salt;
    p.row_mode = (t == 1) ? RowCodeMode::VT : RowCodeMode::HASH;
    p.s_L = t * ell;
    p.r_w = (t == 1) ? vt_rw_fixed_point(n, ell, t) : hash_rw(t);
    p.s_T = p.r_w + (t + 1) * (t + 1);
    const std::size_t fixed = p.s_L + p.r_w + (t + 1) * (t + 1);
    if (n <= fixed || n - fixed < t + 2) throw TooSmall("layout: w would drop below t+2");
    p.w = n - fixed;

    const std::size_t TL = p.top(), B0 = p.bot0(), M = p.marker_dim(), tp1 = p.tp1();
    if (B0 < tp1 || TL + M + tp1 > n) throw TooSmall("layout: marker coordinates leave the grid");

    RegionMap& rm = p.regions;
    rm.h_sys = {0, TL, TL, p.w};
    rm.h_red = {0, TL + p.w, TL, p.r_w};
    rm.v_sys = {TL, 0, p.w, TL};
    rm.v_red = {TL + p.w, 0, p.r_w, TL};
    rm.l1 = {0, n - M, TL, M};
    rm.t1 = {TL, B0, M, p.s_T};
    rm.t2 = {n - M, 0, M, TL};
    rm.l2 = {B0, TL, p.s_T, M};
    rm.e11 = {TL, B0 - tp1, tp1, tp1};
    rm.e12 = {TL + M, n - tp1, tp1, tp1};
    rm.e21 = {B0 - tp1, TL, tp1, tp1};
    rm.e22 = {n - tp1, TL + M, tp1, tp1};

    rm.kind.assign(n * n, CellKind::Free);
    auto paint = [&](const Rect& r, CellKind k) {
        for (std::size_t i = r.r0; i < r.r0 + r.rows; ++i)
            for (std::size_t j = r.c0; j < r.c0 + r.cols; ++j) {
                CellKind& cell = rm.kind[i * n + j];
                if (cell != CellKind::Free) throw TooSmall("layout: structured regions overlap");
                cell = k;
            }
    };
    paint(rm.h_sys, CellKind::HSys);
    paint(rm.h_red, CellKind::HRed);
    paint(rm.v_sys, CellKind::VSys);
    paint(rm.v_red, CellKind::VRed);
    paint(rm.l1, CellKind::L1);
    paint(rm.t1, CellKind::T1);
    paint(rm.t2, CellKind::T2);
    paint(rm.l2, CellKind::L2);
    paint(rm.e11, CellKind::E11);
    paint(rm.e12, CellKind::E12);
    paint(rm.e21, CellKind::E21);
    paint(rm.e22, CellKind::E22);

    p.h_cfgs.reserve(TL);
    p.v_cfgs.reserve(TL);
    for (std::size_t line = 0; line < TL; ++line) {
        p.h_cfgs.push_back(
            make_row_config(p.w, t, p.r_w, mix64(base_salt ^ mix64(0x48 * 1000 + line)), p.row_mode));
        p.v_cfgs.push_back(
            make_row_config(p.w, t, p.r_w, mix64(base_salt ^ mix64(0x56 * 1000 + line)), p.row_mode));
    }

    p.window_bits_per_block = window_message_bits(ell, t, p.w);
    return p;
}

inline std::size_t count_free_cells(const CodeParams& p) {
    std::size_t k = 0;
    for (CellKind c : p.regions.kind)
        if (c == CellKind::Free) ++k;
    return k;
}

inline std::size_t total_redundancy_estimate(const CodeParams& p) {
    const std::size_t free_cells = count_free_cells(p);
    const std::size_t capacity = 2 * p.t * p.window_bits_per_block + free_cells - p.t * p.n;
    return p.n * p.n - capacity;
}

}  // namespace detail

// Layout + line configs + region map. The parity cells need the Gabidulin
// parity check; call select_parity_cells (or use make_codec) to finish.
inline CodeParams make_params(std::size_t n, std::size_t t, std::optional<std::size_t> ell_opt = std::nullopt,
                              std::uint64_t base_salt = 0) {
    if (t < 1 || t > 4) throw InvalidParams("make_params: t must be in [1,4]");
    if (n < 4 || n > 512) throw InvalidParams("make_params: n must be in [4,512] (desk scale)");

    CodeParams p;
    if (ell_opt) {
        if (!detail::ell_valid(t, *ell_opt))
            throw InvalidParams("make_params: ell must satisfy the locator divisibility and size constraints");
        p = detail::layout_params(n, t, *ell_opt, base_salt);
    } else {
        // Default ell: scan the valid values near log2(n) and keep the one with
        // the least total redundancy (ties to the smaller ell). If nothing near
        // log2(n) fits, fall back to the full valid range.
        std::size_t lg = 0;
        while ((std::size_t(1) << lg) < n) ++lg;
        bool found = false;
        std::size_t best_red = 0;
        const std::size_t hi = lg + 2 * (t + 1);
        auto scan = [&](std::size_t lo) {
            for (std::size_t ell = lo; ell <= hi; ++ell) {
                if (!detail::ell_valid(t, ell)) continue;
                try {
                    CodeParams cand = detail::layout_params(n, t, ell, base_salt);
                    const std::size_t red = detail::total_redundancy_estimate(cand);
                    if (!found || red < best_red) {
                        p = std::move(cand);
                        best_red = red;
                        found = true;
                    }
                } catch (const TooSmall&) {
                }
            }
        };
        scan(lg > 2 ? lg - 2 : 1);
        if (!found) scan(1);
        if (!found) throw TooSmall("make_params: no feasible ell for this n and t");
    }

    // Message layout is known before parity selection; the final free-cell
    // split happens in select_parity_cells.
    p.message_bits = 2 * p.t * p.window_bits_per_block + detail::count_free_cells(p) - p.t * p.n;
    if (detail::count_free_cells(p) < p.t * p.n) throw TooSmall("make_params: not enough free cells for parity");
    return p;
}

// Pick t*n free interior cells whose parity-check columns are invertible.
// Column-major scan of the interior, extended to the rest of the free region
// if the interior alone cannot reach full rank.
inline void select_parity_cells(CodeParams& p, const GabidulinCode& gab) {
    if (gab.n() != p.n || gab.t() != p.t) throw InvalidParams("select_parity_cells: code/params mismatch");
    const std::size_t need = p.t * p.n;
    const BitArray2D& H = gab.parity_check_binary();
    GaussBasis basis(H.rows());
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::vector<std::uint8_t> is_parity(p.n * p.n, 0);

    auto column_of = [&](std::size_t i, std::size_t j) {
        std::vector<std::uint64_t> col((H.rows() + 63) / 64, 0);
        const std::size_t cell = i * p.n + j;
        for (std::size_t r = 0; r < H.rows(); ++r)
            if (H.get(r, cell)) col[r / 64] |= std::uint64_t(1) << (r % 64);
        return col;
    };
    auto try_cell = [&](std::size_t i, std::size_t j) {
        if (chosen.size() >= need) return;
        if (p.regions.kind[i * p.n + j] != CellKind::Free) return;
        if (basis.try_insert(column_of(i, j))) {
            chosen.emplace_back(i, j);
            is_parity[i * p.n + j] = 1;
        }
    };

    const std::size_t TL = p.top();
    for (std::size_t j = TL; j < p.n && chosen.size() < need; ++j)
        for (std::size_t i = TL; i < p.n && chosen.size() < need; ++i) try_cell(i, j);
    for (std::size_t j = 0; j < p.n && chosen.size() < need; ++j)
        for (std::size_t i = 0; i < p.n && chosen.size() < need; ++i) try_cell(i, j);
    if (chosen.size() < need)
        throw SingularParitySelection("select_parity_cells: free cells cannot span the parity space");

    p.regions.parity_cells = std::move(chosen);
    p.regions.free_message_cells.clear();
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = 0; j < p.n; ++j)
            if (p.regions.kind[i * p.n + j] == CellKind::Free && !is_parity[i * p.n + j])
                p.regions.free_message_cells.emplace_back(i, j);
    p.message_bits = 2 * p.t * p.window_bits_per_block + p.regions.free_message_cells.size();
    p.parity_ready = true;
}

struct CapacityBreakdown {
    std::size_t window_blocks = 0;
    std::size_t window_bits_per_block = 0;
    std::size_t window_bits_total = 0;
    std::size_t free_message_bits = 0;
    std::size_t parity_cells = 0;
    std::size_t total = 0;
};

inline CapacityBreakdown message_capacity(const CodeParams& p) {
    CapacityBreakdown b;
    b.window_blocks = 2 * p.t;
    b.window_bits_per_block = p.window_bits_per_block;
    b.window_bits_total = b.window_blocks * b.window_bits_per_block;
    b.parity_cells = p.t * p.n;
    b.free_message_bits = p.parity_ready ? p.regions.free_message_cells.size()
                                         : detail::count_free_cells(p) - b.parity_cells;
    b.total = b.window_bits_total + b.free_message_bits;
    return b;
}

// Everything bundled for one (n, t) instance.
struct CodecInstance {
    CodeParams params;
    FieldContext ctx;
    GabidulinCode gab;
};

inline CodecInstance make_codec(std::size_t n, std::size_t t, std::optional<std::size_t> ell_opt = std::nullopt,
                                std::uint64_t base_salt = 0) {
    CodeParams params = make_params(n, t, ell_opt, base_salt);
    FieldContext ctx{int(n)};
    GabidulinCode gab = GabidulinCode::build(n, t, ctx);
    select_parity_cells(params, gab);
    return CodecInstance{std::move(params), std::move(ctx), std::move(gab)};
}

namespace detail {

inline BitArray2D locator_cells(std::size_t s, std::size_t t, LocatorOrientation o) {
    return build_locator(s, t, o).cells;
}

// Column value of a window block stored at rows [r0, r0+ell) x column c.
inline std::uint32_t read_block_column(const BitArray2D& X, std::size_t r0, std::size_t c, std::size_t ell) {
    std::uint32_t v = 0;
    for (std::size_t r = 0; r < ell; ++r)
        if (X.get(r0 + r, c)) v |= std::uint32_t(1) << (ell - 1 - r);
    return v;
}

}  // namespace detail

// Paints the fixed structure (locators + markers) into X.
inline void write_fixed_regions(const CodeParams& p, BitArray2D& X) {
    const MarkerSet mk = build_markers(p.t);
    X.blit(p.regions.l1.r0, p.regions.l1.c0, detail::locator_cells(p.s_L, p.t, LocatorOrientation::L));
    X.blit(p.regions.t1.r0, p.regions.t1.c0, detail::locator_cells(p.s_T, p.t, LocatorOrientation::T));
    X.blit(p.regions.t2.r0, p.regions.t2.c0, detail::locator_cells(p.s_L, p.t, LocatorOrientation::T));
    X.blit(p.regions.l2.r0, p.regions.l2.c0, detail::locator_cells(p.s_T, p.t, LocatorOrientation::L));
    X.blit(p.regions.e11.r0, p.regions.e11.c0, mk.e11);
    X.blit(p.regions.e12.r0, p.regions.e12.c0, mk.e12);
    X.blit(p.regions.e21.r0, p.regions.e21.c0, mk.e21);
    X.blit(p.regions.e22.r0, p.regions.e22.c0, mk.e22);
}

// Encoder: locators/markers, window blocks from the message, free cells, row
// redundancy, then the Gabidulin parity solve over the reserved cells.
inline BitArray2D encode(const CodeParams& p, const GabidulinCode& gab, const Bits& message) {
    if (!p.parity_ready) throw InvalidParams("encode: parity cells not selected");
    if (message.size() != p.message_bits) throw LengthMismatch("encode: message length mismatch");
    const std::size_t TL = p.top();

    BitArray2D X(p.n, p.n);
    write_fixed_regions(p, X);

    std::size_t cursor = 0;
    auto take_bits = [&](std::size_t k) {
        Bits b(message.begin() + long(cursor), message.begin() + long(cursor + k));
        cursor += k;
        return b;
    };

    // Window blocks: t horizontal, then t vertical.
    std::vector<WindowBlock> h_blocks, v_blocks;
    for (std::size_t a = 0; a < p.t; ++a) {
        const BigUint m = BigUint::from_bits_msb(take_bits(p.window_bits_per_block));
        h_blocks.push_back(window_unrank(m, p.ell, p.t, p.w));
    }
    for (std::size_t b = 0; b < p.t; ++b) {
        const BigUint m = BigUint::from_bits_msb(take_bits(p.window_bits_per_block));
        v_blocks.push_back(window_unrank(m, p.ell, p.t, p.w));
    }
    for (std::size_t a = 0; a < p.t; ++a)
        for (std::size_t i = 0; i < p.w; ++i)
            for (std::size_t r = 0; r < p.ell; ++r)
                X.set(a * p.ell + r, TL + i, (h_blocks[a].columns[i] >> (p.ell - 1 - r)) & 1u);
    for (std::size_t b = 0; b < p.t; ++b)
        for (std::size_t i = 0; i < p.w; ++i)
            for (std::size_t r = 0; r < p.ell; ++r)
                X.set(TL + i, b * p.ell + r, (v_blocks[b].columns[i] >> (p.ell - 1 - r)) & 1u);

    // Free message cells.
    for (const auto& [i, j] : p.regions.free_message_cells) X.set(i, j, take_bits(1)[0] != 0);
    if (cursor != message.size()) throw LengthMismatch("encode: message layout mismatch");

    // Row/column redundancy.
    for (std::size_t line = 0; line < TL; ++line) {
        const Bits data = X.row_bits(line, TL, p.w);
        if (p.row_mode == RowCodeMode::HASH && p.w <= p.certify_below_w && !certify_separation(data, p.h_cfgs[line]))
            throw EncodingFailure("encode: hash fails to separate an H line's confusion set");
        const Bits red = encode_redundancy(data, p.h_cfgs[line]);
        for (std::size_t j = 0; j < p.r_w; ++j) X.set(line, TL + p.w + j, red[j] != 0);
    }
    for (std::size_t line = 0; line < TL; ++line) {
        const Bits data = X.col_bits(line, TL, p.w);
        if (p.row_mode == RowCodeMode::HASH && p.w <= p.certify_below_w && !certify_separation(data, p.v_cfgs[line]))
            throw EncodingFailure("encode: hash fails to separate a V line's confusion set");
        const Bits red = encode_redundancy(data, p.v_cfgs[line]);
        for (std::size_t j = 0; j < p.r_w; ++j) X.set(TL + p.w + j, line, red[j] != 0);
    }

    // Parity solve over the reserved cells.
    const BitArray2D& H = gab.parity_check_binary();
    const Bits rhs = matvec_gf2(H, GabidulinCode::vec(X));  // parity cells are still 0
    BitArray2D A(H.rows(), p.regions.parity_cells.size());
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t u = 0; u < p.regions.parity_cells.size(); ++u) {
            const auto& [i, j] = p.regions.parity_cells[u];
            if (H.get(r, i * p.n + j)) A.set(r, u, true);
        }
    const auto sol = solve_gf2(A, rhs);
    if (!sol) throw EncodingFailure("encode: parity system inconsistent despite certified selection");
    for (std::size_t u = 0; u < p.regions.parity_cells.size(); ++u) {
        const auto& [i, j] = p.regions.parity_cells[u];
        X.set(i, j, (*sol)[u] != 0);
    }
    return X;
}

// Reads the message back out of a codeword.
inline Bits extract_message(const CodeParams& p, const BitArray2D& X) {
    const std::size_t TL = p.top();
    Bits out;
    out.reserve(p.message_bits);
    auto push_block = [&](const WindowBlock& blk) {
        const Bits bits = window_rank(blk).to_bits_msb(p.window_bits_per_block);
        out.insert(out.end(), bits.begin(), bits.end());
    };
    for (std::size_t a = 0; a < p.t; ++a) {
        WindowBlock blk;
        blk.ell = p.ell;
        blk.w = p.w;
        blk.t = p.t;
        blk.columns.resize(p.w);
        for (std::size_t i = 0; i < p.w; ++i) blk.columns[i] = detail::read_block_column(X, a * p.ell, TL + i, p.ell);
        push_block(blk);
    }
    for (std::size_t b = 0; b < p.t; ++b) {
        WindowBlock blk;
        blk.ell = p.ell;
        blk.w = p.w;
        blk.t = p.t;
        blk.columns.resize(p.w);
        for (std::size_t i = 0; i < p.w; ++i) {
            std::uint32_t v = 0;
            for (std::size_t r = 0; r < p.ell; ++r)
                if (X.get(TL + i, b * p.ell + r)) v |= std::uint32_t(1) << (p.ell - 1 - r);
            blk.columns[i] = v;
        }
        push_block(blk);
    }
    for (const auto& [i, j] : p.regions.free_message_cells) out.push_back(X.get(i, j) ? 1 : 0);
    return out;
}

struct MembershipReport {
    bool h_ok = false, v_ok = false, e_ok = false, m_ok = false, window_ok = false;
    std::string first_violation;

    bool all() const { return h_ok && v_ok && e_ok && m_ok && window_ok; }
};

inline MembershipReport validate_locator_set_membership(const CodeParams& p, const BitArray2D& X) {
    if (X.rows() != p.n || X.cols() != p.n) throw DimensionMismatch("validate: array must be n x n");
    MembershipReport rep;
    const std::size_t TL = p.top();
    auto note = [&](const std::string& s) {
        if (rep.first_violation.empty()) rep.first_violation = s;
    };

    rep.e_ok = X.sub(p.regions.l1.r0, p.regions.l1.c0, p.regions.l1.rows, p.regions.l1.cols) ==
                   detail::locator_cells(p.s_L, p.t, LocatorOrientation::L) &&
               X.sub(p.regions.t1.r0, p.regions.t1.c0, p.regions.t1.rows, p.regions.t1.cols) ==
                   detail::locator_cells(p.s_T, p.t, LocatorOrientation::T) &&
               X.sub(p.regions.t2.r0, p.regions.t2.c0, p.regions.t2.rows, p.regions.t2.cols) ==
                   detail::locator_cells(p.s_L, p.t, LocatorOrientation::T) &&
               X.sub(p.regions.l2.r0, p.regions.l2.c0, p.regions.l2.rows, p.regions.l2.cols) ==
                   detail::locator_cells(p.s_T, p.t, LocatorOrientation::L);
    if (!rep.e_ok) note("E: a locator array region is corrupted");

    const MarkerSet mk = build_markers(p.t);
    rep.m_ok = X.sub(p.regions.e11.r0, p.regions.e11.c0, p.tp1(), p.tp1()) == mk.e11 &&
               X.sub(p.regions.e12.r0, p.regions.e12.c0, p.tp1(), p.tp1()) == mk.e12 &&
               X.sub(p.regions.e21.r0, p.regions.e21.c0, p.tp1(), p.tp1()) == mk.e21 &&
               X.sub(p.regions.e22.r0, p.regions.e22.c0, p.tp1(), p.tp1()) == mk.e22;
    if (!rep.m_ok) note("M: a marker region is corrupted");

    rep.window_ok = true;
    for (std::size_t a = 0; a < p.t && rep.window_ok; ++a) {
        WindowBlock blk;
        blk.ell = p.ell;
        blk.w = p.w;
        blk.t = p.t;
        blk.columns.resize(p.w);
        for (std::size_t i = 0; i < p.w; ++i) blk.columns[i] = detail::read_block_column(X, a * p.ell, TL + i, p.ell);
        if (!window_valid(blk)) rep.window_ok = false;
        try {
            (void)window_rank(blk);
        } catch (const NotEncodable&) {
            rep.window_ok = false;
        }
    }
    for (std::size_t b = 0; b < p.t && rep.window_ok; ++b) {
        WindowBlock blk;
        blk.ell = p.ell;
        blk.w = p.w;
        blk.t = p.t;
        blk.columns.resize(p.w);
        for (std::size_t i = 0; i < p.w; ++i) {
            std::uint32_t v = 0;
            for (std::size_t r = 0; r < p.ell; ++r)
                if (X.get(TL + i, b * p.ell + r)) v |= std::uint32_t(1) << (p.ell - 1 - r);
            blk.columns[i] = v;
        }
        if (!window_valid(blk)) rep.window_ok = false;
        try {
            (void)window_rank(blk);
        } catch (const NotEncodable&) {
            rep.window_ok = false;
        }
    }
    if (!rep.window_ok) note("window: a block violates the window constraint or is not encodable");

    rep.h_ok = true;
    for (std::size_t line = 0; line < TL && rep.h_ok; ++line) {
        const Bits data = X.row_bits(line, TL, p.w);
        const Bits red = X.row_bits(line, TL + p.w, p.r_w);
        if (encode_redundancy(data, p.h_cfgs[line]) != red) rep.h_ok = false;
    }
    if (!rep.h_ok) note("H: a row redundancy does not match its data");

    rep.v_ok = true;
    for (std::size_t line = 0; line < TL && rep.v_ok; ++line) {
        const Bits data = X.col_bits(line, TL, p.w);
        const Bits red = X.col_bits(line, TL + p.w, p.r_w);
        if (encode_redundancy(data, p.v_cfgs[line]) != red) rep.v_ok = false;
    }
    if (!rep.v_ok) note("V: a column redundancy does not match its data");

    return rep;
}

struct RedundancyBreakdown {
    std::size_t r_g = 0;
    std::size_t r_e_actual = 0, r_m_actual = 0, r_hv_actual = 0;
    std::size_t total_actual = 0;
    double r_e_stated_bound = 0, r_m_closed_form = 0, r_hv_stated_bound = 0;
    double construction_upper = 0, lower_bound = 0;
};

inline RedundancyBreakdown redundancy_accounting(const CodeParams& p) {
    RedundancyBreakdown b;
    const double lg = std::log2(double(p.n));
    const double td = double(p.t);
    b.r_g = p.t * p.n;
    b.r_e_actual = p.regions.l1.rows * p.regions.l1.cols + p.regions.t1.rows * p.regions.t1.cols +
                   p.regions.t2.rows * p.regions.t2.cols + p.regions.l2.rows * p.regions.l2.cols;
    b.r_m_actual = 4 * p.tp1() * p.tp1();
    const std::size_t window_loss = p.ell * p.w - p.window_bits_per_block;
    b.r_hv_actual = 2 * p.t * (window_loss + p.ell * p.r_w);
    b.total_actual = p.n * p.n - message_capacity(p).total;

    b.r_e_stated_bound = (6 * td * td * td + 13 * td * td + 8 * td + 1) * lg;
    b.r_m_closed_form = 4.0 * (td + 1) * (td + 1);
    b.r_hv_stated_bound = 2 * td * ((5 * td + 1) * lg + 2 * (td + 1) + lg * double(p.r_w));
    b.construction_upper = construction_upper_bound_bits(p.n, p.t);
    b.lower_bound = lower_bound_redundancy(p.n, p.t);

    if (b.r_m_actual != std::size_t(b.r_m_closed_form)) throw Error("accounting: marker cells != 4(t+1)^2");
    if (double(b.r_hv_actual) > b.r_hv_stated_bound + 1e-9)
        throw Error("accounting: H/V redundancy exceeds the stated bound");
    return b;
}

}  // namespace crisscross

#include "codec_decode.hpp"

#endif
