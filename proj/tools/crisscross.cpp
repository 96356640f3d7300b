// Command-line front end: parameter inspection, encode/corrupt/decode sweeps,
// bound tables, equivalence sampling, and a quick self-test.
//
// Exit codes: 0 success, 2 invalid parameters, 3 decode failure,
// 4 I/O error, 5 equivalence counterexample found.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <crisscross/analysis.hpp>
#include <crisscross/codec.hpp>
#include <crisscross/serialize.hpp>

using namespace crisscross;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDecode = 3;
constexpr int kExitIo = 4;
constexpr int kExitCounterexample = 5;

// Mirrors the stream to an optional report file.
class Out {
   public:
    explicit Out(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw IoError("cannot open report file: " + path);
        }
    }
    template <typename T>
    Out& operator<<(const T& v) {
        std::cout << v;
        if (file_.is_open()) file_ << v;
        return *this;
    }

   private:
    std::ofstream file_;
};

int cmd_params(std::size_t n, std::size_t t, std::optional<std::size_t> ell, std::uint64_t salt) {
    try {
        const CodecInstance inst = make_codec(n, t, ell, salt);
        const CodeParams& p = inst.params;
        const CapacityBreakdown cb = message_capacity(p);
        const RedundancyBreakdown rb = redundancy_accounting(p);
        std::cout << "n=" << p.n << " t=" << p.t << " ell=" << p.ell << " w=" << p.w << " r_w=" << p.r_w
                  << " s_L=" << p.s_L << " s_T=" << p.s_T << " mode="
                  << (p.row_mode == RowCodeMode::VT ? "VT" : "HASH") << "\n";
        std::cout << "message_bits=" << cb.total << " (window " << cb.window_bits_total << " = " << cb.window_blocks
                  << " blocks x " << cb.window_bits_per_block << ", free " << cb.free_message_bits << ", parity "
                  << cb.parity_cells << ")\n";
        std::cout << "redundancy=" << rb.total_actual << " [lower " << rb.lower_bound << ", construction upper "
                  << rb.construction_upper << "]\n";
        auto rect = [](const char* name, const Rect& r) {
            std::cout << "  " << name << ": rows [" << r.r0 << ", " << r.r0 + r.rows << ") cols [" << r.c0 << ", "
                      << r.c0 + r.cols << ")\n";
        };
        std::cout << "regions (0-based, half-open):\n";
        rect("H_sys", p.regions.h_sys);
        rect("H_red", p.regions.h_red);
        rect("V_sys", p.regions.v_sys);
        rect("V_red", p.regions.v_red);
        rect("L1   ", p.regions.l1);
        rect("T1   ", p.regions.t1);
        rect("T2   ", p.regions.t2);
        rect("L2   ", p.regions.l2);
        rect("E11  ", p.regions.e11);
        rect("E12  ", p.regions.e12);
        rect("E21  ", p.regions.e21);
        rect("E22  ", p.regions.e22);
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "params: " << e.what() << "\n";
        return kExitInvalid;
    }
}

struct ExperimentSpec {
    std::size_t n = 64, t = 1;
    std::optional<std::size_t> ell;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string mode = "deletion";
    std::string pattern_source = "random";
    std::string pattern_file;
    std::string report_path;
};

std::vector<ChannelPattern> exhaustive_deletion_patterns(std::size_t n, std::size_t t) {
    std::vector<ChannelPattern> out;
    for (std::size_t tr = 0; tr <= t; ++tr) {
        const std::size_t tc = t - tr;
        detail::for_each_combination(n, tr, [&](const std::vector<std::size_t>& R) {
            detail::for_each_combination(n, tc, [&](const std::vector<std::size_t>& C) {
                ChannelPattern p;
                p.mode = ChannelMode::Deletion;
                for (std::size_t r : R) p.row_ops.push_back({r, {}});
                for (std::size_t c : C) p.col_ops.push_back({c, {}});
                out.push_back(std::move(p));
            });
        });
    }
    return out;
}

double count_exhaustive_patterns(std::size_t n, std::size_t t) {
    double total = 0;
    for (std::size_t tr = 0; tr <= t; ++tr) {
        double a = 1, b = 1;
        for (std::size_t i = 0; i < tr; ++i) a = a * double(n - i) / double(i + 1);
        for (std::size_t i = 0; i < t - tr; ++i) b = b * double(n - i) / double(i + 1);
        total += a * b;
    }
    return total;
}

int cmd_roundtrip(const ExperimentSpec& spec) {
    if (spec.trials < 1) {
        std::cerr << "roundtrip: trials must be >= 1\n";
        return kExitInvalid;
    }
    if (spec.mode != "deletion" && spec.mode != "insertion" && spec.mode != "both") {
        std::cerr << "roundtrip: mode must be deletion, insertion or both\n";
        return kExitInvalid;
    }
    if (spec.pattern_source != "random" && spec.pattern_source != "exhaustive" && spec.pattern_source != "file") {
        std::cerr << "roundtrip: pattern-source must be random, exhaustive or file\n";
        return kExitInvalid;
    }

    std::vector<ChannelPattern> patterns;
    if (spec.pattern_source == "exhaustive") {
        if (spec.mode != "deletion") {
            std::cerr << "roundtrip: exhaustive patterns exist only for the deletion mode\n";
            return kExitInvalid;
        }
        if (count_exhaustive_patterns(spec.n, spec.t) > 1e6) {
            std::cerr << "roundtrip: exhaustive pattern space exceeds 10^6\n";
            return kExitInvalid;
        }
    } else if (spec.pattern_source == "file") {
        std::ifstream in(spec.pattern_file);
        if (!in) {
            std::cerr << "roundtrip: cannot open pattern file\n";
            return kExitIo;
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                patterns.push_back(pattern_from_json(json::parse(line)));
            } catch (const std::exception& e) {
                std::cerr << "roundtrip: bad pattern line: " << e.what() << "\n";
                return kExitIo;
            }
        }
        if (patterns.empty()) {
            std::cerr << "roundtrip: pattern file holds no patterns\n";
            return kExitIo;
        }
    }

    try {
        const CodecInstance inst = make_codec(spec.n, spec.t, spec.ell, 0);
        if (spec.pattern_source == "exhaustive") patterns = exhaustive_deletion_patterns(spec.n, spec.t);

        Out out(spec.report_path);
        std::mt19937_64 rng(spec.seed);
        const std::size_t total = (spec.pattern_source == "random") ? spec.trials : patterns.size();
        std::size_t successes = 0;
        for (std::size_t trial = 0; trial < total; ++trial) {
            Bits msg(inst.params.message_bits);
            for (auto& b : msg) b = std::uint8_t(rng() & 1);
            const BitArray2D cw = encode(inst.params, inst.gab, msg);

            ChannelPattern pat;
            if (spec.pattern_source == "random") {
                ChannelMode m = (spec.mode == "deletion")    ? ChannelMode::Deletion
                                : (spec.mode == "insertion") ? ChannelMode::Insertion
                                                             : (trial % 2 ? ChannelMode::Insertion
                                                                          : ChannelMode::Deletion);
                pat = random_pattern(spec.n, spec.n, spec.t, m, rng());
            } else {
                pat = patterns[trial];
            }

            json line;
            line["trial"] = trial;
            line["pattern"] = pattern_to_json(pat);
            bool okay = false;
            try {
                const BitArray2D recv = channel_apply(cw, pat);
                const DecodeResult res = decode(inst.params, inst.gab, recv);
                okay = res.codeword == cw && res.message == msg && res.report.success;
                line["report"] = report_to_json(res.report);
            } catch (const Error& e) {
                line["error"] = e.what();
            }
            line["success"] = okay;
            successes += okay;
            out << line.dump() << "\n";
        }
        json summary;
        summary["trials"] = total;
        summary["success_rate"] = total ? double(successes) / double(total) : 0.0;
        out << summary.dump() << "\n";
        return successes == total ? kExitOk : kExitDecode;
    } catch (const TooSmall& e) {
        std::cerr << "roundtrip: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidParams& e) {
        std::cerr << "roundtrip: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const IoError& e) {
        std::cerr << "roundtrip: " << e.what() << "\n";
        return kExitIo;
    }
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidParams("empty list entry");
        std::size_t pos = 0;
        const unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw InvalidParams("malformed list entry: " + item);
        out.push_back(v);
    }
    return out;
}

int cmd_bounds(const std::string& n_list, const std::string& t_list, const std::string& report_path) {
    try {
        const auto ns = parse_list(n_list);
        const auto ts = parse_list(t_list);
        if (ns.empty() || ts.empty()) {
            std::cerr << "bounds: n-list and t-list must be nonempty\n";
            return kExitInvalid;
        }
        std::vector<BoundsRecord> rows;
        for (std::size_t n : ns)
            for (std::size_t t : ts) rows.push_back(bounds_record(n, t));
        std::ostringstream os;
        write_bounds_csv(os, rows);
        Out out(report_path);
        out << os.str();
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return kExitInvalid;
    }
}

int cmd_equivalence(const std::string& shape, std::size_t t, std::size_t pairs, std::uint64_t seed,
                    const std::string& report_path) {
    std::size_t rows = 0, cols = 0;
    {
        const auto x = shape.find('x');
        try {
            if (x == std::string::npos) throw InvalidParams("shape must look like 3x3");
            rows = std::stoul(shape.substr(0, x));
            cols = std::stoul(shape.substr(x + 1));
        } catch (const std::exception&) {
            std::cerr << "equivalence: shape must look like 3x3\n";
            return kExitInvalid;
        }
    }
    if (pairs == 0) {
        std::cerr << "equivalence: pairs must be >= 1\n";
        return kExitInvalid;
    }
    try {
        std::mt19937_64 rng(seed);
        std::size_t counterexamples = 0;
        for (std::size_t it = 0; it < pairs; ++it) {
            BitArray2D x1(rows, cols), x2(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    x1.set(i, j, rng() & 1);
                    x2.set(i, j, rng() & 1);
                }
            if (!equivalence_check(x1, x2, t)) ++counterexamples;
        }
        json summary;
        summary["pairs_tested"] = pairs;
        summary["counterexamples"] = counterexamples;
        Out out(report_path);
        out << summary.dump() << "\n";
        return counterexamples == 0 ? kExitOk : kExitCounterexample;
    } catch (const TooLarge& e) {
        std::cerr << "equivalence: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidParams& e) {
        std::cerr << "equivalence: " << e.what() << "\n";
        return kExitInvalid;
    }
}

int cmd_selftest() {
    struct Step {
        const char* name;
        bool ok;
    };
    std::vector<Step> steps;
    auto run = [&](const char* name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::cout << "  " << name << " threw: " << e.what() << "\n";
        }
        steps.push_back({name, ok});
        std::cout << (ok ? "  [ok] " : "  [FAIL] ") << name << "\n";
    };

    run("field axioms (GF(256))", [] {
        FieldContext ctx(8);
        std::mt19937_64 rng(1);
        for (int i = 0; i < 100; ++i) {
            const FieldElement a = fe_from_u64(rng() & 255), b = fe_from_u64(rng() & 255);
            if (ctx.mul(a, b) != ctx.mul(b, a)) return false;
            if (!a.is_zero() && ctx.mul(a, ctx.inv(a)) != ctx.one()) return false;
        }
        return true;
    });
    run("window bijection (2401 messages)", [] {
        for (std::uint64_t m = 0; m < 2401; ++m)
            if (window_rank(window_unrank(BigUint(m), 3, 1, 4)) != BigUint(m)) return false;
        return true;
    });
    run("locator detection (t=1, s=4, exhaustive)", [] {
        const BitArray2D L = build_locator(4, 1, LocatorOrientation::L).cells;
        for (std::size_t r = 0; r < 4; ++r)
            if (locate_deletions_L(L.delete_rows_cols({r}, {}), 4, 1).deleted_rows != std::vector<std::size_t>{r})
                return false;
        return true;
    });
    run("equivalence property (400 pairs, 3x3, t=1)", [] {
        std::mt19937_64 rng(2);
        for (int it = 0; it < 400; ++it) {
            BitArray2D x1(3, 3), x2(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    x1.set(i, j, rng() & 1);
                    x2.set(i, j, rng() & 1);
                }
            if (!equivalence_check(x1, x2, 1)) return false;
        }
        return true;
    });
    run("codec roundtrip (n=64, t=1, 24 patterns)", [] {
        const CodecInstance inst = make_codec(64, 1);
        std::mt19937_64 rng(3);
        Bits m(inst.params.message_bits);
        for (auto& b : m) b = std::uint8_t(rng() & 1);
        const BitArray2D c = encode(inst.params, inst.gab, m);
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const auto pat = random_pattern(64, 64, 1, ChannelMode::Deletion, seed);
            if (decode(inst.params, inst.gab, channel_apply(c, pat)).codeword != c) return false;
        }
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const auto pat = random_pattern(64, 64, 1, ChannelMode::Insertion, seed);
            if (decode(inst.params, inst.gab, channel_apply(c, pat)).codeword != c) return false;
        }
        return true;
    });
    run("array text format roundtrip", [] {
        std::mt19937_64 rng(4);
        BitArray2D a(9, 17);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 17; ++j) a.set(i, j, rng() & 1);
        return BitArray2D::from_text(a.to_text()) == a;
    });

    for (const auto& s : steps)
        if (!s.ok) {
            std::cout << "selftest: FAILED\n";
            return 1;
        }
    std::cout << "selftest: all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-criss-cross insertion/deletion correcting codes for n x n binary arrays"};
    app.require_subcommand(1);

    std::size_t n = 64, t = 1;
    std::optional<std::size_t> ell;
    std::size_t ell_raw = 0;
    std::uint64_t seed = 0;
    ExperimentSpec spec;
    std::string n_list, t_list, shape = "3x3";
    std::size_t pairs = 1000;
    std::string report_path, format = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "array side length");
        cmd->add_option("--t", t, "total indel budget");
        cmd->add_option("--ell", ell_raw, "window block height (default: redundancy-optimal near log2 n)");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--report", report_path, "also write the output stream to this file");
        cmd->add_option("--format", format, "output format (json|csv where applicable)");
    };

    CLI::App* c_params = app.add_subcommand("params", "derive and print the code layout for (n, t)");
    add_common(c_params);

    CLI::App* c_round = app.add_subcommand("roundtrip", "encode/corrupt/decode sweeps with JSON-line reports");
    add_common(c_round);
    c_round->add_option("--trials", spec.trials, "number of random trials");
    c_round->add_option("--mode", spec.mode, "deletion | insertion | both");
    c_round->add_option("--pattern-source", spec.pattern_source, "random | exhaustive | file");
    c_round->add_option("--pattern-file", spec.pattern_file, "JSON-lines pattern file for --pattern-source file");

    CLI::App* c_bounds = app.add_subcommand("bounds", "emit the redundancy bound table as CSV");
    c_bounds->add_option("--n-list", n_list, "comma-separated n values")->required();
    c_bounds->add_option("--t-list", t_list, "comma-separated t values")->required();
    c_bounds->add_option("--report", report_path, "also write the CSV to this file");
    c_bounds->add_option("--format", format, "output format (csv)");

    CLI::App* c_equiv = app.add_subcommand("equivalence", "sample array pairs and test the equivalence theorem");
    c_equiv->add_option("--shape", shape, "array shape, e.g. 3x3");
    c_equiv->add_option("--t", t, "indel budget");
    c_equiv->add_option("--pairs", pairs, "number of sampled pairs");
    c_equiv->add_option("--seed", seed, "random seed");
    c_equiv->add_option("--report", report_path, "also write the summary to this file");
    c_equiv->add_option("--format", format, "output format (json)");

    app.add_subcommand("selftest", "run a quick internal battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (c_params->count("--ell") || c_round->count("--ell")) ell = ell_raw;

    // Each subcommand has one natural stream format; reject the other rather
    // than mixing streams.
    if (format != "json" && format != "csv") {
        std::cerr << "unknown format: " << format << "\n";
        return kExitInvalid;
    }
    if (format == "csv" && (app.got_subcommand("roundtrip") || app.got_subcommand("equivalence"))) {
        std::cerr << "this subcommand emits JSON lines only\n";
        return kExitInvalid;
    }
    if (c_bounds->count("--format") && format == "json") {
        std::cerr << "bounds emits CSV only\n";
        return kExitInvalid;
    }

    if (app.got_subcommand("params")) return cmd_params(n, t, ell, seed);
    if (app.got_subcommand("roundtrip")) {
        spec.n = n;
        spec.t = t;
        spec.ell = ell;
        spec.seed = seed;
        spec.report_path = report_path;
        return cmd_roundtrip(spec);
    }
    if (app.got_subcommand("bounds")) return cmd_bounds(n_list, t_list, report_path);
    if (app.got_subcommand("equivalence")) return cmd_equivalence(shape, t, pairs, seed, report_path);
    if (app.got_subcommand("selftest")) return cmd_selftest();
    return kExitInvalid;
}
