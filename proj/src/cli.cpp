#include "delball/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "delball/balls.hpp"
#include "delball/extremal.hpp"
#include "delball/reconstruct.hpp"

namespace delball::cli {

namespace {

using nlohmann::json;

constexpr long long kMaxGridValue = 4096;

IntRange parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected an integer or LO:HI, got '" + text + "'");
    }
}

// rows are flat field/value lists; csv quotes nothing because no emitted
// value ever contains a comma
class RowWriter {
public:
    RowWriter(std::ostream& out, std::string format, std::vector<std::string> columns)
        : out_(out), json_(format == "json"), columns_(std::move(columns)) {
        if (!json_) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out_ << (i ? "," : "") << columns_[i];
            out_ << '\n';
        }
    }

    void row(const std::vector<json>& values) {
        if (json_) {
            json obj = json::object();
            for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = values[i];
            out_ << obj.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) out_ << ',';
                if (values[i].is_string())
                    out_ << values[i].get<std::string>();
                else if (values[i].is_boolean())
                    out_ << (values[i].get<bool>() ? "true" : "false");
                else
                    out_ << values[i].dump();
            }
            out_ << '\n';
        }
    }

private:
    std::ostream& out_;
    bool json_;
    std::vector<std::string> columns_;
};

std::string join_words(const std::vector<BitWord>& words) {
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += ';';
        s += words[i].str();
    }
    return s;
}

std::string join_set(const SequenceSet& set) {
    std::string s;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ';';
        s += set.word(i).str();
    }
    return s;
}

void check_grid(const RunConfig& cfg, long long min_ell) {
    auto check = [](const IntRange& r, long long lo_limit, const char* name) {
        if (r.lo > r.hi) return;  // empty range is a valid, empty grid
        if (r.lo < lo_limit || r.hi > kMaxGridValue)
            throw std::domain_error(std::string(name) + " range [" + std::to_string(r.lo) +
                                    ":" + std::to_string(r.hi) + "] outside [" +
                                    std::to_string(lo_limit) + ":" +
                                    std::to_string(kMaxGridValue) + "]");
    };
    check(cfg.n, 0, "n");
    check(cfg.t, 0, "t");
    check(cfg.ell, min_ell, "ell");
}

int run_table(const RunConfig& cfg, std::ostream& out) {
    check_grid(cfg, 2);
    RowWriter w(out, cfg.format, {"n", "l", "t", "D", "N_formula", "N_recursive", "equal"});
    CountMemo memo;
    bool all_equal = true;
    for (long long n = cfg.n.lo; n <= cfg.n.hi; ++n)
        for (long long ell = cfg.ell.lo; ell <= cfg.ell.hi; ++ell)
            for (long long t = cfg.t.lo; t <= cfg.t.hi; ++t) {
                const Count d = ball_size_D(n, t);
                const Count d_rec = ball_size_D_recursive(n, t, memo);
                const Count nf = intersection_bound_N(n, ell, t);
                const Count nr = intersection_bound_N_recursive(n, ell, t, memo);
                const bool equal = d == d_rec && nf == nr;
                all_equal = all_equal && equal;
                w.row({n, ell, t, d.str(), nf.str(), nr.str(), equal});
            }
    return all_equal ? kExitOk : kExitMismatch;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_grid(cfg, 2);
    std::vector<GridPoint> grid;
    for (long long n = cfg.n.lo; n <= cfg.n.hi; ++n)
        for (long long ell = cfg.ell.lo; ell <= cfg.ell.hi; ++ell)
            for (long long t = cfg.t.lo; t <= cfg.t.hi; ++t)
                grid.push_back({static_cast<int>(n), static_cast<int>(ell),
                                static_cast<int>(t)});

    // fail fast: every point must satisfy preconditions and budget before any
    // output is produced
    const SearchBudget budget;
    for (const auto& p : grid) {
        if (p.ell < 2) throw std::domain_error("verify: ell must be at least 2");
        if (p.t < 1) throw std::domain_error("verify: t must be at least 1");
        if (p.n < p.t + 1) throw std::domain_error("verify: requires n >= t+1");
        if (p.n > budget.max_n)
            throw BudgetError("verify: n=" + std::to_string(p.n) + " exceeds max_n=" +
                              std::to_string(budget.max_n));
        const Count tuples = binom(1ll << p.n, p.ell);
        if (tuples > budget.max_tuples)
            throw BudgetError("verify: C(2^" + std::to_string(p.n) + "," +
                              std::to_string(p.ell) + ") = " + tuples.str() +
                              " exceeds max_tuples = " + budget.max_tuples.str());
    }

    std::ofstream cert_file;
    if (!cfg.certificates_path.empty()) {
        cert_file.open(cfg.certificates_path);
        if (!cert_file)
            throw std::invalid_argument("cannot open certificate path: " +
                                        cfg.certificates_path);
    }

    RowWriter w(out, cfg.format,
                {"n", "l", "t", "formula", "brute_force", "verdict", "witness",
                 "tuples_examined", "tuples_pruned"});
    bool asserted_ok = true;
    for (const auto& p : grid) {
        std::vector<SearchReport> reports =
            verify_theorem({p}, cfg.use_symmetry, cfg.threads, budget);
        const SearchReport& r = reports.front();
        w.row({r.n, r.ell, r.t, r.formula_value.str(), r.max_value, to_string(r.verdict),
               join_words(r.witness), r.tuples_examined, r.tuples_pruned});
        if (cert_file.is_open()) cert_file << certificate(r) << '\n';
        if (cfg.assert_roundtrip &&
            intersection_size(r.witness, r.t) != r.max_value) {
            err << "verify: witness round-trip failed at n=" << r.n << " l=" << r.ell
                << " t=" << r.t << '\n';
            asserted_ok = false;
        }
        if (r.verdict != Verdict::match) {
            // assert only inside the formula's claimed domain: n >= t+l-1 and
            // t >= l-1; everything else is reported as a finding
            if (r.t >= r.ell - 1 && r.n >= r.t + r.ell - 1) {
                err << "verify: MISMATCH at n=" << r.n << " l=" << r.ell << " t=" << r.t
                    << " (formula " << r.formula_value.str() << ", brute force "
                    << r.max_value << ")\n";
                asserted_ok = false;
            } else {
                err << "verify: finding at n=" << r.n << " l=" << r.ell << " t=" << r.t
                    << " (outside the asserted domain): formula "
                    << r.formula_value.str() << ", brute force " << r.max_value << '\n';
            }
        }
    }
    return asserted_ok ? kExitOk : kExitMismatch;
}

long long scalar(const IntRange& r, const char* name) {
    if (r.lo != r.hi)
        throw std::domain_error(std::string("expected a single value for ") + name);
    return r.lo;
}

int run_ball(const RunConfig& cfg, std::ostream& out) {
    const BitWord x = BitWord::parse(cfg.x_text);
    out << deletion_ball(x, static_cast<int>(scalar(cfg.t, "--t"))).to_text();
    return kExitOk;
}

int run_reconstruct(const RunConfig& cfg, std::ostream& out) {
    const int n = static_cast<int>(scalar(cfg.n, "--n"));
    const int ell = static_cast<int>(scalar(cfg.ell, "--ell"));
    ReadSet rs;
    if (!cfg.reads_path.empty()) {
        std::ifstream in(cfg.reads_path);
        if (!in) throw std::invalid_argument("cannot open read file: " + cfg.reads_path);
        rs = parse_read_file(n, in);
    } else {
        const BitWord x = BitWord::parse(cfg.x_text);
        if (x.length() != n)
            throw std::domain_error("reconstruct: --x length differs from --n");
        rs = sample_reads(x, static_cast<int>(scalar(cfg.t, "--t")),
                          static_cast<std::size_t>(*cfg.sample_m), cfg.seed);
    }
    const ReconstructionReport rep = check_guarantee(n, ell, rs.t(), rs);
    RowWriter w(out, cfg.format,
                {"n", "l", "t", "read_count", "threshold", "guarantee_met",
                 "list_within_bound", "candidate_count", "candidates"});
    w.row({n, ell, rs.t(), rep.read_count, rep.threshold.str(), rep.guarantee_met,
           rep.list_within_bound, rep.candidates.size(), join_set(rep.candidates)});
    return kExitOk;
}

int run_witness(const RunConfig& cfg, std::ostream& out) {
    const int n = static_cast<int>(scalar(cfg.n, "--n"));
    const int ell = static_cast<int>(scalar(cfg.ell, "--ell"));
    const int t = static_cast<int>(scalar(cfg.t, "--t"));
    const ReadSet rs = worst_case_reads(n, ell, t);
    const SequenceSet cands = candidates(rs);
    RowWriter w(out, cfg.format,
                {"n", "l", "t", "read_count", "reads", "candidate_count", "candidates"});
    w.row({n, ell, t, rs.reads.size(), join_set(rs.reads), cands.size(), join_set(cands)});
    return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "cannot open output path: " << cfg.out_path << '\n';
            return kExitInvalid;
        }
        target = &file;
    }
    try {
        if (cfg.subcommand == "table") return run_table(cfg, *target);
        if (cfg.subcommand == "verify") return run_verify(cfg, *target, err);
        if (cfg.subcommand == "ball") return run_ball(cfg, *target);
        if (cfg.subcommand == "reconstruct") return run_reconstruct(cfg, *target);
        if (cfg.subcommand == "witness") return run_witness(cfg, *target);
        err << "unknown subcommand\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        err << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        err << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deletion-ball combinatorics: tables, exhaustive verification, "
                 "ball enumeration, and list reconstruction"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string n_range, ell_range, t_range;

    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--n-range", n_range, "inclusive n range LO:HI (or one value)");
        sub->add_option("--n", n_range, "single n (same as --n-range N)")
            ->excludes("--n-range");
        sub->add_option("--ell-range", ell_range, "inclusive ell range LO:HI");
        sub->add_option("--ell", ell_range, "single ell")->excludes("--ell-range");
        sub->add_option("--t-range", t_range, "inclusive t range LO:HI");
        sub->add_option("--t", t_range, "single t")->excludes("--t-range");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv or json (one object per line)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "emit D and N values over a grid");
    add_grid(table);
    add_output(table);

    CLI::App* verify =
        app.add_subcommand("verify", "exhaustively verify N values over a grid");
    add_grid(verify);
    add_output(verify);
    verify->add_option("--threads", cfg.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--assert-roundtrip", cfg.assert_roundtrip,
                     "re-check every emitted witness through intersection_size");
    bool no_symmetry = false;
    verify->add_flag("--no-symmetry", no_symmetry, "disable symmetry reduction");
    verify->add_option("--certificates", cfg.certificates_path,
                       "also write one text certificate per grid point to PATH");

    CLI::App* ball = app.add_subcommand("ball", "enumerate a deletion ball");
    ball->add_option("--x", cfg.x_text, "center word as a 0/1 string")->required();
    ball->add_option("--t", t_range, "deletion radius")->required();

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "decode a candidate list from distinct channel reads");
    reconstruct->add_option("--n", n_range, "transmitted length")->required();
    reconstruct->add_option("--ell", ell_range, "list parameter (threshold uses N_ell+1)");
    reconstruct->add_option("--reads", cfg.reads_path, "read file, one word per line");
    reconstruct->add_option("--x", cfg.x_text, "sample reads from this word instead");
    reconstruct->add_option("--t", t_range, "radius for sampling");
    std::uint64_t sample_m = 0;
    reconstruct->add_option("--m", sample_m, "number of reads to sample");
    reconstruct->add_option("--seed", cfg.seed, "sampling seed");
    add_output(reconstruct);

    CLI::App* witness = app.add_subcommand(
        "witness", "worst-case read set from the extremal family, plus its candidates");
    witness->add_option("--n", n_range, "word length")->required();
    witness->add_option("--ell", ell_range, "family size")->required();
    witness->add_option("--t", t_range, "deletion radius")->required();
    add_output(witness);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.use_symmetry = !no_symmetry;
    if (reconstruct->count("--m")) cfg.sample_m = sample_m;

    try {
        if (!n_range.empty()) cfg.n = parse_range(n_range);
        if (!ell_range.empty()) cfg.ell = parse_range(ell_range);
        if (!t_range.empty()) cfg.t = parse_range(t_range);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    if (cfg.subcommand == "reconstruct") {
        if (ell_range.empty()) cfg.ell = {3, 3};
        const bool file_mode = !cfg.reads_path.empty();
        const bool sample_mode = !cfg.x_text.empty() || cfg.sample_m.has_value();
        if (file_mode == sample_mode) {
            err << "reconstruct: give exactly one of --reads or (--x, --t, --m)\n";
            return kExitUsage;
        }
        if (sample_mode && (cfg.x_text.empty() || !cfg.sample_m || t_range.empty())) {
            err << "reconstruct: sampling mode needs --x, --t and --m\n";
            return kExitUsage;
        }
    }

    return dispatch(cfg, out, err);
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace delball::cli
