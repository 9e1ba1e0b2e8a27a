#include "tricon/commands.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "tricon/bounds.hpp"
#include "tricon/io.hpp"
#include "tricon/scan.hpp"
#include "tricon/selfcheck.hpp"

namespace tricon::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& text, std::string_view what)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of(",x", pos);
        if (end == std::string::npos) end = text.size();
        int value = 0;
        const auto res = std::from_chars(text.data() + pos, text.data() + end, value);
        if (res.ec != std::errc() || res.ptr != text.data() + end)
            throw UsageError("cannot parse " + std::string(what) + " '" + text + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

Shape parse_shape(const std::string& text)
{
    const auto v = parse_int_list(text, "shape");
    if (v.size() != 3) throw UsageError("shape must have three entries, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

Dims parse_dims(const std::string& text)
{
    const auto v = parse_int_list(text, "dims");
    if (v.size() != 3) throw UsageError("dims must have three entries, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

BoundReport tau_for(const LoadedState& state, int s, InnerBound inner, const ExecOptions& exec)
{
    if (const auto* psi = std::get_if<PureState>(&state)) return tau_sss(*psi, s, inner, exec);
    return tau_sss(std::get<DensityMatrix>(state), s, inner, exec);
}

BoundReport lmn_for(const LoadedState& state, const Shape& shape, InnerBound inner, const ExecOptions& exec)
{
    if (const auto* psi = std::get_if<PureState>(&state)) return tau_lmn(*psi, shape, inner, exec);
    return tau_lmn(std::get<DensityMatrix>(state), shape, inner, exec);
}

BoundReport report_for_key(const LoadedState& state, const std::string& key, InnerBound inner,
                           const ExecOptions& exec)
{
    if (key == "g2") return g2_report(to_density(state));
    const auto parts = parse_int_list(key, "weight key");
    if (parts.size() == 1) return tau_for(state, parts[0], inner, exec);
    if (parts.size() == 3) return lmn_for(state, {parts[0], parts[1], parts[2]}, inner, exec);
    throw UsageError("weight key '" + key + "' is neither g2, s, nor a shape");
}

BoundReport compute_bound(const BoundArgs& args, const LoadedState& state)
{
    const ExecOptions exec{args.threads};
    const InnerBound inner = parse_inner_bound(args.inner);
    if (args.method == "g2") return g2_report(to_density(state));
    if (args.method == "tau-sss") {
        if (!args.s) throw UsageError("method tau-sss needs --s");
        return tau_for(state, *args.s, inner, exec);
    }
    if (args.method == "tau-lmn") {
        if (!args.shape) throw UsageError("method tau-lmn needs --shape");
        return lmn_for(state, parse_shape(*args.shape), inner, exec);
    }
    if (args.method == "convex") {
        if (args.weights.empty()) throw UsageError("method convex needs --weights");
        std::vector<BoundReport> reports;
        ConvexWeights weights;
        for (const std::string& entry : args.weights) {
            const auto eq = entry.find('=');
            if (eq == std::string::npos) throw UsageError("weight '" + entry + "' is not KEY=W");
            double w = 0.0;
            try {
                std::size_t used = 0;
                w = std::stod(entry.substr(eq + 1), &used);
                if (used != entry.size() - eq - 1) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw UsageError("cannot parse weight in '" + entry + "'");
            }
            reports.push_back(report_for_key(state, entry.substr(0, eq), inner, exec));
            if (!weights.weights.emplace(reports.back().key(), w).second)
                throw KeyError("duplicate weight key '" + entry.substr(0, eq) + "'");
        }
        return convex_combo(reports, weights);
    }
    throw UsageError("unknown method '" + args.method + "' (expected g2, tau-sss, tau-lmn, convex)");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const LoadedState state = read_state(args.state);
        const BoundReport report = compute_bound(args, state);
        print_report(out, report);
        if (args.out) {
            std::ofstream file(*args.out, std::ios::binary);
            if (!file) throw UsageError("cannot write " + args.out->string());
            file << report_to_json(report, dims_of(state));
        }
        return int(kOk);
    });
}

int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (args.family != "paper-example") throw UsageError("unknown family '" + args.family + "'");
        ScanOptions options;
        options.t_min = args.t_min;
        options.t_max = args.t_max;
        options.steps = args.steps;
        options.oracle_samples = args.oracle_samples;
        options.seed = args.seed;
        options.exec = ExecOptions{args.threads};
        const std::vector<ScanRow> rows = run_scan(options);
        {
            std::ofstream file(args.out, std::ios::binary);
            if (!file) throw UsageError("cannot write " + args.out.string());
            write_scan_csv(file, rows);
        }
        const CurveDiscrepancy diff = compare_with_reference(rows);
        out << rows.size() << " rows written to " << args.out.string() << "\n";
        out << "max |bound - reference| = " << format_double(diff.max_abs_difference) << " ("
            << diff.rows.size() << " points above " << format_double(diff.tolerance) << ")\n";
        if (args.discrepancy_report) {
            std::ofstream file(*args.discrepancy_report, std::ios::binary);
            if (!file) throw UsageError("cannot write " + args.discrepancy_report->string());
            file << discrepancy_report_json(diff, options.exec);
            out << "discrepancy report written to " << args.discrepancy_report->string() << "\n";
        }
        if (!diff.roof_violations.empty()) {
            const ScanRow& r = *diff.roof_violations.front();
            err << "property failure: bound " << format_double(r.bound) << " exceeds sampled roof^2 "
                << format_double(*r.roof_squared) << " at t=" << format_double(r.t) << "\n";
            return int(kPropertyFailure);
        }
        return int(kOk);
    });
}

int cmd_selfcheck(const SelfcheckArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (args.trials < 0) throw UsageError("trials must be >= 0");
        SelfcheckOptions options;
        options.seed = args.seed;
        options.trials = args.trials;
        options.oracle_samples = args.oracle_samples;
        options.exec = ExecOptions{args.threads};
        bool all_ok = true;
        for (const PropertyResult& r : run_selfcheck(options)) {
            out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.total << "\n";
            if (!r.ok()) {
                all_ok = false;
                err << "counterexample for " << r.name << ":\n" << *r.counterexample << "\n";
            }
        }
        return int(all_ok ? kOk : kPropertyFailure);
    });
}

int cmd_make_state(const MakeStateArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() -> int {
        LoadedState state = [&]() -> LoadedState {
            if (args.family == "paper-example") return make_example_state(args.t);
            const Dims dims = parse_dims(args.dims);
            if (args.family == "random-pure") return random_pure(dims, args.seed);
            if (args.family == "random-mixed") return random_mixed(dims, args.rank, args.seed);
            const NamedState named = parse_named_state(args.family);
            if (named == NamedState::max_mixed || args.mixed) return make_named(named, dims);
            return make_named_pure(named, dims);
        }();
        write_state(args.out, state);
        out << "wrote " << (std::holds_alternative<PureState>(state) ? "pure" : "mixed") << " state "
            << dims_of(state).to_string() << " to " << args.out.string() << "\n";
        return kOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lower bounds on the concurrence of tripartite mixed states"};
    app.require_subcommand(1);

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Compute a lower bound on C^2 for a state file");
    bound_cmd->add_option("--state", bound.state, "State file (JSON)")->required();
    bound_cmd->add_option("--method", bound.method, "g2 | tau-sss | tau-lmn | convex")->required();
    bound_cmd->add_option("--s", bound.s, "Substate size for tau-sss");
    bound_cmd->add_option("--shape", bound.shape, "Substate shape for tau-lmn, e.g. 2,2,3");
    bound_cmd->add_option("--weights", bound.weights, "Convex weights KEY=W (KEY: g2, s, or shape LxMxN)");
    bound_cmd->add_option("--inner", bound.inner, "Substate bound: g2 | pure-exact");
    bound_cmd->add_option("--out", bound.out, "Write the JSON report here");
    bound_cmd->add_option("--threads", bound.threads, "Worker threads (0 = all cores)");

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Scan the white-noise example family");
    scan_cmd->add_option("--family", scan.family, "State family")->required();
    scan_cmd->add_option("--t-min", scan.t_min)->required();
    scan_cmd->add_option("--t-max", scan.t_max)->required();
    scan_cmd->add_option("--steps", scan.steps)->required();
    scan_cmd->add_option("--oracle-samples", scan.oracle_samples, "Check each point against a sampled convex roof");
    scan_cmd->add_option("--seed", scan.seed);
    scan_cmd->add_option("--out", scan.out, "CSV output path")->required();
    scan_cmd->add_option("--discrepancy-report", scan.discrepancy_report, "JSON report of bound/reference mismatches");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads (0 = all cores)");

    SelfcheckArgs check;
    auto* check_cmd = app.add_subcommand("selfcheck", "Run the randomized invariant suite");
    check_cmd->add_option("--seed", check.seed);
    check_cmd->add_option("--trials", check.trials);
    check_cmd->add_option("--oracle-samples", check.oracle_samples);
    check_cmd->add_option("--threads", check.threads, "Worker threads (0 = all cores)");

    MakeStateArgs make;
    auto* make_cmd = app.add_subcommand("make-state", "Write a state file");
    make_cmd->add_option("--family", make.family,
                         "paper-example | ghz | w | product | max-mixed | random-pure | random-mixed")
        ->required();
    make_cmd->add_option("--t", make.t, "Noise parameter for paper-example");
    make_cmd->add_option("--dims", make.dims, "m,n,l");
    make_cmd->add_option("--rank", make.rank, "Rank for random-mixed");
    make_cmd->add_option("--seed", make.seed);
    make_cmd->add_flag("--mixed", make.mixed, "Write pure states as density matrices");
    make_cmd->add_option("--out", make.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    if (bound_cmd->parsed()) return cmd_bound(bound, out, err);
    if (scan_cmd->parsed()) return cmd_scan(scan, out, err);
    if (check_cmd->parsed()) return cmd_selfcheck(check, out, err);
    return cmd_make_state(make, out, err);
}

} // namespace tricon::cli
