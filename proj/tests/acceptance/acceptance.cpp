// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tricon/bounds.hpp"
#include "tricon/concurrence.hpp"
#include "tricon/io.hpp"
#include "tricon/oracle.hpp"
#include "tricon/scan.hpp"
#include "tricon/states.hpp"
#include "tricon/substates.hpp"

using namespace tricon;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::vector<std::string> notes;

    void fail(const std::string& why)
    {
        if (passed) detail = why;
        passed = false;
    }
};

std::string num(double x) { return format_double(x); }

Outcome theorem_equivalence()
{
    Outcome o;
    double worst = 0.0;
    for (const Dims d : {Dims{2, 2, 2}, Dims{2, 2, 4}, Dims{2, 3, 4}, Dims{3, 3, 3}, Dims{3, 4, 5}})
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const PureState psi = random_pure(d, 10'000 + seed);
            const double diff = std::abs(concurrence_reduced(psi).c_squared - literal_eq4(psi));
            worst = std::max(worst, diff);
            if (diff > 1e-9) o.fail("dims " + d.to_string() + " seed " + std::to_string(seed) + " diff " + num(diff));
        }
    if (o.passed) o.detail = "500 states, max |difference| " + num(worst);
    return o;
}

Outcome known_values()
{
    Outcome o;
    const std::vector<std::tuple<std::string, PureState, double>> cases{
        {"GHZ", make_named_pure(NamedState::ghz, {2, 2, 2}), 1.5},
        {"W", make_named_pure(NamedState::w, {2, 2, 2}), 4.0 / 3.0},
        {"example vector", example_phi(), 1.0}};
    for (const auto& [name, psi, expected] : cases) {
        const double got = concurrence_reduced(psi).c_squared;
        if (std::abs(got - expected) > 1e-10) o.fail(name + ": C^2 = " + num(got) + ", expected " + num(expected));
    }
    if (o.passed) o.detail = "GHZ 3/2, W 4/3, example vector 1";
    return o;
}

Outcome counting_inequality()
{
    Outcome o;
    int checks = 0;
    for (const Dims d : {Dims{2, 2, 4}, Dims{3, 3, 3}, Dims{3, 3, 4}})
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const PureState psi = random_pure(d, 20'000 + seed);
            const double exact = concurrence_reduced(psi).c_squared;
            for (int s = 2; s <= d.min(); ++s) {
                ++checks;
                const double bound = tau_sss(psi, s, InnerBound::pure_exact).value;
                if (bound > exact + 1e-9)
                    o.fail("dims " + d.to_string() + " s=" + std::to_string(s) + ": " + num(bound) + " > " + num(exact));
            }
        }
    if (o.passed) o.detail = std::to_string(checks) + " (state, s) pairs";
    return o;
}

std::vector<ScanRow> example_rows()
{
    ScanOptions options;
    options.steps = 2000;
    return run_scan(options);
}

Outcome detection_threshold(const std::vector<ScanRow>& rows)
{
    Outcome o;
    double smallest_above = INFINITY;
    for (const ScanRow& r : rows) {
        if (r.t <= 1.0 / 9.0 && r.bound > 1e-9) o.fail("t=" + num(r.t) + " bound " + num(r.bound) + " > 1e-9");
        if (r.t >= 1.0 / 9.0 + 1e-3) {
            smallest_above = std::min(smallest_above, r.bound);
            if (!(r.bound > 0.0)) o.fail("t=" + num(r.t) + " bound is not positive");
        }
    }
    if (o.passed) o.detail = "zero up to 1/9, min bound beyond 1/9 + 1e-3 is " + num(smallest_above);
    return o;
}

// Criterion 6 applied to the scanned family: the sampled roof must dominate every bound.
bool example_sandwich(const std::vector<ScanRow>& rows, std::string& why)
{
    for (std::size_t i = 0; i < rows.size(); i += 20) {
        const double upper = roof_upper_bound(make_example_state(rows[i].t), 200, 31 + i).upper;
        if (rows[i].bound > upper * upper + 1e-6) {
            why = "t=" + num(rows[i].t) + " bound " + num(rows[i].bound) + " > roof^2 " + num(upper * upper);
            return false;
        }
    }
    return true;
}

Outcome curve_comparison(const std::vector<ScanRow>& rows, const std::filesystem::path& dir)
{
    Outcome o;
    {
        std::ofstream csv(dir / "example_curve.csv", std::ios::binary);
        write_scan_csv(csv, rows);
    }
    const CurveDiscrepancy diff = compare_with_reference(rows, 1e-8);
    if (diff.rows.empty()) {
        o.detail = "(a) computed bound and closed form agree on the whole grid";
        return o;
    }

    std::size_t middle_bad = 0;
    std::size_t upper_bad = 0;
    for (const ScanRow* r : diff.rows) (r->branch == CurveBranch::middle ? middle_bad : upper_bad)++;

    const std::filesystem::path report = dir / "example_discrepancy.json";
    {
        std::ofstream out(report, std::ios::binary);
        out << discrepancy_report_json(diff);
    }
    if (!std::filesystem::exists(report) || std::filesystem::file_size(report) == 0) o.fail("report not written");

    std::string why;
    if (!example_sandwich(rows, why)) o.fail("sandwich violated: " + why);

    const double at_one = rows.back().bound;
    const double exact = concurrence_reduced(example_phi()).c_squared;
    if (at_one > exact + 1e-9) o.fail("bound at t=1 exceeds the exact C^2");

    if (o.passed)
        o.detail = "(b) " + std::to_string(diff.rows.size()) + " discrepant points reported in " + report.string()
                   + "; sandwich holds";
    o.notes.push_back(std::to_string(middle_bad) + " of the discrepant points lie in (1/9, 1/5], so the closed form "
                      "does not match the computed bound there either");
    o.notes.push_back("reference/bound ranges over [" + num(diff.min_ratio) + ", " + num(diff.max_ratio) + "]");
    o.notes.push_back("t=1: computed bound " + num(at_one) + ", closed form " + num(example_curve(1.0).value)
                      + ", exact C^2 " + num(exact));
    return o;
}

Outcome sandwich()
{
    Outcome o;
    double worst_gap = INFINITY;
    int count = 0;
    for (const Dims d : {Dims{2, 2, 2}, Dims{2, 2, 4}})
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const int rank = 1 + int(seed % 4);
            const DensityMatrix rho = random_mixed(d, rank, 30'000 + seed);
            const double bound = tau_sss(rho, 2).value;
            const double upper = roof_upper_bound(rho, 500, seed).upper;
            worst_gap = std::min(worst_gap, upper * upper - bound);
            ++count;
            if (bound > upper * upper + 1e-6)
                o.fail("dims " + d.to_string() + " seed " + std::to_string(seed) + ": " + num(bound) + " > "
                       + num(upper * upper));
        }
    for (const Dims d : {Dims{2, 2, 2}, Dims{2, 2, 4}})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const PureState psi = random_pure(d, 40'000 + seed);
            const double upper = roof_upper_bound(pure_to_density(psi), 500, seed).upper;
            const double exact = concurrence_reduced(psi).c;
            if (std::abs(upper - exact) > 1e-9)
                o.fail("pure oracle " + num(upper) + " differs from exact " + num(exact));
        }
    if (o.passed) o.detail = std::to_string(count) + " mixed states, min roof^2 - bound " + num(worst_gap);
    return o;
}

Outcome separability_zeros()
{
    Outcome o;
    double worst = 0.0;
    for (const Dims d : {Dims{2, 2, 4}, Dims{2, 3, 4}}) {
        std::vector<DensityMatrix> states{make_named(NamedState::max_mixed, d)};
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            states.push_back(random_product_mixed(d, 50'000 + seed));
            states.push_back(pure_to_density(random_product_pure(d, 60'000 + seed)));
        }
        for (const DensityMatrix& rho : states) worst = std::max(worst, std::abs(tau_sss(rho, 2).value));
    }
    if (worst > 1e-9) o.fail("largest bound on a separable state " + num(worst));
    else o.detail = "82 separable states, max bound " + num(worst);
    return o;
}

Outcome scaling_identity()
{
    Outcome o;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Dims d = seed % 2 ? Dims{2, 2, 2} : Dims{2, 2, 4};
        const DensityMatrix rho = seed % 3 ? random_mixed(d, 1 + int(seed % 4), 70'000 + seed)
                                           : pure_to_density(random_pure(d, 70'000 + seed));
        const double base = g2_bound(rho);
        for (double c : {0.25, 0.5, 0.75}) {
            const double scaled = g2_bound(rho.scaled(c));
            if (std::abs(scaled - c * c * base) > 1e-10)
                o.fail("seed " + std::to_string(seed) + " c=" + num(c) + ": " + num(scaled) + " vs " + num(c * c * base));
        }
    }
    if (o.passed) o.detail = "20 states, c in {1/4, 1/2, 3/4}";
    return o;
}

Outcome coefficient_goldens()
{
    Outcome o;
    if (!(coefficient_sss({2, 2, 4}, 2).value == Rational{1, 3})) o.fail("sss (2,2,4), 2 is not 1/3");
    if (!(coefficient_lmn(3, {2, 2, 2}).value == Rational{1, 2})) o.fail("lmn 3, (2,2,2) is not 1/2");
    const Dims d{3, 4, 5};
    int shapes = 0;
    for (int a = 1; a <= d.m; ++a)
        for (int b = 1; b <= d.n; ++b)
            for (int c = 1; c <= d.l; ++c) {
                ++shapes;
                const auto seq = enumerate_selectors(d, {a, b, c});
                std::uint64_t walked = 0;
                for (auto it = seq.begin(); it != seq.end(); ++it) ++walked;
                const std::uint64_t expected = binomial(d.m, a) * binomial(d.n, b) * binomial(d.l, c);
                if (walked != expected || seq.count() != expected)
                    o.fail("shape " + to_string(Shape{a, b, c}) + ": " + std::to_string(walked) + " selectors");
            }
    if (o.passed) o.detail = "1/3, 1/2, and " + std::to_string(shapes) + " shapes on (3,4,5)";
    return o;
}

Outcome guarded(const std::function<Outcome()>& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        return o;
    }
}

} // namespace

int main(int argc, char** argv)
{
    const std::filesystem::path dir = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::current_path();
    std::vector<ScanRow> rows;
    try {
        rows = example_rows();
    } catch (const std::exception& e) {
        std::printf("scan failed: %s\n", e.what());
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"coefficient-form equivalence on random pure states", theorem_equivalence},
        {"known pure-state values", known_values},
        {"substate counting inequality", counting_inequality},
        {"white-noise detection threshold at t = 1/9", [&] { return detection_threshold(rows); }},
        {"white-noise curve comparison", [&] { return curve_comparison(rows, dir); }},
        {"bound below sampled convex roof", sandwich},
        {"separable states give zero", separability_zeros},
        {"quadratic trace scaling of g2", scaling_identity},
        {"coefficient and selector-count goldens", coefficient_goldens},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = rows.empty() && (i == 3 || i == 4) ? Outcome{false, "scan unavailable", {}}
                                                               : guarded(criteria[i].second);
        failures += !o.passed;
        std::printf("[%s] criterion %zu: %s -- %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        for (const std::string& note : o.notes) std::printf("       NOTE: %s\n", note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
