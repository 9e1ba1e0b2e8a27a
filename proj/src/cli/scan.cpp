#include "tricon/scan.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "tricon/concurrence.hpp"
#include "tricon/io.hpp"
#include "tricon/oracle.hpp"

namespace tricon {

void ScanOptions::validate() const
{
    if (!(t_min >= 0.0 && t_min < t_max && t_max <= 1.0))
        throw RangeError("scan range must satisfy 0 <= t-min < t-max <= 1");
    if (steps < 2) throw RangeError("scan needs at least 2 steps");
    if (oracle_samples && *oracle_samples < 1) throw RangeError("oracle samples must be >= 1");
}

std::vector<double> scan_grid(const ScanOptions& options)
{
    options.validate();
    std::vector<double> grid(options.steps);
    const double span = options.t_max - options.t_min;
    for (int i = 0; i < options.steps; ++i) grid[i] = options.t_min + span * double(i) / double(options.steps - 1);
    grid.back() = options.t_max;
    return grid;
}

std::vector<ScanRow> run_scan(const ScanOptions& options)
{
    const std::vector<double> grid = scan_grid(options);
    std::vector<ScanRow> rows(grid.size());
    // parallel over grid points, serial inside each point
    parallel_for(grid.size(), options.exec, [&](std::size_t i) {
        ScanRow& row = rows[i];
        row.t = grid[i];
        const DensityMatrix rho = make_example_state(row.t);
        row.report = operational_bound(rho);
        row.bound = row.report.value;
        const CurvePoint ref = example_curve(row.t);
        row.reference = ref.value;
        row.branch = ref.branch;
        if (options.oracle_samples) {
            RoofOptions roof;
            roof.samples = *options.oracle_samples;
            roof.seed = options.seed + i;
            const double upper = roof_upper_bound(rho, roof).upper;
            row.roof_squared = upper * upper;
        }
    });
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows)
{
    out << "t,bound,reference,branch\n";
    for (const ScanRow& r : rows)
        out << format_double(r.t) << ',' << format_double(r.bound) << ',' << format_double(r.reference) << ','
            << to_string(r.branch) << '\n';
}

CurveDiscrepancy compare_with_reference(const std::vector<ScanRow>& rows, double tolerance)
{
    CurveDiscrepancy out;
    out.tolerance = tolerance;
    out.min_ratio = std::numeric_limits<double>::infinity();
    out.max_ratio = -std::numeric_limits<double>::infinity();
    for (const ScanRow& r : rows) {
        const double diff = std::abs(r.bound - r.reference);
        out.max_abs_difference = std::max(out.max_abs_difference, diff);
        if (diff > tolerance) {
            out.rows.push_back(&r);
            if (r.bound > 0.0) {
                out.min_ratio = std::min(out.min_ratio, r.reference / r.bound);
                out.max_ratio = std::max(out.max_ratio, r.reference / r.bound);
            }
        }
        if (r.roof_squared && r.bound > *r.roof_squared + 1e-6) out.roof_violations.push_back(&r);
    }
    if (out.rows.empty()) out.min_ratio = out.max_ratio = 1.0;
    return out;
}

std::string discrepancy_report_json(const CurveDiscrepancy& discrepancy, const ExecOptions& exec)
{
    using nlohmann::json;
    json doc;
    doc["tolerance"] = discrepancy.tolerance;
    doc["discrepant_points"] = discrepancy.rows.size();
    doc["max_abs_difference"] = discrepancy.max_abs_difference;
    if (!discrepancy.rows.empty()) doc["reference_over_bound"] = {discrepancy.min_ratio, discrepancy.max_ratio};

    const BoundReport at_one = operational_bound(make_example_state(1.0), exec);
    const double exact = concurrence_reduced(example_phi()).c_squared;
    doc["t_equals_1"] = {{"bound", at_one.value},
                         {"reference", example_curve(1.0).value},
                         {"exact_c_squared", exact},
                         {"reference_exceeds_exact", example_curve(1.0).value > exact + 1e-12}};

    json points = json::array();
    for (const ScanRow* r : discrepancy.rows) {
        json breakdown = json::array();
        for (const Contribution& c : r->report.contributions)
            breakdown.push_back({{"selector", {c.selector.keep[0], c.selector.keep[1], c.selector.keep[2]}},
                                 {"trace", c.trace},
                                 {"value", c.value}});
        json p{{"t", r->t},
               {"bound", r->bound},
               {"reference", r->reference},
               {"branch", std::string(to_string(r->branch))},
               {"coefficient", r->report.coefficient.to_string()},
               {"substates", breakdown}};
        if (r->roof_squared) p["roof_upper_squared"] = *r->roof_squared;
        points.push_back(p);
    }
    doc["points"] = points;
    return doc.dump(2) + "\n";
}

} // namespace tricon
