#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tricon/bounds.hpp"
#include "tricon/parallel.hpp"

namespace tricon {

struct ScanOptions {
    double t_min = 0.0;
    double t_max = 1.0;
    int steps = 101;
    /// When set, each grid state is also checked against a sampled convex-roof upper bound.
    std::optional<int> oracle_samples;
    std::uint64_t seed = 0;
    ExecOptions exec{};

    /// Throws RangeError unless 0 <= t_min < t_max <= 1 and steps >= 2.
    void validate() const;
};

struct ScanRow {
    double t = 0.0;
    double bound = 0.0;
    double reference = 0.0;
    CurveBranch branch = CurveBranch::zero;
    BoundReport report;
    /// Squared roof upper bound, when the oracle ran.
    std::optional<double> roof_squared;
};

/// Inclusive uniform grid t_min + (t_max - t_min) i / (steps - 1); the last point is t_max exactly.
std::vector<double> scan_grid(const ScanOptions& options);

/// Operational bound and closed-form reference for the white-noise example at every grid point.
std::vector<ScanRow> run_scan(const ScanOptions& options);

/// Header "t,bound,reference,branch", 17 significant digits, newline-terminated rows.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

/// Grid points where the computed bound and the closed form differ.
struct CurveDiscrepancy {
    double tolerance = 1e-8;
    std::vector<const ScanRow*> rows;
    double max_abs_difference = 0.0;
    /// Range of reference / bound over discrepant rows with a nonzero bound.
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    /// Rows where the computed bound exceeds the sampled roof bound (should stay empty).
    std::vector<const ScanRow*> roof_violations;
};

CurveDiscrepancy compare_with_reference(const std::vector<ScanRow>& rows, double tolerance = 1e-8);

/// JSON discrepancy report: per-row values and per-substate breakdown, plus the
/// bound and exact squared concurrence at t = 1 for context.
std::string discrepancy_report_json(const CurveDiscrepancy& discrepancy, const ExecOptions& exec = {});

} // namespace tricon
