#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "tricon/bounds.hpp"
#include "tricon/states.hpp"

namespace tricon {

/// A state read from a state file: pure coefficients or a density matrix.
using LoadedState = std::variant<PureState, DensityMatrix>;

const Dims& dims_of(const LoadedState& state);
DensityMatrix to_density(const LoadedState& state);

/// Decimal with 17 significant digits; parses back to the same double.
std::string format_double(double value);

/// State file layout (JSON):
///   {"dims": [m, n, l], "kind": "pure",  "data": [[re, im], ...]}          m*n*l pairs, flatten order
///   {"dims": [m, n, l], "kind": "mixed", "data": [[[re, im], ...], ...]}   (m*n*l)^2 pairs, row by row
/// Throws ParseError naming the line/column or the offending field.
LoadedState parse_state(std::string_view text, std::string_view source = "<input>");
LoadedState read_state(const std::filesystem::path& path);

std::string serialize_state(const PureState& psi);
std::string serialize_state(const DensityMatrix& rho);
void write_state(const std::filesystem::path& path, const LoadedState& state);

/// Machine-readable report with the per-substate breakdown.
std::string report_to_json(const BoundReport& report, const Dims& dims);
/// Short human-readable summary.
void print_report(std::ostream& out, const BoundReport& report);

} // namespace tricon
