#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricon/parallel.hpp"
#include "tricon/states.hpp"
#include "tricon/substates.hpp"

namespace tricon {

/// Substates with trace below this contribute zero.
inline constexpr double kZeroTrace = 1e-12;

enum class BoundMethod { g2, tau_sss, tau_lmn, operational_222, convex_combo };
std::string_view to_string(BoundMethod method);

/// Lower bound used for each substate's squared concurrence.
enum class InnerBound { g2, pure_exact };
std::string_view to_string(InnerBound inner);
InnerBound parse_inner_bound(std::string_view text);

/// Per-cut trace norms behind g2_bound.
struct G2Terms {
    double trace = 0.0;
    std::array<double, 3> transpose_norms{};
    std::array<double, 3> realign_norms{};
    /// 2 / (d (d - 1)) with d the smaller side of cut j; 1 for qubit cuts.
    std::array<double, 3> cut_weights{};
    double transpose_sum = 0.0;
    double realign_sum = 0.0;
    double value = 0.0;
};

/// Lower bound on C^2 of a possibly sub-normalized state from the partial
/// transpose and realignment criteria:
///   1/2 max[ sum_j w_j (||rho^{T_j}|| - Tr rho)_+^2, sum_j w_j (||R_j(rho)|| - Tr rho)_+^2 ].
/// On 2x2x2 all w_j = 1.
G2Terms g2_terms(const DensityMatrix& rho);
double g2_bound(const DensityMatrix& rho);

struct Contribution {
    SubspaceSelector selector;
    double trace = 0.0;
    double value = 0.0;
};

struct BoundParams {
    int s = 0;
    Shape shape{};
    InnerBound inner = InnerBound::g2;
    /// convex_combo: (report key, weight) in input order.
    std::vector<std::pair<std::string, double>> weights;
};

struct BoundReport {
    BoundMethod method = BoundMethod::g2;
    double value = 0.0;
    Rational coefficient{1, 1};
    std::vector<Contribution> contributions;
    BoundParams params;

    /// Identifies the method and its parameters, e.g. "g2", "sss:2", "lmn:2x2x3".
    std::string key() const;
};

/// tau_{sxsxs}: c_sss * sum over all sxsxs substates of the inner bound.
BoundReport tau_sss(const DensityMatrix& rho, int s, InnerBound inner = InnerBound::g2, const ExecOptions& exec = {});
BoundReport tau_sss(const PureState& psi, int s, InnerBound inner = InnerBound::pure_exact,
                    const ExecOptions& exec = {});

/// tau_{lambda x mu x nu} for an s x s x s state; shape applies to (A1, A2, A3).
BoundReport tau_lmn(const DensityMatrix& rho, const Shape& shape, InnerBound inner = InnerBound::g2,
                    const ExecOptions& exec = {});
BoundReport tau_lmn(const PureState& psi, const Shape& shape, InnerBound inner = InnerBound::pure_exact,
                    const ExecOptions& exec = {});

/// tau_sss with s = 2 and the g2 inner bound.
BoundReport operational_bound(const DensityMatrix& rho, const ExecOptions& exec = {});

/// Single-report wrapper around g2_bound.
BoundReport g2_report(const DensityMatrix& rho);

struct ConvexWeights {
    std::map<std::string, double> weights;

    /// Non-negative weights summing to 1 within 1e-12.
    void validate() const;
};

/// sum_k w_k value_k. Every report key needs exactly one weight and vice versa.
BoundReport convex_combo(std::span<const BoundReport> reports, const ConvexWeights& weights);

enum class CurveBranch { zero, middle, upper };
std::string_view to_string(CurveBranch branch);

/// Branch of the closed-form example curve: t <= 1/9, 1/9 < t <= 1/5, t > 1/5.
/// Comparisons are exact on the double value of t.
CurveBranch example_branch(double t);

struct CurvePoint {
    CurveBranch branch = CurveBranch::zero;
    double value = 0.0;
};

/// Published closed form for the white-noise example: 0, (81t^2 - 18t + 1)/96,
/// (181t^2 - 58t + 5)/96 on the three branches.
CurvePoint example_curve(double t);

} // namespace tricon
