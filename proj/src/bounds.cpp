#include "tricon/bounds.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "tricon/concurrence.hpp"
#include "tricon/transforms.hpp"

namespace tricon {

std::string_view to_string(BoundMethod method)
{
    switch (method) {
    case BoundMethod::g2: return "g2";
    case BoundMethod::tau_sss: return "tau_sss";
    case BoundMethod::tau_lmn: return "tau_lmn";
    case BoundMethod::operational_222: return "operational_222";
    case BoundMethod::convex_combo: return "convex_combo";
    }
    return "unknown";
}

std::string_view to_string(InnerBound inner)
{
    return inner == InnerBound::g2 ? "g2" : "pure-exact";
}

InnerBound parse_inner_bound(std::string_view text)
{
    if (text == "g2") return InnerBound::g2;
    if (text == "pure-exact" || text == "pure_exact") return InnerBound::pure_exact;
    throw LabelError("unknown inner bound '" + std::string(text) + "'");
}

std::string_view to_string(CurveBranch branch)
{
    switch (branch) {
    case CurveBranch::zero: return "zero";
    case CurveBranch::middle: return "middle";
    case CurveBranch::upper: return "upper";
    }
    return "unknown";
}

namespace {

double excess_squared(double norm, double trace)
{
    const double d = norm - trace;
    return d > 0.0 ? d * d : 0.0;
}

double cut_weight(const Dims& dims, Subsystem solo)
{
    const int d = std::min(dims[solo], dims.total() / dims[solo]);
    return d < 2 ? 0.0 : 2.0 / (double(d) * double(d - 1));
}

/// Pure vector behind a rank-one density matrix, up to a global phase.
PureState pure_vector_of(const DensityMatrix& rho)
{
    const double tr = rho.trace();
    if (std::abs(rho.purity() - tr * tr) > 1e-9)
        throw ContractViolation("pure-exact inner bound requires a pure state (Tr rho^2 = "
                                + std::to_string(rho.purity()) + ", (Tr rho)^2 = " + std::to_string(tr * tr) + ")");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
    const Eigen::Index top = rho.matrix().rows() - 1;
    const double lambda = std::max(solver.eigenvalues()(top), 0.0);
    ComplexVector v = solver.eigenvectors().col(top) * std::sqrt(lambda);
    return {rho.dims(), v};
}

using SubstateEval = std::function<Contribution(const SubspaceSelector&)>;

BoundReport assemble(BoundMethod method, const BoundCoefficient& coeff, const SelectorSequence& selectors,
                     const SubstateEval& eval, const ExecOptions& exec)
{
    BoundReport report;
    report.method = method;
    report.coefficient = coeff.value;
    std::vector<SubspaceSelector> sels(selectors.begin(), selectors.end());
    report.contributions.resize(sels.size());
    parallel_for(sels.size(), exec, [&](std::size_t i) { report.contributions[i] = eval(sels[i]); });
    std::vector<double> values(sels.size());
    for (std::size_t i = 0; i < sels.size(); ++i) values[i] = report.contributions[i].value;
    report.value = coeff.value.to_double() * pairwise_sum(values);
    return report;
}

SubstateEval mixed_eval(const DensityMatrix& rho, InnerBound inner)
{
    if (inner == InnerBound::pure_exact) {
        const PureState psi = pure_vector_of(rho);
        return [psi](const SubspaceSelector& sel) {
            const PureState sub = project_substate(psi, sel);
            return Contribution{sel, sub.norm_squared(), squared_concurrence_unnormalized(sub)};
        };
    }
    return [&rho](const SubspaceSelector& sel) {
        const DensityMatrix sub = project_substate(rho, sel);
        const double tr = sub.trace();
        return Contribution{sel, tr, tr < kZeroTrace ? 0.0 : g2_bound(sub)};
    };
}

SubstateEval pure_eval(const PureState& psi, InnerBound inner)
{
    if (inner == InnerBound::g2) {
        return [psi](const SubspaceSelector& sel) {
            const PureState sub = project_substate(psi, sel);
            const ComplexVector& v = sub.coeffs();
            const double tr = sub.norm_squared();
            return Contribution{sel, tr, tr < kZeroTrace ? 0.0 : g2_bound(trusted_density(sub.dims(), v * v.adjoint()))};
        };
    }
    return [psi](const SubspaceSelector& sel) {
        const PureState sub = project_substate(psi, sel);
        return Contribution{sel, sub.norm_squared(), squared_concurrence_unnormalized(sub)};
    };
}

void require_cube(const Dims& dims)
{
    if (dims.m != dims.n || dims.n != dims.l)
        throw ShapeError("tau_lmn requires an s x s x s state, got dims " + dims.to_string());
}

BoundReport finish_sss(BoundReport report, int s, InnerBound inner)
{
    report.params.s = s;
    report.params.shape = {s, s, s};
    report.params.inner = inner;
    return report;
}

BoundReport finish_lmn(BoundReport report, const Dims& dims, const Shape& shape, InnerBound inner)
{
    report.params.s = dims.m;
    report.params.shape = shape;
    report.params.inner = inner;
    return report;
}

} // namespace

G2Terms g2_terms(const DensityMatrix& rho)
{
    G2Terms terms;
    terms.trace = rho.trace();
    if (terms.trace < kZeroTrace) return terms;
    for (Subsystem s : kSubsystems) {
        const int j = slot(s);
        terms.cut_weights[j] = cut_weight(rho.dims(), s);
        terms.transpose_norms[j] = trace_norm(partial_transpose(rho, s));
        terms.realign_norms[j] = trace_norm(realign(rho, Bipartition{s}));
        terms.transpose_sum += terms.cut_weights[j] * excess_squared(terms.transpose_norms[j], terms.trace);
        terms.realign_sum += terms.cut_weights[j] * excess_squared(terms.realign_norms[j], terms.trace);
    }
    terms.value = 0.5 * std::max(terms.transpose_sum, terms.realign_sum);
    return terms;
}

double g2_bound(const DensityMatrix& rho) { return g2_terms(rho).value; }

std::string BoundReport::key() const
{
    switch (method) {
    case BoundMethod::g2: return "g2";
    case BoundMethod::tau_sss: return "sss:" + std::to_string(params.s);
    case BoundMethod::tau_lmn: return "lmn:" + to_string(params.shape);
    case BoundMethod::operational_222: return "op222";
    case BoundMethod::convex_combo: return "convex";
    }
    return "unknown";
}

BoundReport tau_sss(const DensityMatrix& rho, int s, InnerBound inner, const ExecOptions& exec)
{
    const BoundCoefficient coeff = coefficient_sss(rho.dims(), s);
    return finish_sss(assemble(BoundMethod::tau_sss, coeff, enumerate_selectors(rho.dims(), {s, s, s}),
                               mixed_eval(rho, inner), exec),
                      s, inner);
}

BoundReport tau_sss(const PureState& psi, int s, InnerBound inner, const ExecOptions& exec)
{
    psi.require_normalized("tau_sss");
    const BoundCoefficient coeff = coefficient_sss(psi.dims(), s);
    return finish_sss(assemble(BoundMethod::tau_sss, coeff, enumerate_selectors(psi.dims(), {s, s, s}),
                               pure_eval(psi, inner), exec),
                      s, inner);
}

BoundReport tau_lmn(const DensityMatrix& rho, const Shape& shape, InnerBound inner, const ExecOptions& exec)
{
    require_cube(rho.dims());
    const BoundCoefficient coeff = coefficient_lmn(rho.dims().m, shape);
    return finish_lmn(assemble(BoundMethod::tau_lmn, coeff, enumerate_selectors(rho.dims(), shape),
                               mixed_eval(rho, inner), exec),
                      rho.dims(), shape, inner);
}

BoundReport tau_lmn(const PureState& psi, const Shape& shape, InnerBound inner, const ExecOptions& exec)
{
    psi.require_normalized("tau_lmn");
    require_cube(psi.dims());
    const BoundCoefficient coeff = coefficient_lmn(psi.dims().m, shape);
    return finish_lmn(assemble(BoundMethod::tau_lmn, coeff, enumerate_selectors(psi.dims(), shape),
                               pure_eval(psi, inner), exec),
                      psi.dims(), shape, inner);
}

BoundReport operational_bound(const DensityMatrix& rho, const ExecOptions& exec)
{
    BoundReport report = tau_sss(rho, 2, InnerBound::g2, exec);
    report.method = BoundMethod::operational_222;
    return report;
}

BoundReport g2_report(const DensityMatrix& rho)
{
    BoundReport report;
    report.method = BoundMethod::g2;
    const SubspaceSelector full = SubspaceSelector::full(rho.dims());
    const double value = g2_bound(rho);
    report.contributions.push_back({full, rho.trace(), value});
    report.value = value;
    return report;
}

void ConvexWeights::validate() const
{
    if (weights.empty()) throw KeyError("convex combination needs at least one weight");
    std::vector<double> w;
    for (const auto& [key, value] : weights) {
        if (!(value >= 0.0 && value <= 1.0)) throw RangeError("weight for '" + key + "' outside [0, 1]");
        w.push_back(value);
    }
    const double total = pairwise_sum(w);
    if (std::abs(total - 1.0) > 1e-12) throw RangeError("weights sum to " + std::to_string(total) + ", expected 1");
}

BoundReport convex_combo(std::span<const BoundReport> reports, const ConvexWeights& weights)
{
    weights.validate();
    std::set<std::string> seen;
    BoundReport out;
    out.method = BoundMethod::convex_combo;
    std::vector<double> terms;
    for (const BoundReport& r : reports) {
        const std::string key = r.key();
        if (!seen.insert(key).second) throw KeyError("duplicate report key '" + key + "'");
        const auto it = weights.weights.find(key);
        if (it == weights.weights.end()) throw KeyError("no weight for report '" + key + "'");
        terms.push_back(it->second * r.value);
        out.params.weights.emplace_back(key, it->second);
    }
    for (const auto& [key, w] : weights.weights)
        if (!seen.count(key)) throw KeyError("weight '" + key + "' has no matching report");
    out.value = pairwise_sum(terms);
    return out;
}

CurveBranch example_branch(double t)
{
    if (!(t >= 0.0 && t <= 1.0)) throw RangeError("t=" + std::to_string(t) + " outside [0, 1]");
    // fma rounds once, so the sign of 9t - 1 (resp. 5t - 1) is exact
    if (std::fma(9.0, t, -1.0) <= 0.0) return CurveBranch::zero;
    if (std::fma(5.0, t, -1.0) <= 0.0) return CurveBranch::middle;
    return CurveBranch::upper;
}

CurvePoint example_curve(double t)
{
    const CurveBranch branch = example_branch(t);
    switch (branch) {
    case CurveBranch::zero: return {branch, 0.0};
    case CurveBranch::middle: return {branch, (81.0 * t * t - 18.0 * t + 1.0) / 96.0};
    case CurveBranch::upper: return {branch, (181.0 * t * t - 58.0 * t + 5.0) / 96.0};
    }
    return {branch, 0.0};
}

} // namespace tricon
