#include "tricon/oracle.hpp"

#include <cmath>
#include <limits>

#include "tricon/concurrence.hpp"
#include "tricon/random.hpp"

namespace tricon {

double ensemble_concurrence(const ComplexMatrix& w, const Dims& dims)
{
    std::vector<double> terms(w.cols());
    for (Eigen::Index k = 0; k < w.cols(); ++k)
        terms[k] = std::sqrt(squared_concurrence_unnormalized(PureState(dims, w.col(k))));
    return pairwise_sum(terms);
}

RoofEstimate roof_upper_bound(const DensityMatrix& rho, const RoofOptions& options)
{
    if (options.samples < 1) throw RangeError("roof_upper_bound needs at least one sample");
    if (std::abs(rho.trace() - 1.0) > kNormTol)
        throw NormalizationError("roof_upper_bound needs a normalized state, trace is " + std::to_string(rho.trace()));

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
    const RealVector& ev = solver.eigenvalues();
    std::vector<int> kept;
    for (Eigen::Index q = ev.size() - 1; q >= 0; --q)
        if (ev(q) > kRankCutoff) kept.push_back(int(q));
    const int rank = int(kept.size());
    ComplexMatrix factor(rho.matrix().rows(), rank);
    for (int c = 0; c < rank; ++c) factor.col(c) = solver.eigenvectors().col(kept[c]) * std::sqrt(ev(kept[c]));

    RoofEstimate est;
    est.samples = options.samples;
    est.seed = options.seed;
    est.rank = rank;
    est.ensemble_size = options.ensemble_size > 0 ? std::max(options.ensemble_size, rank) : 2 * rank;

    std::vector<double> averages(options.samples);
    parallel_for(std::size_t(options.samples), options.exec, [&](std::size_t k) {
        if (k == 0) {
            averages[k] = ensemble_concurrence(factor, rho.dims());
            return;
        }
        Rng rng = Rng::stream(options.seed, k);
        const ComplexMatrix u = haar_isometry(est.ensemble_size, rank, rng);
        averages[k] = ensemble_concurrence(factor * u.transpose(), rho.dims());
    });
    est.upper = std::numeric_limits<double>::infinity();
    for (double a : averages) est.upper = std::min(est.upper, a);
    return est;
}

RoofEstimate roof_upper_bound(const DensityMatrix& rho, int samples, std::uint64_t seed)
{
    RoofOptions options;
    options.samples = samples;
    options.seed = seed;
    return roof_upper_bound(rho, options);
}

double literal_eq4(const PureState& psi)
{
    const Dims& d = psi.dims();
    const auto a = [&psi](int i, int j, int k) { return psi.coeff(i, j, k); };
    double sum = 0.0;
    for (int i = 0; i < d.m; ++i)
        for (int p = 0; p < d.m; ++p)
            for (int j = 0; j < d.n; ++j)
                for (int q = 0; q < d.n; ++q)
                    for (int k = 0; k < d.l; ++k)
                        for (int t = 0; t < d.l; ++t) {
                            const Complex base = a(i, j, k) * a(p, q, t);
                            sum += std::norm(base - a(i, j, t) * a(p, q, k));
                            sum += std::norm(base - a(i, q, k) * a(p, j, t));
                            sum += std::norm(base - a(p, j, k) * a(i, q, t));
                        }
    return 0.5 * sum;
}

} // namespace tricon
