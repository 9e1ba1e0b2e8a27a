#pragma once

#include <cstdint>

#include "tricon/parallel.hpp"
#include "tricon/states.hpp"

namespace tricon {

/// Numerical rank cutoff for the spectral factor of rho.
inline constexpr double kRankCutoff = 1e-10;

struct RoofEstimate {
    /// Smallest sum_k p_k C(psi_k) over the sampled decompositions.
    double upper = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
    int rank = 0;
    int ensemble_size = 0;
};

struct RoofOptions {
    int samples = 500;
    std::uint64_t seed = 0;
    /// Components per sampled decomposition; 0 means twice the rank.
    int ensemble_size = 0;
    ExecOptions exec{};
};

/// Upper bound on the convex-roof concurrence of a normalized rho.
/// Sample 0 is the spectral decomposition; sample k >= 1 mixes the spectral
/// factor with a Haar isometry drawn from stream (seed, k), so the estimate
/// for n samples never exceeds the one for fewer.
RoofEstimate roof_upper_bound(const DensityMatrix& rho, const RoofOptions& options);
RoofEstimate roof_upper_bound(const DensityMatrix& rho, int samples, std::uint64_t seed);

/// Average concurrence of the ensemble formed by the columns of w
/// (unnormalized vectors whose outer products sum to rho).
double ensemble_concurrence(const ComplexMatrix& w, const Dims& dims);

/// Direct quadruple sum
///   1/2 sum_{i,p,j,q,k,t} |a_ijk a_pqt - a_ijt a_pqk|^2 + |a_ijk a_pqt - a_iqk a_pjt|^2 + |a_ijk a_pqt - a_pjk a_iqt|^2,
/// quadratic in the total dimension. Independent of the partial-trace code paths.
double literal_eq4(const PureState& psi);

} // namespace tricon
