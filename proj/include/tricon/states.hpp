#pragma once

#include <cstdint>
#include <string_view>

#include "tricon/linalg.hpp"

namespace tricon {

/// Tolerance on sum |a_ijk|^2 = 1.
inline constexpr double kNormTol = 1e-9;
/// Smallest eigenvalue accepted for a density matrix.
inline constexpr double kPsdTol = 1e-9;

/// Coefficient tensor a_ijk stored flat in row-major (i, j, k) order.
/// Normalization is not enforced here; substates are sub-normalized.
class PureState {
public:
    PureState(Dims dims, ComplexVector coeffs);

    const Dims& dims() const { return dims_; }
    const ComplexVector& coeffs() const { return coeffs_; }
    Complex coeff(int i, int j, int k) const { return coeffs_(flatten({i, j, k}, dims_)); }

    double norm_squared() const { return coeffs_.squaredNorm(); }
    bool is_normalized(double tol = kNormTol) const { return std::abs(norm_squared() - 1.0) <= tol; }
    void require_normalized(std::string_view where) const;
    PureState normalized() const;

    /// Coefficients as an m x (n*l), n x (m*l) or l x (m*n) matrix with the
    /// chosen subsystem indexing rows.
    ComplexMatrix unfolding(Subsystem s) const;

private:
    Dims dims_;
    ComplexVector coeffs_;
};

/// Hermitian PSD operator on the m*n*l space with trace in [0, 1].
class DensityMatrix {
public:
    /// Validates shape, Hermiticity, positivity and trace; symmetrizes the stored matrix.
    DensityMatrix(Dims dims, const ComplexMatrix& mat);

    const Dims& dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return mat_; }
    double trace() const { return trace_; }
    double purity() const;

    /// c * rho for 0 <= c <= 1.
    DensityMatrix scaled(double c) const;

private:
    struct Trusted {};
    DensityMatrix(Trusted, Dims dims, ComplexMatrix mat);

    friend DensityMatrix trusted_density(Dims dims, ComplexMatrix mat);

    Dims dims_;
    ComplexMatrix mat_;
    double trace_ = 0.0;
};

/// Skips validation; only for operators that are PSD by construction
/// (compressions of a valid density matrix).
DensityMatrix trusted_density(Dims dims, ComplexMatrix mat);

DensityMatrix pure_to_density(const PureState& psi);

/// Basis ket |ijk>.
PureState basis_state(Dims dims, TripartiteIndex idx);

/// |phi> = (|000> + |003> + |110> + |113>) / 2 on 2x2x4.
PureState example_phi();

/// (1 - t)/16 * I_16 + t |phi><phi|.
DensityMatrix make_example_state(double t);

enum class NamedState { ghz, w, product, max_mixed };

NamedState parse_named_state(std::string_view name);

/// GHZ = sum_i |iii>/sqrt(d); W = (|100> + |010> + |001>)/sqrt(3); product = |000>.
PureState make_named_pure(NamedState name, Dims dims);
DensityMatrix make_named(NamedState name, Dims dims);

/// Normalized complex Gaussian vector, i.e. Haar-random pure state.
PureState random_pure(Dims dims, std::uint64_t seed);

/// rho = G G^dagger / Tr with G a (d x rank) complex Gaussian matrix.
DensityMatrix random_mixed(Dims dims, int rank, std::uint64_t seed);

/// |a>|b>|c> with each factor Haar random.
PureState random_product_pure(Dims dims, std::uint64_t seed);

/// rho_1 (x) rho_2 (x) rho_3 with each factor random full rank.
DensityMatrix random_product_mixed(Dims dims, std::uint64_t seed);

/// (U1 (x) U2 (x) U3) |psi> with independent Haar unitaries.
PureState apply_random_local_unitary(const PureState& psi, std::uint64_t seed);

} // namespace tricon
