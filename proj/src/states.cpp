#include "tricon/states.hpp"

#include "tricon/random.hpp"

#include <cmath>
#include <string>

namespace tricon {

Subsystem parse_subsystem(std::string_view label)
{
    if (label == "A1" || label == "1") return Subsystem::A1;
    if (label == "A2" || label == "2") return Subsystem::A2;
    if (label == "A3" || label == "3") return Subsystem::A3;
    throw LabelError("unknown subsystem label '" + std::string(label) + "'");
}

PureState::PureState(Dims dims, ComplexVector coeffs) : dims_(dims), coeffs_(std::move(coeffs))
{
    dims_.validate();
    if (coeffs_.size() != dims_.total())
        throw ShapeError("pure state with dims " + dims_.to_string() + " needs " + std::to_string(dims_.total())
                         + " coefficients, got " + std::to_string(coeffs_.size()));
    if (!coeffs_.allFinite()) throw ContractViolation("pure state has non-finite coefficients");
}

void PureState::require_normalized(std::string_view where) const
{
    if (!is_normalized())
        throw NormalizationError(std::string(where) + ": state has squared norm " + std::to_string(norm_squared()));
}

PureState PureState::normalized() const
{
    const double nrm = coeffs_.norm();
    if (nrm == 0.0) throw NormalizationError("cannot normalize the zero vector");
    return {dims_, coeffs_ / nrm};
}

ComplexMatrix PureState::unfolding(Subsystem s) const
{
    const int rows = dims_[s];
    ComplexMatrix out(rows, dims_.total() / rows);
    for (int i = 0; i < dims_.m; ++i)
        for (int j = 0; j < dims_.n; ++j)
            for (int k = 0; k < dims_.l; ++k) {
                const Complex a = coeffs_((i * dims_.n + j) * dims_.l + k);
                switch (s) {
                case Subsystem::A1: out(i, j * dims_.l + k) = a; break;
                case Subsystem::A2: out(j, i * dims_.l + k) = a; break;
                case Subsystem::A3: out(k, i * dims_.n + j) = a; break;
                }
            }
    return out;
}

DensityMatrix::DensityMatrix(Dims dims, const ComplexMatrix& mat) : dims_(dims)
{
    dims_.validate();
    const int d = dims_.total();
    if (mat.rows() != d || mat.cols() != d)
        throw ShapeError("density matrix for dims " + dims_.to_string() + " must be " + std::to_string(d) + "x"
                         + std::to_string(d) + ", got " + std::to_string(mat.rows()) + "x"
                         + std::to_string(mat.cols()));
    if (!mat.allFinite()) throw ContractViolation("density matrix has non-finite entries");
    const double dev = hermitian_deviation(mat);
    if (dev > kHermitianTol)
        throw ContractViolation("density matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
    mat_ = (mat + mat.adjoint()) * 0.5;
    trace_ = mat_.trace().real();
    if (trace_ < -kPsdTol || trace_ > 1.0 + kNormTol)
        throw ContractViolation("density matrix trace " + std::to_string(trace_) + " outside [0, 1]");
    const RealVector ev = hermitian_eigenvalues(mat_);
    if (ev.size() > 0 && ev(ev.size() - 1) < -kPsdTol)
        throw ContractViolation("density matrix has negative eigenvalue " + std::to_string(ev(ev.size() - 1)));
}

DensityMatrix::DensityMatrix(Trusted, Dims dims, ComplexMatrix mat)
    : dims_(dims), mat_(std::move(mat)), trace_(mat_.trace().real())
{
}

DensityMatrix trusted_density(Dims dims, ComplexMatrix mat)
{
    return DensityMatrix(DensityMatrix::Trusted{}, dims, std::move(mat));
}

double DensityMatrix::purity() const
{
    // Tr(rho^2) = sum |rho_ab|^2 for Hermitian rho
    return mat_.squaredNorm();
}

DensityMatrix DensityMatrix::scaled(double c) const
{
    if (!(c >= 0.0 && c <= 1.0)) throw RangeError("scale factor must lie in [0, 1]");
    return trusted_density(dims_, mat_ * c);
}

DensityMatrix pure_to_density(const PureState& psi)
{
    psi.require_normalized("pure_to_density");
    const ComplexVector& v = psi.coeffs();
    return trusted_density(psi.dims(), v * v.adjoint());
}

PureState basis_state(Dims dims, TripartiteIndex idx)
{
    ComplexVector v = ComplexVector::Zero(dims.total());
    v(flatten(idx, dims)) = 1.0;
    return {dims, v};
}

PureState example_phi()
{
    const Dims dims{2, 2, 4};
    ComplexVector v = ComplexVector::Zero(16);
    for (const TripartiteIndex idx : {TripartiteIndex{0, 0, 0}, {0, 0, 3}, {1, 1, 0}, {1, 1, 3}})
        v(flatten(idx, dims)) = 0.5;
    return {dims, v};
}

DensityMatrix make_example_state(double t)
{
    if (!(t >= 0.0 && t <= 1.0)) throw RangeError("example state parameter t=" + std::to_string(t) + " outside [0, 1]");
    const ComplexVector phi = example_phi().coeffs();
    ComplexMatrix rho = ComplexMatrix::Identity(16, 16) * ((1.0 - t) / 16.0);
    rho += t * phi * phi.adjoint();
    return trusted_density({2, 2, 4}, rho);
}

NamedState parse_named_state(std::string_view name)
{
    if (name == "ghz" || name == "GHZ") return NamedState::ghz;
    if (name == "w" || name == "W") return NamedState::w;
    if (name == "product") return NamedState::product;
    if (name == "max-mixed" || name == "max_mixed") return NamedState::max_mixed;
    throw LabelError("unknown named state '" + std::string(name) + "'");
}

PureState make_named_pure(NamedState name, Dims dims)
{
    dims.validate();
    switch (name) {
    case NamedState::ghz: {
        if (dims.m != dims.n || dims.n != dims.l) throw ShapeError("GHZ requires m = n = l, got " + dims.to_string());
        ComplexVector v = ComplexVector::Zero(dims.total());
        for (int i = 0; i < dims.m; ++i) v(flatten({i, i, i}, dims)) = 1.0 / std::sqrt(double(dims.m));
        return {dims, v};
    }
    case NamedState::w: {
        if (dims.m != dims.n || dims.n != dims.l || dims.m < 2)
            throw ShapeError("W requires m = n = l >= 2, got " + dims.to_string());
        ComplexVector v = ComplexVector::Zero(dims.total());
        for (const TripartiteIndex idx : {TripartiteIndex{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
            v(flatten(idx, dims)) = 1.0 / std::sqrt(3.0);
        return {dims, v};
    }
    case NamedState::product: return basis_state(dims, {0, 0, 0});
    case NamedState::max_mixed: break;
    }
    throw ShapeError("the maximally mixed state is not pure");
}

DensityMatrix make_named(NamedState name, Dims dims)
{
    if (name == NamedState::max_mixed) {
        dims.validate();
        const int d = dims.total();
        return trusted_density(dims, ComplexMatrix::Identity(d, d) / double(d));
    }
    return pure_to_density(make_named_pure(name, dims));
}

PureState random_pure(Dims dims, std::uint64_t seed)
{
    dims.validate();
    Rng rng(seed);
    ComplexVector v = rng.gaussian_matrix(dims.total(), 1).col(0);
    return PureState(dims, v).normalized();
}

DensityMatrix random_mixed(Dims dims, int rank, std::uint64_t seed)
{
    dims.validate();
    if (rank < 1 || rank > dims.total()) throw RangeError("rank must lie in [1, d]");
    Rng rng(seed);
    const ComplexMatrix g = rng.gaussian_matrix(dims.total(), rank);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(dims, rho);
}

PureState random_product_pure(Dims dims, std::uint64_t seed)
{
    dims.validate();
    Rng rng(seed);
    ComplexVector a = rng.gaussian_matrix(dims.m, 1).col(0).normalized();
    ComplexVector b = rng.gaussian_matrix(dims.n, 1).col(0).normalized();
    ComplexVector c = rng.gaussian_matrix(dims.l, 1).col(0).normalized();
    return {dims, kron(a, b, c).col(0)};
}

DensityMatrix random_product_mixed(Dims dims, std::uint64_t seed)
{
    dims.validate();
    Rng rng(seed);
    auto factor = [&rng](int d) {
        const ComplexMatrix g = rng.gaussian_matrix(d, d);
        ComplexMatrix r = g * g.adjoint();
        return ComplexMatrix(r / r.trace().real());
    };
    const ComplexMatrix r1 = factor(dims.m);
    const ComplexMatrix r2 = factor(dims.n);
    const ComplexMatrix r3 = factor(dims.l);
    return DensityMatrix(dims, kron(r1, r2, r3));
}

PureState apply_random_local_unitary(const PureState& psi, std::uint64_t seed)
{
    Rng rng(seed);
    const Dims& d = psi.dims();
    const ComplexMatrix u1 = haar_unitary(d.m, rng);
    const ComplexMatrix u2 = haar_unitary(d.n, rng);
    const ComplexMatrix u3 = haar_unitary(d.l, rng);
    return {d, kron(u1, u2, u3) * psi.coeffs()};
}

} // namespace tricon
