#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "tricon/errors.hpp"

namespace tricon {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance on max |A - A^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-9;

enum class Subsystem { A1 = 0, A2 = 1, A3 = 2 };

inline constexpr std::array<Subsystem, 3> kSubsystems{Subsystem::A1, Subsystem::A2, Subsystem::A3};

inline int slot(Subsystem s)
{
    const int i = static_cast<int>(s);
    if (i < 0 || i > 2) throw LabelError("invalid subsystem label " + std::to_string(i));
    return i;
}

inline std::string_view name(Subsystem s)
{
    switch (s) {
    case Subsystem::A1: return "A1";
    case Subsystem::A2: return "A2";
    case Subsystem::A3: return "A3";
    }
    throw LabelError("invalid subsystem label");
}

Subsystem parse_subsystem(std::string_view label);

/// Local dimensions (m, n, l) of A1, A2, A3.
struct Dims {
    int m = 1;
    int n = 1;
    int l = 1;

    int operator[](Subsystem s) const { return std::array{m, n, l}[slot(s)]; }
    int total() const { return m * n * l; }
    int min() const { return std::min({m, n, l}); }
    bool operator==(const Dims&) const = default;

    void validate() const
    {
        if (m < 1 || n < 1 || l < 1)
            throw ShapeError("dimensions must be >= 1, got " + to_string());
    }

    std::string to_string() const
    {
        return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
    }
};

struct TripartiteIndex {
    int i = 0;
    int j = 0;
    int k = 0;
    bool operator==(const TripartiteIndex&) const = default;
};

/// Row-major linear index i*(n*l) + j*l + k.
inline int flatten(TripartiteIndex idx, const Dims& d)
{
    if (idx.i < 0 || idx.i >= d.m || idx.j < 0 || idx.j >= d.n || idx.k < 0 || idx.k >= d.l)
        throw RangeError("index (" + std::to_string(idx.i) + "," + std::to_string(idx.j) + ","
                         + std::to_string(idx.k) + ") outside dims " + d.to_string());
    return (idx.i * d.n + idx.j) * d.l + idx.k;
}

inline TripartiteIndex unflatten(int linear, const Dims& d)
{
    if (linear < 0 || linear >= d.total())
        throw RangeError("linear index " + std::to_string(linear) + " outside dims " + d.to_string());
    return {linear / (d.n * d.l), (linear / d.l) % d.n, linear % d.l};
}

template <typename Derived>
double hermitian_deviation(const Eigen::MatrixBase<Derived>& a)
{
    if (a.rows() != a.cols()) throw ContractViolation("matrix is not square");
    if (a.size() == 0) return 0.0;
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = kHermitianTol)
{
    return a.rows() == a.cols() && hermitian_deviation(a) <= tol;
}

/// Eigenvalues of a Hermitian matrix in descending order. The input is
/// symmetrized before the solve.
template <typename Derived>
RealVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& a)
{
    if (a.rows() != a.cols())
        throw ContractViolation("hermitian_eigenvalues: non-square " + std::to_string(a.rows()) + "x"
                                + std::to_string(a.cols()) + " input");
    const double dev = hermitian_deviation(a);
    if (!(dev <= kHermitianTol))
        throw ContractViolation("hermitian_eigenvalues: input deviates from Hermitian by "
                                + std::to_string(dev));
    const ComplexMatrix sym = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    RealVector ev = solver.eigenvalues().reverse();
    return ev;
}

/// Singular values, descending.
template <typename Derived>
RealVector singular_values(const Eigen::MatrixBase<Derived>& a)
{
    if (a.size() == 0) return RealVector();
    const ComplexMatrix dense = a;
    Eigen::BDCSVD<ComplexMatrix> svd(dense);
    return svd.singularValues();
}

/// ||A||_1 = Tr sqrt(A A^dagger).
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& a)
{
    if (a.size() == 0) return 0.0;
    return singular_values(a).sum();
}

template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = Complex(a(r, c)) * b.template cast<Complex>();
    return out;
}

template <typename DerivedA, typename DerivedB, typename DerivedC>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                   const Eigen::MatrixBase<DerivedC>& c)
{
    return kron(kron(a, b), c);
}

inline ComplexMatrix basis_projector(int dim, int level)
{
    if (level < 0 || level >= dim) throw RangeError("basis level out of range");
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    p(level, level) = 1.0;
    return p;
}

} // namespace tricon
