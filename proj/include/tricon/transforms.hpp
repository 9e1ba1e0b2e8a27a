#pragma once

#include <array>

#include "tricon/linalg.hpp"
#include "tricon/states.hpp"
#include "tricon/substates.hpp"

namespace tricon {

/// Cut between one subsystem and the remaining two (kept in canonical order).
struct Bipartition {
    Subsystem solo = Subsystem::A1;

    std::array<Subsystem, 2> rest() const
    {
        switch (solo) {
        case Subsystem::A1: return {Subsystem::A2, Subsystem::A3};
        case Subsystem::A2: return {Subsystem::A1, Subsystem::A3};
        case Subsystem::A3: return {Subsystem::A1, Subsystem::A2};
        }
        throw LabelError("invalid bipartition");
    }
};

namespace detail {

inline std::array<int, 3> split(int linear, const std::array<int, 3>& d)
{
    return {linear / (d[1] * d[2]), (linear / d[2]) % d[1], linear % d[2]};
}

inline int join(const std::array<int, 3>& idx, const std::array<int, 3>& d)
{
    return (idx[0] * d[1] + idx[1]) * d[2] + idx[2];
}

inline std::array<int, 3> extents(const Dims& d) { return {d.m, d.n, d.l}; }

template <typename Derived>
void require_operator_on(const Eigen::MatrixBase<Derived>& a, const Dims& dims)
{
    if (a.rows() != dims.total() || a.cols() != dims.total())
        throw ShapeError("operator is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols())
                         + ", expected side " + std::to_string(dims.total()) + " for dims " + dims.to_string());
}

} // namespace detail

/// Reduced operator on one subsystem.
template <typename Derived>
ComplexMatrix partial_trace(const Eigen::MatrixBase<Derived>& a, const Dims& dims, Subsystem keep)
{
    detail::require_operator_on(a, dims);
    const int kept = slot(keep);
    const auto ext = detail::extents(dims);
    ComplexMatrix out = ComplexMatrix::Zero(ext[kept], ext[kept]);
    const int d = dims.total();
    for (int r = 0; r < d; ++r) {
        const auto ri = detail::split(r, ext);
        for (int x = 0; x < ext[kept]; ++x) {
            auto ci = ri;
            ci[kept] = x;
            out(ri[kept], x) += a(r, detail::join(ci, ext));
        }
    }
    return out;
}

/// Transposes the row/column labels of one subsystem.
template <typename Derived>
ComplexMatrix partial_transpose(const Eigen::MatrixBase<Derived>& a, const Dims& dims, Subsystem sys)
{
    detail::require_operator_on(a, dims);
    const int t = slot(sys);
    const auto ext = detail::extents(dims);
    const int d = dims.total();
    ComplexMatrix out(d, d);
    for (int r = 0; r < d; ++r) {
        const auto ri = detail::split(r, ext);
        for (int c = 0; c < d; ++c) {
            auto ri2 = ri;
            auto ci2 = detail::split(c, ext);
            std::swap(ri2[t], ci2[t]);
            out(detail::join(ri2, ext), detail::join(ci2, ext)) = a(r, c);
        }
    }
    return out;
}

/// Relabels subsystems so that position p of the result holds subsystem order[p].
template <typename Derived>
ComplexMatrix permute_subsystems(const Eigen::MatrixBase<Derived>& a, const Dims& dims,
                                 const std::array<Subsystem, 3>& order)
{
    detail::require_operator_on(a, dims);
    const auto ext = detail::extents(dims);
    const std::array<int, 3> src{slot(order[0]), slot(order[1]), slot(order[2])};
    const std::array<int, 3> out_ext{ext[src[0]], ext[src[1]], ext[src[2]]};
    const int d = dims.total();
    std::vector<int> map(d);
    for (int x = 0; x < d; ++x) {
        const auto idx = detail::split(x, ext);
        map[x] = detail::join({idx[src[0]], idx[src[1]], idx[src[2]]}, out_ext);
    }
    ComplexMatrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out(map[r], map[c]) = a(r, c);
    return out;
}

/// Block reshuffle: input rows (a, b) with a < row_split[0], b < row_split[1]
/// and columns (a', b') with a' < col_split[0], b' < col_split[1] map to
/// output entry ((a, a'), (b, b')). Applying it again with
/// ({row_split[0], col_split[0]}, {row_split[1], col_split[1]}) undoes it.
template <typename Derived>
ComplexMatrix realign_blocks(const Eigen::MatrixBase<Derived>& a, std::array<int, 2> row_split,
                             std::array<int, 2> col_split)
{
    if (a.rows() != row_split[0] * row_split[1] || a.cols() != col_split[0] * col_split[1])
        throw ShapeError("realign_blocks: split does not match matrix shape");
    ComplexMatrix out(row_split[0] * col_split[0], row_split[1] * col_split[1]);
    for (int ra = 0; ra < row_split[0]; ++ra)
        for (int rb = 0; rb < row_split[1]; ++rb)
            for (int ca = 0; ca < col_split[0]; ++ca)
                for (int cb = 0; cb < col_split[1]; ++cb)
                    out(ra * col_split[0] + ca, rb * col_split[1] + cb) = a(ra * row_split[1] + rb, ca * col_split[1] + cb);
    return out;
}

/// Realignment across solo | rest: a d_solo^2 x d_rest^2 matrix with
/// R((a, a'), (b, b')) = rho((a, b), (a', b')), solo subsystem first.
template <typename Derived>
ComplexMatrix realign(const Eigen::MatrixBase<Derived>& a, const Dims& dims, Bipartition part)
{
    const auto rest = part.rest();
    const ComplexMatrix reordered = permute_subsystems(a, dims, {part.solo, rest[0], rest[1]});
    const int ds = dims[part.solo];
    const int dr = dims.total() / ds;
    return realign_blocks(reordered, {ds, dr}, {ds, dr});
}

/// Principal submatrix on the kept basis vectors, rows in lexicographic (i, j, k) order.
template <typename Derived>
ComplexMatrix compress(const Eigen::MatrixBase<Derived>& a, const Dims& dims, const SubspaceSelector& sel)
{
    detail::require_operator_on(a, dims);
    sel.validate(dims);
    const std::vector<int> idx = sel.flat_indices(dims);
    const int s = int(idx.size());
    ComplexMatrix out(s, s);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) out(r, c) = a(idx[r], idx[c]);
    return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem sys);
ComplexMatrix realign(const DensityMatrix& rho, Bipartition part);

/// E1 (x) E2 (x) E3 rho E1 (x) E2 (x) E3 as an (unnormalized) s1 x s2 x s3 state.
DensityMatrix project_substate(const DensityMatrix& rho, const SubspaceSelector& sel);

/// E1 (x) E2 (x) E3 |psi> restricted to the kept coefficients.
PureState project_substate(const PureState& psi, const SubspaceSelector& sel);

/// Reduced operator of a pure state via its coefficient unfolding, M M^dagger.
ComplexMatrix reduced_density(const PureState& psi, Subsystem keep);

/// (1 - Tr rho_A1^2, 1 - Tr rho_A2^2, 1 - Tr rho_A3^2) via partial traces of |psi><psi|.
std::array<double, 3> purity_deficits(const PureState& psi);

} // namespace tricon
