#include "tricon/transforms.hpp"

namespace tricon {

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem keep)
{
    return partial_trace(rho.matrix(), rho.dims(), keep);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem sys)
{
    return partial_transpose(rho.matrix(), rho.dims(), sys);
}

ComplexMatrix realign(const DensityMatrix& rho, Bipartition part) { return realign(rho.matrix(), rho.dims(), part); }

DensityMatrix project_substate(const DensityMatrix& rho, const SubspaceSelector& sel)
{
    return trusted_density(sel.sub_dims(), compress(rho.matrix(), rho.dims(), sel));
}

PureState project_substate(const PureState& psi, const SubspaceSelector& sel)
{
    sel.validate(psi.dims());
    const std::vector<int> idx = sel.flat_indices(psi.dims());
    ComplexVector v(int(idx.size()));
    for (std::size_t q = 0; q < idx.size(); ++q) v(int(q)) = psi.coeffs()(idx[q]);
    return {sel.sub_dims(), v};
}

ComplexMatrix reduced_density(const PureState& psi, Subsystem keep)
{
    const ComplexMatrix m = psi.unfolding(keep);
    return m * m.adjoint();
}

std::array<double, 3> purity_deficits(const PureState& psi)
{
    const DensityMatrix rho = pure_to_density(psi);
    std::array<double, 3> out{};
    for (Subsystem s : kSubsystems) {
        const ComplexMatrix reduced = partial_trace(rho, s);
        out[slot(s)] = 1.0 - reduced.squaredNorm();
    }
    return out;
}

} // namespace tricon
