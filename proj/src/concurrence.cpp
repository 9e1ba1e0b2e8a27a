#include "tricon/concurrence.hpp"

#include <cmath>

#include "tricon/transforms.hpp"

namespace tricon {

ConcurrenceValue ConcurrenceValue::from_squared(double c_squared)
{
    const double sq = c_squared > 0.0 ? c_squared : 0.0;
    return {std::sqrt(sq), sq};
}

ConcurrenceValue concurrence_reduced(const PureState& psi)
{
    psi.require_normalized("concurrence_reduced");
    const auto deficits = purity_deficits(psi);
    return ConcurrenceValue::from_squared(deficits[0] + deficits[1] + deficits[2]);
}

double squared_concurrence_unnormalized(const PureState& psi)
{
    const double n2 = psi.norm_squared();
    double total = 0.0;
    for (Subsystem s : kSubsystems) {
        const ComplexMatrix m = psi.unfolding(s);
        // the smaller Gram matrix has the same nonzero spectrum
        const ComplexMatrix gram = m.rows() <= m.cols() ? ComplexMatrix(m * m.adjoint()) : ComplexMatrix(m.adjoint() * m);
        total += n2 * n2 - gram.squaredNorm();
    }
    return total > 0.0 ? total : 0.0;
}

ConcurrenceValue concurrence_coeff(const PureState& psi)
{
    psi.require_normalized("concurrence_coeff");
    return ConcurrenceValue::from_squared(squared_concurrence_unnormalized(psi));
}

ConcurrenceValue substate_pure_concurrence(const PureState& psi, const SubspaceSelector& sel)
{
    return ConcurrenceValue::from_squared(squared_concurrence_unnormalized(project_substate(psi, sel)));
}

} // namespace tricon
