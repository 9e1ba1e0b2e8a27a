#pragma once

#include "tricon/states.hpp"
#include "tricon/substates.hpp"

namespace tricon {

struct ConcurrenceValue {
    double c = 0.0;
    double c_squared = 0.0;

    /// Negative round-off in c_squared is clamped to zero.
    static ConcurrenceValue from_squared(double c_squared);
};

/// sqrt(3 - sum_j Tr rho_Aj^2) from the partial traces of |psi><psi|.
ConcurrenceValue concurrence_reduced(const PureState& psi);

/// Coefficient form: C^2 = sum over the three cuts of the halved sums of
/// |a_ijk a_pqt - (swapped)|^2, evaluated through the identity
/// (1/2) sum |..|^2 = ||psi||^4 - Tr (M M^dagger)^2 on each unfolding M.
ConcurrenceValue concurrence_coeff(const PureState& psi);

/// Same quantity for an unnormalized coefficient vector. Equals
/// ||psi||^4 * C^2(psi / ||psi||); zero for the zero vector.
double squared_concurrence_unnormalized(const PureState& psi);

/// Concurrence of the unnormalized substate E1 (x) E2 (x) E3 |psi>.
ConcurrenceValue substate_pure_concurrence(const PureState& psi, const SubspaceSelector& sel);

} // namespace tricon
