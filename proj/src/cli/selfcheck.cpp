#include "tricon/selfcheck.hpp"

#include <array>
#include <cmath>

#include "tricon/bounds.hpp"
#include "tricon/concurrence.hpp"
#include "tricon/io.hpp"
#include "tricon/oracle.hpp"

namespace tricon {

namespace {

constexpr std::array<Dims, 5> kEquivalenceProfiles{Dims{2, 2, 2}, {2, 2, 4}, {2, 3, 4}, {3, 3, 3}, {3, 4, 5}};
constexpr std::array<Dims, 3> kCountingProfiles{Dims{2, 2, 4}, {3, 3, 3}, {3, 3, 4}};
constexpr std::array<Dims, 2> kSandwichProfiles{Dims{2, 2, 2}, {2, 2, 4}};

std::string describe(const std::string& what, const std::string& state_text)
{
    return what + "\n" + state_text;
}

void record(PropertyResult& result, bool ok, const std::string& failure)
{
    ++result.total;
    if (ok) {
        ++result.passed;
    } else if (!result.counterexample) {
        result.counterexample = failure;
    }
}

} // namespace

std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& options)
{
    PropertyResult equivalence;
    equivalence.name = "coefficient-form equivalence";
    PropertyResult counting;
    counting.name = "substate counting inequality";
    PropertyResult sandwich;
    sandwich.name = "bound below sampled convex roof";

    for (int trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t seed = options.seed + std::uint64_t(trial) * 7919;

        {
            const Dims dims = kEquivalenceProfiles[trial % kEquivalenceProfiles.size()];
            const PureState psi = random_pure(dims, seed);
            const double via_traces = concurrence_reduced(psi).c_squared;
            const double literal = literal_eq4(psi);
            const bool ok = std::abs(via_traces - literal) <= 1e-9;
            record(equivalence, ok,
                   describe("C^2 via partial traces " + format_double(via_traces) + " vs literal sum "
                                + format_double(literal),
                            serialize_state(psi)));
        }
        {
            const Dims dims = kCountingProfiles[trial % kCountingProfiles.size()];
            const PureState psi = random_pure(dims, seed + 1);
            const double c2 = concurrence_coeff(psi).c_squared;
            bool ok = true;
            std::string failure;
            for (int s = 2; s <= dims.min(); ++s) {
                const double tau = tau_sss(psi, s, InnerBound::pure_exact, options.exec).value;
                if (!(tau <= c2 + 1e-9)) {
                    ok = false;
                    failure = describe("s=" + std::to_string(s) + ": tau " + format_double(tau) + " > C^2 "
                                           + format_double(c2),
                                       serialize_state(psi));
                    break;
                }
            }
            record(counting, ok, failure);
        }
        {
            const Dims dims = kSandwichProfiles[trial % kSandwichProfiles.size()];
            const int rank = 1 + trial % 4;
            const DensityMatrix rho = random_mixed(dims, rank, seed + 2);
            const double tau = tau_sss(rho, 2, InnerBound::g2, options.exec).value;
            RoofOptions roof;
            roof.samples = options.oracle_samples;
            roof.seed = seed + 3;
            roof.exec = options.exec;
            const double upper = roof_upper_bound(rho, roof).upper;
            const bool ok = tau <= upper * upper + 1e-6;
            record(sandwich, ok,
                   describe("tau " + format_double(tau) + " > roof^2 " + format_double(upper * upper),
                            serialize_state(rho)));
        }
    }
    return {equivalence, counting, sandwich};
}

} // namespace tricon
