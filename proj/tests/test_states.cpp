#include <doctest.h>

#include <cmath>

#include "tricon/states.hpp"

using namespace tricon;

namespace {

void check_valid_density(const DensityMatrix& rho)
{
    CHECK(hermitian_deviation(rho.matrix()) <= kHermitianTol);
    const RealVector ev = hermitian_eigenvalues(rho.matrix());
    CHECK(ev(ev.size() - 1) >= -kPsdTol);
}

} // namespace

TEST_SUITE("states")
{
    TEST_CASE("pure_to_density on basis, GHZ and the example vector")
    {
        const DensityMatrix zero = pure_to_density(basis_state({2, 2, 2}, {0, 0, 0}));
        ComplexMatrix expected = ComplexMatrix::Zero(8, 8);
        expected(0, 0) = 1.0;
        CHECK(zero.matrix() == expected);

        const DensityMatrix ghz = make_named(NamedState::ghz, {2, 2, 2});
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                const bool corner = (r == 0 || r == 7) && (c == 0 || c == 7);
                CHECK(std::abs(ghz.matrix()(r, c) - Complex(corner ? 0.5 : 0.0)) < 1e-15);
            }

        const DensityMatrix phi = pure_to_density(example_phi());
        const int support[] = {0, 3, 12, 15};
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c) {
                const bool in_r = std::find(std::begin(support), std::end(support), r) != std::end(support);
                const bool in_c = std::find(std::begin(support), std::end(support), c) != std::end(support);
                CHECK(std::abs(phi.matrix()(r, c) - Complex(in_r && in_c ? 0.25 : 0.0)) < 1e-15);
            }
        CHECK(phi.trace() == doctest::Approx(1.0));
    }

    TEST_CASE("unnormalized input is rejected")
    {
        ComplexVector v = ComplexVector::Zero(8);
        v(0) = 2.0;
        CHECK_THROWS_AS(pure_to_density(PureState({2, 2, 2}, v)), NormalizationError);
        CHECK_THROWS_AS(PureState({2, 2, 2}, ComplexVector::Zero(7)), ShapeError);
    }

    TEST_CASE("example state endpoints and spectrum")
    {
        CHECK(make_example_state(0.0).matrix().isApprox(ComplexMatrix::Identity(16, 16) / 16.0));
        CHECK(make_example_state(1.0).matrix().isApprox(pure_to_density(example_phi()).matrix()));

        const RealVector ev = hermitian_eigenvalues(make_example_state(0.5).matrix());
        CHECK(ev(0) == doctest::Approx(17.0 / 32.0).epsilon(1e-12));
        for (int q = 1; q < 16; ++q) CHECK(ev(q) == doctest::Approx(1.0 / 32.0).epsilon(1e-12));

        CHECK_THROWS_AS(make_example_state(-0.01), RangeError);
        CHECK_THROWS_AS(make_example_state(1.5), RangeError);
    }

    TEST_CASE("example state has unit trace and is PSD across t")
    {
        for (int q = 0; q < 100; ++q) {
            const double t = q / 99.0;
            const DensityMatrix rho = make_example_state(t);
            CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
            check_valid_density(rho);
        }
    }

    TEST_CASE("named states")
    {
        const PureState ghz = make_named_pure(NamedState::ghz, {2, 2, 2});
        CHECK(std::abs(ghz.coeff(0, 0, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(ghz.coeff(1, 1, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(ghz.coeff(0, 1, 0)) == 0.0);

        const PureState w = make_named_pure(NamedState::w, {2, 2, 2});
        for (const TripartiteIndex idx : {TripartiteIndex{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
            CHECK(std::abs(w.coeff(idx.i, idx.j, idx.k) - 1.0 / std::sqrt(3.0)) < 1e-15);
        CHECK(std::abs(w.coeff(0, 0, 0)) == 0.0);

        CHECK(make_named(NamedState::max_mixed, {2, 2, 4}).matrix().isApprox(ComplexMatrix::Identity(16, 16) / 16.0));

        CHECK_THROWS_AS(make_named_pure(NamedState::ghz, {2, 2, 4}), ShapeError);
        CHECK_THROWS_AS(make_named_pure(NamedState::w, {2, 3, 2}), ShapeError);
        CHECK_THROWS_AS(make_named_pure(NamedState::max_mixed, {2, 2, 2}), ShapeError);
    }

    TEST_CASE("random pure states are normalized and seed-deterministic")
    {
        for (const Dims d : {Dims{2, 2, 2}, Dims{3, 4, 5}}) {
            const PureState a = random_pure(d, 42);
            CHECK(std::abs(a.norm_squared() - 1.0) <= 1e-12);
            CHECK(random_pure(d, 42).coeffs() == a.coeffs());
            CHECK(random_pure(d, 43).coeffs() != a.coeffs());
        }
    }

    TEST_CASE("constructors produce valid density matrices; pure ones have unit purity")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            check_valid_density(random_mixed({2, 2, 4}, 1 + int(seed % 4), seed));
            check_valid_density(random_product_mixed({2, 3, 4}, seed));
            const DensityMatrix p = pure_to_density(random_pure({2, 3, 4}, seed));
            check_valid_density(p);
            CHECK(std::abs(p.purity() - 1.0) <= 1e-9);
        }
        for (NamedState n : {NamedState::ghz, NamedState::w, NamedState::product}) {
            const DensityMatrix rho = make_named(n, {2, 2, 2});
            check_valid_density(rho);
            CHECK(std::abs(rho.purity() - 1.0) <= 1e-9);
        }
        check_valid_density(make_named(NamedState::max_mixed, {3, 3, 3}));
    }

    TEST_CASE("density matrix validation")
    {
        ComplexMatrix bad = ComplexMatrix::Identity(8, 8) / 8.0;
        bad(0, 0) = -0.1;
        bad(1, 1) += 0.1 + 0.125;
        CHECK_THROWS_AS(DensityMatrix({2, 2, 2}, bad), ContractViolation);
        ComplexMatrix herm = ComplexMatrix::Identity(8, 8) / 8.0;
        herm(0, 1) = 0.01;
        CHECK_THROWS_AS(DensityMatrix({2, 2, 2}, herm), ContractViolation);
        CHECK_THROWS_AS(DensityMatrix({2, 2, 2}, ComplexMatrix::Identity(4, 4) / 4.0), ShapeError);
        CHECK_THROWS_AS(DensityMatrix({2, 2, 2}, ComplexMatrix::Identity(8, 8)), ContractViolation);
    }

    TEST_CASE("dimension-one subsystems are allowed")
    {
        const PureState psi = random_pure({1, 2, 3}, 3);
        CHECK(pure_to_density(psi).dims() == Dims{1, 2, 3});
        CHECK_THROWS_AS(random_pure({0, 2, 3}, 3), ShapeError);
    }
}
