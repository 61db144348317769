#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hharm/poly_text.hpp"
#include "hharm/spherical.hpp"

using namespace hharm;

namespace {
const PiScalar kI{GaussianRational(Rational(0), Rational(1))};
}

TEST_CASE("coefficient table") {
    for (int l = 0; l <= 6; ++l) CHECK(coeff_C(l, 0) == Rational(1));
    CHECK(coeff_C(0, 1) == make_rational(1, 2));
    CHECK(coeff_C(1, 2) == make_rational(15, 8));
    CHECK(coeff_C(0, 2) == make_rational(3, 8));
    CHECK(coeff_C(2, 1) == make_rational(5, 2));
    CHECK_THROWS_AS(coeff_C(-1, 0), std::domain_error);
    CHECK_THROWS_AS(coeff_C(0, -1), std::domain_error);
}

TEST_CASE("radial factor pinned values") {
    CHECK(r_poly(0, 0, 0) == HPoly::constant(PiScalar(1)));
    CHECK(r_poly(3, 2, 0) == HPoly::constant(PiScalar(1)));
    CHECK(r_poly(0, 0, 1) == hpoly_t());
    for (int k = 0; k <= 4; ++k) {
        // r^1_{k,0} = (1 + k) t + i k z zbar
        HPoly expected = hpoly_t();
        expected.scale(PiScalar(Rational(1 + k)));
        HPoly cross = hpoly_z() * hpoly_zbar();
        cross.scale(kI * PiScalar(Rational(k)));
        CHECK(r_poly(k, 0, 1) == expected + cross);
    }
    CHECK_THROWS_AS(r_poly(-1, 0, 0), std::domain_error);
}

TEST_CASE("pinned harmonics") {
    CHECK(spherical_harmonic({0, 0, 0}) == HPoly::constant(PiScalar(1)));
    CHECK(spherical_harmonic({1, 0, 0}) == hpoly_z());
    CHECK(to_string(spherical_harmonic({0, 0, 2})) == "2*t^2 - z^2*zbar^2");

    // P^1_{1,0} = (2t + i z zbar) z
    HPoly t2 = hpoly_t();
    t2.scale(PiScalar(2));
    HPoly izz = hpoly_z() * hpoly_zbar();
    izz.scale(kI);
    CHECK(spherical_harmonic({1, 0, 1}) == (t2 + izz) * hpoly_z());
}

TEST_CASE("invalid indices are rejected") {
    CHECK_THROWS_AS(spherical_harmonic({1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(spherical_harmonic({2, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(spherical_harmonic({-1, 0, 0}), std::domain_error);
    CHECK_THROWS_AS(spherical_harmonic({0, 0, -1}), std::domain_error);
    CHECK_THROWS_AS(basis_of_degree(-1), std::domain_error);
}

TEST_CASE("basis enumeration") {
    CHECK(basis_of_degree(0) == std::vector<HarmonicIndex>{{0, 0, 0}});
    CHECK(basis_of_degree(1) == std::vector<HarmonicIndex>{{1, 0, 0}, {0, 1, 0}});
    CHECK(basis_of_degree(4) ==
          std::vector<HarmonicIndex>{{4, 0, 0}, {0, 4, 0}, {2, 0, 1}, {0, 2, 1}, {0, 0, 2}});
    for (int ell = 0; ell <= 12; ++ell) {
        auto basis = basis_of_degree(ell);
        CHECK(basis.size() == static_cast<size_t>(ell) + 1);
        for (const auto& idx : basis) {
            CHECK(degree_of(idx) == ell);
            CHECK(idx.k * idx.l == 0);
        }
    }
}

TEST_CASE("basis polynomials are homogeneous of the indexed degree") {
    for (int ell = 0; ell <= 10; ++ell)
        for (const auto& idx : basis_of_degree(ell))
            CHECK(homogeneous_degree(spherical_harmonic(idx)) == ell);
}

TEST_CASE("sub-Laplacian annihilates every basis polynomial up to degree 12") {
    for (int ell = 0; ell <= 12; ++ell)
        for (const auto& idx : basis_of_degree(ell))
            CHECK(sub_laplacian(spherical_harmonic(idx)).is_zero());
}

TEST_CASE("conjugation swaps the holomorphic and antiholomorphic families") {
    for (int ell = 0; ell <= 8; ++ell)
        for (const auto& idx : basis_of_degree(ell))
            CHECK(conjugated(spherical_harmonic(idx)) ==
                  spherical_harmonic({idx.l, idx.k, idx.m}));
}

TEST_CASE("adding the vertical second derivative is zero exactly when m <= 1") {
    for (int ell = 0; ell <= 10; ++ell)
        for (const auto& idx : basis_of_degree(ell))
            CHECK(laplace_beltrami(spherical_harmonic(idx)).is_zero() == (idx.m <= 1));
}
