#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hharm/point.hpp"
#include "hharm/quadrature.hpp"

using namespace hharm;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 50);
    return make_rational(num(rng), den(rng));
}

Point random_point(std::mt19937_64& rng) {
    return Point{random_rational(rng), random_rational(rng), random_rational(rng)};
}

RealPoint random_real_point(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> coord(-scale, scale);
    return RealPoint{coord(rng), coord(rng), coord(rng)};
}

bool same(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y && a.t == b.t; }

}  // namespace

TEST_CASE("group law on pinned products") {
    CHECK(same(multiply(Point{}, Point{1, 2, 3}), Point{1, 2, 3}));
    CHECK(same(multiply(Point{1, 2, 3}, Point{}), Point{1, 2, 3}));
    CHECK(same(multiply(Point{1, 0, 0}, Point{0, 1, 0}), Point{1, 1, -2}));
    CHECK(same(multiply(Point{1, 0, 0}, Point{-1, 0, 0}), Point{}));
}

TEST_CASE("inverse") {
    CHECK(same(inverse(Point{}), Point{}));
    CHECK(same(inverse(Point{1, 2, 3}), Point{-1, -2, -3}));
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
        Point p = random_point(rng);
        CHECK(same(multiply(inverse(p), p), Point{}));
        CHECK(same(multiply(p, inverse(p)), Point{}));
    }
}

TEST_CASE("group axioms on random rational triples") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 10000; ++i) {
        Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
        CHECK(same(multiply(multiply(p, q), r), multiply(p, multiply(q, r))));
    }
}

TEST_CASE("dilation") {
    CHECK(same(dilate(Point{1, 1, 1}, Rational(1)), Point{1, 1, 1}));
    CHECK(same(dilate(Point{1, 0, 1}, Rational(2)), Point{2, 0, 4}));
    CHECK_THROWS_AS(dilate(Point{1, 0, 0}, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(dilate(Point{1, 0, 0}, Rational(-2)), std::domain_error);
    CHECK_THROWS_AS(dilate(RealPoint{1, 0, 0}, 0.0), std::domain_error);
}

TEST_CASE("gauge values and homogeneity") {
    CHECK(gauge(RealPoint{}) == 0.0);
    CHECK(gauge(RealPoint{1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gauge(RealPoint{0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gauge(RealPoint{1, 0, 1}) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));

    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> lam(0.1, 4.0);
    const GaugeKind kinds[] = {GaugeKind::folland_kaplan(), GaugeKind::canonical(1.0),
                               GaugeKind::canonical(2.0), GaugeKind::canonical(3.0)};
    for (int i = 0; i < 500; ++i) {
        RealPoint p = random_real_point(rng);
        double l = lam(rng);
        for (const auto& kind : kinds) {
            CHECK(gauge(dilate(p, l), kind) ==
                  doctest::Approx(l * gauge(p, kind)).epsilon(1e-12));
            CHECK(gauge(inverse(p), kind) == gauge(p, kind));
        }
    }
}

TEST_CASE("canonical gauge validation and FK coincidence at alpha 4") {
    CHECK_THROWS_AS(GaugeKind::canonical(0.5), std::domain_error);
    CHECK_THROWS_AS(GaugeKind::canonical(0.0), std::domain_error);
    std::mt19937_64 rng(404);
    const GaugeKind a4 = GaugeKind::canonical(4.0);
    for (int i = 0; i < 300; ++i) {
        RealPoint p = random_real_point(rng);
        CHECK(gauge(p, a4) == doctest::Approx(gauge(p)).epsilon(1e-14));
    }
}

TEST_CASE("distance symmetry and pinned values") {
    std::mt19937_64 rng(505);
    CHECK(distance(RealPoint{}, RealPoint{1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 0; i < 300; ++i) {
        RealPoint p = random_real_point(rng), q = random_real_point(rng);
        CHECK(distance(p, p) == 0.0);
        CHECK(distance(p, q) == doctest::Approx(distance(q, p)).epsilon(1e-13));
    }
}

TEST_CASE("FK triangle inequality with constant 1") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 100000; ++i) {
        RealPoint p = random_real_point(rng), q = random_real_point(rng),
                  r = random_real_point(rng);
        double lhs = distance(p, r);
        double rhs = distance(p, q) + distance(q, r);
        CHECK(lhs <= rhs * (1 + 1e-12) + 1e-15);
    }
}

TEST_CASE("canonical gauges satisfy a quasi-triangle inequality") {
    std::mt19937_64 rng(707);
    for (double alpha : {1.0, 2.0, 3.0}) {
        const GaugeKind kind = GaugeKind::canonical(alpha);
        double worst = 0;
        for (int i = 0; i < 20000; ++i) {
            RealPoint p = random_real_point(rng), q = random_real_point(rng),
                      r = random_real_point(rng);
            double denom = distance(p, q, kind) + distance(q, r, kind);
            if (denom < 1e-9) continue;
            worst = std::max(worst, distance(p, r, kind) / denom);
        }
        CAPTURE(alpha);
        CHECK(worst < 2.5);
    }
}

TEST_CASE("ball volume") {
    const double half_pi_sq = std::numbers::pi * std::numbers::pi / 2;
    CHECK(ball_volume(1) == doctest::Approx(half_pi_sq).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(16 * half_pi_sq).epsilon(1e-15));
    CHECK_THROWS_AS(ball_volume(0), std::domain_error);
    CHECK_THROWS_AS(ball_volume(-1), std::domain_error);
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> rad(0.1, 3.0);
    for (int i = 0; i < 100; ++i) {
        double R = rad(rng);
        CHECK(ball_volume(2 * R) == doctest::Approx(16 * ball_volume(R)).epsilon(1e-14));
    }
}

TEST_CASE("ball volume agrees with quadrature of 1") {
    QuadratureSpec spec{16, 16, 16, 2};
    double numeric = quad_ball([](const RealPoint&) { return 1.0; }, RealPoint{}, 1.0, spec);
    CHECK(std::abs(numeric - ball_volume(1)) / ball_volume(1) < 1e-10);
}
