#pragma once

#include "hharm/rational.hpp"

namespace hharm {

// Group element (x, y, t) of the first Heisenberg group, z = x + iy.
// Multiplication: (z1,t1)(z2,t2) = (z1+z2, t1+t2+2 Im(z1 conj(z2))).
struct Point {
    Rational x{0}, y{0}, t{0};
};

struct RealPoint {
    double x = 0, y = 0, t = 0;
};

Point identity();
Point multiply(const Point& p, const Point& q);
Point inverse(const Point& p);
Point dilate(const Point& p, const Rational& lambda);  // weights (1, 1, 2); lambda > 0

RealPoint to_real(const Point& p);
RealPoint multiply(const RealPoint& p, const RealPoint& q);
RealPoint inverse(const RealPoint& p);
RealPoint dilate(const RealPoint& p, double lambda);
bool is_finite(const RealPoint& p);

// Homogeneous gauges. FollandKaplan: ((x^2+y^2)^2 + t^2)^(1/4).
// CanonicalAlpha: (|P1|^alpha + |P2|^(alpha/2))^(1/alpha) with P1 = (x,y), P2 = t.
struct GaugeKind {
    enum class Tag { FollandKaplan, CanonicalAlpha };
    Tag tag = Tag::FollandKaplan;
    double alpha = 0;

    static GaugeKind folland_kaplan() { return {}; }
    static GaugeKind canonical(double alpha);
};

double gauge(const RealPoint& p, const GaugeKind& kind = GaugeKind::folland_kaplan());
double distance(const RealPoint& p, const RealPoint& q,
                const GaugeKind& kind = GaugeKind::folland_kaplan());

// Volume of the Folland-Kaplan gauge ball of radius R: pi^2 R^4 / 2.
double ball_volume(double R);

}  // namespace hharm
