#include "hharm/point.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hharm {

Point identity() { return {}; }

Point multiply(const Point& p, const Point& q) {
    return {p.x + q.x, p.y + q.y, p.t + q.t + 2 * (q.x * p.y - p.x * q.y)};
}

Point inverse(const Point& p) { return {-p.x, -p.y, -p.t}; }

Point dilate(const Point& p, const Rational& lambda) {
    if (lambda <= 0) throw std::domain_error("dilate: lambda must be positive");
    return {lambda * p.x, lambda * p.y, lambda * lambda * p.t};
}

RealPoint to_real(const Point& p) { return {p.x.get_d(), p.y.get_d(), p.t.get_d()}; }

RealPoint multiply(const RealPoint& p, const RealPoint& q) {
    return {p.x + q.x, p.y + q.y, p.t + q.t + 2 * (q.x * p.y - p.x * q.y)};
}

RealPoint inverse(const RealPoint& p) { return {-p.x, -p.y, -p.t}; }

RealPoint dilate(const RealPoint& p, double lambda) {
    if (lambda <= 0) throw std::domain_error("dilate: lambda must be positive");
    return {lambda * p.x, lambda * p.y, lambda * lambda * p.t};
}

bool is_finite(const RealPoint& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.t);
}

GaugeKind GaugeKind::canonical(double alpha) {
    if (!(alpha >= 1)) throw std::domain_error("CanonicalAlpha gauge requires alpha >= 1");
    return {Tag::CanonicalAlpha, alpha};
}

double gauge(const RealPoint& p, const GaugeKind& kind) {
    const double r2 = p.x * p.x + p.y * p.y;
    if (kind.tag == GaugeKind::Tag::FollandKaplan)
        return std::pow(r2 * r2 + p.t * p.t, 0.25);
    const double a = kind.alpha;
    return std::pow(std::pow(std::sqrt(r2), a) + std::pow(std::abs(p.t), a / 2), 1.0 / a);
}

double distance(const RealPoint& p, const RealPoint& q, const GaugeKind& kind) {
    return gauge(multiply(inverse(p), q), kind);
}

double ball_volume(double R) {
    if (!(R > 0)) throw std::domain_error("ball_volume: radius must be positive");
    const double R2 = R * R;
    return std::numbers::pi * std::numbers::pi * R2 * R2 / 2;
}

}  // namespace hharm
