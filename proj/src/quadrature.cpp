#include "hharm/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>
#include <tuple>
#include <vector>

#include "hharm/gauss_legendre.hpp"

namespace hharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinRadius = 1e-8;

struct Axis {
    std::vector<double> x, w;
};

Axis scaled_axis(int order, double lo, double hi) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    Axis axis;
    axis.x.resize(order);
    axis.w.resize(order);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < order; ++i) {
        axis.x[i] = mid + half * rule.nodes[i];
        axis.w[i] = half * rule.weights[i];
    }
    return axis;
}

unsigned effective_workers(unsigned parallelism, size_t jobs) {
    unsigned w = parallelism ? parallelism : std::thread::hardware_concurrency();
    if (w == 0) w = 1;
    return static_cast<unsigned>(std::min<size_t>(w, jobs ? jobs : 1));
}

void validate_ball(const RealPoint& center, double R, const QuadratureSpec& spec) {
    if (!is_finite(center)) throw std::domain_error("quad_ball: center must be finite");
    if (!std::isfinite(R) || R < kMinRadius)
        throw std::domain_error("quad_ball: radius must be finite and at least 1e-8");
    if (spec.radial_order < 2 || spec.vertical_order < 2 || spec.angular_order < 2)
        throw std::domain_error("quad_ball: quadrature orders must be at least 2");
    if (spec.refinement_factor < 2)
        throw std::domain_error("quad_ball: refinement factor must be at least 2");
}

// Tensor rule at explicit orders. Each rho-slice is summed by a single
// worker in a fixed loop order and the slices are reduced in index order, so
// the value is independent of the worker count.
double quad_ball_orders(const Integrand& f, const RealPoint& center, double R, int n_rho,
                        int n_phi, int n_theta, unsigned parallelism) {
    const Axis rho = scaled_axis(n_rho, 0.0, R);
    const Axis phi = scaled_axis(n_phi, -kPi / 2, kPi / 2);
    const Axis theta = scaled_axis(n_theta, 0.0, 2 * kPi);

    std::vector<double> cos_phi(n_phi), sin_phi(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        cos_phi[j] = std::cos(phi.x[j]);
        sin_phi[j] = std::sin(phi.x[j]);
    }
    std::vector<double> cos_theta(n_theta), sin_theta(n_theta);
    for (int k = 0; k < n_theta; ++k) {
        cos_theta[k] = std::cos(theta.x[k]);
        sin_theta[k] = std::sin(theta.x[k]);
    }

    std::vector<double> slice(n_rho, 0.0);
    std::atomic<bool> bad{false};
    auto run_slice = [&](int i) {
        const double rho_i = rho.x[i];
        const double rho_sq = rho_i * rho_i;
        double sum = 0;
        for (int j = 0; j < n_phi; ++j) {
            const double rad = rho_i * std::sqrt(std::max(0.0, cos_phi[j]));
            const double t_q = rho_sq * sin_phi[j];
            double inner = 0;
            for (int k = 0; k < n_theta; ++k) {
                const RealPoint q{rad * cos_theta[k], rad * sin_theta[k], t_q};
                inner += theta.w[k] * f(multiply(center, q));
            }
            sum += phi.w[j] * inner;
        }
        if (!std::isfinite(sum)) bad.store(true, std::memory_order_relaxed);
        slice[i] = rho.w[i] * rho_sq * rho_i * sum;  // Jacobian rho^3
    };

    const unsigned workers = effective_workers(parallelism, n_rho);
    if (workers <= 1) {
        for (int i = 0; i < n_rho; ++i) run_slice(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < n_rho; i = next.fetch_add(1)) run_slice(i);
            });
        for (auto& th : pool) th.join();
    }

    double total = 0;
    for (double s : slice) total += s;
    if (bad.load() || !std::isfinite(total))
        throw QuadratureError("quad_ball: non-finite integrand sample");
    return total;
}

double kernel_weight(const RealPoint& q) {
    const double r_sq = q.x * q.x + q.y * q.y;
    const double gauge4 = std::sqrt(r_sq * r_sq + q.t * q.t);
    return gauge4 == 0 ? 0.0 : r_sq / gauge4;
}

// Base and refined values of int_{B(0,R)} |grad_0 N|^2 dq; u-independent,
// so cached across kernel_mvp_ratio calls.
std::pair<double, double> kernel_denominator(double R, const QuadratureSpec& spec,
                                             unsigned parallelism) {
    using Key = std::tuple<double, int, int, int, int>;
    static std::mutex mutex;
    static std::map<Key, std::pair<double, double>> cache;
    const Key key{R, spec.radial_order, spec.vertical_order, spec.angular_order,
                  spec.refinement_factor};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const RealPoint origin{};
    const int rf = spec.refinement_factor;
    const std::pair<double, double> value{
        quad_ball_orders(kernel_weight, origin, R, spec.radial_order, spec.vertical_order,
                         spec.angular_order, parallelism),
        quad_ball_orders(kernel_weight, origin, R, rf * spec.radial_order,
                         rf * spec.vertical_order, rf * spec.angular_order, parallelism)};
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, value).first->second;
}

double bump_raw(double gauge4) {
    return gauge4 >= 1.0 ? 0.0 : std::exp(-1.0 / (1.0 - gauge4));
}

double bump_profile(const RealPoint& q) {
    const double r_sq = q.x * q.x + q.y * q.y;
    return bump_raw(r_sq * r_sq + q.t * q.t);
}

// C^{-1} = int_{B(0,1)} exp(-1/(1 - N^4)) dq, once per orders triple.
double bump_inverse_normalization(const QuadratureSpec& spec, unsigned parallelism) {
    using Key = std::tuple<int, int, int>;
    static std::mutex mutex;
    static std::map<Key, double> cache;
    const Key key{spec.radial_order, spec.vertical_order, spec.angular_order};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double value = quad_ball_orders(bump_profile, RealPoint{}, 1.0, spec.radial_order,
                                          spec.vertical_order, spec.angular_order, parallelism);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, value).first->second;
}

}  // namespace

double quad_ball(const Integrand& f, const RealPoint& center, double R, const QuadratureSpec& spec,
                 unsigned parallelism) {
    validate_ball(center, R, spec);
    return quad_ball_orders(f, center, R, spec.radial_order, spec.vertical_order,
                            spec.angular_order, parallelism);
}

QuadEstimate quad_ball_estimate(const Integrand& f, const RealPoint& center, double R,
                                const QuadratureSpec& spec, unsigned parallelism) {
    validate_ball(center, R, spec);
    const double base = quad_ball_orders(f, center, R, spec.radial_order, spec.vertical_order,
                                         spec.angular_order, parallelism);
    const int rf = spec.refinement_factor;
    const double refined =
        quad_ball_orders(f, center, R, rf * spec.radial_order, rf * spec.vertical_order,
                         rf * spec.angular_order, parallelism);
    QuadEstimate est;
    est.value = refined;
    const double floor = 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(refined));
    est.abs_error = std::max(std::abs(refined - base), floor);
    return est;
}

KernelMvpResult kernel_mvp_ratio(const HPoly& u, const RealPoint& center, double R,
                                 const QuadratureSpec& spec, unsigned parallelism) {
    validate_ball(center, R, spec);
    const CompiledPoly cu = compile(u);
    const Integrand g = [&cu, &center](const RealPoint& q) {
        return cu.eval_real(multiply(center, q)) * kernel_weight(q);
    };
    const RealPoint origin{};
    const double num_base = quad_ball_orders(g, origin, R, spec.radial_order, spec.vertical_order,
                                             spec.angular_order, parallelism);
    const int rf = spec.refinement_factor;
    const double num_refined =
        quad_ball_orders(g, origin, R, rf * spec.radial_order, rf * spec.vertical_order,
                         rf * spec.angular_order, parallelism);
    const auto [den_base, den_refined] = kernel_denominator(R, spec, parallelism);

    KernelMvpResult result;
    result.center = center;
    result.radius = R;
    result.ratio = num_refined / den_refined;
    result.point_value = cu.eval_real(center);
    const double floor =
        4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(result.ratio));
    result.abs_error_estimate = std::max(std::abs(result.ratio - num_base / den_base), floor);
    return result;
}

double mollifier_convolve(const HPoly& u, const RealPoint& p, double epsilon, MollifierKind kind,
                          const QuadratureSpec& spec, unsigned parallelism) {
    validate_ball(p, epsilon, spec);
    const CompiledPoly cu = compile(u);
    const RealPoint origin{};
    if (kind == MollifierKind::CharBall) {
        const Integrand g = [&cu, &p](const RealPoint& q) {
            return cu.eval_real(multiply(p, inverse(q)));
        };
        return quad_ball_orders(g, origin, epsilon, spec.radial_order, spec.vertical_order,
                                spec.angular_order, parallelism) /
               ball_volume(epsilon);
    }
    const double normalization = bump_inverse_normalization(spec, parallelism);
    const double eps4 = epsilon * epsilon * epsilon * epsilon;
    const Integrand g = [&cu, &p, eps4](const RealPoint& q) {
        const double r_sq = q.x * q.x + q.y * q.y;
        const double scaled_gauge4 = (r_sq * r_sq + q.t * q.t) / eps4;
        return cu.eval_real(multiply(p, inverse(q))) * bump_raw(scaled_gauge4);
    };
    const double integral =
        quad_ball_orders(g, origin, epsilon, spec.radial_order, spec.vertical_order,
                         spec.angular_order, parallelism);
    return integral / (normalization * eps4);
}

double sphere_sup(const HPoly& u, double r, long samples) {
    if (!std::isfinite(r) || r <= 0) throw std::domain_error("sphere_sup: radius must be positive");
    if (samples < 1000) throw std::domain_error("sphere_sup: need at least 1000 samples");
    const CompiledPoly cu = compile(u);
    const auto value_at = [&](double theta, double phi) {
        const double rad = r * std::sqrt(std::max(0.0, std::cos(phi)));
        const RealPoint q{rad * std::cos(theta), rad * std::sin(theta), r * r * std::sin(phi)};
        return cu.eval_real(q);
    };

    // R2 low-discrepancy sequence on the (theta, phi) chart.
    const double a1 = 0.7548776662466927;  // 1/g, g the plastic constant
    const double a2 = 0.5698402909980532;  // 1/g^2
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0, best_phi = 0;
    for (long n = 0; n < samples; ++n) {
        const double u1 = std::fmod(0.5 + static_cast<double>(n) * a1, 1.0);
        const double u2 = std::fmod(0.5 + static_cast<double>(n) * a2, 1.0);
        const double theta = -kPi + 2 * kPi * u1;
        const double phi = -kPi / 2 + kPi * u2;
        const double v = value_at(theta, phi);
        if (v > best) {
            best = v;
            best_theta = theta;
            best_phi = phi;
        }
    }

    // Compass pattern search from the best sample; phi clamps at the poles.
    double step_theta = 2 * kPi / std::sqrt(static_cast<double>(samples));
    double step_phi = kPi / std::sqrt(static_cast<double>(samples));
    for (int iter = 0; iter < 400 && step_theta > 1e-13; ++iter) {
        const double cand[4][2] = {{best_theta + step_theta, best_phi},
                                   {best_theta - step_theta, best_phi},
                                   {best_theta, best_phi + step_phi},
                                   {best_theta, best_phi - step_phi}};
        bool moved = false;
        for (const auto& c : cand) {
            const double phi = std::clamp(c[1], -kPi / 2, kPi / 2);
            const double v = value_at(c[0], phi);
            if (v > best) {
                best = v;
                best_theta = c[0];
                best_phi = phi;
                moved = true;
            }
        }
        if (!moved) {
            step_theta *= 0.5;
            step_phi *= 0.5;
        }
    }
    return best;
}

ThreeSpheresResult three_spheres_check(const HPoly& u, double r1, double r, double r2,
                                       long samples) {
    if (!(r1 > 0 && r1 < r && r < r2) || !std::isfinite(r2))
        throw std::domain_error("three_spheres_check: radii must satisfy 0 < r1 < r < r2");
    ThreeSpheresResult result;
    result.r1 = r1;
    result.r = r;
    result.r2 = r2;
    result.m1 = sphere_sup(u, r1, samples);
    result.m = sphere_sup(u, r, samples);
    result.m2 = sphere_sup(u, r2, samples);
    // Convexity in s = r^{2-Q} = r^{-2}.
    const double s1 = 1 / (r1 * r1), s = 1 / (r * r), s2 = 1 / (r2 * r2);
    const double lambda = (s - s2) / (s1 - s2);
    result.rhs = lambda * result.m1 + (1 - lambda) * result.m2;
    result.satisfied = result.m <= result.rhs + 1e-9 * std::max(1.0, std::abs(result.rhs));
    return result;
}

double difference_quotient(const HPoly& u, const RealPoint& p, FieldTag field, double h) {
    if (!is_finite(p)) throw std::domain_error("difference_quotient: point must be finite");
    if (!std::isfinite(h) || h == 0)
        throw std::domain_error("difference_quotient: step must be finite and nonzero");
    if (field == FieldTag::T)
        throw std::domain_error("difference_quotient: field must be horizontal (X or Y)");
    const RealPoint step =
        field == FieldTag::X ? RealPoint{h, 0, 0} : RealPoint{0, h, 0};
    return (evaluate_real(u, multiply(p, step)) - evaluate_real(u, p)) / h;
}

}  // namespace hharm
