// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hharm/ball_average.hpp"
#include "hharm/poly_text.hpp"
#include "hharm/quadrature.hpp"

using namespace hharm;

namespace {

const PiScalar kI{GaussianRational(Rational(0), Rational(1))};

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(num(rng), den(rng));
}

HPoly random_poly(std::mt19937_64& rng, int max_deg, int terms = 5) {
    std::uniform_int_distribution<int> expo(0, max_deg);
    HPoly p;
    for (int i = 0; i < terms; ++i) {
        int a = expo(rng) % (max_deg + 1);
        int b = expo(rng) % (max_deg + 1 - a);
        int c = (max_deg - a - b) / 2 > 0 ? expo(rng) % ((max_deg - a - b) / 2 + 1) : 0;
        p.add_term({a, b, c}, PiScalar(GaussianRational(small_rational(rng), small_rational(rng))));
    }
    return p;
}

Point random_exact_point(std::mt19937_64& rng) {
    return Point{small_rational(rng), small_rational(rng), small_rational(rng)};
}

bool same_point(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y && a.t == b.t; }

CenterPoly quarter_r4() {
    CenterPoly p;
    p.add_term({0, 0, 0, 4}, PiScalar(make_rational(1, 4)));
    return p;
}

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

bool criterion_defect_vertical(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    DefectReport report = harmonicity_defect(spherical_harmonic({0, 0, 2}));
    bool ok = expect(report.defect == quarter_r4(), detail,
                     "defect is " + to_string(report.defect));
    ok &= expect(!report.is_strongly_harmonic, detail, "reported as strongly harmonic");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok &= expect(secs < 1.0, detail, "took " + std::to_string(secs) + " s (limit 1 s)");

    if (const char* cli = std::getenv("HHARM_CLI")) {
        std::string cmd = std::string(cli) + " defect --k 0 --l 0 --m 2 2>&1";
        std::string output;
        if (FILE* pipe = popen(cmd.c_str(), "r")) {
            char buf[512];
            size_t n;
            while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
            int status = pclose(pipe);
            ok &= expect(status == 0, detail, "cli exited nonzero: " + output);
            ok &= expect(output.find("\"defect\": \"R^4/4\"") != std::string::npos, detail,
                         "cli output missing R^4/4: " + output);
        }
    }
    return ok;
}

bool criterion_m1_families(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 0; k <= 10 && ok; ++k) {
        ok &= expect(harmonicity_defect(spherical_harmonic({k, 0, 1})).is_strongly_harmonic,
                     detail, "defect of (k,0,1), k=" + std::to_string(k) + " is nonzero");
        ok &= expect(harmonicity_defect(spherical_harmonic({0, k, 1})).is_strongly_harmonic,
                     detail, "defect of (0,k,1), k=" + std::to_string(k) + " is nonzero");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok & expect(secs < 30.0, detail, "took " + std::to_string(secs) + " s (limit 30 s)");
}

bool criterion_basis_harmonic(std::string& detail) {
    for (int ell = 0; ell <= 12; ++ell)
        for (const auto& idx : basis_of_degree(ell))
            if (!sub_laplacian(spherical_harmonic(idx)).is_zero())
                return expect(false, detail,
                              "L P != 0 at (" + std::to_string(idx.k) + "," +
                                  std::to_string(idx.l) + "," + std::to_string(idx.m) + ")");
    return true;
}

bool criterion_classification(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationTable table = classify_up_to_degree(12);
    bool ok = expect(table.size() == 91, detail, "expected 91 rows");
    for (const auto& row : table)
        ok &= expect(row.strongly_harmonic == (row.index.m <= 1), detail,
                     "row (" + std::to_string(row.index.k) + "," + std::to_string(row.index.l) +
                         "," + std::to_string(row.index.m) + ") classified as " +
                         (row.strongly_harmonic ? "harmonic" : "defective"));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return ok & expect(secs < 300.0, detail, "took " + std::to_string(secs) + " s (limit 300 s)");
}

bool criterion_exact_vs_numeric(std::string& detail) {
    std::mt19937_64 rng(515151);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    QuadratureSpec spec;

    std::vector<RealPoint> centers;
    for (int i = 0; i < 5; ++i) centers.push_back({coord(rng), coord(rng), coord(rng)});

    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        HPoly p = real_part(random_poly(rng, 6));
        CenterPoly avg = ball_average(p);
        CompiledPoly cp = compile(p);
        for (const RealPoint& center : centers) {
            for (double R : {0.5, 1.0, 2.0}) {
                double numeric =
                    quad_ball([&](const RealPoint& q) { return cp.eval_real(q); }, center, R,
                              spec) /
                    ball_volume(R);
                double exact = evaluate(avg, center, R).real();
                ok &= expect(std::abs(numeric - exact) <= 1e-10 * (1 + std::abs(exact)), detail,
                             "trial " + std::to_string(trial) + ": |" + std::to_string(numeric) +
                                 " - " + std::to_string(exact) + "| too large");
            }
        }
    }
    return ok;
}

bool criterion_ball_volume(std::string& detail) {
    QuadratureSpec spec;
    bool ok = true;
    for (double R : {0.5, 1.0, 2.0}) {
        double numeric = quad_ball([](const RealPoint&) { return 1.0; }, RealPoint{}, R, spec);
        double exact = ball_volume(R);
        ok &= expect(std::abs(numeric - exact) <= 1e-10 * exact, detail,
                     "R=" + std::to_string(R) + ": quadrature volume off by " +
                         std::to_string(std::abs(numeric - exact) / exact));
    }
    return ok;
}

bool criterion_kernel_mvp(std::string& detail) {
    std::mt19937_64 rng(626262);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    QuadratureSpec spec;

    std::vector<RealPoint> centers;
    for (int i = 0; i < 5; ++i) centers.push_back({coord(rng), coord(rng), coord(rng)});

    bool ok = true;
    for (int ell = 0; ell <= 6 && ok; ++ell) {
        for (const auto& idx : basis_of_degree(ell)) {
            HPoly p = spherical_harmonic(idx);
            for (const HPoly& u : {real_part(p), imag_part(p)}) {
                for (const RealPoint& center : centers) {
                    for (double R : {0.5, 1.0}) {
                        KernelMvpResult r = kernel_mvp_ratio(u, center, R, spec);
                        ok &= expect(
                            std::abs(r.ratio - r.point_value) <=
                                1e-6 * (1 + std::abs(r.point_value)),
                            detail,
                            "(" + std::to_string(idx.k) + "," + std::to_string(idx.l) + "," +
                                std::to_string(idx.m) + ") R=" + std::to_string(R) + ": ratio " +
                                std::to_string(r.ratio) + " vs " +
                                std::to_string(r.point_value));
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion_mollifier(std::string& detail) {
    QuadratureSpec spec;
    const RealPoint p{0.3, -0.2, 0.5};
    bool ok = true;
    for (int ell = 0; ell <= 6 && ok; ++ell) {
        for (const auto& idx : basis_of_degree(ell)) {
            if (idx.m > 1) continue;
            HPoly poly = spherical_harmonic(idx);
            for (const HPoly& u : {real_part(poly), imag_part(poly)}) {
                double at_p = evaluate_real(u, p);
                for (MollifierKind kind : {MollifierKind::ExpBump, MollifierKind::CharBall}) {
                    for (double eps : {0.25, 0.5}) {
                        double value = mollifier_convolve(u, p, eps, kind, spec);
                        ok &= expect(std::abs(value - at_p) <= 1e-6 * (1 + std::abs(at_p)),
                                     detail,
                                     "(" + std::to_string(idx.k) + "," + std::to_string(idx.l) +
                                         "," + std::to_string(idx.m) + ") eps=" +
                                         std::to_string(eps) + ": " + std::to_string(value) +
                                         " vs " + std::to_string(at_p));
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion_three_spheres(std::string& detail) {
    std::vector<HPoly> samples;
    for (int ell = 1; ell <= 4 && samples.size() < 10; ++ell)
        for (const auto& idx : basis_of_degree(ell)) {
            if (idx.m > 1 || samples.size() >= 10) continue;
            HPoly re = real_part(spherical_harmonic(idx));
            if (!re.is_zero()) samples.push_back(re);
            HPoly im = imag_part(spherical_harmonic(idx));
            if (!im.is_zero() && samples.size() < 10) samples.push_back(im);
        }

    bool ok = expect(samples.size() == 10, detail, "sample pool too small");
    for (size_t i = 0; i < samples.size() && ok; ++i) {
        ThreeSpheresResult r = three_spheres_check(samples[i], 0.5, 1.0, 2.0, 4096);
        ok &= expect(r.satisfied, detail,
                     "sample " + std::to_string(i) + ": sup " + std::to_string(r.m) +
                         " exceeds bound " + std::to_string(r.rhs));
    }

    ThreeSpheresResult flat = three_spheres_check(HPoly::constant(PiScalar(3)), 0.5, 1.0, 2.0,
                                                  2048);
    ok &= expect(std::abs(flat.m - flat.rhs) <= 1e-12, detail,
                 "constant case not an equality: " + std::to_string(flat.m - flat.rhs));
    return ok;
}

bool criterion_property_suites(std::string& detail) {
    std::mt19937_64 rng(737373);
    bool ok = true;

    // Group axioms on 10^4 random rational triples.
    for (int i = 0; i < 10000 && ok; ++i) {
        Point p = random_exact_point(rng), q = random_exact_point(rng),
              r = random_exact_point(rng);
        ok &= expect(same_point(multiply(multiply(p, q), r), multiply(p, multiply(q, r))), detail,
                     "associativity failed");
        ok &= expect(same_point(multiply(p, identity()), p) &&
                         same_point(multiply(identity(), p), p),
                     detail, "identity failed");
        ok &= expect(same_point(multiply(p, inverse(p)), identity()), detail, "inverse failed");
    }

    // Gauge homogeneity and inverse symmetry.
    std::uniform_real_distribution<double> coord(-2.0, 2.0), lam(0.1, 3.0);
    for (int i = 0; i < 500 && ok; ++i) {
        RealPoint p{coord(rng), coord(rng), coord(rng)};
        double lambda = lam(rng);
        for (GaugeKind kind : {GaugeKind::folland_kaplan(), GaugeKind::canonical(2.0),
                               GaugeKind::canonical(3.0)}) {
            double scaled = gauge(dilate(p, lambda), kind);
            ok &= expect(std::abs(scaled - lambda * gauge(p, kind)) <=
                             1e-12 * (1 + scaled),
                         detail, "gauge homogeneity failed");
            ok &= expect(gauge(inverse(p), kind) == gauge(p, kind), detail,
                         "gauge symmetry failed");
        }
    }

    // Triangle inequality for the smooth gauge distance, 10^5 triples.
    for (int i = 0; i < 100000 && ok; ++i) {
        RealPoint p{coord(rng), coord(rng), coord(rng)}, q{coord(rng), coord(rng), coord(rng)},
            r{coord(rng), coord(rng), coord(rng)};
        double lhs = distance(p, r);
        double rhs = distance(p, q) + distance(q, r);
        ok &= expect(lhs <= rhs * (1 + 1e-12) + 1e-15, detail, "triangle inequality failed");
    }

    // Derivation and commutator laws on random polynomials.
    for (int i = 0; i < 25 && ok; ++i) {
        HPoly p = random_poly(rng, 4), q = random_poly(rng, 4);
        for (FieldTag f : {FieldTag::X, FieldTag::Y, FieldTag::T})
            ok &= expect(apply_field(f, p * q) ==
                             apply_field(f, p) * q + p * apply_field(f, q),
                         detail, "derivation law failed");
        HPoly xy = apply_field(FieldTag::X, apply_field(FieldTag::Y, p));
        HPoly yx = apply_field(FieldTag::Y, apply_field(FieldTag::X, p));
        HPoly rhs = apply_field(FieldTag::T, p);
        rhs.scale(PiScalar(-4));
        ok &= expect(xy - yx == rhs, detail, "commutator law failed");
    }

    // Ball-average linearity and left invariance, exact.
    const PiScalar alpha = kI * PiScalar::pi_term(GaussianRational(make_rational(3, 2)), 1);
    for (int i = 0; i < 10 && ok; ++i) {
        HPoly p = random_poly(rng, 4), q = random_poly(rng, 4);
        HPoly combo = p;
        combo.scale(alpha);
        combo += q;
        CenterPoly lin_rhs = ball_average(p);
        lin_rhs.scale(alpha);
        lin_rhs += ball_average(q);
        ok &= expect(ball_average(combo) == lin_rhs, detail, "average linearity failed");

        Point center = random_exact_point(rng);
        ok &= expect(evaluate_at_center(ball_average(p), center) ==
                         evaluate_at_center(ball_average(left_translate(p, center)), Point{}),
                     detail, "average left invariance failed");
    }
    return ok;
}

bool criterion_zz_average(std::string& detail) {
    CenterPoly at_origin = evaluate_at_center(ball_average(hpoly_z() * hpoly_zbar()), Point{});
    CenterPoly expected;
    expected.add_term({0, 0, 0, 2}, PiScalar::pi_term(GaussianRational(make_rational(4, 3)), -1));
    bool ok = expect(at_origin == expected, detail,
                     "exact value is " + to_string(at_origin) + ", want 4*R^2/(3*pi)");

    QuadratureSpec spec;
    double numeric = quad_ball([](const RealPoint& q) { return q.x * q.x + q.y * q.y; },
                               RealPoint{}, 1.0, spec) /
                     ball_volume(1.0);
    double target = 4.0 / (3.0 * M_PI);
    ok &= expect(std::abs(numeric - target) <= 1e-9 * target, detail,
                 "numeric value " + std::to_string(numeric) + " vs " + std::to_string(target));
    return ok;
}

struct Criterion {
    const char* name;
    bool (*run)(std::string&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"exact defect of the degree-4 vertical harmonic equals R^4/4 in under 1 s",
         criterion_defect_vertical},
        {"defects of the m=1 harmonic families vanish through k=10 in under 30 s",
         criterion_m1_families},
        {"sub-Laplacian annihilates the generated basis through degree 12",
         criterion_basis_harmonic},
        {"strong harmonicity through degree 12 holds exactly when m <= 1, in under 5 min",
         criterion_classification},
        {"exact ball averages match quadrature to 1e-10 on random polynomials",
         criterion_exact_vs_numeric},
        {"quadrature reproduces the gauge ball volume to 1e-10 for R in {1/2, 1, 2}",
         criterion_ball_volume},
        {"kernel mean values reproduce harmonic point values to 1e-6 through degree 6",
         criterion_kernel_mvp},
        {"mollifier convolutions reproduce strongly harmonic values to 1e-6",
         criterion_mollifier},
        {"three-spheres comparison holds on 10 strongly harmonic samples, equality for constants",
         criterion_three_spheres},
        {"group, gauge, field and average property suites hold",
         criterion_property_suites},
        {"ball average of z*zbar at the origin is exactly 4*R^2/(3*pi), numerically to 1e-9",
         criterion_zz_average},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool passed = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            passed = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%.2f s)\n", passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs);
        if (!passed) {
            std::printf("       %s\n", detail.empty() ? "no detail recorded" : detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
