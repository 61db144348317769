#include "hharm/ball_average.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "hharm/gamma_exact.hpp"
#include "hharm/poly_text.hpp"

namespace hharm {

std::vector<CylindricalTerm> cylindrical_expand(const TransPoly& p) {
    std::vector<CylindricalTerm> out;
    out.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        // z^a zbar^b = r^{a+b} e^{i(a-b) theta}.
        CylindricalTerm term;
        term.outer = {e[3], e[4], e[5]};
        term.phase = e[0] - e[1];
        term.radial = e[0] + e[1];
        term.vertical = e[2];
        term.coeff = c;
        assert(std::abs(term.phase) <= term.radial);
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<CylindricalTerm> angular_average(const std::vector<CylindricalTerm>& terms) {
    const PiScalar two_pi = PiScalar::pi_term(GaussianRational(2), 1);
    std::vector<CylindricalTerm> out;
    for (const auto& term : terms) {
        if (term.phase != 0) continue;
        CylindricalTerm kept = term;
        kept.coeff *= two_pi;
        out.push_back(std::move(kept));
    }
    return out;
}

std::vector<RadialTerm> vertical_integral(const std::vector<CylindricalTerm>& terms) {
    std::vector<RadialTerm> out;
    for (const auto& term : terms) {
        const int n = term.vertical;
        if (n < 0) throw std::logic_error("vertical_integral: negative t power");
        if (n % 2 == 1) continue;
        RadialTerm kept;
        kept.outer = term.outer;
        kept.radial = term.radial;
        kept.half_power = n + 1;
        kept.coeff = term.coeff * PiScalar(make_rational(2, n + 1));
        out.push_back(std::move(kept));
    }
    return out;
}

RadialValue radial_integral(int a, int c) {
    if (a < 1 || a % 2 == 0)
        throw std::logic_error("radial_integral: r-power must be odd and positive");
    if (c < 0 || (c != 0 && c % 2 == 0))
        throw std::logic_error("radial_integral: half-power tag must be odd or zero");
    PiScalar beta = beta_int_or_half(make_rational(a + 1, 4), make_rational(c + 2, 2));
    RadialValue value;
    value.coeff = beta * PiScalar(make_rational(1, 4));
    value.R_exp = a + 1 + 2 * c;
    return value;
}

AverageResult ball_average(const HPoly& p) {
    const auto radial_terms =
        vertical_integral(angular_average(cylindrical_expand(left_translate_symbolic(p))));

    // Divide by |B(0,R)| = pi^2 R^4 / 2 as each term lands.
    const PiScalar inv_volume = PiScalar::pi_term(GaussianRational(2), -2);
    AverageResult total;
    for (const auto& term : radial_terms) {
        RadialValue value = radial_integral(term.radial + 1, term.half_power);
        const int r_exp = value.R_exp - 4;
        if (r_exp < 0) throw std::logic_error("ball_average: radial degree below ball volume");
        CenterPoly::Expo e{term.outer[0], term.outer[1], term.outer[2], r_exp};
        total.add_term(e, term.coeff * value.coeff * inv_volume);
    }
    return total;
}

DefectReport harmonicity_defect(const HPoly& p) {
    DefectReport report;
    report.defect = ball_average(p) - embed_center(p);
    report.is_strongly_harmonic = report.defect.is_zero();
    return report;
}

namespace {

std::string leading_term_string(const CenterPoly& defect) {
    if (defect.is_zero()) return "0";
    const auto& [e, c] = *defect.terms().rbegin();
    CenterPoly single;
    single.add_term(e, c);
    return to_string(single);
}

ClassificationRow classify_one(const HarmonicIndex& idx) {
    DefectReport report = harmonicity_defect(spherical_harmonic(idx));
    ClassificationRow row;
    row.index = idx;
    row.degree = degree_of(idx);
    row.strongly_harmonic = report.is_strongly_harmonic;
    row.defect_leading_term = leading_term_string(report.defect);
    return row;
}

}  // namespace

ClassificationTable classify_up_to_degree(int max_degree, unsigned parallelism) {
    if (max_degree < 0) throw std::domain_error("classify_up_to_degree: negative degree");

    std::vector<HarmonicIndex> indices;
    for (int ell = 0; ell <= max_degree; ++ell)
        for (const auto& idx : basis_of_degree(ell)) indices.push_back(idx);

    ClassificationTable table(indices.size());
    unsigned workers = parallelism ? parallelism : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, indices.size() ? indices.size() : 1);

    if (workers <= 1) {
        for (size_t i = 0; i < indices.size(); ++i) table[i] = classify_one(indices[i]);
        return table;
    }

    // Each worker claims whole rows; slots are disjoint, so the merged table
    // is in basis order regardless of scheduling.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < indices.size(); i = next.fetch_add(1))
                table[i] = classify_one(indices[i]);
        });
    for (auto& th : pool) th.join();
    return table;
}

CenterPoly mean_at_origin(const HarmonicIndex& idx) {
    return evaluate_at_center(ball_average(spherical_harmonic(idx)), Point{});
}

}  // namespace hharm
