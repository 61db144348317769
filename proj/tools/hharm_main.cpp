#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hharm/ball_average.hpp"
#include "hharm/poly_text.hpp"
#include "hharm/quadrature.hpp"
#include "hharm/report.hpp"

namespace {

using namespace hharm;

// Flag combinations that CLI11 cannot reject on its own; exits with the
// usage code like any other bad invocation.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolySelection {
    std::string poly_text;
    int k = 0, l = 0, m = 0;
    bool index_given = false;
};

// Adds --k/--l/--m and --poly to a subcommand; exactly one of the two ways
// of naming a polynomial must be used.
void add_poly_options(CLI::App* cmd, PolySelection& sel) {
    auto* opt_k = cmd->add_option("--k", sel.k, "Spherical harmonic index k");
    auto* opt_l = cmd->add_option("--l", sel.l, "Spherical harmonic index l");
    auto* opt_m = cmd->add_option("--m", sel.m, "Spherical harmonic t-order m");
    auto* opt_poly =
        cmd->add_option("--poly", sel.poly_text,
                        "Polynomial expression in z, zbar, t (constants i, pi; operators + - * ^; "
                        "division by scalar constants)");
    opt_poly->excludes(opt_k)->excludes(opt_l)->excludes(opt_m);
    cmd->callback([&sel, cmd] {
        sel.index_given =
            cmd->count("--k") > 0 || cmd->count("--l") > 0 || cmd->count("--m") > 0;
    });
}

HPoly resolve_poly(const PolySelection& sel, Json& params) {
    if (!sel.poly_text.empty()) {
        params["poly"] = sel.poly_text;
        return parse_poly(sel.poly_text);
    }
    if (!sel.index_given)
        throw UsageError("name a polynomial with --k/--l/--m or with --poly");
    params["k"] = sel.k;
    params["l"] = sel.l;
    params["m"] = sel.m;
    return spherical_harmonic({sel.k, sel.l, sel.m});
}

HPoly resolve_real_poly(const PolySelection& sel, const std::string& part, Json& params) {
    HPoly p = resolve_poly(sel, params);
    params["part"] = part;
    return part == "im" ? imag_part(p) : real_part(p);
}

RealPoint to_point(const std::vector<double>& c) { return RealPoint{c[0], c[1], c[2]}; }

unsigned resolve_parallel(const CLI::App& app, unsigned from_flag) {
    if (app.count("--parallel") > 0) return from_flag;
    if (const char* env = std::getenv("HH_PARALLEL")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: hardware concurrency
}

ReportFormat resolve_format(const std::string& requested, bool out_to_file) {
    if (requested == "table") return ReportFormat::Table;
    if (requested == "json") return ReportFormat::Json;
    if (requested == "csv") return ReportFormat::Csv;
    if (out_to_file || isatty(STDOUT_FILENO) == 0) return ReportFormat::Json;
    return ReportFormat::Table;
}

void emit(const ReportDocument& doc, ReportFormat format, const std::string& out_path,
          const ClassificationTable* table) {
    std::string payload;
    if (format == ReportFormat::Csv) {
        if (!table) throw UsageError("--format csv is only available for classify");
        payload = classification_to_csv(*table);
    } else if (format == ReportFormat::Json) {
        payload = doc.to_json().dump(2) + "\n";
    } else {
        payload = render_table(doc);
    }
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output path: " + out_path);
    out << payload;
    out.flush();
    if (!out) throw std::domain_error("failed writing output path: " + out_path);
}

std::string center_poly_string(const CenterPoly& p, const std::string& vars) {
    return vars == "xy" ? to_string_xyt(p) : to_string(p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric harmonicity checks on the first Heisenberg group"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format_flag;
    app.add_option("--format", format_flag, "Output format (default: table on a terminal, json otherwise)")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    std::string out_path;
    app.add_option("--out", out_path, "Write the report to a file instead of stdout");
    unsigned parallel_flag = 0;
    app.add_option("--parallel", parallel_flag,
                   "Worker thread cap (env HH_PARALLEL; default: all cores)")
        ->check(CLI::PositiveNumber);
    std::string vars = "z";
    app.add_option("--vars", vars, "Variables for exact output: z (z0, zbar0) or xy (x0, y0)")
        ->check(CLI::IsMember({"z", "xy"}));

    auto* classify = app.add_subcommand("classify", "Strong-harmonicity table of the basis");
    int max_degree = 0;
    classify->add_option("--max-degree", max_degree, "Largest homogeneous degree")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* defect = app.add_subcommand("defect", "Exact ball-average defect of a polynomial");
    PolySelection defect_sel;
    add_poly_options(defect, defect_sel);

    auto* average = app.add_subcommand("average", "Exact ball average of a polynomial");
    PolySelection average_sel;
    add_poly_options(average, average_sel);

    auto* numeric = app.add_subcommand("numeric", "Floating-point quadrature checks");
    numeric->require_subcommand(1);

    std::vector<double> center{0, 0, 0};
    double radius = 1.0;
    std::vector<int> orders{64, 64, 64};
    int refine = 2;
    std::string part = "re";
    auto add_numeric_common = [&](CLI::App* cmd, bool with_poly, PolySelection* sel) {
        if (with_poly) {
            add_poly_options(cmd, *sel);
            cmd->add_option("--part", part, "Real or imaginary part of the polynomial")
                ->check(CLI::IsMember({"re", "im"}));
        }
        cmd->add_option("--orders", orders, "Gauss-Legendre orders (radial,vertical,angular)")
            ->delimiter(',')
            ->expected(3);
        cmd->add_option("--refine", refine, "Order multiplier for error estimates")
            ->check(CLI::Range(2, 16));
    };

    auto* kernel = numeric->add_subcommand(
        "kernel-mvp", "Weighted volume mean value against the point value");
    PolySelection kernel_sel;
    add_numeric_common(kernel, true, &kernel_sel);
    kernel->add_option("--center", center, "Center x,y,t")->delimiter(',')->expected(3);
    kernel->add_option("--radius", radius, "Ball radius");

    auto* spheres = numeric->add_subcommand("three-spheres", "Three-spheres inequality check");
    PolySelection spheres_sel;
    std::vector<double> radii{0.5, 1.0, 2.0};
    long samples = 4096;
    add_numeric_common(spheres, true, &spheres_sel);
    spheres->add_option("--radii", radii, "Radii r1,r,r2")->delimiter(',')->expected(3);
    spheres->add_option("--samples", samples, "Sphere samples per radius (at least 1000)");

    auto* mollify = numeric->add_subcommand("mollify", "Convolution with a mollifier");
    PolySelection mollify_sel;
    double epsilon = 0.5;
    std::string kind = "exp-bump";
    add_numeric_common(mollify, true, &mollify_sel);
    mollify->add_option("--center", center, "Point x,y,t")->delimiter(',')->expected(3);
    mollify->add_option("--epsilon", epsilon, "Mollifier scale");
    mollify->add_option("--kind", kind, "Mollifier kind")
        ->check(CLI::IsMember({"exp-bump", "char-ball"}));

    auto* quadcheck = numeric->add_subcommand("quad-check", "Ball volume quadrature check");
    add_numeric_common(quadcheck, false, nullptr);
    quadcheck->add_option("--radius", radius, "Ball radius");

    for (CLI::App* sub : {classify, defect, average, numeric, kernel, spheres, mollify, quadcheck})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; everything else is a usage error.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const unsigned workers = resolve_parallel(app, parallel_flag);
        const ReportFormat format = resolve_format(format_flag, !out_path.empty());
        const QuadratureSpec spec{orders[0], orders[1], orders[2], refine};

        ReportDocument doc;
        doc.timestamp = iso8601_utc_now();
        ClassificationTable table;
        const ClassificationTable* table_ptr = nullptr;

        if (*classify) {
            doc.command = "classify";
            doc.params["max_degree"] = max_degree;
            table = classify_up_to_degree(max_degree, workers);
            table_ptr = &table;
            int harmonic = 0;
            for (const auto& row : table) harmonic += row.strongly_harmonic ? 1 : 0;
            doc.result["rows"] = classification_to_json(table);
            doc.result["strongly_harmonic_count"] = harmonic;
            doc.result["row_count"] = static_cast<int>(table.size());
        } else if (*defect) {
            doc.command = "defect";
            HPoly p = resolve_poly(defect_sel, doc.params);
            doc.params["vars"] = vars;
            DefectReport report = harmonicity_defect(p);
            doc.result["defect"] = center_poly_string(report.defect, vars);
            doc.result["strongly_harmonic"] = report.is_strongly_harmonic;
        } else if (*average) {
            doc.command = "average";
            HPoly p = resolve_poly(average_sel, doc.params);
            doc.params["vars"] = vars;
            doc.result["average"] = center_poly_string(ball_average(p), vars);
        } else if (*kernel) {
            doc.command = "numeric kernel-mvp";
            HPoly u = resolve_real_poly(kernel_sel, part, doc.params);
            doc.params["center"] = center;
            doc.params["radius"] = radius;
            doc.params["orders"] = orders;
            doc.params["refine"] = refine;
            KernelMvpResult r = kernel_mvp_ratio(u, to_point(center), radius, spec, workers);
            doc.result["ratio"] = r.ratio;
            doc.result["point_value"] = r.point_value;
            doc.result["abs_difference"] = std::abs(r.ratio - r.point_value);
            doc.result["abs_error_estimate"] = r.abs_error_estimate;
        } else if (*spheres) {
            doc.command = "numeric three-spheres";
            HPoly u = resolve_real_poly(spheres_sel, part, doc.params);
            doc.params["radii"] = radii;
            doc.params["samples"] = samples;
            ThreeSpheresResult r = three_spheres_check(u, radii[0], radii[1], radii[2], samples);
            doc.result["m_r1"] = r.m1;
            doc.result["m_r"] = r.m;
            doc.result["m_r2"] = r.m2;
            doc.result["rhs"] = r.rhs;
            doc.result["margin"] = r.rhs - r.m;
            doc.result["satisfied"] = r.satisfied;
        } else if (*mollify) {
            doc.command = "numeric mollify";
            HPoly u = resolve_real_poly(mollify_sel, part, doc.params);
            doc.params["center"] = center;
            doc.params["epsilon"] = epsilon;
            doc.params["kind"] = kind;
            doc.params["orders"] = orders;
            doc.params["refine"] = refine;
            const MollifierKind mkind =
                kind == "char-ball" ? MollifierKind::CharBall : MollifierKind::ExpBump;
            const double value = mollifier_convolve(u, to_point(center), epsilon, mkind, spec,
                                                    workers);
            QuadratureSpec refined = spec;
            refined.radial_order *= refine;
            refined.vertical_order *= refine;
            refined.angular_order *= refine;
            const double better = mollifier_convolve(u, to_point(center), epsilon, mkind,
                                                     refined, workers);
            const double point_value = evaluate_real(u, to_point(center));
            doc.result["value"] = better;
            doc.result["point_value"] = point_value;
            doc.result["abs_difference"] = std::abs(better - point_value);
            doc.result["abs_error_estimate"] = std::abs(better - value);
        } else if (*quadcheck) {
            doc.command = "numeric quad-check";
            doc.params["radius"] = radius;
            doc.params["orders"] = orders;
            doc.params["refine"] = refine;
            QuadEstimate est = quad_ball_estimate([](const RealPoint&) { return 1.0; },
                                                  RealPoint{}, radius, spec, workers);
            const double exact = ball_volume(radius);
            doc.result["volume"] = est.value;
            doc.result["exact_volume"] = exact;
            doc.result["rel_error"] = std::abs(est.value - exact) / exact;
            doc.result["abs_error_estimate"] = est.abs_error;
        }

        emit(doc, format, out_path, table_ptr);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
