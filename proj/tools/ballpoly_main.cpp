#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ballpoly/duality.hpp"
#include "ballpoly/generators.hpp"
#include "ballpoly/io.hpp"
#include "ballpoly/selftest.hpp"
#include "ballpoly/vazsonyi.hpp"

namespace {

using namespace ballpoly;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::ToleranceConflict:
            return 3;
        case Errc::GhsCrossCheckFailure:
        case Errc::InternalInvariantViolation:
            return 2;
        default:
            return 1;
    }
}

Configuration load(const std::string& path, const Tolerance& tol) {
    Configuration v = read_configuration(path);
    // A command-line tolerance override wins over the file's.
    if (tol.eq_dist != Tolerance{}.eq_dist || tol.vertex_merge != Tolerance{}.vertex_merge ||
        tol.angle_eps != Tolerance{}.angle_eps)
        return Configuration(v.points(), v.labels(), tol);
    return v;
}

// "01:2,12:1" -> {{0,1}:2, {1,2}:1}
std::map<std::pair<int, int>, int> parse_arc_counts(const std::string& text) {
    std::map<std::pair<int, int>, int> counts;
    if (text.empty()) return counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon < 2)
            fail(Errc::ParseError, "expected ij:count entries, e.g. 01:2");
        const int i = item[0] - '0';
        const int j = item[1] - '0';
        counts[{i, j}] += std::stoi(item.substr(colon + 1));
    }
    return counts;
}

// "0:0.5;2:0.3,0.7" -> per-gap parameter lists
std::vector<std::vector<double>> parse_gap_points(const std::string& text, std::size_t gaps) {
    std::vector<std::vector<double>> out(gaps);
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail(Errc::ParseError, "expected gap:params entries");
        const std::size_t gap = std::stoul(item.substr(0, colon));
        if (gap >= gaps) fail(Errc::ParseError, "gap index out of range");
        std::stringstream ps(item.substr(colon + 1));
        std::string val;
        while (std::getline(ps, val, ',')) out[gap].push_back(std::stod(val));
    }
    return out;
}

void emit_or_print(const Configuration& v, const std::string& out_path) {
    write_configuration(v, out_path.empty() ? "-" : out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ball polytope face structure, diameter extremality, and self-duality tools"};
    app.require_subcommand(0, 1);

    double tol_eq = -1;
    std::uint64_t seed = 20240801;
    bool verify = false;
    app.add_option("--tolerance", tol_eq, "distance-equality band (default 1e-9)");
    app.add_option("--seed", seed, "seed for the verification suite");
    app.add_flag("--verify", verify, "run the full invariant suite");

    std::string in_path, report_path, mesh_path, skeleton_path, dot_path, out_path;

    auto* faces = app.add_subcommand("faces", "build the face complex and report counts");
    faces->add_option("input", in_path, "point-set JSON ('-' for stdin)")->required();
    faces->add_option("--report", report_path, "write a JSON report");
    faces->add_option("--mesh", mesh_path, "write a tessellated OFF/OBJ mesh");
    faces->add_option("--skeleton", skeleton_path, "write the 1-skeleton as DOT");

    auto* dg = app.add_subcommand("diameter-graph", "list diameter pairs");
    dg->add_option("input", in_path)->required();
    dg->add_option("--dot", dot_path, "write the diameter graph as DOT");

    auto* ce = app.add_subcommand("check-extremal", "diameter-count extremality verdict");
    ce->add_option("input", in_path)->required();

    auto* cc = app.add_subcommand("critical-core", "strip 2-valent diameter vertices");
    cc->add_option("input", in_path)->required();
    cc->add_option("--out", out_path, "write the core point set");

    auto* du = app.add_subcommand("duality", "canonical self-duality and fixed-point check");
    du->add_option("input", in_path)->required();
    du->add_option("--report", report_path, "write a JSON report");

    auto* gen = app.add_subcommand("generate", "emit a named point family");
    std::string family;
    int gen_k = 3, gen_n = 5;
    double gen_h = 0.5, gen_eps = 0.05;
    bool gen_reuleaux = false, gen_poles = false;
    std::string gen_arcs, gen_angles, gen_points;
    gen->add_option("family", family,
                    "suspended | rugby | tetrahedron | two-pole | truncated-suspended")
        ->required();
    gen->add_option("--k", gen_k, "suspension parameter (polygon order 2k-1)");
    gen->add_option("--n", gen_n, "polygon order");
    gen->add_option("--height", gen_h, "pole height");
    gen->add_flag("--reuleaux", gen_reuleaux, "tune the height for unit main diagonals");
    gen->add_flag("--poles", gen_poles, "include the poles as generators");
    gen->add_option("--arcs", gen_arcs, "arc points, e.g. 01:2,02:1");
    gen->add_option("--angles", gen_angles, "comma-separated mark angles (radians)");
    gen->add_option("--points", gen_points, "per-gap parameters, e.g. 0:0.5;2:0.3,0.7");
    gen->add_option("--epsilon", gen_eps, "truncation depth");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* pd = app.add_subcommand("prism-dualities", "count involutory self-dualities");
    int prism_n = 3;
    pd->add_option("--n", prism_n, "base order")->required();

    CLI11_PARSE(app, argc, argv);

    Tolerance tol;
    if (tol_eq > 0) {
        tol.eq_dist = tol_eq;
        tol.vertex_merge = std::max(tol.vertex_merge, 100 * tol_eq);
        tol.angle_eps = tol_eq;
        tol.validate();
    }

    try {
        if (verify) {
            const auto results = selftest::run_all(seed, &std::cout);
            const bool ok = selftest::all_passed(results);
            std::cout << (ok ? "verification passed" : "verification FAILED") << " ("
                      << results.size() << " checks)\n";
            if (!ok) return 2;
            if (app.get_subcommands().empty()) return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 1;
        }

        if (faces->parsed()) {
            const Configuration v = load(in_path, tol);
            const FaceComplex fc = build_face_complex(v);
            RunReport rep;
            rep.input = in_path;
            rep.v_count = fc.v_count();
            rep.e_count = fc.e_count();
            rep.f_count = fc.f_count();
            rep.euler = euler_characteristic(fc);
            try {
                const SelfDuality d = canonical_duality(fc);
                rep.duality_found = true;
                const auto fp = fixed_point_report(d, barycentric_subdivision(fc));
                rep.duality_fixed_point_free = fp.cell_fixed_point_free;
                rep.duality_vertex_disjoint = fp.vertex_disjoint;
            } catch (const Error&) {
                rep.warnings.push_back("no canonical self-duality (input not extremal)");
            }
            std::cout << "v=" << fc.v_count() << " e=" << fc.e_count() << " f=" << fc.f_count()
                      << " euler=" << euler_characteristic(fc) << '\n';
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << report_to_json(rep);
            }
            if (!mesh_path.empty()) export_mesh(fc, mesh_path);
            if (!skeleton_path.empty()) export_dot_skeleton(fc, skeleton_path);
            return 0;
        }
        if (dg->parsed()) {
            const Configuration v = load(in_path, tol);
            const DiameterGraph g = diameter_graph(v);
            std::cout << "diam=" << g.diam << " pairs=" << g.e_count() << '\n';
            for (const auto& e : g.edges) std::cout << e[0] << " -- " << e[1] << '\n';
            if (!dot_path.empty()) export_dot(g, dot_path);
            return 0;
        }
        if (ce->parsed()) {
            const Configuration v = load(in_path, tol);
            const ExtremalityVerdict w = check_extremal(v);
            std::cout << "extremal: " << (w.is_extremal ? "true" : "false") << ", e=" << w.e_count
                      << ", bound=" << w.bound << ", critical: "
                      << (w.is_critical ? "true" : "false")
                      << ", cross-check: " << (w.ghs_cross_check ? "agree" : "disagree") << '\n';
            return 0;
        }
        if (cc->parsed()) {
            const Configuration v = load(in_path, tol);
            const Configuration core = critical_core(v);
            std::cout << "core size " << core.size() << " of " << v.size() << '\n';
            if (!out_path.empty()) write_configuration(core, out_path);
            return 0;
        }
        if (du->parsed()) {
            const Configuration v = load(in_path, tol);
            const FaceComplex fc = build_face_complex(v);
            const SelfDuality d = canonical_duality(fc);
            const auto fp = fixed_point_report(d, barycentric_subdivision(fc));
            std::cout << "canonical duality: ok, fixed-point-free: "
                      << (fp.cell_fixed_point_free ? "true" : "false")
                      << ", vertex-disjoint: " << (fp.vertex_disjoint ? "true" : "false") << '\n';
            if (!report_path.empty()) {
                RunReport rep;
                rep.input = in_path;
                rep.v_count = fc.v_count();
                rep.e_count = fc.e_count();
                rep.f_count = fc.f_count();
                rep.euler = euler_characteristic(fc);
                rep.duality_found = true;
                rep.duality_fixed_point_free = fp.cell_fixed_point_free;
                rep.duality_vertex_disjoint = fp.vertex_disjoint;
                std::ofstream out(report_path);
                out << report_to_json(rep);
            }
            return 0;
        }
        if (gen->parsed()) {
            Configuration v{{Point3{0, 0, 0}}, tol};
            if (family == "suspended") {
                v = suspended_polygon(gen_k, tol);
            } else if (family == "rugby") {
                v = rugby_ball(gen_n, {.reuleaux = gen_reuleaux, .h = gen_h,
                                       .include_poles = gen_poles},
                               tol);
            } else if (family == "tetrahedron") {
                v = tetrahedron_with_arc_points(parse_arc_counts(gen_arcs), tol);
            } else if (family == "two-pole") {
                TwoPoleSpec spec;
                spec.h = gen_h;
                std::stringstream ss(gen_angles);
                std::string val;
                while (std::getline(ss, val, ',')) spec.mark_angles.push_back(std::stod(val));
                spec.gap_points = parse_gap_points(gen_points, spec.mark_angles.size());
                v = two_pole_family(spec, tol).config;
            } else if (family == "truncated-suspended") {
                v = ball_truncate(suspended_polygon(gen_k, tol), 2 * gen_k - 1, gen_eps);
            } else {
                fail(Errc::InvalidSpec, "unknown family: " + family);
            }
            emit_or_print(v, out_path);
            return 0;
        }
        if (pd->parsed()) {
            const AbstractComplex c = apexed_prism_complex(prism_n);
            const auto dualities = enumerate_self_dualities(c);
            int fpf = 0;
            for (const auto& d : dualities)
                if (d.fixed_points.cell_fixed_point_free) ++fpf;
            std::cout << "total " << dualities.size() << ", fixed-point-free " << fpf << '\n';
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
