// floatdom: construct, verify, search and draw floating domains.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 input error.

#include "floatdom/archimedean.hpp"
#include "floatdom/finn_young.hpp"
#include "floatdom/gamma.hpp"
#include "floatdom/io.hpp"
#include "floatdom/search.hpp"
#include "floatdom/svg.hpp"
#include "floatdom/zako.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace floatdom;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void bad_input(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::vector<int> parse_harmonics(const std::string& spec) {
    std::vector<int> out;
    const auto dots = spec.find("..");
    try {
        if (dots != std::string::npos) {
            const int lo = std::stoi(spec.substr(0, dots)), hi = std::stoi(spec.substr(dots + 2));
            if (lo > hi) bad_input("empty harmonic range '" + spec + "'");
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            std::size_t pos = 0;
            while (pos <= spec.size()) {
                const auto comma = spec.find(',', pos);
                out.push_back(std::stoi(spec.substr(pos, comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    } catch (const std::logic_error&) {
        bad_input("cannot parse harmonics '" + spec + "' (expected a..b or a,b,c)");
    }
    return out;
}

ZaKoPolygond base_polygon(const std::string& spec, double circumradius) {
    const std::string prefix = "regular:";
    if (spec.rfind(prefix, 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(spec.substr(prefix.size()));
        } catch (const std::logic_error&) {
            bad_input("cannot parse '" + spec + "'");
        }
        if (n < 3) bad_input("regular:<n> needs n >= 3");
        return midpoint_polygon<double>(n, circumradius);
    }
    return polygon_from_json(read_json_file(spec));
}

void write_or_skip(const std::string& path, const std::string& text) {
    if (!path.empty()) write_text_file(path, text);
}

// Figures: 1 Finn-Young chord, 2 archimedean cap on a searched curve, 3 the triangle flower.
std::pair<ClosedCurved, SvgDecorations> figure(int which) {
    SvgDecorations deco;
    if (which == 1) {
        const double g = gutkin_roots<double>(4, 1e-13).front().gamma;
        const auto c = fy_curve<double>(4, g, 0.3);
        deco.chords.push_back(shoot_chord(c, 0.35 * c.perimeter(), g));
        deco.labels.push_back({deco.chords[0].p_start, "gamma"});
        deco.labels.push_back({deco.chords[0].p_end, "gamma"});
        return {c, deco};
    }
    if (which == 2) {
        SearchProblem<double> pb;
        const auto r = search_floating(pb, random_init(pb));
        ClosedCurved c = r.curve();
        deco.chords.push_back(chord_at_fraction(c, 0.1 * curve_perimeter(c), 0.5));
        deco.shade_caps = true;
        deco.labels.push_back({deco.chords[0].p_start, "P(s)"});
        deco.labels.push_back({deco.chords[0].p_end, "P(s+delta)"});
        return {c, deco};
    }
    if (which == 3) {
        ClosedCurved c = zako_construct(midpoint_polygon<double>(3, 1.0 / std::sqrt(3.0)));
        const double L = curve_perimeter(c);
        for (int i = 0; i < 12; ++i) deco.chords.push_back(chord_at_fraction(c, L * (i + 0.5) / 12.0, 0.5));
        return {c, deco};
    }
    bad_input("figure must be 1, 2 or 3");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floating domains: Finn-Young and archimedean models"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "roots of tan(n g) = n tan(g) in (0, pi/2)");
    int n_max = 12, n_single = 0;
    double gamma_tol = 1e-12;
    gamma_cmd->add_option("--n-max", n_max, "largest n (union over 2..n-max)")->check(CLI::Range(2, 100000));
    gamma_cmd->add_option("--n", n_single, "a single n instead of the union")->check(CLI::Range(2, 100000));
    gamma_cmd->add_option("--tol", gamma_tol, "bracket width >= 1e-14");

    // construct
    auto* construct = app.add_subcommand("construct", "build a curve file");
    construct->require_subcommand(1);
    std::string out_path;
    auto* c_fy = construct->add_subcommand("fy", "rho = 1 + tau cos(n theta) at a root gamma");
    int fy_n = 4, fy_index = 0;
    double fy_tau = 0.3, fy_gamma = 0;
    c_fy->add_option("--n", fy_n, "harmonic")->required()->check(CLI::Range(2, 10000));
    c_fy->add_option("--tau", fy_tau, "amplitude, |tau| <= 0.95")->check(CLI::Range(-0.95, 0.95));
    auto* fy_gamma_opt = c_fy->add_option("--gamma", fy_gamma, "root gamma (default: root by --root-index)");
    c_fy->add_option("--root-index", fy_index, "0-based index into the roots for n")->check(CLI::NonNegativeNumber);
    c_fy->add_option("-o,--output", out_path, "curve file");

    auto* c_zako = construct->add_subcommand("zako", "piecewise-circular domain from an admissible 2n-gon");
    std::string base = "regular:3";
    double circumradius = 1.0 / std::sqrt(3.0);
    c_zako->add_option("--base-polygon", base, "regular:<n> or a polygon JSON file");
    c_zako->add_option("--circumradius", circumradius, "for regular:<n> (default: unit side for n = 3)")
        ->check(CLI::PositiveNumber);
    c_zako->add_option("-o,--output", out_path, "curve file");

    auto* c_fourier = construct->add_subcommand("fourier", "explicit radius-of-curvature coefficients");
    double a0 = 1.0;
    std::vector<std::vector<double>> harmonic_triples;
    c_fourier->add_option("--a0", a0, "mean radius of curvature")->check(CLI::PositiveNumber);
    c_fourier->add_option("--harmonic", harmonic_triples, "n a b (repeatable)")->expected(3)->allow_extra_args(false);
    c_fourier->add_option("-o,--output", out_path, "curve file");

    // verify
    auto* verify = app.add_subcommand("verify", "check a floating condition");
    verify->require_subcommand(1);
    std::string curve_path;
    int samples = 720;
    double tol = 1e-6, v_gamma = 0, delta = 0.5;
    auto* v_fy = verify->add_subcommand("fy", "gamma-chords exit at gamma everywhere");
    v_fy->add_option("--curve", curve_path, "curve file")->required();
    v_fy->add_option("--gamma", v_gamma, "chord angle")->required();
    v_fy->add_option("--samples", samples, "N")->check(CLI::Range(8, 10000000));
    v_fy->add_option("--tol", tol, "sup-norm tolerance");
    auto* v_arch = verify->add_subcommand("arch", "delta-caps have equal area");
    v_arch->add_option("--curve", curve_path, "curve file")->required();
    v_arch->add_option("--delta", delta, "arc-length fraction")->required();
    v_arch->add_option("--samples", samples, "N")->check(CLI::Range(8, 10000000));
    v_arch->add_option("--tol", tol, "relative spread tolerance");

    // search
    auto* search = app.add_subcommand("search", "least-squares search over Fourier coefficients");
    std::string mode = "arch", harmonics = "2..6";
    double s_delta = 0.5, s_gamma = 0, margin = 0.1, obj_tol = 1e-8, amplitude = 0.05;
    std::uint64_t seed = 42;
    int max_iter = 200, s_samples = 256;
    search->add_option("--mode", mode, "arch | fy")->check(CLI::IsMember({"arch", "fy"}));
    search->add_option("--delta", s_delta, "archimedean density");
    auto* s_gamma_opt = search->add_option("--gamma", s_gamma, "Finn-Young angle");
    search->add_option("--harmonics", harmonics, "a..b or a,b,c");
    search->add_option("--seed", seed, "random init seed");
    search->add_option("--max-iter", max_iter, "iteration cap")->check(CLI::NonNegativeNumber);
    search->add_option("--samples", s_samples, "residual grid size")->check(CLI::Range(8, 100000));
    search->add_option("--margin", margin, "minimum rho")->check(CLI::PositiveNumber);
    search->add_option("--tol", obj_tol, "objective tolerance")->check(CLI::PositiveNumber);
    search->add_option("--init-amplitude", amplitude, "init coefficient range")->check(CLI::NonNegativeNumber);
    search->add_option("-o,--output", out_path, "found curve file");

    // render
    auto* render = app.add_subcommand("render", "write an SVG figure");
    int fig = 0, n_chords = 0;
    double r_delta = 0.5, r_gamma = 0;
    bool caps = false;
    std::string svg_path;
    render->add_option("--figure", fig, "1 | 2 | 3")->check(CLI::Range(1, 3));
    render->add_option("--curve", curve_path, "curve file");
    render->add_option("--chords", n_chords, "uniformly spaced chords")->check(CLI::Range(0, 10000));
    render->add_option("--delta", r_delta, "chords at this arc fraction");
    auto* r_gamma_opt = render->add_option("--gamma", r_gamma, "shoot gamma-chords instead");
    render->add_flag("--caps", caps, "shade the caps");
    render->add_option("-o,--output", svg_path, "SVG file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*gamma_cmd) {
            const auto roots = n_single ? gutkin_roots<double>(n_single, gamma_tol) : gamma_set<double>(n_max, gamma_tol);
            emit(gamma_roots_to_json(roots));
            std::cerr << roots.size() << " root(s)\n";
            return exit_pass;
        }

        if (*construct) {
            ClosedCurved curve = FourierCurved::circle();
            if (*c_fy) {
                double g = fy_gamma;
                if (!*fy_gamma_opt) {
                    const auto roots = gutkin_roots<double>(fy_n, 1e-13);
                    if (roots.empty()) bad_input("n = " + std::to_string(fy_n) + " has no root in (0, pi/2)");
                    if (fy_index >= static_cast<int>(roots.size())) bad_input("root index out of range");
                    g = roots[static_cast<std::size_t>(fy_index)].gamma;
                }
                curve = fy_curve<double>(fy_n, g, fy_tau);
                std::cerr << "Finn-Young curve n = " << fy_n << ", gamma = " << g << ", tau = " << fy_tau << "\n";
            } else if (*c_zako) {
                const auto P = base_polygon(base, circumradius);
                const auto d = zako_validate(P, 1e-9);
                if (!d.valid()) {
                    json diag = {{"schema", schema_version}, {"admissible", false}, {"reason", d.summary()}};
                    json quads = json::array();
                    for (const auto& q : d.quads)
                        quads.push_back({{"pair", q.pair + 1}, {"degenerate", q.degenerate},
                                         {"concyclic", q.concyclic}, {"residual", q.residual}});
                    diag["quadrilaterals"] = quads;
                    diag["diagonal_spread"] = d.diagonal_spread;
                    emit(diag);
                    std::cerr << "polygon not admissible: " << d.summary() << "\n";
                    return exit_fail;
                }
                curve = zako_construct(P);
                std::cerr << "ZaKo domain with " << std::get<ArcSplineCurved>(curve).size() << " arcs\n";
            } else {
                std::vector<Harmonicd> hs;
                for (const auto& t : harmonic_triples) {
                    if (t.size() != 3 || t[0] != std::floor(t[0])) bad_input("--harmonic expects n a b");
                    hs.push_back({static_cast<int>(t[0]), t[1], t[2]});
                }
                curve = FourierCurved(a0, hs);
            }
            const json j = curve_to_json(curve);
            write_or_skip(out_path, j.dump(2) + "\n");
            emit(j);
            return exit_pass;
        }

        if (*verify) {
            const ClosedCurved curve = curve_from_json(read_json_file(curve_path));
            if (*v_fy) {
                const auto* f = std::get_if<FourierCurved>(&curve);
                if (!f) bad_input("verify fy needs a smooth (fourier) curve");
                SweepOptions so;
                so.threads = threads;
                const auto p = fy_floats_everywhere(*f, v_gamma, samples, tol, so);
                emit(profile_to_json(p));
                std::cerr << (p.verdict ? "PASS" : "FAIL") << ": max |angle_end - gamma| = " << p.max_abs_deviation
                          << " (tol " << tol << ")\n";
                return p.verdict ? exit_pass : exit_fail;
            }
            ArchOptions ao;
            ao.threads = threads;
            FloatProfile<double> p;
            const bool ok = arch_floats_everywhere(curve, delta, samples, tol, ao, &p);
            json j = profile_to_json(p);
            const auto eq = arch_equivalence_report(curve, delta, samples, tol, ao);
            j["equivalence"] = equivalence_to_json(eq);
            j["constant_angle"] = diagnostic_to_json(constant_angle_diagnostic(p, tol));
            j["curvature_sign_changes"] = curvature_sign_changes(curve);
            emit(j);
            std::cerr << (ok ? "PASS" : "FAIL") << ": cap-area relative spread = " << p.max_abs_deviation
                      << " (tol " << tol << ")\n";
            return ok ? exit_pass : exit_fail;
        }

        if (*search) {
            SearchProblem<double> pb;
            pb.mode = mode == "fy" ? SearchMode::FinnYoung : SearchMode::Archimedean;
            if (pb.mode == SearchMode::FinnYoung && !*s_gamma_opt) bad_input("--mode fy needs --gamma");
            pb.parameter = pb.mode == SearchMode::FinnYoung ? s_gamma : s_delta;
            pb.harmonics = parse_harmonics(harmonics);
            pb.seed = seed;
            pb.max_iterations = max_iter;
            pb.samples = s_samples;
            pb.margin = margin;
            pb.objective_tol = obj_tol;
            pb.threads = threads;
            pb.validate();
            const auto r = search_floating(pb, random_init(pb, amplitude));
            emit(search_result_to_json(r, pb));
            if (!out_path.empty() && r.min_rho > 0) write_text_file(out_path, curve_to_json(r.curve()).dump(2) + "\n");
            const bool ok = r.converged && r.verified();
            std::cerr << (ok ? "converged" : "not converged") << ": objective " << r.objective << " after "
                      << r.iterations << " iteration(s), max coefficient " << r.max_coefficient() << "\n";
            return ok ? exit_pass : exit_fail;
        }

        if (*render) {
            ClosedCurved curve = FourierCurved::circle();
            SvgDecorations deco;
            if (fig) {
                std::tie(curve, deco) = figure(fig);
            } else {
                if (curve_path.empty()) bad_input("render needs --curve or --figure");
                curve = curve_from_json(read_json_file(curve_path));
                const double L = curve_perimeter(curve);
                for (int i = 0; i < n_chords; ++i) {
                    const double s = L * i / n_chords;
                    if (*r_gamma_opt) {
                        const auto* f = std::get_if<FourierCurved>(&curve);
                        if (!f) bad_input("--gamma chords need a smooth (fourier) curve");
                        deco.chords.push_back(shoot_chord(*f, s, r_gamma));
                    } else {
                        deco.chords.push_back(chord_at_fraction(curve, s, r_delta));
                    }
                }
                deco.shade_caps = caps;
            }
            const std::string svg = render_svg(curve, deco);
            if (svg_path.empty()) std::cout << svg;
            else write_text_file(svg_path, svg);
            std::cerr << "rendered " << deco.chords.size() << " chord(s)\n";
            return exit_pass;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
