#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "emit.hpp"
#include "json_io.hpp"
#include "symmetry.hpp"

namespace itlab {

namespace detail {

inline int thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("ITINERARY_LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min<unsigned>(static_cast<unsigned>(v), hw));
    }
    return static_cast<int>(hw);
}

inline void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot write: " + path);
    f << content;
}

} // namespace detail

inline int run_cli(int argc, char** argv) {
    CLI::App app{"symbolic itinerary spaces of piecewise expanding interval maps"};
    app.require_subcommand(1);

    std::string config, out, fmt, variant = "left_closed", set_mode = "closure";
    std::string x_text;
    int length = 32, depth = 1, samples = 1001, grid = 1000, homeo_len = 48;
    double eps_amb = 1e-12, tol = 1e-12, rho_tol = 1e-9;

    const auto add_common = [&](CLI::App* c) {
        c->add_option("--config", config, "system description (JSON)")->required();
        c->add_option("--out", out, "output path (default: stdout)");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check a system configuration");
    add_common(c_validate);
    c_validate->add_option("--grid", grid, "derivative sample count");

    CLI::App* c_itin = app.add_subcommand("itinerary", "symbolic itinerary of a point");
    add_common(c_itin);
    c_itin->add_option("--x", x_text, "point in [0,1]; fractions like 1/2 allowed")
        ->required();
    c_itin->add_option("--length", length, "digits to produce");
    c_itin->add_option("--variant", variant, "threshold convention")
        ->check(CLI::IsMember({"left_closed", "right_closed"}));
    c_itin->add_option("--eps-amb", eps_amb, "floating ambiguity width");

    CLI::App* c_omega = app.add_subcommand("omega", "depth-k prefix set of the itinerary space");
    add_common(c_omega);
    c_omega->add_option("--depth", depth, "word length")->required();
    c_omega->add_option("--mode", set_mode, "closure convention tag")
        ->check(CLI::IsMember({"omega", "omega_plus", "closure"}));
    c_omega->add_option("--format", fmt)->check(CLI::IsMember({"json", "svg"}));

    CLI::App* c_addr = app.add_subcommand("addresses", "discontinuity set and interval addresses");
    add_common(c_addr);
    c_addr->add_option("--depth", depth, "address length")->required();
    c_addr->add_option("--format", fmt)->check(CLI::IsMember({"csv"}));

    CLI::App* c_solve = app.add_subcommand("solve-symmetric", "find the symmetry parameter");
    add_common(c_solve);
    c_solve->add_option("--rho-tol", rho_tol, "bracket width target");
    c_solve->add_option("--length", length, "initial comparison depth");

    CLI::App* c_homeo = app.add_subcommand("homeo", "sample the induced involution");
    add_common(c_homeo);
    c_homeo->add_option("--samples", samples, "grid size");
    c_homeo->add_option("--length", homeo_len, "itinerary depth");
    c_homeo->add_option("--tol", tol, "realization tolerance");
    c_homeo->add_option("--format", fmt)->check(CLI::IsMember({"csv", "svg"}));

    CLI::App* c_rel = app.add_subcommand("relation", "transition structure on depth-k words");
    add_common(c_rel);
    c_rel->add_option("--depth", depth, "word length")->required();
    c_rel->add_option("--format", fmt)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        AnySystem any = load_system(config);
        return std::visit(
            [&](const auto& sys) -> int {
                using S = typename std::decay_t<decltype(sys)>::scalar;

                if (c_validate->parsed()) {
                    const ValidationReport rep = sys.validate(grid);
                    detail::write_output(out, validation_json(rep).dump() + "\n");
                    return rep.pass ? 0 : 2;
                }

                if (c_itin->parsed()) {
                    const Variant v = (variant == "left_closed") ? Variant::left_closed
                                                                 : Variant::right_closed;
                    const auto res = itinerary(sys, parse_real<S>(x_text), length, v, eps_amb);
                    detail::write_output(out, itinerary_json(res).dump() + "\n");
                    return 0;
                }

                if (c_omega->parsed()) {
                    const PrefixSet P = omega_approx(sys, depth, mode_from(set_mode), eps_amb);
                    if (fmt == "svg") {
                        std::ostringstream os;
                        svg_prefix_set(os, P);
                        detail::write_output(out, os.str());
                    } else {
                        detail::write_output(out, prefix_json(P).dump() + "\n");
                    }
                    return 0;
                }

                if (c_addr->parsed()) {
                    const auto d = discontinuities(sys, depth, eps_amb);
                    for (const std::string& w : d.warnings)
                        std::cerr << "warning: " << w << "\n";
                    std::ostringstream os;
                    csv_discontinuities(os, d);
                    detail::write_output(out, os.str());
                    return 0;
                }

                if (c_solve->parsed()) {
                    const auto res = solve_symmetric(sys, rho_tol, length);
                    detail::write_output(out, solve_json(res).dump() + "\n");
                    return 0;
                }

                if (c_homeo->parsed()) {
                    if (samples < 2) throw config_error("need at least 2 samples");
                    const auto defect = symmetry_defect(sys, sys.rho(), 32, eps_amb);
                    if (defect.ordering != DefectOrdering::equal_to_depth)
                        std::cerr << "warning: rho is not the symmetric parameter "
                                     "(defect decided at digit "
                                  << *defect.decided_at
                                  << "); h will not be an involution\n";
                    std::vector<std::pair<double, double>> rows(
                        static_cast<std::size_t>(samples));
                    const int T = std::min(detail::thread_count(), samples);
                    std::vector<std::thread> pool;
                    pool.reserve(static_cast<std::size_t>(T));
                    for (int t = 0; t < T; ++t)
                        pool.emplace_back([&, t] {
                            for (int i = t; i < samples; i += T) {
                                const S x = S(i) / S(samples - 1);
                                rows[static_cast<std::size_t>(i)] = {
                                    to_double(x), to_double(homeo(sys, x, homeo_len, tol))};
                            }
                        });
                    for (auto& th : pool) th.join();
                    std::ostringstream os;
                    if (fmt == "svg") svg_homeo(os, rows);
                    else csv_homeo(os, rows);
                    detail::write_output(out, os.str());
                    return 0;
                }

                if (c_rel->parsed()) {
                    const auto crit = critical_itineraries(sys, std::max(2, depth), eps_amb);
                    if (fmt == "csv") {
                        const FiniteRelation r = build_embedded_relation(crit, depth);
                        const ConleyReport rep = conley_report(r);
                        std::ostringstream os;
                        csv_attractor(os, r, rep.attractor);
                        detail::write_output(out, os.str());
                    } else {
                        const FiniteRelation r = build_itinerary_relation(crit, depth);
                        const ConleyReport rep = conley_report(r);
                        detail::write_output(out, conley_json(r, rep).dump() + "\n");
                    }
                    return 0;
                }

                return 2; // unreachable: a subcommand is required
            },
            any);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const solve_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace itlab
