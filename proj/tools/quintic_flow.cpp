#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qflow/basin_renderer.hpp"
#include "qflow/quintic_solver.hpp"
#include "qflow/special_orbits.hpp"
#include "qflow/verify.hpp"

using json = nlohmann::json;
using namespace qflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitRegularization = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw UsageError("expected a number or an [re, im] pair, got " + j.dump());
}

// "re" or "re,im"
Complex parse_complex(const std::string& s) {
    std::stringstream in(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re)) throw UsageError("cannot parse '" + s + "' as a complex number");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw UsageError("cannot parse '" + s + "' as re,im");
    }
    if (in >> comma) throw UsageError("trailing characters in '" + s + "'");
    return {re, im};
}

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read '" + path + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text << "\n";
}

std::string complex_text(Complex z) {
    char buf[80];
    if (z.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string input = "-", output;
    double tol = 1e-13;
    int max_iter = 500, max_restarts = 25;
};

int cmd_solve(const SolveArgs& a, std::uint64_t seed) {
    json in;
    try {
        in = json::parse(read_input(a.input));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!in.is_object() || !in.contains("coefficients") || !in["coefficients"].is_array() ||
        in["coefficients"].size() != 5)
        throw UsageError("input must be {\"coefficients\": [a1, a2, a3, a4, a5]} with [re, im] entries");
    Quintic p;
    for (int k = 0; k < 5; ++k) p.a[k] = parse_complex(in["coefficients"][k]);
    for (const auto& c : p.a)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw UsageError("coefficients must be finite");

    SolveOptions o;
    o.iterate.seed = seed;
    o.iterate.tol = a.tol;
    o.iterate.max_iter = a.max_iter;
    o.iterate.max_restarts = a.max_restarts;
    SolveReport r = solve(p, o);

    json out;
    out["roots"] = json::array();
    for (auto z : r.roots) out["roots"].push_back(cjson(z));
    out["residuals"] = r.residuals;
    out["iterations"] = r.iterations;
    out["restarts"] = r.restarts;
    out["regularized"] = r.regularized;
    out["polish_moved"] = r.polish_moved;
    out["K"] = json::array({cjson(r.K.k1), cjson(r.K.k2), cjson(r.K.k3)});
    out["lambda"] = cjson(r.lambda);
    out["shift"] = cjson(r.shift);
    out["selected_root_raw"] = cjson(r.selected_root_raw);
    out["converged_point"] = json::array();
    for (auto z : r.converged_point.c) out["converged_point"].push_back(cjson(z));
    out["seed"] = seed;
    write_output(a.output, out.dump(2));
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& filter, double perturb, const std::string& json_out, std::uint64_t seed) {
    VerifyOptions o;
    o.filter = filter;
    o.seed = seed;
    o.perturb_phi2K = perturb;
    auto checks = run_checks(o);
    if (checks.empty()) throw UsageError("no check group matches '" + filter + "'");
    int failed = 0;
    json report = json::array();
    for (const auto& c : checks) {
        failed += !c.pass;
        std::printf("%s  [%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.group.c_str(), c.name.c_str(), c.detail.c_str());
        report.push_back({{"group", c.group}, {"name", c.name}, {"pass", c.pass}, {"measured", c.measured},
                          {"threshold", c.threshold}, {"detail", c.detail}});
    }
    std::printf("%zu checks, %d failed\n", checks.size(), failed);
    if (!json_out.empty()) write_output(json_out, report.dump(2));
    return failed == 0 ? kExitOk : kExitInput;
}

// ---------------------------------------------------------------- orbits

int cmd_orbits(const std::string& family) {
    auto fams = point_families();
    if (std::find(fams.begin(), fams.end(), family) == fams.end()) {
        std::string all;
        for (const auto& f : fams) all += " " + f;
        throw UsageError("unknown family '" + family + "'; known:" + all);
    }
    std::printf("descriptor");
    for (int i = 1; i <= 5; ++i) std::printf(",x%d_re,x%d_im", i, i);
    std::printf("\n");
    for (const auto& p : family_points(family)) {
        PointX x = normalize(p.x);
        std::printf("%s", p.descriptor.c_str());
        for (const auto& c : x.c) std::printf(",%.17g,%.17g", c.real() + 0.0, c.imag() + 0.0);
        std::printf("\n");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- basins

struct BasinArgs {
    std::string map, window, out, stats;
    int res = 720, max_iter = 60;
};

int cmd_basins(const BasinArgs& a) {
    PortraitPreset preset;
    try {
        preset = portrait_preset(a.map);
    } catch (const Error& e) {
        std::string all;
        for (const auto& n : portrait_preset_names()) all += " " + n;
        throw UsageError(std::string(e.what()) + "; known maps:" + all);
    }
    if (!a.window.empty()) {
        std::vector<double> v;
        std::stringstream in(a.window);
        std::string part;
        while (std::getline(in, part, ',')) {
            try {
                v.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw UsageError("--window expects cx,cy,w,h");
            }
        }
        if (v.size() != 4) throw UsageError("--window expects cx,cy,w,h");
        preset.grid.cx = v[0];
        preset.grid.cy = v[1];
        preset.grid.width = v[2];
        preset.grid.height = v[3];
    }
    preset.grid.nx = preset.grid.ny = a.res;
    try {
        preset.grid.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (a.max_iter < 1) throw UsageError("--max-iter must be positive");

    auto t0 = std::chrono::steady_clock::now();
    Portrait po = render_preset(preset, a.max_iter);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    PortraitStats s = attractor_statistics(po);

    if (!a.out.empty()) write_ppm(a.out, po);
    json legend = json::array();
    for (std::size_t k = 0; k < po.labels.size(); ++k) {
        json pts = json::array();
        if (preset.plane) {
            for (const auto& p : preset.attractors_u.items[k].cycle) {
                auto [x, y] = preset.chart.coords(p);
                pts.push_back(json::array({x, y}));
            }
        } else {
            for (const auto& z : preset.attractors_1d.items[k].cycle)
                pts.push_back(z.infinite ? json("inf") : cjson(z.z));
        }
        legend.push_back({{"index", k}, {"label", po.labels[k]}, {"points", pts}, {"fraction", s.fractions[k]}});
    }
    json st = {{"map", preset.name},
               {"kind", preset.plane ? "plane" : "line"},
               {"window", {preset.grid.cx, preset.grid.cy, preset.grid.width, preset.grid.height}},
               {"resolution", {preset.grid.nx, preset.grid.ny}},
               {"max_iter", a.max_iter},
               {"attractors", legend},
               {"black_fraction", s.black},
               {"mean_iterations", s.mean_iterations}};
    if (!a.stats.empty()) write_output(a.stats, st.dump(2));
    std::fprintf(stderr, "%s: %dx%d in %.2f s, black %.4f\n", preset.name.c_str(), preset.grid.nx, preset.grid.ny, secs,
                 s.black);
    if (a.out.empty() && a.stats.empty()) std::cout << st.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- resolvent

int cmd_resolvent(const std::vector<std::string>& k) {
    if (k.size() != 3) throw UsageError("resolvent needs K1 K2 K3");
    KParams K{parse_complex(k[0]), parse_complex(k[1]), parse_complex(k[2])};
    std::array<Complex, 4> c;
    try {
        c = resolvent_C(K);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    std::printf("R_K(s) = s^5 + C2 s^3 + C3 s^2 + C4 s + C5\n");
    for (int i = 0; i < 4; ++i) std::printf("C%d = %s\n", i + 2, complex_text(c[i]).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quintic solver by iteration of an S5-equivariant map on CP^3"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for every stochastic step")->capture_default_str();

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "solve a monic quintic given as JSON");
    solve_cmd->add_option("-i,--input", sa.input, "input JSON file, - for stdin")->capture_default_str();
    solve_cmd->add_option("-o,--output", sa.output, "output JSON file (stdout when omitted)");
    solve_cmd->add_option("--tol", sa.tol, "chordal convergence step")->capture_default_str()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-iter", sa.max_iter, "iterations per run")->capture_default_str()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-restarts", sa.max_restarts, "random restarts")->capture_default_str()->check(
        CLI::NonNegativeNumber);

    std::string filter, verify_json;
    double perturb = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle and property checks");
    verify_cmd->add_option("--filter", filter, "only groups whose name contains this");
    verify_cmd->add_option("--perturb-phi2k", perturb, "relative perturbation of one Phi2K coefficient");
    verify_cmd->add_option("--json", verify_json, "write the check results as JSON");

    std::string family;
    auto* orbits_cmd = app.add_subcommand("orbits", "dump a special orbit as CSV");
    orbits_cmd->add_option("family", family, "point family, e.g. p5, q20_1")->required();

    BasinArgs ba;
    auto* basins_cmd = app.add_subcommand("basins", "render a basin portrait");
    basins_cmd->add_option("--map", ba.map, "restricted map name or f6_RP2")->required();
    basins_cmd->add_option("--window", ba.window, "cx,cy,w,h");
    basins_cmd->add_option("--res", ba.res, "cells per side")->capture_default_str();
    basins_cmd->add_option("--max-iter", ba.max_iter, "iterations per cell")->capture_default_str();
    basins_cmd->add_option("--out", ba.out, "PPM output");
    basins_cmd->add_option("--stats", ba.stats, "JSON sidecar with the legend and statistics");

    std::vector<std::string> kvals;
    auto* res_cmd = app.add_subcommand("resolvent", "print the coefficients of R_K");
    res_cmd->add_option("K", kvals, "K1 K2 K3, each re or re,im")->required()->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(sa, seed);
        if (*verify_cmd) return cmd_verify(filter, perturb, verify_json, seed);
        if (*orbits_cmd) return cmd_orbits(family);
        if (*basins_cmd) return cmd_basins(ba);
        if (*res_cmd) return cmd_resolvent(kvals);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        if (e.code() == ErrorCode::NoConvergence) return kExitNoConvergence;
        if (e.code() == ErrorCode::RegularizationFailed) return kExitRegularization;
        return kExitInput;
    }
    return kExitInput;
}
