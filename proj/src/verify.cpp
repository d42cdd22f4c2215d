#include "qflow/verify.hpp"

#include <cstdio>

#include "qflow/equivariants.hpp"
#include "qflow/group_s5.hpp"
#include "qflow/invariants.hpp"
#include "qflow/param_family.hpp"
#include "qflow/quintic_solver.hpp"
#include "qflow/special_orbits.hpp"
#include "qflow/univariate.hpp"

namespace qflow {

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double rel(const Vec4& a, const Vec4& b) {
    double num = 0, den = 0;
    for (int i = 0; i < 4; ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

double rel(const Mat4& a, const Mat4& b) { return max_abs_diff(a, b) / std::max(a.max_abs(), b.max_abs()); }

Vec4 scaled(const Vec4& v, Complex s) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = v[i] * s;
    return r;
}

Vec4 random_vec(Rng& rng) {
    Vec4 v;
    for (auto& c : v) c = rng.complex_normal();
    return v;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// A check passing when measured < threshold.
Check bound(std::string group, std::string name, double measured, double threshold, std::string detail = "") {
    Check c{std::move(group), std::move(name), measured < threshold, measured, threshold, std::move(detail)};
    if (c.detail.empty()) c.detail = "worst " + fmt(measured) + " (bound " + fmt(threshold) + ")";
    return c;
}

Check exact(std::string group, std::string name, long got, long want) {
    return {std::move(group), std::move(name), got == want, static_cast<double>(got), static_cast<double>(want),
            std::to_string(got) + " (expected " + std::to_string(want) + ")"};
}

}  // namespace

PointU random_generic_point(Rng& rng, double margin) {
    for (;;) {
        PointU v = normalize(PointU{random_vec(rng)});
        double r = norm(v.c);
        InvariantValues iv = invariant_values(v);
        if (std::abs(iv.phi2) < margin * r * r || std::abs(iv.phi3) < margin * std::pow(r, 3) ||
            std::abs(iv.phi4) < margin * std::pow(r, 4) || std::abs(iv.phi5) < margin * std::pow(r, 5) ||
            std::abs(psi10(v)) < margin * std::abs(psi10_constant()) * std::pow(r, 10))
            continue;
        return v;
    }
}

std::vector<Check> group_checks() {
    const auto& els = all_elements();
    std::vector<Check> out;
    out.push_back(exact("group", "120 representatives", static_cast<long>(els.size()), 120));
    double unit = 0, det = 0;
    long even = 0;
    for (const auto& g : els) {
        unit = std::max(unit, max_abs_diff(g.matrix_u * g.matrix_u.adjoint(), Mat4::identity()));
        double want = g.parity == Parity::Even ? 1.0 : -1.0;
        det = std::max(det, std::abs(g.matrix_u.det() - want));
        even += g.parity == Parity::Even;
    }
    out.push_back(bound("group", "unitary", unit, 1e-12));
    out.push_back(bound("group", "det equals the sign", det, 1e-12));
    out.push_back(exact("group", "even elements", even, 60));
    // projectively distinct: |tr(A^* B)| = 4 only for proportional unitaries
    double gap = 4;
    for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = a + 1; b < els.size(); ++b) {
            Mat4 m = els[a].matrix_u.adjoint() * els[b].matrix_u;
            gap = std::min(gap, 4.0 - std::abs(m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3)));
        }
    out.push_back({"group", "projectively distinct", gap > 1e-9, gap, 1e-9, "min 4 - |tr(A*B)| = " + fmt(gap)});
    double hom = 0;
    for (std::size_t a = 0; a < els.size(); a += 7)
        for (std::size_t b = 0; b < els.size(); b += 11)
            hom = std::max(hom, max_abs_diff(element(els[a].perm.compose(els[b].perm)).matrix_u,
                                             els[a].matrix_u * els[b].matrix_u));
    out.push_back(bound("group", "homomorphism", hom, 1e-12));
    return out;
}

std::vector<Check> configuration_checks() {
    std::vector<Check> out;
    for (const auto& c : verify_configuration())
        out.push_back({"configuration", c.name, c.pass, c.pass ? 0.0 : 1.0, 1.0, c.detail});
    return out;
}

std::vector<Check> invariant_checks(int points, std::uint64_t seed) {
    Rng rng(seed);
    double e4 = 0, e5 = 0, inv = 0;
    for (int t = 0; t < points; ++t) {
        PointU u{random_vec(rng)};
        InvariantValues v = invariant_values(u);
        e4 = std::max(e4, rel((162.0 * v.phi2 * v.phi2 - 5.0 * hessian_form_G4(u)) / 324.0, v.phi4));
        e5 = std::max(e5, rel((720.0 * v.phi2 * v.phi3 + bordered_form_G5(u)) / 864.0, v.phi5));
    }
    for (int t = 0; t < 5; ++t) {
        PointU u{random_vec(rng)};
        for (const auto& g : all_elements())
            for (int k = 2; k <= 5; ++k) inv = std::max(inv, rel(phi(g.apply(u), k), phi(u, k)));
    }
    std::string n = std::to_string(points) + " points";
    return {bound("invariants", "Phi4 = (162 Phi2^2 - 5 G4)/324", e4, 1e-9, "worst " + fmt(e4) + " over " + n),
            bound("invariants", "Phi5 = (720 Phi2 Phi3 + G5)/864", e5, 1e-9, "worst " + fmt(e5) + " over " + n),
            bound("invariants", "Phi2..Phi5 invariant under all 120 elements", inv, 1e-10)};
}

std::vector<Check> equivariance_checks(int points, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Check> out;
    for (const char* name : {"phi6", "h11", "g11"}) {
        const EquivariantMap& m = equivariant_map(name);
        double worst = 0;
        for (int t = 0; t < points; ++t) {
            PointU p{random_vec(rng)};
            PointU fp = m.apply(p);
            for (const auto& g : all_elements()) worst = std::max(worst, chordal_distance(m.apply(g.apply(p)), g.apply(fp)));
        }
        out.push_back(bound("equivariance", std::string(name) + " commutes with the group", worst, 1e-8,
                            "worst chordal " + fmt(worst) + " over " + std::to_string(points) + " points x 120"));
    }
    return out;
}

std::vector<Check> restricted_checks(int samples, std::uint64_t seed) {
    const double tol = 1e-7;
    auto fn = [](const char* name) {
        const EquivariantMap& m = equivariant_map(name);
        return std::function<PointU(const PointU&)>([&m](const PointU& p) { return m.apply(p); });
    };
    auto f6 = fn("phi6"), h = fn("h11");
    auto d = [](int i) { return std::to_string(i); };
    std::vector<Check> out;
    auto run = [&](const std::string& name, const std::function<PointU(const PointU&)>& f,
                   const std::vector<CurveChart>& charts, const char* map, bool fix) {
        double worst = 0;
        bool pass = true;
        for (std::size_t k = 0; k < charts.size(); ++k) {
            auto r = restricted_map_conformance(f, charts[k], restricted_map(map), samples, seed + k, tol, fix);
            pass = pass && r.pass;
            worst = std::max(worst, r.max_error);
        }
        Check c = bound("restricted", name, worst, tol,
                        std::to_string(charts.size()) + " lines, worst " + fmt(worst) + " (bound " + fmt(tol) + ")");
        c.pass = c.pass && pass;
        out.push_back(c);
    };

    std::vector<CurveChart> m10, l15, h10, hm10;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            m10.push_back(line_chart(point("p5_" + d(i)).u(), point("p5_" + d(j)).u()));
            h10.push_back(line_chart(point("q20_" + d(i) + d(j) + "_1").u(), point("q20_" + d(i) + d(j) + "_2").u()));
            // the complementary triple
            std::string t;
            for (int k = 1; k <= 5; ++k)
                if (k != i && k != j) t += d(k);
            hm10.push_back(line_chart(point("q20_" + t + "_1").u(), point("q20_" + t + "_2").u()));
        }
    for (int i = 1; i <= 5; ++i) {
        std::vector<int> r;
        for (int k = 1; k <= 5; ++k)
            if (k != i) r.push_back(k);
        for (int s = 1; s <= 3; ++s) {
            // pair {r0, r_s} and its complement
            std::string a = d(r[0]) + d(r[s]), b;
            for (int k = 1; k <= 3; ++k)
                if (k != s) b += d(r[k]);
            l15.push_back(symmetric_line_chart(point("p5_" + d(i)).u(), point("p15_" + d(i) + "_" + a).u(),
                                               point("p10_" + a + "_2").u(), point("p10_" + b + "_2").u()));
        }
    }
    run("phi6 on the 10-lines is z^4", f6, m10, "f6_M10", true);
    run("phi6 on the 15-lines is 48z^5/(-3-z^2+35z^4+17z^6)", f6, l15, "f6_L15", false);
    run("h11 on the 10-lines {x_i = x_j = 0} is -1/z^2", h, h10, "h11_L10", true);
    run("h11 on the 10-lines {x_i = x_j = x_k} is -1/z^2", h, hm10, "h11_M10", true);
    return out;
}

std::vector<Check> oracle_checks(int pairs, std::uint64_t seed, double perturb_phi2K) {
    Rng rng(seed);
    double e2 = 0, e3 = 0, edet = 0, erep = 0, egam = 0, econj = 0;
    for (int t = 0; t < pairs; ++t) {
        PointU v = random_generic_point(rng);
        TauMatrix tv = tau(v);
        ParamPolys pp = build_param_polys(k_values(v));
        if (perturb_phi2K != 0) {
            auto terms = pp.phi2K.terms();
            terms[0].coef *= 1.0 + perturb_phi2K;
            pp.phi2K = Poly4(terms);
        }
        InvariantValues iv = invariant_values(v);
        Complex p2 = iv.phi2;
        Vec4 w = random_vec(rng);
        Vec4 tw = tv.matrix * w;
        e2 = std::max(e2, rel(phi(PointU{tw}, 2), std::pow(p2, 6) * pp.phi2K.eval(w)));
        e3 = std::max(e3, rel(phi(PointU{tw}, 3), std::pow(p2, 9) * pp.phi3K.eval(w)));
        edet = std::max(edet, rel(std::pow(tv.matrix.det(), 2), std::pow(p2, 24) * pp.tK));
        erep = std::max(erep, rel(tv.matrix.repose() * tv.matrix, pp.TK * std::pow(p2, 6)));
        egam = std::max(egam, rel(gamma_v(tv, w), std::pow(p2, 5) * iv.phi3 * pp.gammaK.eval(w)));
        econj = std::max(econj, rel(phi6_raw(tw), scaled(tv.matrix * phiK_raw(pp, w), std::pow(p2, 15))));
    }
    const double tol = 1e-7;
    return {bound("oracles", "Phi2(tau w) = Phi2(v)^6 Phi2K(w)", e2, tol),
            bound("oracles", "Phi3(tau w) = Phi2(v)^9 Phi3K(w)", e3, tol),
            bound("oracles", "det(tau)^2 = Phi2^24 t_K", edet, tol),
            bound("oracles", "tau^r tau = Phi2^6 T_K", erep, tol),
            bound("oracles", "Gamma_v = Phi2^5 Phi3 Gamma_K", egam, tol),
            bound("oracles", "phi6(tau w) = Phi2^15 tau phi_K(w)", econj, tol)};
}

std::vector<Check> root_selector_checks(int points, std::uint64_t seed) {
    Rng rng(seed);
    double ej = 0, eres = 0;
    for (int t = 0; t < points; ++t) {
        PointU v = random_generic_point(rng);
        TauMatrix tv = tau(v);
        KParams K = k_values(v);
        ParamPolys pp = build_param_polys(K);
        auto S = S_values(v);
        auto five = conjugated_five_points(tv);
        auto rk = resolvent_RK(K);
        for (int l = 0; l < 5; ++l) {
            ej = std::max(ej, rel(root_selector_J(pp, five[l].c), S[l]));
            // residual relative to the size of the terms
            double scale = 0, a = 1;
            for (const auto& c : rk) {
                scale += std::abs(c) * a;
                a *= std::abs(S[l]);
            }
            eres = std::max(eres, std::abs(univariate::eval_compensated(rk, S[l])) / scale);
        }
    }
    return {bound("root_selector", "J at the conjugated 5-points equals S_l", ej, 1e-8),
            bound("root_selector", "S_l are roots of R_K", eres, 1e-8)};
}

std::vector<std::string> check_groups() {
    return {"group", "configuration", "invariants", "equivariance", "restricted", "oracles", "root_selector"};
}

std::vector<Check> run_checks(const VerifyOptions& opts) {
    std::vector<Check> out;
    auto want = [&](const std::string& g) { return opts.filter.empty() || g.find(opts.filter) != std::string::npos; };
    auto add = [&](std::vector<Check> cs) { out.insert(out.end(), cs.begin(), cs.end()); };
    if (want("group")) add(group_checks());
    if (want("configuration")) add(configuration_checks());
    if (want("invariants")) add(invariant_checks(1000, opts.seed));
    if (want("equivariance")) add(equivariance_checks(20, opts.seed));
    if (want("restricted")) add(restricted_checks(50, opts.seed));
    if (want("oracles")) add(oracle_checks(20, opts.seed, opts.perturb_phi2K));
    if (want("root_selector")) add(root_selector_checks(20, opts.seed));
    return out;
}

}  // namespace qflow
