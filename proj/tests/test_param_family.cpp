#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "qflow/equivariants.hpp"
#include "qflow/group_s5.hpp"
#include "qflow/param_family.hpp"
#include "test_support.hpp"

using namespace qflow;
using namespace qtest;

namespace {

// v with all of Phi2..Phi5, Psi10 comfortably away from zero
PointU good_v(Rng& rng) {
    for (;;) {
        PointU v = normalize(random_u(rng));
        double r = norm(v.c);
        InvariantValues iv = invariant_values(v);
        if (std::abs(iv.phi2) < 1e-6 * r * r || std::abs(iv.phi3) < 1e-6 * std::pow(r, 3) ||
            std::abs(iv.phi4) < 1e-6 * std::pow(r, 4) || std::abs(iv.phi5) < 1e-6 * std::pow(r, 5) ||
            std::abs(psi10(v)) < 1e-6 * std::abs(psi10_constant()) * std::pow(r, 10))
            continue;
        return v;
    }
}

double condition(const Mat4& a) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a(i, j);
    auto sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(m).singularValues();
    return sv(0) / sv(3);
}

double mat_rel(const Mat4& a, const Mat4& b) { return max_abs_diff(a, b) / std::max(a.max_abs(), b.max_abs()); }

Complex phi4K(const ParamPolys& pp, const Vec4& w) { return phi45K_value_grad(pp, w).first.value; }
Complex phi5K(const ParamPolys& pp, const Vec4& w) { return phi45K_value_grad(pp, w).second.value; }

}  // namespace

TEST_CASE("tau columns and equivariance") {
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        PointU v = good_v(rng);
        TauMatrix tv = tau(v);
        InvariantValues iv = invariant_values(v);
        CHECK(rel_err(tv.matrix.column(3), scaled(phi_basic_raw(v.c, 4), iv.phi2)) < 1e-14);
        CHECK(rel_err(tv.matrix.column(0), scaled(phi_basic_raw(v.c, 1), iv.phi5)) < 1e-14);

        const auto& all = all_elements();
        const GroupElement& g = all[rng.next() % all.size()];
        PointU av{g.matrix_u * v.c};
        CHECK(mat_rel(tau(av).matrix, g.matrix_u * tv.matrix) < 1e-9);
        CHECK(rel_err(tau(av).matrix.det(), g.matrix_u.det() * tv.matrix.det()) < 1e-9);

        Complex expect = iv.phi2 * iv.phi3 * iv.phi4 * iv.phi5 * psi10(v);
        CHECK(rel_err(tv.matrix.det(), expect) < 1e-8);
    }
    CHECK_THROWS_AS(tau(PointU{{1, 0, 0, 0}}), Error);
}

TEST_CASE("t_K is det T_K") {
    Rng rng(62);
    for (int t = 0; t < 100; ++t) {
        KParams K{rng.complex_normal(), rng.complex_normal(), rng.complex_normal()};
        CHECK(rel_err(T_matrix(K).det(), t_value(K)) < 1e-10);
    }
    CHECK_THROWS_AS(build_param_polys(KParams{0.0, 0.0, 0.0}), Error);
}

TEST_CASE("coefficient tables satisfy the tau oracles") {
    Rng rng(63);
    for (int t = 0; t < 20; ++t) {
        PointU v = good_v(rng);
        TauMatrix tv = tau(v);
        ParamPolys pp = build_param_polys(k_values(v));
        InvariantValues iv = invariant_values(v);
        Complex p2 = iv.phi2;

        Mat4 lhs = tv.matrix.repose() * tv.matrix;
        CHECK(mat_rel(lhs, pp.TK * std::pow(p2, 6)) < 1e-8);
        CHECK(rel_err(std::pow(tv.matrix.det(), 2), std::pow(p2, 24) * pp.tK) < 1e-8);

        for (int s = 0; s < 5; ++s) {
            Vec4 w = random_u(rng).c;
            PointU tw{tv.matrix * w};
            CHECK(rel_err(phi(tw, 2), std::pow(p2, 6) * pp.phi2K.eval(w)) < 1e-8);
            CHECK(rel_err(phi(tw, 3), std::pow(p2, 9) * pp.phi3K.eval(w)) < 1e-8);
            CHECK(rel_err(phi(tw, 4), std::pow(p2, 12) * phi4K(pp, w)) < 1e-8);
            CHECK(rel_err(phi(tw, 5), std::pow(p2, 15) * phi5K(pp, w)) < 1e-8);
            CHECK(rel_err(gamma_v(tv, w), std::pow(p2, 5) * iv.phi3 * pp.gammaK.eval(w)) < 1e-8);
        }
    }
}

TEST_CASE("Phi2K is the quadratic form of T_K") {
    Rng rng(64);
    for (int t = 0; t < 10; ++t) {
        ParamPolys pp = build_param_polys(k_values(good_v(rng)));
        Vec4 w = random_u(rng).c;
        Vec4 rw = {w[3], w[2], w[1], w[0]};
        CHECK(rel_err(pp.phi2K.eval(w), dot(rw, pp.TK * w)) < 1e-10);
    }
}

TEST_CASE("gradients match central differences") {
    Rng rng(65);
    for (int t = 0; t < 50; ++t) {
        ParamPolys pp = build_param_polys(k_values(good_v(rng)));
        Vec4 w = random_u(rng).c;
        auto [g4, g5] = phi45K_value_grad(pp, w);
        double h = 1e-6 * norm(w);
        for (int c = 0; c < 4; ++c) {
            Vec4 a = w, b = w;
            a[c] += h;
            b[c] -= h;
            Complex d4 = (phi4K(pp, a) - phi4K(pp, b)) / (2.0 * h);
            Complex d5 = (phi5K(pp, a) - phi5K(pp, b)) / (2.0 * h);
            Complex d2 = (pp.phi2K.eval(a) - pp.phi2K.eval(b)) / (2.0 * h);
            CHECK(std::abs(d4 - g4.gradient[c]) < 1e-5 * norm(g4.gradient));
            CHECK(std::abs(d5 - g5.gradient[c]) < 1e-5 * norm(g5.gradient));
            CHECK(std::abs(d2 - phi2K_value_grad(pp, w).gradient[c]) < 1e-5 * norm(phi2K_value_grad(pp, w).gradient));
        }
        Complex s = random_scalar(rng);
        CHECK(rel_err(phi4K(pp, scaled(w, s)), std::pow(s, 4) * phi4K(pp, w)) < 1e-10);
        CHECK(rel_err(phi5K(pp, scaled(w, s)), std::pow(s, 5) * phi5K(pp, w)) < 1e-10);
    }
}

TEST_CASE("phi_K is conjugate to phi6") {
    Rng rng(66);
    for (int t = 0; t < 20; ++t) {
        PointU v = good_v(rng);
        TauMatrix tv = tau(v);
        ParamPolys pp = build_param_polys(k_values(v));
        Vec4 w = random_u(rng).c;
        Vec4 lhs = phi6_raw(tv.matrix * w);
        Vec4 rhs = scaled(tv.matrix * phiK_raw(pp, w), std::pow(phi(v, 2), 15));
        CHECK(rel_err(lhs, rhs) < 1e-7);
        CHECK(chordal_distance(PointU{lhs}, PointU{tv.matrix * phiK(pp, PointU{w}).c}) < 1e-7);

        Complex s = random_scalar(rng);
        CHECK(rel_err(phiK_raw(pp, scaled(w, s)), scaled(phiK_raw(pp, w), std::pow(s, 6))) < 1e-10);

        for (const PointU& p : conjugated_five_points(tv)) CHECK(chordal_distance(phiK(pp, p), p) < 1e-9);
    }
}

TEST_CASE("root selector") {
    // G_k vanish at the other 5-points, and Phi2/G_l = 1/15 at p5_l
    for (int l = 0; l < 5; ++l) {
        Vec5 x;
        for (int j = 0; j < 5; ++j) x[j] = j == l ? -4.0 : 1.0;
        PointU p{x_to_u_raw(x)};
        auto g = G_forms(p);
        for (int k = 0; k < 5; ++k) {
            if (k == l)
                CHECK(rel_err(phi(p, 2) / g[k], Complex(1.0 / 15.0)) < 1e-12);
            else
                CHECK(std::abs(g[k]) < 1e-10);
        }
    }
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        PointU v = good_v(rng);
        TauMatrix tv = tau(v);
        ParamPolys pp = build_param_polys(k_values(v));
        auto S = S_values(v);
        auto five = conjugated_five_points(tv);
        for (int l = 0; l < 5; ++l) CHECK(rel_err(root_selector_J(pp, five[l].c), S[l]) < 1e-7);

        Vec4 w = random_u(rng).c;
        CHECK(rel_err(root_selector_J(pp, scaled(w, random_scalar(rng))), root_selector_J(pp, w)) < 1e-10);

        // the conjugated group permutes the five points and the selected roots together
        Mat4 inv = tv.matrix.inverse(1e-300);
        for (int s = 0; s < 3; ++s) {
            const GroupElement& g = all_elements()[rng.next() % 120];
            for (int l = 0; l < 5; ++l) {
                Vec4 gp = inv * (g.matrix_u * (tv.matrix * five[l].c));
                int m = g.perm.images[l];
                CHECK(chordal_distance(PointU{gp}, five[m]) < 1e-8);
                CHECK(rel_err(root_selector_J(pp, gp), S[m]) < 1e-7);
            }
        }
    }
}

TEST_CASE("phi_K commutes with the conjugated group") {
    Rng rng(69);
    int done = 0;
    while (done < 20) {
        PointU v = good_v(rng);
        TauMatrix tv = tau(v);
        // the comparison passes through tau^{-1}; keep it well conditioned
        if (condition(tv.matrix) > 50) continue;
        ++done;
        ParamPolys pp = build_param_polys(k_values(v));
        Vec4 w = random_u(rng).c;
        Mat4 inv = tv.matrix.inverse(1e-300);
        for (int s = 0; s < 5; ++s) {
            const GroupElement& g = all_elements()[rng.next() % 120];
            Vec4 gw = inv * (g.matrix_u * (tv.matrix * w));
            CHECK(chordal_distance(PointU{phiK_raw(pp, gw)}, PointU{inv * (g.matrix_u * (tv.matrix * phiK_raw(pp, w)))}) <
                  1e-8);
        }
    }
}

TEST_CASE("root selector rejects the K-quadric") {
    Rng rng(68);
    PointU v = good_v(rng);
    TauMatrix tv = tau(v);
    ParamPolys pp = build_param_polys(k_values(v));
    PointU q = random_quadric_u(rng);
    Vec4 w = tv.matrix.inverse(1e-300) * q.c;
    try {
        root_selector_J(pp, w, 1e-8);
        FAIL("no error on the quadric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OnQuadricK);
    }
}
