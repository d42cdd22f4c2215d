#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qflow/core_geometry.hpp"
#include "qflow/group_s5.hpp"
#include "test_support.hpp"

using namespace qflow;
using namespace qtest;

TEST_CASE("H has orthonormal rows and H H^T is the reversed identity") {
    const auto& h = hyperplane_matrix();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex herm = 0, plain = 0;
            for (int k = 0; k < 5; ++k) {
                herm += h[i][k] * std::conj(h[j][k]);
                plain += h[i][k] * h[j][k];
            }
            CHECK(std::abs(herm - (i == j ? 1.0 : 0.0)) < 1e-14);
            CHECK(std::abs(plain - (i + j == 3 ? 1.0 : 0.0)) < 1e-14);
        }
}

TEST_CASE("x to u round trips") {
    PointX x{xv({1, -1, 0, 0, 0})};
    PointX back = u_to_x(x_to_u(x));
    CHECK(chordal_distance(back, x) < 1e-12);

    PointX col = u_to_x(PointU{{1, 0, 0, 0}});
    Complex s = 0;
    for (int j = 0; j < 5; ++j) {
        s += col[j];
        CHECK(std::abs(col[j] - std::conj(hyperplane_matrix()[0][j])) < 1e-15);
    }
    CHECK(std::abs(s) < 1e-12);

    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        PointU u = random_u(rng);
        PointX xx = u_to_x(u);
        Complex sum = 0;
        for (int j = 0; j < 5; ++j) sum += xx[j];
        CHECK(std::abs(sum) < 1e-12 * norm(xx.c));
        PointX r = random_x(rng);
        CHECK(chordal_distance(u_to_x(x_to_u(r)), r) < 1e-12);
    }
}

TEST_CASE("u_to_x is an isometry for the chordal metric") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        PointU a = random_u(rng), b = random_u(rng);
        CHECK(std::abs(chordal_distance(u_to_x(a), u_to_x(b)) - chordal_distance(a, b)) < 1e-10);
    }
}

TEST_CASE("normalize") {
    PointU a = normalize(PointU{{2, 0, 0, 0}});
    CHECK(a[0] == Complex(1, 0));
    CHECK(a[1] == Complex(0, 0));
    Complex i(0, 1);
    PointU b = normalize(PointU{{i, i, 0, 0}});
    CHECK(std::abs(b[0] - 1.0) < 1e-15);
    CHECK(std::abs(b[1] - 1.0) < 1e-15);
    CHECK_THROWS_AS(normalize(PointU{{0, 0, 0, 0}}), Error);
    try {
        normalize(PointU{{0, 0, 0, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroVector);
    }
    Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
        PointU p = normalize(random_u(rng));
        PointU q = normalize(p);
        for (int k = 0; k < 4; ++k) CHECK(p[k] == q[k]);
    }
}

TEST_CASE("chordal distance") {
    PointU e1{{1, 0, 0, 0}}, e2{{0, 1, 0, 0}};
    CHECK(chordal_distance(e1, e1) == doctest::Approx(0.0));
    CHECK(chordal_distance(e1, e2) == doctest::Approx(1.0));
    Rng rng(14);
    PointU p = random_u(rng), q = random_u(rng);
    CHECK(std::abs(chordal_distance(p, q) - chordal_distance(q, p)) < 1e-15);
    CHECK(chordal_distance(p, PointU{scaled(p.c, random_scalar(rng))}) < 1e-7);
    for (const auto& g : all_elements())
        CHECK(std::abs(chordal_distance(g.apply(p), g.apply(q)) - chordal_distance(p, q)) < 1e-12);
}

TEST_CASE("line chart anchors and round trip") {
    Rng rng(15);
    PointU a = random_u(rng), b = random_u(rng);
    CurveChart c = line_chart(a, b);
    CHECK(chordal_distance(c.eval(ChartValue::at(0.0)), a) < 1e-14);
    CHECK(chordal_distance(c.eval(ChartValue::infinity()), b) < 1e-14);
    CHECK(c.invert(b).infinite);

    PointU one{{a[0] + 2.0 * b[0], a[1] + 2.0 * b[1], a[2] + 2.0 * b[2], a[3] + 2.0 * b[3]}};
    CurveChart c1 = line_chart(a, b, one);
    CHECK(chordal_distance(c1.eval(ChartValue::at(1.0)), one) < 1e-12);
    for (int t = 0; t < 100; ++t) {
        Complex z = 3.0 * rng.complex_normal();
        ChartValue back = c1.invert(c1.eval(ChartValue::at(z)));
        CHECK(!back.infinite);
        CHECK(std::abs(back.z - z) < 1e-10 * std::max(1.0, std::abs(z)));
    }
    CHECK_THROWS_AS(line_chart(a, PointU{scaled(a.c, Complex(0, 3))}), Error);
    CHECK_THROWS_AS(line_chart(a, b, random_u(rng)), Error);
}

TEST_CASE("symmetric line chart requires a harmonic pair") {
    Rng rng(16);
    PointU a = random_u(rng), b = random_u(rng);
    auto comb = [&](Complex s) {
        PointU p;
        for (int k = 0; k < 4; ++k) p[k] = a[k] + s * b[k];
        return p;
    };
    Complex s(0.7, -0.2);
    CurveChart c = symmetric_line_chart(a, b, comb(s), comb(-s));
    CHECK(chordal_distance(c.eval(ChartValue::at(-1.0)), comb(-s)) < 1e-12);
    CHECK_THROWS_AS(symmetric_line_chart(a, b, comb(s), comb(2.0 * s)), Error);
}

TEST_CASE("conic chart on a plane section of the quadric") {
    // Plane {x_1 = 0}; 0 and inf at the pair [0,1,i,-1,-i], [0,1,-i,-1,i].
    Complex i(0, 1);
    PointU p0 = u_of({0, 1, i, -1, -i});
    PointU pinf = u_of({0, 1, -i, -1, i});
    Vec4 n = plane_form_from_x(xv({1, 0, 0, 0, 0}));
    CurveChart c = conic_chart(p0, pinf, n);
    CHECK(chordal_distance(c.eval(ChartValue::at(0.0)), p0) < 1e-14);
    CHECK(chordal_distance(c.eval(ChartValue::infinity()), pinf) < 1e-14);
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        Complex z = 2.0 * rng.complex_normal();
        PointU p = c.eval(ChartValue::at(z));
        CHECK(std::abs(beta(p.c, p.c)) < 1e-12);
        CHECK(std::abs(dot(n, p.c)) < 1e-12);
        ChartValue back = c.invert(p);
        CHECK(std::abs(back.z - z) < 1e-10 * std::max(1.0, std::abs(z)));
    }
    // third anchor at 1
    PointU q = c.eval(ChartValue::at(Complex(0.3, 0.8)));
    CurveChart c1 = conic_chart(p0, pinf, n, q);
    CHECK(chordal_distance(c1.eval(ChartValue::at(1.0)), q) < 1e-12);
}

TEST_CASE("projective outputs are scale invariant") {
    Rng rng(18);
    for (int t = 0; t < 50; ++t) {
        PointU p = random_u(rng);
        Complex s = random_scalar(rng);
        CHECK(chordal_distance(normalize(p), normalize(PointU{scaled(p.c, s)})) < 1e-10);
        CHECK(chordal_distance(u_to_x(p), u_to_x(PointU{scaled(p.c, s)})) < 1e-10);
    }
}

TEST_CASE("Mat4 algebra") {
    Rng rng(19);
    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = rng.complex_normal();
    Mat4 prod = a * a.inverse();
    CHECK(max_abs_diff(prod, Mat4::identity()) < 1e-12);
    Mat4 r = Mat4::reversed_identity();
    CHECK(max_abs_diff(a.repose(), r * a.transpose() * r) < 1e-15);
    Mat4 b = a * a;
    CHECK(std::abs(b.det() - a.det() * a.det()) < 1e-10 * std::abs(b.det()));
}
