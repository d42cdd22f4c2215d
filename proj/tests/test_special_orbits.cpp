#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qflow/group_s5.hpp"
#include "qflow/invariants.hpp"
#include "qflow/special_orbits.hpp"
#include "test_support.hpp"

using namespace qflow;
using namespace qtest;

namespace {

bool same_point(const PointX& a, const Vec5& b) { return chordal_distance(a, PointX{b}) < 1e-12; }

}  // namespace

TEST_CASE("table representatives") {
    const Complex i(0, 1);
    CHECK(same_point(point("p5_1").x, xv({-4, 1, 1, 1, 1})));
    CHECK(same_point(point("p10_45_1").x, xv({0, 0, 0, 1, -1})));
    CHECK(same_point(point("p10_45_2").x, xv({2, 2, 2, -3, -3})));
    CHECK(same_point(point("p15_1_23").x, xv({0, 1, 1, -1, -1})));
    CHECK(same_point(point("p15_1_23").x, point("p15_1_45").x.c));
    CHECK(same_point(point("p20_1_345").x, xv({0, -3, 1, 1, 1})));
    CHECK(same_point(point("p20_2_345").x, xv({-3, 0, 1, 1, 1})));
    CHECK(same_point(point("p30_12_34").x, xv({0, 0, 1, 1, -2})));
    CHECK(same_point(point("q20_12_1").x, xv({0, 0, 1, kOmega3, kOmega3 * kOmega3})));
    CHECK(same_point(point("q20_12_2").x, xv({0, 0, 1, kOmega3 * kOmega3, kOmega3})));
    Complex a(-1.5, std::sqrt(15.0) / 2);
    CHECK(same_point(point("q20_123_1").x, xv({1, 1, 1, a, std::conj(a)})));
    CHECK(same_point(point("q30_1_24_1").x, xv({0, 1, i, -1, -i})));
    CHECK(same_point(point("q30_1_24_2").x, xv({0, 1, -i, -1, i})));
    CHECK(same_point(point("q30_1_35_2").x, point("q30_1_24_1").x.c));
    CHECK(same_point(point("q30_1_35_1").x, point("q30_1_24_2").x.c));
    Complex b(-2.0 / 3, std::sqrt(5.0) / 3);
    CHECK(same_point(point("q30_12_34_1").x, xv({1, 1, b, b, -2.0 * (1.0 + b)})));
    Complex g(-1, std::sqrt(2.0));
    CHECK(same_point(point("q60_1_23_1").x, xv({0, 1, 1, g, std::conj(g)})));
    Complex w = kOmega5;
    CHECK(same_point(point("q24_1234").x, xv({1, w, w * w, w * w * w, w * w * w * w})));
}

TEST_CASE("index sets are normalized") {
    CHECK(same_point(point("p10_54_2").x, point("p10_45_2").x.c));
    CHECK(same_point(point("p20_1_543").x, point("p20_1_345").x.c));
    CHECK(same_line(line("L1_15_34_12"), line("L1_15_12_34")));
}

TEST_CASE("bad descriptors") {
    CHECK_THROWS_AS(point("z5_1"), Error);
    try {
        point("z5_1");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownDescriptor);
    }
    for (const char* d : {"p10_44_1", "p10_45_3", "p5_6", "p15_1_12", "q24_1235", "L1_15_12_23"}) {
        try {
            point(d);
            FAIL("accepted " << d);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadIndices);
        }
    }
    try {
        line("L1_15_12_23");
        FAIL("accepted overlapping pairs");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadIndices);
    }
}

TEST_CASE("orbit sizes and stabilizers of every family") {
    for (const auto& fam : point_families()) {
        auto pts = family_points(fam);
        INFO(fam);
        CHECK(static_cast<int>(pts.size()) == pts.front().expected_orbit_size);
        CHECK(static_cast<int>(orbit(pts.front().u()).size()) == pts.front().expected_orbit_size);
        CHECK(stabilizer_order(pts.front().u()) == pts.front().expected_stabilizer_order);
        CHECK(pts.front().expected_orbit_size * pts.front().expected_stabilizer_order == 120);
    }
}

TEST_CASE("quadric representatives") {
    for (const auto& fam : point_families()) {
        for (const auto& p : family_points(fam)) {
            if (!p.on_quadric) continue;
            PointU u = normalize(p.u());
            CHECK(std::abs(phi(u, 2)) < 1e-12);
        }
    }
    // real points are off the quadric
    CHECK(std::abs(phi(normalize(point("p5_1").u()), 2)) > 0.1);
}

TEST_CASE("lines") {
    SpecialLine l = line("L1_15_12_34");
    int c = 0;
    for (const auto& p : family_points("p5"))
        if (on_line(l, p.u())) {
            ++c;
            CHECK(p.descriptor == "p5_5");
        }
    CHECK(c == 1);
    SpecialLine m = line("M1_10_123");
    CHECK(on_line(m, point("p5_4").u()));
    CHECK(on_line(m, point("p5_5").u()));
    CHECK(!on_line(m, point("p5_1").u()));
    CHECK(line_orbit(line("L1_30_1_23")).size() == 30);
    CHECK(line_orbit(line("L1_10_12")).size() == 10);
    CHECK(line_orbit(line("M1_15_12_34")).size() == 15);
    // 15-line chart points: 5-point, 15-point and two 10-points
    SpecialLine f = line("L1_15_23_45");
    CHECK(on_line(f, point("p5_1").u()));
    CHECK(on_line(f, point("p15_1_23").u()));
    CHECK(on_line(f, point("p10_23_2").u()));
    CHECK(on_line(f, point("p10_45_2").u()));
    // 30-line through its pair of 60-points
    SpecialLine t = line("L1_30_1_23");
    CHECK(on_line(t, point("q60_1_23_1").u()));
    CHECK(on_line(t, point("q60_1_23_2").u()));
}

TEST_CASE("planes") {
    SpecialPlane p = plane("M2_10_45");
    CHECK(plane_residual(p, point("p10_45_1").u()) < 1e-12);
    CHECK(plane_residual(p, point("p5_1").u()) > 0.1);
    CHECK(plane_residual(plane("L2_10_45"), point("p5_1").u()) < 1e-12);
    CHECK(plane_residual(plane("L2_10_45"), point("p10_45_2").u()) < 1e-12);
    SpecialPlane q = plane("L2_5_1");
    CHECK(plane_residual(q, point("q30_1_24_1").u()) < 1e-12);
    CHECK(family_planes("L2_10").size() == 10);
}

TEST_CASE("ruling lines lie on the quadric") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        PointU q = random_quadric_u(rng);
        for (bool a : {true, false}) {
            SpecialLine l = ruling_line(q, a);
            CHECK(on_line(l, q));
            for (int k = 0; k < 5; ++k) {
                Complex s = rng.complex_normal();
                PointU p;
                for (int j = 0; j < 4; ++j) p[j] = l.span[0][j] + s * l.span[1][j];
                CHECK(std::abs(phi(p, 2)) < 1e-12 * norm(p.c) * norm(p.c));
            }
        }
    }
}

TEST_CASE("configuration report") {
    auto rep = verify_configuration();
    CHECK(rep.size() > 40);
    for (const auto& c : rep) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}
