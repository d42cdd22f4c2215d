#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "qflow/basin_renderer.hpp"
#include "qflow/univariate.hpp"
#include "test_support.hpp"

using namespace qflow;
using namespace qtest;
namespace uv = qflow::univariate;

namespace {

GridSpec with_res(GridSpec g, int n) {
    g.nx = g.ny = n;
    return g;
}

// Attractor index reached from a single point.
int classify_point(const RestrictedMap1D& m, Complex z, const AttractorSet1D& a, int max_iter = 200) {
    return render_1d(m, GridSpec{z.real(), z.imag(), 1e-9, 1e-9, 1, 1}, a, max_iter).cell[0];
}

int attractor_containing(const AttractorSet1D& a, const ChartValue& z, double tol = 1e-6) {
    for (std::size_t k = 0; k < a.items.size(); ++k)
        for (const auto& c : a.items[k].cycle)
            if (chordal_distance(c, z) < tol) return static_cast<int>(k);
    return -1;
}

double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
    double dx = bx - ax, dy = by - ay;
    double t = std::clamp(((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(px - ax - t * dx, py - ay - t * dy);
}

}  // namespace

TEST_CASE("grid and attractor validation") {
    GridSpec g{1.0, -1.0, 2.0, 4.0, 20, 40};
    g.validate();
    CHECK(g.x(0) == doctest::Approx(0.05));
    CHECK(g.y(0) == doctest::Approx(0.95));
    int i, j;
    REQUIRE(g.cell_of(g.x(7), g.y(31), i, j));
    CHECK(i == 7);
    CHECK(j == 31);
    CHECK(!g.cell_of(2.5, 0.0, i, j));
    CHECK_THROWS_AS((GridSpec{0, 0, 0.0, 1.0, 10, 10}.validate()), Error);
    CHECK_THROWS_AS((GridSpec{0, 0, 1.0, 1.0, 10, 0}.validate()), Error);

    AttractorSet1D a;
    a.items = {{"a", {ChartValue::at(0.0)}}, {"b", {ChartValue::at(1e-5)}}};
    CHECK_THROWS_AS(a.validate(), Error);
    a.items[1].cycle[0] = ChartValue::infinity();
    a.validate();
    a.items.push_back({"empty", {}});
    CHECK_THROWS_AS(a.validate(), Error);
}

TEST_CASE("conic portrait of the displayed S3 conic map") {
    PortraitPreset p = portrait_preset("conic_s3");
    // the only attractor is the superattracting 2-cycle {0, inf}
    REQUIRE(p.attractors_1d.items.size() == 1);
    const auto& cyc = p.attractors_1d.items[0].cycle;
    REQUIRE(cyc.size() == 2);
    CHECK(attractor_containing(p.attractors_1d, ChartValue::at(0.0)) == 0);
    CHECK(attractor_containing(p.attractors_1d, ChartValue::infinity()) == 0);

    p.grid = with_res(p.grid, 360);
    Portrait po = render_preset(p);
    PortraitStats s = attractor_statistics(po);
    CHECK(s.fractions[0] >= 0.99);
    CHECK(s.fractions[0] + s.black == doctest::Approx(1.0));
    // z -> omega3 z commutes with the map
    auto rot = [](double x, double y) {
        Complex z = Complex(x, y) * kOmega3;
        return std::make_pair(z.real(), z.imag());
    };
    CHECK(symmetry_agreement(po, rot, {0}) >= 0.98);
}

TEST_CASE("dodecahedral map") {
    const RestrictedMap1D& m = restricted_map("dodeca11");
    // vertex form z^20 - 228 z^15 + 494 z^10 + 228 z^5 + 1
    std::vector<Complex> vf(21, 0.0);
    vf[0] = 1;
    vf[5] = 228;
    vf[10] = 494;
    vf[15] = -228;
    vf[20] = 1;
    auto verts = uv::companion_roots(vf);
    REQUIRE(verts.size() == 20);
    for (auto v : verts) {
        v = uv::newton_polish(vf, v);
        ChartValue z = ChartValue::at(v);
        ChartValue w = m(z);
        CHECK(chordal_distance(m(w), z) < 1e-10);
        CHECK(chordal_distance(w, z) > 1e-3);
        CHECK(std::abs(m.derivative(v)) < 1e-8);
        // the partner is another vertex
        CHECK(std::abs(uv::eval(vf, w.z)) / std::pow(std::max(1.0, std::abs(w.z)), 20) < 1e-8);
    }
    PortraitPreset p = portrait_preset("dodeca11");
    CHECK(p.attractors_1d.items.size() == 10);
    for (const auto& a : p.attractors_1d.items) {
        CHECK(a.cycle.size() == 2);
        for (const auto& z : a.cycle) {
            double best = 1;
            for (auto v : verts) best = std::min(best, chordal_distance(z, ChartValue::at(v)));
            CHECK(best < 1e-8);
        }
    }
    p.grid = with_res(p.grid, 200);
    PortraitStats s = attractor_statistics(render_preset(p));
    CHECK(s.black < 0.01);
}

TEST_CASE("15-line map of phi6") {
    const RestrictedMap1D& m = restricted_map("f6_L15");
    PortraitPreset p = portrait_preset("f6_L15");
    REQUIRE(p.attractors_1d.items.size() == 3);
    for (double z : {0.0, 1.0, -1.0}) {
        int k = attractor_containing(p.attractors_1d, ChartValue::at(z));
        REQUIRE(k >= 0);
        CHECK(p.attractors_1d.items[k].cycle.size() == 1);
    }
    // critical points away from 0: roots of 5D - zD' = -15 - 3z^2 + 35z^4 - 17z^6
    auto crit = uv::companion_roots({-15.0, 0.0, -3.0, 0.0, 35.0, 0.0, -17.0});
    int fixed = 0, others = 0;
    for (auto c : crit) {
        CHECK(std::abs(m.derivative(c)) < 1e-6);
        if (std::abs(std::abs(c.real()) - 1.0) < 1e-8 && std::abs(c.imag()) < 1e-8) {
            ++fixed;
            continue;
        }
        ++others;
        CHECK(chordal_distance(m(ChartValue::at(c)), ChartValue::at(c)) > 1e-3);
        CHECK(classify_point(m, c, p.attractors_1d) >= 0);
    }
    CHECK(fixed == 2);
    CHECK(others == 4);
}

TEST_CASE("octahedral conic portrait") {
    PortraitPreset p = portrait_preset("h11_Q5");
    CurveChart c = conic_chart(point("q30_1_24_1").u(), point("q30_1_24_2").u(), plane("L2_5_1").form_u);
    // the four discovered 2-cycles are the antipodal 20-point pairs
    REQUIRE(p.attractors_1d.items.size() == 4);
    std::set<int> hit;
    for (int j = 2; j <= 5; ++j) {
        std::string d = "q20_1" + std::to_string(j) + "_";
        int a = attractor_containing(p.attractors_1d, c.invert(point(d + "1").u()));
        int b = attractor_containing(p.attractors_1d, c.invert(point(d + "2").u()));
        CHECK(a >= 0);
        CHECK(a == b);
        hit.insert(a);
    }
    CHECK(hit.size() == 4);

    p.grid = with_res(p.grid, 360);
    Portrait po = render_preset(p);
    PortraitStats s = attractor_statistics(po);
    CHECK(s.black < 0.05);
    for (double f : s.fractions) CHECK(std::abs(f - 0.25 * (1 - s.black)) < 0.02);

    // z -> iz permutes the pairs
    std::vector<int> perm;
    for (const auto& a : p.attractors_1d.items)
        perm.push_back(attractor_containing(p.attractors_1d, ChartValue::at(a.cycle[0].z * Complex(0, 1))));
    for (int k : perm) CHECK(k >= 0);
    CHECK(std::set<int>(perm.begin(), perm.end()).size() == 4);
    auto rot = [](double x, double y) { return std::make_pair(-y, x); };
    CHECK(symmetry_agreement(po, rot, perm) >= 0.98);
}

TEST_CASE("S3 plane chart") {
    PlaneChart ch = s3_plane_chart(4, 5);
    CHECK(ch.plane == "L2_10_45");
    auto at = [&](const char* d) { return ch.coords(point(d).u()); };
    auto [x0, y0] = at("p10_45_2");
    CHECK(std::abs(x0) < 1e-12);
    CHECK(std::abs(y0) < 1e-12);
    auto [x1, y1] = at("p5_1");
    CHECK(std::abs(x1 - 1.0) < 1e-12);
    CHECK(std::abs(y1) < 1e-12);
    auto [x2, y2] = at("p5_2");
    CHECK(std::abs(x2 + 0.5) < 1e-12);
    CHECK(std::abs(y2 - std::sqrt(3.0) / 2) < 1e-12);
    auto [x3, y3] = at("p5_3");
    CHECK(std::abs(x3 + 0.5) < 1e-12);
    CHECK(std::abs(y3 + std::sqrt(3.0) / 2) < 1e-12);
    // every embedded point lies on {x_4 = x_5}
    SpecialPlane pl = plane("L2_10_45");
    Rng rng(81);
    for (int t = 0; t < 20; ++t) {
        double x = rng.normal(), y = rng.normal();
        PointU u = ch.embed_u(x, y);
        CHECK(plane_residual(pl, u) < 1e-14);
        auto [bx, by] = ch.coords(u);
        CHECK(std::abs(bx - x) < 1e-10);
        CHECK(std::abs(by - y) < 1e-10);
    }
    CHECK_THROWS_AS(ch.coords(point("p5_4").u()), Error);
    CHECK_THROWS_AS(s3_plane_chart(5, 4), Error);

    for (const char* m : {"phi6", "h11", "g11"}) CHECK(plane_invariance_residual(ch, equivariant_map(m)) < 1e-10);
    // a real plane that is not a mirror is not preserved
    PlaneChart bad = ch;
    bad.origin = {1.0, -2.0, 0.5, 0.25, 0.25};
    CHECK(plane_invariance_residual(bad, equivariant_map("phi6")) > 1e-3);
    CHECK_THROWS_AS(render_plane(bad, equivariant_map("phi6"), GridSpec{0, 0, 1, 1, 4, 4}, portrait_preset("f6_RP2").attractors_u),
                    Error);
}

TEST_CASE("phi6 on the real S3 plane") {
    PortraitPreset p = portrait_preset("f6_RP2");
    p.grid = with_res(p.grid, 300);
    Portrait po = render_preset(p);
    REQUIRE(po.labels.size() == 4);
    PortraitStats s = attractor_statistics(po);
    CHECK(s.black < 0.05);
    double sum = s.black;
    for (double f : s.fractions) sum += f;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(s.fractions[3] > 0);

    double r = 0.5 * p.grid.width;
    PortraitStats disk = attractor_statistics(po, [r](double x, double y) { return x * x + y * y <= r * r; });
    CHECK(std::abs(disk.fractions[0] - disk.fractions[1]) < 0.02);
    CHECK(std::abs(disk.fractions[1] - disk.fractions[2]) < 0.02);
    CHECK(std::abs(disk.fractions[0] - disk.fractions[2]) < 0.02);

    auto flip = [](double x, double y) { return std::make_pair(x, -y); };
    CHECK(symmetry_agreement(po, flip, {0, 2, 1, 3}) >= 0.98);
    const double c = -0.5, sn = std::sqrt(3.0) / 2;
    auto rot = [=](double x, double y) { return std::make_pair(c * x - sn * y, sn * x + c * y); };
    CHECK(symmetry_agreement(po, rot, {1, 2, 0, 3}) >= 0.98);

    // the complex path classifies the same cells
    EquivariantMap slow = equivariant_map("phi6");
    slow.eval_real_x = nullptr;
    GridSpec small = with_res(p.grid, 40);
    Portrait a = render_plane(p.chart, equivariant_map("phi6"), small, p.attractors_u);
    Portrait b = render_plane(p.chart, slow, small, p.attractors_u);
    int same = 0;
    for (std::size_t k = 0; k < a.cell.size(); ++k) same += a.cell[k] == b.cell[k];
    CHECK(same >= 0.99 * a.cell.size());
}

TEST_CASE("phi6 image of the half-radius circle hugs the triangle") {
    PlaneChart ch = s3_plane_chart(4, 5);
    const auto& f = equivariant_map("phi6");
    const double s3 = std::sqrt(3.0) / 2;
    const double vx[3] = {1.0, -0.5, -0.5}, vy[3] = {0.0, s3, -s3};
    double worst = 0;
    for (int k = 0; k < 360; ++k) {
        double t = 2 * kPi * k / 360;
        auto [x, y] = ch.coords(f.eval_real_x(ch.embed(0.5 * std::cos(t), 0.5 * std::sin(t))));
        double d = 1e300;
        for (int e = 0; e < 3; ++e)
            d = std::min(d, segment_distance(x, y, vx[e], vy[e], vx[(e + 1) % 3], vy[(e + 1) % 3]));
        worst = std::max(worst, d);
    }
    CHECK(worst < 0.1);
}

TEST_CASE("h11 on the S3 plane has a chaotic invariant line") {
    PlaneChart ch = s3_plane_chart(4, 5);
    const auto& h = equivariant_map("h11");
    GridSpec g = portrait_preset("f6_RP2").grid;
    // the edge through the 5-points at (-1/2, +-sqrt3/2) is the real 10-line {x_1 = x_4 = x_5}
    auto x = ch.embed(-0.5, 0.3);
    std::set<std::pair<int, int>> cells;
    double drift = 0;
    for (int it = 0; it < 3000; ++it) {
        x = h.eval_real_x(x);
        double m = 0;
        for (double v : x) m = std::max(m, std::abs(v));
        for (double& v : x) v /= m;
        drift = std::max(drift, std::abs(x[0] - x[3]) + std::abs(x[3] - x[4]));
        try {
            auto [px, py] = ch.coords(x);
            int i, j;
            if (g.cell_of(px, py, i, j)) cells.insert({i, j});
        } catch (const Error&) {
        }
    }
    CHECK(drift < 1e-8);
    CHECK(cells.size() >= 100);
}

TEST_CASE("statistics, masks and determinism") {
    PortraitPreset p = portrait_preset("h11_M15");
    p.grid = with_res(p.grid, 120);
    Portrait a = render_preset(p);
    PortraitStats s = attractor_statistics(a);
    CHECK(s.counted == a.grid.cells());
    double sum = s.black;
    for (double f : s.fractions) sum += f;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(s.mean_iterations > 0);
    PortraitStats none = attractor_statistics(a, [](double, double) { return false; });
    CHECK(none.counted == 0);
    PortraitStats right = attractor_statistics(a, [](double x, double) { return x > 0; });
    CHECK(right.counted == a.grid.cells() / 2);

    setenv("QUINTIC_FLOW_THREADS", "3", 1);
    CHECK(render_threads() == 3);
    Portrait b = render_preset(p);
    setenv("QUINTIC_FLOW_THREADS", "1", 1);
    Portrait c = render_preset(p);
    unsetenv("QUINTIC_FLOW_THREADS");
    CHECK(ppm_bytes(a) == ppm_bytes(b));
    CHECK(ppm_bytes(a) == ppm_bytes(c));
    CHECK(a.iterations == c.iterations);

    auto bytes = ppm_bytes(a);
    std::string head(bytes.begin(), bytes.begin() + 15);
    CHECK(head == "P6\n120 120\n255\n");
    CHECK(bytes.size() == 15 + 3 * 120 * 120);
    CHECK_THROWS_AS(write_ppm("/nonexistent_dir/x.ppm", a), Error);

    auto names = portrait_preset_names();
    CHECK(std::find(names.begin(), names.end(), "f6_RP2") != names.end());
    CHECK(std::find(names.begin(), names.end(), "dodeca11") != names.end());
    CHECK_THROWS_AS(portrait_preset("nope"), Error);
}
