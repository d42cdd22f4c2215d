#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qflow/group_s5.hpp"
#include "qflow/invariants.hpp"
#include "test_support.hpp"

using namespace qflow;
using namespace qtest;

namespace {

Permutation random_perm(Rng& rng) { return all_elements()[rng.next() % 120].perm; }

bool projectively_in_set(const Mat4& m) {
    for (const auto& g : all_elements()) {
        // same projective class: m = c g for a unit scalar c
        Complex c = 0;
        for (int i = 0; i < 4 && c == 0.0; ++i)
            for (int j = 0; j < 4; ++j)
                if (std::abs(g.matrix_u(i, j)) > 0.1) {
                    c = m(i, j) / g.matrix_u(i, j);
                    break;
                }
        if (max_abs_diff(m, g.matrix_u * c) < 1e-10) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("identity and transposition") {
    auto e = element(Permutation::identity());
    CHECK(max_abs_diff(e.matrix_u, Mat4::identity()) < 1e-14);
    auto t = element(Permutation::transposition(0, 1));
    CHECK(std::abs(t.matrix_u.det() + 1.0) < 1e-12);
    CHECK(t.parity == Parity::Odd);
}

TEST_CASE("homomorphism") {
    Rng rng(21);
    for (int k = 0; k < 50; ++k) {
        Permutation s = random_perm(rng), t = random_perm(rng);
        Mat4 lhs = element(s.compose(t)).matrix_u;
        Mat4 rhs = element(s).matrix_u * element(t).matrix_u;
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("x action matches u action") {
    Rng rng(22);
    for (int k = 0; k < 20; ++k) {
        const auto& g = all_elements()[rng.next() % 120];
        PointX x = random_x(rng);
        CHECK(chordal_distance(x_to_u(g.apply(x)), g.apply(x_to_u(x))) < 1e-12);
    }
}

TEST_CASE("all elements") {
    const auto& els = all_elements();
    CHECK(els.size() == 120);
    int even = 0;
    for (const auto& g : els) {
        if (g.parity == Parity::Even) ++even;
        CHECK(max_abs_diff(g.matrix_u * g.matrix_u.adjoint(), Mat4::identity()) < 1e-12);
        double expected = g.parity == Parity::Even ? 1.0 : -1.0;
        CHECK(std::abs(g.matrix_u.det() - expected) < 1e-12);
    }
    CHECK(even == 60);
    for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = a + 1; b < els.size(); ++b) {
            // pairwise projectively distinct: |tr(A^* B)| < 4
            Complex tr = 0;
            Mat4 m = els[a].matrix_u.adjoint() * els[b].matrix_u;
            for (int i = 0; i < 4; ++i) tr += m(i, i);
            CHECK(std::abs(tr) < 4.0 - 1e-9);
        }
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        Mat4 p = els[rng.next() % 120].matrix_u * els[rng.next() % 120].matrix_u;
        CHECK(projectively_in_set(p * Complex(0.0, 2.0)));
    }
}

TEST_CASE("elements preserve the quadric") {
    Rng rng(24);
    for (int k = 0; k < 100; ++k) {
        PointU q = random_quadric_u(rng);
        const auto& g = all_elements()[k % 120];
        PointU img = g.apply(q);
        double n = norm(img.c);
        CHECK(std::abs(phi(img, 2)) < 1e-12 * n * n);
    }
}

TEST_CASE("orbits and stabilizers") {
    CHECK(orbit(u_of({-4, 1, 1, 1, 1})).size() == 5);
    CHECK(orbit(u_of({0, 0, 0, 1, -1})).size() == 10);
    CHECK(stabilizer_order(u_of({-4, 1, 1, 1, 1})) == 24);
    CHECK(stabilizer_order(u_of({0, 0, 1, kOmega3, kOmega3 * kOmega3})) == 6);
    Complex w = kOmega5;
    CHECK(stabilizer_order(u_of({1, w, w * w, w * w * w, w * w * w * w})) == 5);
    Rng rng(25);
    for (int k = 0; k < 10; ++k) CHECK(orbit(random_u(rng)).size() == 120);
}
