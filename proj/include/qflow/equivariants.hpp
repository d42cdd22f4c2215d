#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qflow/core_geometry.hpp"
#include "qflow/dual.hpp"
#include "qflow/invariants.hpp"

namespace qflow {

// ---------------------------------------------------------------- raw evaluators

/// f_k(x)_i = F_k(x) - 5 x_i^k, k = 1..4.
template <class T>
std::array<T, 5> f_basic_raw(const std::array<T, 5>& x, int k) {
    std::array<T, 5> pk;
    for (int i = 0; i < 5; ++i) {
        T p = x[i];
        for (int e = 1; e < k; ++e) p = p * x[i];
        pk[i] = p;
    }
    T f = pk[0] + pk[1] + pk[2] + pk[3] + pk[4];
    std::array<T, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = f - pk[i] * 5.0;
    return r;
}

/// phi_k = -5/(k+1) times the reversed gradient of Phi_{k+1} (equals H f_k(conj(H)^T u)).
template <class T>
std::array<T, 4> phi_basic_raw(const std::array<T, 4>& u, int k) {
    auto g = phi_poly(k + 1).gradient_t(u);
    double s = -5.0 / (k + 1);
    return {g[3] * s, g[2] * s, g[1] * s, g[0] * s};
}

/// The solver 6-map via the invariant combination, scaled to match the explicit display.
template <class T>
std::array<T, 4> phi6_raw(const std::array<T, 4>& u) {
    T p2 = phi_poly(2).eval(u), p3 = phi_poly(3).eval(u), p4 = phi_poly(4).eval(u), p5 = phi_poly(5).eval(u);
    auto f1 = phi_basic_raw(u, 1), f2 = phi_basic_raw(u, 2), f3 = phi_basic_raw(u, 3), f4 = phi_basic_raw(u, 4);
    const double s = 1.0 / (2.0 * kSqrt5);
    T c1 = (p2 * p3 * 9.0 - p5 * 10.0) * (2.0 * s);
    T c2 = (p2 * p2 - p4 * 5.0) * (-2.0 * s);
    T c3 = p3 * (20.0 * s);
    T c4 = p2 * (15.0 * s);
    std::array<T, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = c1 * f1[i] + c2 * f2[i] + c3 * f3[i] + c4 * f4[i];
    return r;
}

/// The solver 6-map in permutation coordinates: the same combination with F_k and f_k
/// (x_to_u of the result equals phi6_raw of x_to_u).
template <class T>
std::array<T, 5> phi6_x_raw(const std::array<T, 5>& x) {
    T p2 = power_sum_raw(x, 2), p3 = power_sum_raw(x, 3), p4 = power_sum_raw(x, 4), p5 = power_sum_raw(x, 5);
    auto f1 = f_basic_raw(x, 1), f2 = f_basic_raw(x, 2), f3 = f_basic_raw(x, 3), f4 = f_basic_raw(x, 4);
    const double s = 1.0 / (2.0 * kSqrt5);
    T c1 = (p2 * p3 * 9.0 - p5 * 10.0) * (2.0 * s);
    T c2 = (p2 * p2 - p4 * 5.0) * (-2.0 * s);
    T c3 = p3 * (20.0 * s);
    T c4 = p2 * (15.0 * s);
    std::array<T, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = c1 * f1[i] + c2 * f2[i] + c3 * f3[i] + c4 * f4[i];
    return r;
}

/// The solver 6-map from its explicit degree-6 coordinate polynomials.
const std::array<Poly4, 4>& phi6_display_polys();

template <class T>
std::array<T, 4> phi6_display_raw(const std::array<T, 4>& u) {
    const auto& p = phi6_display_polys();
    return {p[0].eval(u), p[1].eval(u), p[2].eval(u), p[3].eval(u)};
}

template <class T>
std::array<T, 5> h11_raw(const std::array<T, 5>& x) {
    T f2 = power_sum_raw(x, 2), f3 = power_sum_raw(x, 3), f4 = power_sum_raw(x, 4), f5 = power_sum_raw(x, 5);
    T f2s = f2 * f2;
    T c1 = f2s * f2s * f2 * (-21.0) + f2s * f3 * f3 * 56.0 + f2s * f2 * f4 * 66.0 + f3 * f3 * f4 * 48.0 -
           f2 * f4 * f4 * 48.0 - f2 * f3 * f5 * 96.0;
    T c2 = (f3 * f3 * f3 * 4.0 - f2 * f3 * f4 * 9.0 + f2s * f5 * 3.0) * (-24.0);
    T c3 = (f2s * f2s * 5.0 + f2 * f3 * f3 * 8.0 - f2s * f4 * 10.0) * 12.0;
    T c4 = f2s * f3 * (-96.0);
    auto e1 = f_basic_raw(x, 1), e2 = f_basic_raw(x, 2), e3 = f_basic_raw(x, 3), e4 = f_basic_raw(x, 4);
    std::array<T, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = c1 * e1[i] + c2 * e2[i] + c3 * e3[i] + c4 * e4[i];
    return r;
}

/// Free parameters of the ruling-preserving 11-map family, indexed by their
/// position among alpha_1..alpha_20 (1,2,3,5,6,8,10,11,13,14,15,18,20).
using G11Alphas = std::array<Complex, 13>;

template <class T>
std::array<T, 5> g11_raw(const std::array<T, 5>& x, const G11Alphas& a = {}) {
    T f2 = power_sum_raw(x, 2), f3 = power_sum_raw(x, 3), f4 = power_sum_raw(x, 4), f5 = power_sum_raw(x, 5);
    T f2s = f2 * f2;
    T c1 = (f2s * f2s * f2 * (16.0 * a[0]) + f2s * f3 * f3 * (16.0 * a[1]) + f2s * f2 * f4 * (16.0 * a[2]) +
            f3 * f3 * f4 * 67.0 + f2 * f4 * f4 * (16.0 * a[3]) + f2 * f3 * f5 * (16.0 * a[4]) + f5 * f5 * 45.0) *
           4.0;
    T c2 = (f2s * f2 * f3 * (16.0 * a[5]) + f3 * f3 * f3 * 16.0 + f2 * f3 * f4 * (16.0 * a[6]) +
            f2s * f5 * (16.0 * a[7]) - f4 * f5 * 135.0) *
           4.0;
    T c3 = f2s * f2s * (64.0 * a[8]) + f2 * f3 * f3 * (64.0 * a[9]) + f2s * f4 * (64.0 * a[10]) + f4 * f4 * 405.0 -
           f3 * f5 * 720.0;
    T c4 = (f2s * f3 * (16.0 * a[11]) - f3 * f4 * 225.0 + f2 * f5 * (16.0 * a[12])) * 4.0;
    auto e1 = f_basic_raw(x, 1), e2 = f_basic_raw(x, 2), e3 = f_basic_raw(x, 3), e4 = f_basic_raw(x, 4);
    std::array<T, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = c1 * e1[i] + c2 * e2[i] + c3 * e3[i] + c4 * e4[i];
    return r;
}

// ---------------------------------------------------------------- projective maps

PointX f_basic(const PointX& p, int k, const Tolerances& tol = default_tolerances());
PointU phi_basic(const PointU& p, int k);
PointU phi6(const PointU& p, const Tolerances& tol = default_tolerances());
PointU phi6_display(const PointU& p);
PointX h11(const PointX& p, const Tolerances& tol = default_tolerances());
PointX g11(const PointX& p, const G11Alphas& alphas = {}, const Tolerances& tol = default_tolerances());

/// A self-map of CP^3 in hyperplane coordinates with a dual-number path for Jacobians.
struct EquivariantMap {
    std::string name;
    int degree = 0;
    std::function<Vec4(const Vec4&)> eval;
    std::function<std::array<Dual4, 4>(const std::array<Dual4, 4>&)> eval_dual;
    /// The same map on real permutation coordinates (unset when the map has no real form).
    /// Real planes are iterated through this path.
    std::function<std::array<double, 5>(const std::array<double, 5>&)> eval_real_x;

    /// Normalizes the input, evaluates, throws Indeterminate on a vanishing image, normalizes the output.
    PointU apply(const PointU& p, const Tolerances& tol = default_tolerances()) const;
    Mat4 jacobian(const Vec4& u) const;
};

/// Registry: phi1..phi4, phi6, phi6_display, h11, g11.
const EquivariantMap& equivariant_map(const std::string& name);
std::vector<std::string> equivariant_map_names();
EquivariantMap g11_map(const G11Alphas& alphas);

// ---------------------------------------------------------------- quadric rulings

struct RulingCoords {
    std::array<Complex, 2> a;  ///< a^T U = 0
    std::array<Complex, 2> b;  ///< U b = 0
};

/// U = [[u1, -u2], [u3, u4]]; rank one exactly on the quadric.
RulingCoords ruling_coords(const PointU& p, const Tolerances& tol = default_tolerances());

/// Line of the a-ruling (resp. b-ruling) with coordinate [a1, a2], as two linear forms on u-space.
std::array<Vec4, 2> a_line_forms(const std::array<Complex, 2>& a);
std::array<Vec4, 2> b_line_forms(const std::array<Complex, 2>& b);

// ---------------------------------------------------------------- restricted 1-D maps

/// Polynomial with ascending complex coefficients.
struct Poly1 {
    std::vector<Complex> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Complex eval(Complex z) const;
    Poly1 derivative() const;
};

/// Rational self-map of CP^1, z -> N(z)/D(z), evaluated homogeneously on [z0 : z1] (z = z1/z0).
struct RestrictedMap1D {
    std::string name;
    std::string description;
    Poly1 num, den;

    int degree() const;
    std::array<Complex, 2> eval_homogeneous(const std::array<Complex, 2>& h) const;
    ChartValue operator()(const ChartValue& z) const;
    /// Derivative of z -> N/D at a finite point whose image is finite.
    Complex derivative(Complex z) const;
};

/// Registry of the displayed restricted maps (see README for the list of names).
const RestrictedMap1D& restricted_map(const std::string& name);
std::vector<std::string> restricted_map_names();

/// The map induced on an invariant chart curve by a self-map of CP^3. Throws NotOnChart
/// when the image leaves the curve.
ChartValue induced_chart_map(const std::function<PointU(const PointU&)>& f, const CurveChart& chart,
                             const ChartValue& z);

struct ConformanceResult {
    bool pass = false;
    Complex scale{1.0, 0.0};  ///< chart.rescaled(scale) carries the displayed map
    double max_error = 0;     ///< max chordal distance between induced and displayed images
};

/// Resolves the residual z -> c z freedom of a chart anchored at 0 and inf by matching one
/// sample point, then compares the induced map with the displayed one at `samples` points.
/// With fix_scale = false the chart is used as given.
ConformanceResult restricted_map_conformance(const std::function<PointU(const PointU&)>& f, const CurveChart& chart,
                                             const RestrictedMap1D& r, int samples = 50, std::uint64_t seed = 1,
                                             double tol = 1e-8, bool fix_scale = true);

/// The quadric map in affine coordinates (x, y) on {u1 != 0}, exactly as displayed.
std::array<Complex, 2> quadric_affine_map(Complex x, Complex y);

}  // namespace qflow
