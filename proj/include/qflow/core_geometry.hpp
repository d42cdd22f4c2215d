#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <algorithm>
#include <cstddef>
#include <optional>

#include "qflow/error.hpp"

namespace qflow {

using Complex = std::complex<double>;
using Vec4 = std::array<Complex, 4>;
using Vec5 = std::array<Complex, 5>;

inline const double kSqrt5 = std::sqrt(5.0);
inline const double kPi = 3.14159265358979323846;
inline const Complex kOmega5 = std::polar(1.0, 2.0 * kPi / 5.0);
inline const Complex kOmega3 = std::polar(1.0, 2.0 * kPi / 3.0);

/// Numerical thresholds shared by the library. All relative unless noted.
struct Tolerances {
    double zero_vector = 1e-300;     ///< absolute: coordinates below this count as zero
    double tie_break = 1e-12;        ///< normalize(): coordinates within this of the max tie
    double on_line = 1e-10;          ///< chart anchor collinearity residual
    double dedup = 1e-9;             ///< projective identification in orbits
    double degeneracy = 1e-10;       ///< |Phi_k| / |u|^k below this counts as zero
    double indeterminate = 1e-300;   ///< image norm below this after input normalization
};

const Tolerances& default_tolerances();

/// Point of CP^3 in hyperplane coordinates.
struct PointU {
    Vec4 c{};
    Complex& operator[](std::size_t i) { return c[i]; }
    const Complex& operator[](std::size_t i) const { return c[i]; }
};

/// Point in the five permutation coordinates; coordinates sum to zero.
struct PointX {
    Vec5 c{};
    Complex& operator[](std::size_t i) { return c[i]; }
    const Complex& operator[](std::size_t i) const { return c[i]; }
};

/// Validated construction: throws InvalidInput when the coordinates do not sum to zero.
PointX make_point_x(const Vec5& x);

class Mat4 {
public:
    Mat4() = default;
    static Mat4 identity();
    /// The reversed identity R (ones on the anti-diagonal).
    static Mat4 reversed_identity();
    static Mat4 from_columns(const std::array<Vec4, 4>& cols);

    Complex& operator()(int i, int j) { return a_[i][j]; }
    const Complex& operator()(int i, int j) const { return a_[i][j]; }

    Mat4 operator*(const Mat4& o) const;
    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(Complex s) const;
    Vec4 operator*(const Vec4& v) const;

    Mat4 transpose() const;
    Mat4 adjoint() const;
    /// A^r = R A^T R
    Mat4 repose() const;
    Complex det() const;
    /// Classical adjugate, adj(A) A = det(A) I.
    Mat4 adjugate() const;
    /// Cofactor inverse; throws Degenerate when det is below rel_tol * max|a|^4.
    Mat4 inverse(double rel_tol = 1e-14) const;
    double max_abs() const;
    Vec4 column(int j) const;

private:
    std::array<std::array<Complex, 4>, 4> a_{};
};

double norm(const Vec4& v);
double norm(const Vec5& v);
Complex dot(const Vec4& a, const Vec4& b);  // bilinear, no conjugation
double max_abs_diff(const Mat4& a, const Mat4& b);

/// The 4x5 change-of-basis matrix: H[k][j] = omega^{(k+1) j} / sqrt5.
const std::array<std::array<Complex, 5>, 4>& hyperplane_matrix();

template <class T>
std::array<T, 4> x_to_u_raw(const std::array<T, 5>& x) {
    const auto& h = hyperplane_matrix();
    std::array<T, 4> u{};
    for (int k = 0; k < 4; ++k) {
        T s = x[0] * h[k][0];
        for (int j = 1; j < 5; ++j) s = s + x[j] * h[k][j];
        u[k] = s;
    }
    return u;
}

template <class T>
std::array<T, 5> u_to_x_raw(const std::array<T, 4>& u) {
    const auto& h = hyperplane_matrix();
    std::array<T, 5> x{};
    for (int j = 0; j < 5; ++j) {
        T s = u[0] * std::conj(h[0][j]);
        for (int k = 1; k < 4; ++k) s = s + u[k] * std::conj(h[k][j]);
        x[j] = s;
    }
    return x;
}

PointU x_to_u(const PointX& p);
PointX u_to_x(const PointU& p);

/// Scale so the largest-modulus coordinate equals 1 (lowest index wins ties).
PointU normalize(const PointU& p);
PointX normalize(const PointX& p);

/// sin of the Fubini-Study angle, |p ^ q| / (|p| |q|); exact near zero unlike sqrt(1 - cos^2).
template <std::size_t N>
double chordal_distance(const std::array<Complex, N>& p, const std::array<Complex, N>& q) {
    double np = 0, nq = 0;
    for (std::size_t i = 0; i < N; ++i) {
        np = std::max(np, std::abs(p[i]));
        nq = std::max(nq, std::abs(q[i]));
    }
    if (np == 0 || nq == 0)
        throw Error(ErrorCode::ZeroVector, "chordal distance of a zero vector");
    double sp = 0, sq = 0, w = 0;
    for (std::size_t i = 0; i < N; ++i) {
        sp += std::norm(p[i] / np);
        sq += std::norm(q[i] / nq);
        for (std::size_t j = i + 1; j < N; ++j) w += std::norm((p[i] / np) * (q[j] / nq) - (p[j] / np) * (q[i] / nq));
    }
    return std::min(1.0, std::sqrt(w / (sp * sq)));
}

double chordal_distance(const PointU& p, const PointU& q);
double chordal_distance(const PointX& p, const PointX& q);

/// Value on a projective line: finite z or the tag for infinity.
struct ChartValue {
    Complex z{0.0, 0.0};
    bool infinite = false;

    static ChartValue at(Complex v) { return {v, false}; }
    static ChartValue infinity() { return {0.0, true}; }
    /// From homogeneous [z0 : z1] with z = z1 / z0.
    static ChartValue from_homogeneous(Complex z0, Complex z1);
    std::array<Complex, 2> homogeneous() const;
};

double chordal_distance(const ChartValue& a, const ChartValue& b);

/// Rational parametrisation z -> A + z B (line) or A + z B + z^2 C (conic) in u-space.
class CurveChart {
public:
    int degree() const { return degree_; }
    PointU eval(const ChartValue& z) const;
    /// Homogeneous evaluation at [z0 : z1], not normalized.
    Vec4 eval_homogeneous(Complex z0, Complex z1) const;
    /// Inverse of eval. Throws NotOnChart if p is off the curve by more than tol.
    ChartValue invert(const PointU& p, double tol = 1e-8) const;
    /// Replace the parameter z by c z (moves the point at z=1 to z=1/c).
    CurveChart rescaled(Complex c) const;
    const Vec4& a() const { return a_; }
    const Vec4& b() const { return b_; }
    const Vec4& c() const { return c_; }

    friend CurveChart line_chart(const PointU&, const PointU&, std::optional<PointU>, const Tolerances&);
    friend CurveChart symmetric_line_chart(const PointU&, const PointU&, const PointU&, const PointU&,
                                           const Tolerances&);
    friend CurveChart conic_chart(const PointU&, const PointU&, const Vec4&, std::optional<PointU>,
                                  const Tolerances&);

private:
    int degree_ = 1;
    Vec4 a_{}, b_{}, c_{};
    // line: cached Gram data for least-squares inversion
    Complex g11_{}, g12_{}, g22_{};
    // conic: beta(A,C) and beta(B,B)
    Complex bac_{}, bbb_{};
};

/// Line through at_zero (z=0) and at_inf (z=inf); an optional third collinear point is placed at z=1.
CurveChart line_chart(const PointU& at_zero, const PointU& at_inf, std::optional<PointU> at_one = std::nullopt,
                      const Tolerances& tol = default_tolerances());

/// Line chart with anchors at 0, inf and a pair at +1 / -1. Throws if the pair is not
/// placeable symmetrically (cross-ratio condition).
CurveChart symmetric_line_chart(const PointU& at_zero, const PointU& at_inf, const PointU& at_plus_one,
                                const PointU& at_minus_one, const Tolerances& tol = default_tolerances());

/// The conic cut from the quadric Phi2 = 0 by the plane {n . u = 0}, with given
/// points at z=0 and z=inf and an optional third point at z=1.
CurveChart conic_chart(const PointU& at_zero, const PointU& at_inf, const Vec4& plane_form,
                       std::optional<PointU> at_one = std::nullopt, const Tolerances& tol = default_tolerances());

/// Symmetric bilinear form of the quadric: beta(x, y) = x^T R y.
Complex beta(const Vec4& x, const Vec4& y);

/// Linear form on u-space for the x-space plane {l . x = 0}.
Vec4 plane_form_from_x(const Vec5& l);

}  // namespace qflow
