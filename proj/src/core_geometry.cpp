#include "qflow/core_geometry.hpp"

#include <string>

namespace qflow {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::AnchorsNotCollinear: return "AnchorsNotCollinear";
        case ErrorCode::AnchorsCoincide: return "AnchorsCoincide";
        case ErrorCode::NotOnChart: return "NotOnChart";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::OnQuadric: return "OnQuadric";
        case ErrorCode::OnCubic: return "OnCubic";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::Indeterminate: return "Indeterminate";
        case ErrorCode::NotOnQuadric: return "NotOnQuadric";
        case ErrorCode::RankZero: return "RankZero";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::UnknownDescriptor: return "UnknownDescriptor";
        case ErrorCode::BadIndices: return "BadIndices";
        case ErrorCode::SingularTau: return "SingularTau";
        case ErrorCode::DegenerateK: return "DegenerateK";
        case ErrorCode::SingularHessian: return "SingularHessian";
        case ErrorCode::OnQuadricK: return "OnQuadricK";
        case ErrorCode::DegenerateReduction: return "DegenerateReduction";
        case ErrorCode::RegularizationFailed: return "RegularizationFailed";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::PlaneNotInvariant: return "PlaneNotInvariant";
    }
    return "Unknown";
}

const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

PointX make_point_x(const Vec5& x) {
    Complex s = 0;
    for (const auto& v : x) s += v;
    double n = norm(x);
    if (n < default_tolerances().zero_vector) throw Error(ErrorCode::ZeroVector, "all coordinates vanish");
    if (std::abs(s) > 1e-12 * n) throw Error(ErrorCode::InvalidInput, "coordinates must sum to zero");
    return PointX{x};
}

// ---------------------------------------------------------------- Mat4

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.a_[i][i] = 1.0;
    return m;
}

Mat4 Mat4::reversed_identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.a_[i][3 - i] = 1.0;
    return m;
}

Mat4 Mat4::from_columns(const std::array<Vec4, 4>& cols) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.a_[i][j] = cols[j][i];
    return m;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex s = 0;
            for (int k = 0; k < 4; ++k) s += a_[i][k] * o.a_[k][j];
            r.a_[i][j] = s;
        }
    return r;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = a_[i][j] + o.a_[i][j];
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = a_[i][j] - o.a_[i][j];
    return r;
}

Mat4 Mat4::operator*(Complex s) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = a_[i][j] * s;
    return r;
}

Vec4 Mat4::operator*(const Vec4& v) const {
    Vec4 r{};
    for (int i = 0; i < 4; ++i) r[i] = a_[i][0] * v[0] + a_[i][1] * v[1] + a_[i][2] * v[2] + a_[i][3] * v[3];
    return r;
}

Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = a_[j][i];
    return r;
}

Mat4 Mat4::adjoint() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = std::conj(a_[j][i]);
    return r;
}

Mat4 Mat4::repose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.a_[i][j] = a_[3 - j][3 - i];
    return r;
}

namespace {

Complex det3(const std::array<std::array<Complex, 4>, 4>& a, int r0, int r1, int r2, int c0, int c1, int c2) {
    return a[r0][c0] * (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) -
           a[r0][c1] * (a[r1][c0] * a[r2][c2] - a[r1][c2] * a[r2][c0]) +
           a[r0][c2] * (a[r1][c0] * a[r2][c1] - a[r1][c1] * a[r2][c0]);
}

}  // namespace

Complex Mat4::det() const {
    // Laplace expansion along the first two rows.
    const auto& a = a_;
    auto m2 = [&](int r0, int r1, int c0, int c1) { return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]; };
    return m2(0, 1, 0, 1) * m2(2, 3, 2, 3) - m2(0, 1, 0, 2) * m2(2, 3, 1, 3) + m2(0, 1, 0, 3) * m2(2, 3, 1, 2) +
           m2(0, 1, 1, 2) * m2(2, 3, 0, 3) - m2(0, 1, 1, 3) * m2(2, 3, 0, 2) + m2(0, 1, 2, 3) * m2(2, 3, 0, 1);
}

Mat4 Mat4::adjugate() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int rows[3], cols[3];
            for (int k = 0, n = 0; k < 4; ++k)
                if (k != j) rows[n++] = k;
            for (int k = 0, n = 0; k < 4; ++k)
                if (k != i) cols[n++] = k;
            Complex c = det3(a_, rows[0], rows[1], rows[2], cols[0], cols[1], cols[2]);
            r.a_[i][j] = ((i + j) % 2 == 0) ? c : -c;
        }
    return r;
}

Mat4 Mat4::inverse(double rel_tol) const {
    Complex d = det();
    double s = max_abs();
    if (!(std::abs(d) > rel_tol * s * s * s * s)) throw Error(ErrorCode::Degenerate, "matrix is singular");
    return adjugate() * (1.0 / d);
}

double Mat4::max_abs() const {
    double m = 0;
    for (const auto& row : a_)
        for (const auto& v : row) m = std::max(m, std::abs(v));
    return m;
}

Vec4 Mat4::column(int j) const { return {a_[0][j], a_[1][j], a_[2][j], a_[3][j]}; }

double norm(const Vec4& v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

double norm(const Vec5& v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

Complex dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------- coordinates

const std::array<std::array<Complex, 5>, 4>& hyperplane_matrix() {
    static const auto h = [] {
        std::array<std::array<Complex, 5>, 4> m{};
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 5; ++j) m[k][j] = std::polar(1.0 / kSqrt5, 2.0 * kPi * ((k + 1) * j % 5) / 5.0);
        return m;
    }();
    return h;
}

PointU x_to_u(const PointX& p) { return PointU{x_to_u_raw(p.c)}; }
PointX u_to_x(const PointU& p) { return PointX{u_to_x_raw(p.c)}; }

namespace {

template <std::size_t N>
std::array<Complex, N> normalize_array(const std::array<Complex, N>& v) {
    const auto& tol = default_tolerances();
    double m = 0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    if (!(m >= tol.zero_vector)) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < N; ++i)
        if (std::abs(v[i]) >= m * (1.0 - tol.tie_break)) {
            idx = i;
            break;
        }
    Complex s = 1.0 / v[idx];
    std::array<Complex, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = v[i] * s;
    r[idx] = 1.0;
    return r;
}

}  // namespace

PointU normalize(const PointU& p) { return PointU{normalize_array(p.c)}; }
PointX normalize(const PointX& p) { return PointX{normalize_array(p.c)}; }

double chordal_distance(const PointU& p, const PointU& q) { return chordal_distance(p.c, q.c); }
double chordal_distance(const PointX& p, const PointX& q) { return chordal_distance(p.c, q.c); }

// ---------------------------------------------------------------- charts

ChartValue ChartValue::from_homogeneous(Complex z0, Complex z1) {
    if (z0 == 0.0 && z1 == 0.0) throw Error(ErrorCode::ZeroVector, "homogeneous pair [0:0]");
    if (std::abs(z0) <= 1e-15 * std::abs(z1)) return infinity();
    return at(z1 / z0);
}

std::array<Complex, 2> ChartValue::homogeneous() const {
    if (infinite) return {0.0, 1.0};
    return {1.0, z};
}

double chordal_distance(const ChartValue& a, const ChartValue& b) {
    return chordal_distance(a.homogeneous(), b.homogeneous());
}

Complex beta(const Vec4& x, const Vec4& y) { return x[0] * y[3] + x[1] * y[2] + x[2] * y[1] + x[3] * y[0]; }

Vec4 plane_form_from_x(const Vec5& l) {
    const auto& h = hyperplane_matrix();
    Vec4 n{};
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 5; ++j) n[k] += std::conj(h[k][j]) * l[j];
    return n;
}

namespace {

Complex herm(const Vec4& x, const Vec4& y) {
    Complex s = 0;
    for (int i = 0; i < 4; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

Vec4 axpy(Complex s0, const Vec4& a, Complex s1, const Vec4& b) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i) r[i] = s0 * a[i] + s1 * b[i];
    return r;
}

// Least-squares coefficients of p in span{a, b}; returns relative residual.
double project_line(const Vec4& a, const Vec4& b, const Vec4& p, Complex& alpha, Complex& beta_) {
    Complex g11 = herm(a, a), g12 = herm(a, b), g22 = herm(b, b);
    Complex r1 = herm(a, p), r2 = herm(b, p);
    Complex d = g11 * g22 - g12 * std::conj(g12);
    alpha = (g22 * r1 - g12 * r2) / d;
    beta_ = (g11 * r2 - std::conj(g12) * r1) / d;
    Vec4 fit = axpy(alpha, a, beta_, b);
    Vec4 diff{};
    for (int i = 0; i < 4; ++i) diff[i] = p[i] - fit[i];
    return norm(diff) / norm(p);
}

}  // namespace

Vec4 CurveChart::eval_homogeneous(Complex z0, Complex z1) const {
    Vec4 r{};
    if (degree_ == 1) {
        for (int i = 0; i < 4; ++i) r[i] = z0 * a_[i] + z1 * b_[i];
    } else {
        for (int i = 0; i < 4; ++i) r[i] = z0 * z0 * a_[i] + z0 * z1 * b_[i] + z1 * z1 * c_[i];
    }
    return r;
}

PointU CurveChart::eval(const ChartValue& z) const {
    auto h = z.homogeneous();
    return normalize(PointU{eval_homogeneous(h[0], h[1])});
}

ChartValue CurveChart::invert(const PointU& p, double tol) const {
    ChartValue z;
    if (degree_ == 1) {
        Complex al, be;
        double res = project_line(a_, b_, p.c, al, be);
        if (res > tol) throw Error(ErrorCode::NotOnChart, "point is not on the chart line");
        z = ChartValue::from_homogeneous(al, be);
    } else {
        Complex z0 = beta(p.c, c_) / bac_;
        Complex z1 = beta(p.c, b_) / bbb_;
        z = ChartValue::from_homogeneous(z0, z1);
        if (chordal_distance(eval(z), p) > tol) throw Error(ErrorCode::NotOnChart, "point is not on the chart conic");
    }
    return z;
}

CurveChart CurveChart::rescaled(Complex s) const {
    CurveChart r = *this;
    for (int i = 0; i < 4; ++i) {
        r.b_[i] *= s;
        r.c_[i] *= s * s;
    }
    r.g12_ = herm(r.a_, r.b_);
    r.g22_ = herm(r.b_, r.b_);
    r.bbb_ = beta(r.b_, r.b_);
    r.bac_ = beta(r.a_, r.c_);
    return r;
}

CurveChart line_chart(const PointU& at_zero, const PointU& at_inf, std::optional<PointU> at_one,
                      const Tolerances& tol) {
    if (chordal_distance(at_zero, at_inf) < tol.dedup) throw Error(ErrorCode::AnchorsCoincide, "0 and inf anchors coincide");
    CurveChart c;
    c.degree_ = 1;
    c.a_ = at_zero.c;
    c.b_ = at_inf.c;
    if (at_one) {
        if (chordal_distance(*at_one, at_zero) < tol.dedup || chordal_distance(*at_one, at_inf) < tol.dedup)
            throw Error(ErrorCode::AnchorsCoincide, "unit anchor coincides with 0 or inf");
        Complex al, be;
        if (project_line(c.a_, c.b_, at_one->c, al, be) > tol.on_line)
            throw Error(ErrorCode::AnchorsNotCollinear, "unit anchor is not on the line");
        c = c.rescaled(be / al);
    }
    c.g11_ = herm(c.a_, c.a_);
    c.g12_ = herm(c.a_, c.b_);
    c.g22_ = herm(c.b_, c.b_);
    return c;
}

CurveChart symmetric_line_chart(const PointU& at_zero, const PointU& at_inf, const PointU& at_plus_one,
                                const PointU& at_minus_one, const Tolerances& tol) {
    CurveChart c = line_chart(at_zero, at_inf, at_plus_one, tol);
    Complex al, be;
    if (project_line(c.a_, c.b_, at_minus_one.c, al, be) > tol.on_line)
        throw Error(ErrorCode::AnchorsNotCollinear, "anchor -1 is not on the line");
    if (std::abs(be / al + 1.0) > 1e-8)
        throw Error(ErrorCode::InvalidInput, "anchor pair cannot be placed at +1 and -1");
    return c;
}

CurveChart conic_chart(const PointU& at_zero, const PointU& at_inf, const Vec4& plane_form,
                       std::optional<PointU> at_one, const Tolerances& tol) {
    const Vec4& a = at_zero.c;
    const Vec4& cc = at_inf.c;
    for (const Vec4* p : {&a, &cc}) {
        double n = norm(*p);
        if (std::abs(beta(*p, *p)) > tol.degeneracy * n * n)
            throw Error(ErrorCode::NotOnQuadric, "conic anchor is not on the quadric");
        if (std::abs(dot(plane_form, *p)) > tol.on_line * n * norm(plane_form))
            throw Error(ErrorCode::AnchorsNotCollinear, "conic anchor is not on the plane");
    }
    if (chordal_distance(at_zero, at_inf) < tol.dedup) throw Error(ErrorCode::AnchorsCoincide, "0 and inf anchors coincide");
    // B spans the kernel of the rows n, R a, R c (generalized cross product).
    const Mat4 r = Mat4::reversed_identity();
    Vec4 ra = r * a, rc = r * cc;
    std::array<Vec4, 3> rows{plane_form, ra, rc};
    Vec4 b{};
    for (int col = 0; col < 4; ++col) {
        int cs[3];
        for (int k = 0, n = 0; k < 4; ++k)
            if (k != col) cs[n++] = k;
        Complex m = rows[0][cs[0]] * (rows[1][cs[1]] * rows[2][cs[2]] - rows[1][cs[2]] * rows[2][cs[1]]) -
                    rows[0][cs[1]] * (rows[1][cs[0]] * rows[2][cs[2]] - rows[1][cs[2]] * rows[2][cs[0]]) +
                    rows[0][cs[2]] * (rows[1][cs[0]] * rows[2][cs[1]] - rows[1][cs[1]] * rows[2][cs[0]]);
        b[col] = (col % 2 == 0) ? m : -m;
    }
    Complex bb = beta(b, b);
    Complex ac = beta(a, cc);
    if (std::abs(bb) < 1e-14 * norm(b) * norm(b) || std::abs(ac) < 1e-14 * norm(a) * norm(cc))
        throw Error(ErrorCode::Degenerate, "plane section of the quadric is degenerate");
    Complex s = std::sqrt(-2.0 * ac / bb);
    CurveChart c;
    c.degree_ = 2;
    c.a_ = a;
    c.c_ = cc;
    for (int i = 0; i < 4; ++i) c.b_[i] = s * b[i];
    c.bac_ = ac;
    c.bbb_ = beta(c.b_, c.b_);
    if (at_one) {
        ChartValue z = c.invert(*at_one, tol.on_line * 100);
        if (z.infinite || std::abs(z.z) < 1e-12) throw Error(ErrorCode::AnchorsCoincide, "unit anchor coincides with 0 or inf");
        c = c.rescaled(z.z);
    }
    return c;
}

}  // namespace qflow
