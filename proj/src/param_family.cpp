#include "qflow/param_family.hpp"

#include <cmath>

#include "qflow/equivariants.hpp"
#include "qflow/param_tables.hpp"

namespace qflow {

namespace {

Complex ipow(Complex z, int e) {
    Complex r = 1.0;
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

Complex k_monomial(const KParams& K, const std::array<int, 3>& e) {
    return ipow(K.k1, e[0]) * ipow(K.k2, e[1]) * ipow(K.k3, e[2]);
}

template <std::size_t N>
Poly4 table_poly(const std::array<tables::KTerm, N>& table, const KParams& K, Complex scale) {
    std::vector<Monomial4> terms;
    terms.reserve(N);
    for (const auto& t : table) terms.push_back({t.coef * k_monomial(K, t.k), t.w});
    return Poly4(std::move(terms), scale);
}

using Mat5 = std::array<std::array<Complex, 5>, 5>;

Complex trace_product(const Mat4& a, const Mat4& b) {
    Complex s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += a(i, j) * b(j, i);
    return s;
}

Complex trace_product(const Mat5& a, const Mat5& b) {
    Complex s = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) s += a[i][j] * b[j][i];
    return s;
}

Mat4 slice(const Tensor3& t, int c) {
    Mat4 m;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m(a, b) = t[a][b][c];
    return m;
}

Mat5 bordered(const Mat4& h, const Vec4& g) {
    Mat5 b{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) b[i][j] = h(i, j);
        b[i][4] = g[i];
        b[4][i] = g[i];
    }
    return b;
}

}  // namespace

TauMatrix tau(const PointU& v, const Tolerances& tol) {
    PointU n = normalize(v);
    double r = norm(n.c);
    InvariantValues iv = invariant_values(n);
    const Complex vals[4] = {iv.phi2, iv.phi3, iv.phi4, iv.phi5};
    for (int k = 0; k < 4; ++k)
        if (std::abs(vals[k]) < tol.degeneracy * std::pow(r, k + 2))
            throw Error(ErrorCode::SingularTau, "Phi" + std::to_string(k + 2) + " vanishes at v");
    if (std::abs(psi10(n)) < tol.degeneracy * std::abs(psi10_constant()) * std::pow(r, 10))
        throw Error(ErrorCode::SingularTau, "Psi10 vanishes at v");
    // column i carries Phi_{6-i} phi_i; the representative v is used as given
    InvariantValues raw = invariant_values(v);
    const Complex weight[4] = {raw.phi5, raw.phi4, raw.phi3, raw.phi2};
    std::array<Vec4, 4> cols;
    for (int i = 0; i < 4; ++i) {
        cols[i] = phi_basic_raw(v.c, i + 1);
        for (auto& c : cols[i]) c *= weight[i];
    }
    return {Mat4::from_columns(cols), v};
}

Mat4 T_matrix(const KParams& K) {
    const Complex k1 = K.k1, k2 = K.k2, k3 = K.k3;
    const Complex a = 240.0 * k2 * k3 * k3;
    const Complex b = 240.0 * k1 * k2 * k3;
    const Complex c = 2.0 * k1 * (-15.0 + 66.0 * k1 + 40.0 * k2);
    const Complex d = 2.0 * k2 * (-35.0 + 46.0 * k1 + 84.0 * k3);
    Mat4 m;
    m(0, 0) = a;
    m(0, 1) = c;
    m(0, 2) = d;
    m(0, 3) = -15.0 + 60.0 * k1 + 12.0 * k1 * k1 + 128.0 * k2 * k3;
    m(1, 0) = b;
    m(1, 1) = 48.0 * k1 * k2 * (-1.0 + 5.0 * k3);
    m(1, 2) = 2.0 * k2 * (-15.0 + 90.0 * k1 + 16.0 * k2);
    m(1, 3) = d;
    m(2, 0) = b;
    m(2, 1) = 48.0 * k1 * k1 * (-1.0 + 5.0 * k1);
    m(2, 2) = 48.0 * k1 * k2 * (-1.0 + 5.0 * k3);
    m(2, 3) = c;
    m(3, 0) = a;
    m(3, 1) = b;
    m(3, 2) = b;
    m(3, 3) = a;
    return m * Complex(5.0 / 48.0);
}

Complex t_value(const KParams& K) {
    Complex s = 0;
    for (const auto& t : tables::kTK) s += t.coef * k_monomial(K, t.k);
    return -3125.0 * K.k1 * K.k1 * K.k2 * K.k2 * K.k3 * K.k3 / 13824.0 * s;
}

ParamPolys build_param_polys(const KParams& K) {
    ParamPolys pp;
    pp.K = K;
    pp.phi2K = table_poly(tables::kPhi2K, K, 5.0 / 48.0);
    pp.phi3K = table_poly(tables::kPhi3K, K, 5.0 / 1728.0);
    pp.gammaK = table_poly(tables::kGammaK, K, -125.0 * kSqrt5 / 36.0);
    pp.TK = T_matrix(K);
    pp.tK = t_value(K);
    try {
        pp.TKinv = pp.TK.inverse(1e-14);
    } catch (const Error&) {
        throw Error(ErrorCode::DegenerateK, "det T_K vanishes");
    }
    if (!(std::abs(pp.tK) > 0.0)) throw Error(ErrorCode::DegenerateK, "t_K vanishes");
    pp.hess_phi2K = pp.phi2K.hessian(Vec4{});
    for (int c = 0; c < 4; ++c) {
        Vec4 e{};
        e[c] = 1.0;
        Mat4 h = pp.phi3K.hessian(e);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) pp.d3_phi3K[a][b][c] = h(a, b);
    }
    return pp;
}

ValueGrad phi2K_value_grad(const ParamPolys& pp, const Vec4& w) {
    return {pp.phi2K.eval(w), pp.hess_phi2K * w};
}

ValueGrad phi3K_value_grad(const ParamPolys& pp, const Vec4& w) {
    return {pp.phi3K.eval(w), pp.phi3K.gradient(w)};
}

std::pair<ValueGrad, ValueGrad> phi45K_value_grad(const ParamPolys& pp, const Vec4& w) {
    Mat4 h;
    for (int c = 0; c < 4; ++c) h = h + slice(pp.d3_phi3K, c) * w[c];
    ValueGrad p2 = phi2K_value_grad(pp, w);
    ValueGrad p3 = phi3K_value_grad(pp, w);

    // d det(A) = tr(adj(A) dA); the Hessian and the border are linear in w
    Mat4 adj = h.adjugate();
    Complex g4 = h.det() / pp.tK;
    Vec4 dg4;
    for (int c = 0; c < 4; ++c) dg4[c] = trace_product(adj, slice(pp.d3_phi3K, c)) / pp.tK;

    Mat5 b = bordered(h, p2.gradient);
    Mat5 adj5 = adjugate5(b);
    Complex g5 = det5(b) / pp.tK;
    Vec4 dg5;
    for (int c = 0; c < 4; ++c) {
        Mat5 db = bordered(slice(pp.d3_phi3K, c), pp.hess_phi2K.column(c));
        dg5[c] = trace_product(adj5, db) / pp.tK;
    }

    ValueGrad p4, p5;
    p4.value = (162.0 * p2.value * p2.value - 5.0 * g4) / 324.0;
    p5.value = (720.0 * p2.value * p3.value + g5) / 864.0;
    for (int c = 0; c < 4; ++c) {
        p4.gradient[c] = (324.0 * p2.value * p2.gradient[c] - 5.0 * dg4[c]) / 324.0;
        p5.gradient[c] = (720.0 * (p2.gradient[c] * p3.value + p2.value * p3.gradient[c]) + dg5[c]) / 864.0;
    }
    return {p4, p5};
}

Vec4 phiK_raw(const ParamPolys& pp, const Vec4& w) {
    ValueGrad p2 = phi2K_value_grad(pp, w);
    ValueGrad p3 = phi3K_value_grad(pp, w);
    auto [p4, p5] = phi45K_value_grad(pp, w);
    const double s = 1.0 / (2.0 * kSqrt5);
    // phi_l = -5/(l+1) reversed gradient of Phi_{l+1}
    Complex c1 = 2.0 * (9.0 * p2.value * p3.value - 10.0 * p5.value) * (-5.0 / 2.0) * s;
    Complex c2 = -2.0 * (p2.value * p2.value - 5.0 * p4.value) * (-5.0 / 3.0) * s;
    Complex c3 = 20.0 * p3.value * (-5.0 / 4.0) * s;
    Complex c4 = 15.0 * p2.value * (-1.0) * s;
    Vec4 g2 = p2.reversed(), g3 = p3.reversed(), g4 = p4.reversed(), g5 = p5.reversed();
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = c1 * g2[i] + c2 * g3[i] + c3 * g4[i] + c4 * g5[i];
    return pp.TKinv * r;
}

PointU phiK(const ParamPolys& pp, const PointU& w, const Tolerances& tol) {
    PointU n = normalize(w);
    Vec4 r = phiK_raw(pp, n.c);
    if (!(norm(r) > tol.indeterminate)) throw Error(ErrorCode::Indeterminate, "phi_K image vanishes");
    return normalize(PointU{r});
}

Complex root_selector_J(const ParamPolys& pp, const Vec4& w, double rel_tol) {
    double scale = 0;
    for (const auto& t : pp.phi2K.terms()) scale = std::max(scale, std::abs(t.coef));
    double n = norm(w);
    Complex p2 = pp.phi2K.eval(w);
    if (!(std::abs(p2) > rel_tol * scale * n * n)) throw Error(ErrorCode::OnQuadricK, "Phi2K vanishes at w");
    return pp.gammaK.eval(w) / (15.0 * p2);
}

std::array<Complex, 5> L_forms(const PointU& v) {
    Vec5 x = u_to_x_raw(v.c);
    std::array<Complex, 5> l;
    for (int k = 0; k < 5; ++k) l[k] = -5.0 * kSqrt5 * x[k];
    return l;
}

std::array<Complex, 5> S_values(const PointU& v) {
    Complex r = phi(v, 2) / phi(v, 3);
    auto l = L_forms(v);
    for (auto& s : l) s *= r;
    return l;
}

std::array<Complex, 5> Q_forms(const PointU& u) {
    Vec5 x = u_to_x_raw(u.c);
    Complex f2 = phi(u, 2);
    std::array<Complex, 5> q;
    for (int k = 0; k < 5; ++k) q[k] = 20.0 * x[k] * x[k] - f2;
    return q;
}

std::array<Complex, 5> G_forms(const PointU& u) { return Q_forms(u); }

Complex gamma_v(const TauMatrix& t, const Vec4& w) {
    auto g = G_forms(PointU{t.matrix * w});
    auto l = L_forms(t.v);
    Complex s = 0;
    for (int k = 0; k < 5; ++k) s += g[k] * l[k];
    return s;
}

std::array<PointU, 5> conjugated_five_points(const TauMatrix& t) {
    Mat4 inv = t.matrix.inverse(1e-300);
    std::array<PointU, 5> out;
    for (int l = 0; l < 5; ++l) {
        Vec5 x;
        for (int j = 0; j < 5; ++j) x[j] = j == l ? -4.0 : 1.0;
        out[l] = normalize(PointU{inv * x_to_u_raw(x)});
    }
    return out;
}

}  // namespace qflow
