#include "qflow/invariants.hpp"

namespace qflow {

namespace {

std::vector<Monomial4> terms(std::initializer_list<std::pair<double, std::array<int, 4>>> list) {
    std::vector<Monomial4> out;
    for (const auto& [c, e] : list) out.push_back({c, e});
    return out;
}

const std::array<Poly4, 4>& phi_tables() {
    static const std::array<Poly4, 4> tables = [] {
        Poly4 p2(terms({{2, {1, 0, 0, 1}}, {2, {0, 1, 1, 0}}}));
        Poly4 p3(terms({{1, {2, 0, 1, 0}}, {1, {1, 2, 0, 0}}, {1, {0, 1, 0, 2}}, {1, {0, 0, 2, 1}}}), 3.0 / kSqrt5);
        Poly4 p4(terms({{4, {3, 1, 0, 0}},
                        {6, {2, 0, 0, 2}},
                        {24, {1, 1, 1, 1}},
                        {4, {1, 0, 3, 0}},
                        {4, {0, 3, 0, 1}},
                        {6, {0, 2, 2, 0}},
                        {4, {0, 0, 1, 3}}}),
                 1.0 / 5.0);
        Poly4 p5(terms({{1, {5, 0, 0, 0}},
                        {20, {3, 0, 1, 1}},
                        {30, {2, 2, 0, 1}},
                        {30, {2, 1, 2, 0}},
                        {20, {1, 3, 1, 0}},
                        {20, {1, 1, 0, 3}},
                        {30, {1, 0, 2, 2}},
                        {1, {0, 5, 0, 0}},
                        {30, {0, 2, 1, 2}},
                        {20, {0, 1, 3, 1}},
                        {1, {0, 0, 5, 0}},
                        {1, {0, 0, 0, 5}}}),
                 1.0 / (5.0 * kSqrt5));
        return std::array<Poly4, 4>{p2, p3, p4, p5};
    }();
    return tables;
}

Complex vandermonde(const Vec5& x) {
    Complex p = 1.0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) p *= x[i] - x[j];
    return p;
}

}  // namespace

Complex power_sum(const PointX& p, int k) {
    if (k < 1 || k > 12) throw Error(ErrorCode::InvalidInput, "power sum degree out of range");
    return power_sum_raw(p.c, k);
}

const Poly4& phi_poly(int k) {
    if (k < 2 || k > 5) throw Error(ErrorCode::InvalidInput, "invariant degree must be 2..5");
    return phi_tables()[k - 2];
}

Complex phi(const PointU& p, int k) { return phi_poly(k).eval(p.c); }

InvariantValues invariant_values(const PointU& p) {
    return {phi(p, 2), phi(p, 3), phi(p, 4), phi(p, 5)};
}

Complex hessian_form_G4(const PointU& p) { return phi_poly(3).hessian(p.c).det(); }

Complex det5(const std::array<std::array<Complex, 5>, 5>& m) {
    Complex s = 0;
    for (int c = 0; c < 5; ++c) {
        if (m[4][c] == 0.0) continue;
        Mat4 minor;
        for (int i = 0; i < 4; ++i)
            for (int j = 0, jj = 0; j < 5; ++j)
                if (j != c) minor(i, jj++) = m[i][j];
        Complex cof = minor.det();
        s += ((4 + c) % 2 == 0 ? 1.0 : -1.0) * m[4][c] * cof;
    }
    return s;
}

std::array<std::array<Complex, 5>, 5> adjugate5(const std::array<std::array<Complex, 5>, 5>& m) {
    std::array<std::array<Complex, 5>, 5> adj{};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            Mat4 minor;
            for (int i = 0, ii = 0; i < 5; ++i) {
                if (i == r) continue;
                for (int j = 0, jj = 0; j < 5; ++j)
                    if (j != c) minor(ii, jj++) = m[i][j];
                ++ii;
            }
            adj[c][r] = ((r + c) % 2 == 0 ? 1.0 : -1.0) * minor.det();
        }
    return adj;
}

Complex bordered_form_G5(const PointU& p) {
    Mat4 h = phi_poly(3).hessian(p.c);
    Vec4 g = phi_poly(2).gradient(p.c);
    std::array<std::array<Complex, 5>, 5> b{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) b[i][j] = h(i, j);
        b[i][4] = g[i];
        b[4][i] = g[i];
    }
    return det5(b);
}

namespace {

// det[phi1 | phi2 | phi3 | phi4] with phi_k = -5/(k+1) reversed gradient of Phi_{k+1}.
Complex basic_equivariant_det(const Vec4& u) {
    std::array<Vec4, 4> cols;
    for (int k = 1; k <= 4; ++k) {
        Vec4 g = phi_poly(k + 1).reversed_gradient(u);
        for (auto& c : g) c *= -5.0 / (k + 1);
        cols[k - 1] = g;
    }
    return Mat4::from_columns(cols).det();
}

}  // namespace

Complex psi10_constant() {
    static const Complex c = [] {
        Vec5 x{Complex(1.0, 0.2), Complex(-0.4, 0.9), Complex(0.3, -0.7), Complex(-1.1, 0.1), Complex(0, 0)};
        x[4] = -(x[0] + x[1] + x[2] + x[3]);
        Vec4 u = x_to_u_raw(x);
        return basic_equivariant_det(u) / vandermonde(u_to_x_raw(u));
    }();
    return c;
}

Complex psi10(const PointU& p) { return psi10_constant() * vandermonde(u_to_x_raw(p.c)); }

KPoint k_values(const PointU& p, const Tolerances& tol) {
    double n = norm(p.c);
    InvariantValues v = invariant_values(p);
    if (std::abs(v.phi2) < tol.degeneracy * n * n) throw Error(ErrorCode::OnQuadric, "Phi2 vanishes");
    if (std::abs(v.phi3) < tol.degeneracy * n * n * n) throw Error(ErrorCode::OnCubic, "Phi3 vanishes");
    return {v.phi4 / (v.phi2 * v.phi2), v.phi3 * v.phi3 / (v.phi2 * v.phi2 * v.phi2), v.phi5 / (v.phi2 * v.phi3)};
}

}  // namespace qflow
