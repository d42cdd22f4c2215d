#pragma once

#include <array>
#include <utility>

#include "qflow/core_geometry.hpp"
#include "qflow/invariants.hpp"
#include "qflow/poly4.hpp"

namespace qflow {

using KParams = KPoint;

/// tau_v with columns Phi_{6-i}(v) phi_i(v), i = 1..4.
struct TauMatrix {
    Mat4 matrix;
    PointU v;
};

/// Throws SingularTau when any of Phi2..Phi5 or Psi10 vanishes at v (relative to |v|).
TauMatrix tau(const PointU& v, const Tolerances& tol = default_tolerances());

struct ValueGrad {
    Complex value{};
    Vec4 gradient{};
    /// R gradient: (d4, d3, d2, d1)
    Vec4 reversed() const { return {gradient[3], gradient[2], gradient[1], gradient[0]}; }
};

using Tensor3 = std::array<std::array<std::array<Complex, 4>, 4>, 4>;

/// Everything that depends on K alone. Immutable once built.
struct ParamPolys {
    KParams K{};
    Poly4 phi2K, phi3K, gammaK;
    Complex tK{};
    Mat4 TK, TKinv;
    Mat4 hess_phi2K;   ///< constant Hessian of Phi2K
    Tensor3 d3_phi3K;  ///< constant third derivatives of Phi3K
};

/// Throws DegenerateK when det T_K is negligible relative to its entries.
ParamPolys build_param_polys(const KParams& K);

/// The matrix T_K alone (5/48 times the integer-coefficient display).
Mat4 T_matrix(const KParams& K);
/// t_K from its own coefficient table.
Complex t_value(const KParams& K);

/// Phi4K = (162 Phi2K^2 - 5 G4K)/324, Phi5K = (720 Phi2K Phi3K + G5K)/864, with
/// G4K = det Hess(Phi3K)/t_K and G5K = det(Hess(Phi3K) bordered by grad Phi2K)/t_K.
std::pair<ValueGrad, ValueGrad> phi45K_value_grad(const ParamPolys& pp, const Vec4& w);

ValueGrad phi2K_value_grad(const ParamPolys& pp, const Vec4& w);
ValueGrad phi3K_value_grad(const ParamPolys& pp, const Vec4& w);

/// The parametrized 6-map before normalization; conjugate to phi6 through tau_v.
Vec4 phiK_raw(const ParamPolys& pp, const Vec4& w);
/// Normalized image; throws Indeterminate when the image vanishes.
PointU phiK(const ParamPolys& pp, const PointU& w, const Tolerances& tol = default_tolerances());

/// J_K(w) = Gamma_K(w) / (15 Phi2K(w)). Throws OnQuadricK near Phi2K = 0.
Complex root_selector_J(const ParamPolys& pp, const Vec4& w, double rel_tol = 1e-12);

/// L_k(v) = -5 sqrt5 x_k, k = 1..5 (index 0..4).
std::array<Complex, 5> L_forms(const PointU& v);
/// S_k(v) = Phi2(v) L_k(v) / Phi3(v).
std::array<Complex, 5> S_values(const PointU& v);
/// The quadratic orbit Q_k(u) = 20 x_k^2 - F2, which also serves as G_k.
std::array<Complex, 5> Q_forms(const PointU& u);
std::array<Complex, 5> G_forms(const PointU& u);
/// Gamma_v(w) = sum_k G_k(tau_v w) L_k(v).
Complex gamma_v(const TauMatrix& t, const Vec4& w);

/// The five points tau_v^{-1} u(p5_l), the fixed points of phi_K for K = K(v).
std::array<PointU, 5> conjugated_five_points(const TauMatrix& t);

}  // namespace qflow
