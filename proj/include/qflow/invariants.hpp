#pragma once

#include "qflow/core_geometry.hpp"
#include "qflow/poly4.hpp"

namespace qflow {

struct InvariantValues {
    Complex phi2, phi3, phi4, phi5;
};

struct KPoint {
    Complex k1, k2, k3;
};

/// Sum of x_l^k for the given representative.
template <class T>
T power_sum_raw(const std::array<T, 5>& x, int k) {
    T s(0.0);
    for (const auto& xi : x) {
        T p = xi;
        for (int e = 1; e < k; ++e) p = p * xi;
        s = s + p;
    }
    return s;
}

Complex power_sum(const PointX& p, int k);

/// Phi_k in hyperplane coordinates as an explicit term table, k = 2..5.
const Poly4& phi_poly(int k);

Complex phi(const PointU& p, int k);
InvariantValues invariant_values(const PointU& p);

/// det Hessian(Phi3).
Complex hessian_form_G4(const PointU& p);
/// det of the Hessian of Phi3 bordered by the gradient of Phi2.
Complex bordered_form_G5(const PointU& p);

/// The constant c in Psi10 = c * prod_{i<j} (x_i - x_j).
Complex psi10_constant();
Complex psi10(const PointU& p);

/// K1 = Phi4/Phi2^2, K2 = Phi3^2/Phi2^3, K3 = Phi5/(Phi2 Phi3). Throws OnQuadric / OnCubic.
KPoint k_values(const PointU& p, const Tolerances& tol = default_tolerances());

/// 5x5 determinant by cofactor expansion (small fixed size helper).
Complex det5(const std::array<std::array<Complex, 5>, 5>& m);
/// Adjugate of a 5x5 matrix.
std::array<std::array<Complex, 5>, 5> adjugate5(const std::array<std::array<Complex, 5>, 5>& m);

}  // namespace qflow
