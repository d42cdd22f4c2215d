#pragma once

#include <array>
#include <vector>

#include "qflow/core_geometry.hpp"

namespace qflow {

struct Monomial4 {
    Complex coef;
    std::array<int, 4> e;
};

/// Homogeneous polynomial in four variables, stored as a term table.
/// First and second derivative tables are built once at construction.
class Poly4 {
public:
    static constexpr int kMaxDegree = 12;

    Poly4() = default;
    explicit Poly4(std::vector<Monomial4> terms, Complex scale = 1.0);

    int degree() const { return degree_; }
    const std::vector<Monomial4>& terms() const { return terms_; }

    template <class T>
    T eval(const std::array<T, 4>& u) const {
        return eval_terms(terms_, u, degree_);
    }

    Vec4 gradient(const Vec4& u) const;
    /// R times the gradient: components (d4, d3, d2, d1).
    Vec4 reversed_gradient(const Vec4& u) const;
    Mat4 hessian(const Vec4& u) const;

    template <class T>
    std::array<T, 4> gradient_t(const std::array<T, 4>& u) const {
        std::array<T, 4> g{};
        for (int i = 0; i < 4; ++i) g[i] = eval_terms(grad_[i], u, degree_ - 1);
        return g;
    }

    template <class T>
    static T eval_terms(const std::vector<Monomial4>& terms, const std::array<T, 4>& u, int deg) {
        std::array<std::array<T, kMaxDegree + 1>, 4> pw;
        for (int i = 0; i < 4; ++i) {
            pw[i][0] = T(1.0);
            for (int k = 1; k <= deg; ++k) pw[i][k] = pw[i][k - 1] * u[i];
        }
        T s(0.0);
        for (const auto& t : terms) s = s + ((pw[0][t.e[0]] * pw[1][t.e[1]]) * (pw[2][t.e[2]] * pw[3][t.e[3]])) * t.coef;
        return s;
    }

private:
    std::vector<Monomial4> terms_;
    std::array<std::vector<Monomial4>, 4> grad_;
    std::array<std::array<std::vector<Monomial4>, 4>, 4> hess_;
    int degree_ = 0;
};

}  // namespace qflow
