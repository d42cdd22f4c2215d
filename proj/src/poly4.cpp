#include "qflow/poly4.hpp"

namespace qflow {

namespace {

std::vector<Monomial4> differentiate(const std::vector<Monomial4>& terms, int var) {
    std::vector<Monomial4> out;
    for (const auto& t : terms) {
        if (t.e[var] == 0) continue;
        Monomial4 d = t;
        d.coef *= static_cast<double>(t.e[var]);
        d.e[var] -= 1;
        out.push_back(d);
    }
    return out;
}

}  // namespace

Poly4::Poly4(std::vector<Monomial4> terms, Complex scale) {
    degree_ = -1;
    for (auto& t : terms) {
        t.coef *= scale;
        int d = t.e[0] + t.e[1] + t.e[2] + t.e[3];
        if (degree_ < 0) degree_ = d;
        if (d != degree_) throw Error(ErrorCode::InvalidInput, "polynomial is not homogeneous");
        if (t.coef != 0.0) terms_.push_back(t);
    }
    if (degree_ < 0) degree_ = 0;
    if (degree_ > kMaxDegree) throw Error(ErrorCode::InvalidInput, "polynomial degree too large");
    for (int i = 0; i < 4; ++i) {
        grad_[i] = differentiate(terms_, i);
        for (int j = 0; j < 4; ++j) hess_[i][j] = differentiate(grad_[i], j);
    }
}

Vec4 Poly4::gradient(const Vec4& u) const { return gradient_t(u); }

Vec4 Poly4::reversed_gradient(const Vec4& u) const {
    Vec4 g = gradient(u);
    return {g[3], g[2], g[1], g[0]};
}

Mat4 Poly4::hessian(const Vec4& u) const {
    Mat4 h;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Complex v = degree_ >= 2 ? eval_terms(hess_[i][j], u, degree_ - 2) : Complex(0.0);
            h(i, j) = v;
            h(j, i) = v;
        }
    return h;
}

}  // namespace qflow
