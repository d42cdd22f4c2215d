#include "qflow/univariate.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace qflow::univariate {

namespace {

struct Split {
    double v, e;
};

Split two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

Split two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

struct CSplit {
    Complex v, e;
};

CSplit two_sum(Complex a, Complex b) {
    Split r = two_sum(a.real(), b.real()), i = two_sum(a.imag(), b.imag());
    return {{r.v, i.v}, {r.e, i.e}};
}

CSplit two_prod(Complex a, Complex b) {
    Split p1 = two_prod(a.real(), b.real()), p2 = two_prod(a.imag(), b.imag());
    Split p3 = two_prod(a.real(), b.imag()), p4 = two_prod(a.imag(), b.real());
    Split re = two_sum(p1.v, -p2.v), im = two_sum(p3.v, p4.v);
    return {{re.v, im.v}, {p1.e - p2.e + re.e, p3.e + p4.e + im.e}};
}

std::vector<Complex> trimmed(const std::vector<Complex>& c) {
    std::vector<Complex> r = c;
    while (r.size() > 1 && r.back() == 0.0) r.pop_back();
    return r;
}

}  // namespace

Complex eval(const std::vector<Complex>& c, Complex x) {
    Complex s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

Complex eval_compensated(const std::vector<Complex>& c, Complex x) {
    if (c.empty()) return 0.0;
    Complex s = c.back(), err = 0;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        CSplit p = two_prod(s, x);
        CSplit t = two_sum(p.v, c[k]);
        s = t.v;
        err = err * x + (p.e + t.e);
    }
    return s + err;
}

std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex x) {
    Complex p = 0, d = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * x + p;
        p = p * x + *it;
    }
    return {p, d};
}

std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Complex> from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> r{1.0};
    for (const auto& z : roots) r = multiply(r, {-z, 1.0});
    return r;
}

std::vector<Complex> deflate(const std::vector<Complex>& c, Complex r) {
    int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};
    std::vector<Complex> q(n);
    Complex carry = c[n];
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = c[k] + carry * r;
    }
    return q;
}

Complex newton_polish(const std::vector<Complex>& c, Complex x, int max_steps) {
    double last = std::numeric_limits<double>::infinity();
    for (int i = 0; i < max_steps; ++i) {
        Complex p = eval_compensated(c, x);
        Complex d = eval_with_derivative(c, x).second;
        if (p == 0.0 || d == 0.0) break;
        Complex step = p / d;
        double a = std::abs(step);
        if (!(a < last) && i > 0) break;
        x -= step;
        last = a;
        if (a <= 1e-17 * std::abs(x)) break;
    }
    return x;
}

std::vector<Complex> solve_quadratic(Complex a, Complex b, Complex c) {
    if (a == 0.0) {
        if (b == 0.0) return {};
        return {-c / b};
    }
    Complex d = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that avoids cancellation
    Complex q = std::real(std::conj(b) * d) >= 0 ? -0.5 * (b + d) : -0.5 * (b - d);
    if (q == 0.0) return {0.0, 0.0};
    return {q / a, c / q};
}

std::vector<Complex> solve_cubic(Complex a, Complex b, Complex c, Complex d) {
    if (a == 0.0) return solve_quadratic(b, c, d);
    b /= a;
    c /= a;
    d /= a;
    // x = t - b/3: t^3 + p t + q
    Complex s = b / 3.0;
    Complex p = c - b * s;
    Complex q = 2.0 * s * s * s - s * c + d;
    Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = std::abs(-q / 2.0 + disc) >= std::abs(-q / 2.0 - disc) ? -q / 2.0 + disc : -q / 2.0 - disc;
    std::vector<Complex> out;
    if (u3 == 0.0) {
        for (int k = 0; k < 3; ++k) out.push_back(-s);
        return out;
    }
    Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex w(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
        out.push_back(u - p / (3.0 * u) - s);
        u *= w;
    }
    return out;
}

std::vector<Complex> solve_quartic(Complex a, Complex b, Complex c, Complex d, Complex e) {
    if (a == 0.0) return solve_cubic(b, c, d, e);
    b /= a;
    c /= a;
    d /= a;
    e /= a;
    // x = y - b/4: y^4 + p y^2 + q y + r
    Complex s = b / 4.0;
    Complex p = c - 6.0 * s * s;
    Complex q = d - 2.0 * c * s + 8.0 * s * s * s;
    Complex r = e - d * s + c * s * s - 3.0 * s * s * s * s;
    std::vector<Complex> ys;
    double scale = std::max({std::abs(p), std::sqrt(std::abs(r)), 1e-300});
    if (std::abs(q) <= 1e-14 * std::pow(scale, 1.5)) {
        for (Complex z : solve_quadratic(1.0, p, r)) {
            Complex t = std::sqrt(z);
            ys.push_back(t);
            ys.push_back(-t);
        }
    } else {
        // (y^2 + p/2 + m)^2 = 2m (y - q/(4m))^2 with m a root of the resolvent cubic
        auto ms = solve_cubic(1.0, p, p * p / 4.0 - r, -q * q / 8.0);
        Complex m = ms[0];
        for (Complex z : ms)
            if (std::abs(z) > std::abs(m)) m = z;
        Complex t = std::sqrt(2.0 * m);
        Complex k = q / (4.0 * m);
        for (Complex sg : {Complex(1.0), Complex(-1.0)})
            for (Complex z : solve_quadratic(1.0, -sg * t, p / 2.0 + m + sg * t * k)) ys.push_back(z);
    }
    for (auto& y : ys) y -= s;
    return ys;
}

std::vector<Complex> closed_form_roots(const std::vector<Complex>& c) {
    auto t = trimmed(c);
    switch (t.size()) {
        case 2: return {-t[0] / t[1]};
        case 3: return solve_quadratic(t[2], t[1], t[0]);
        case 4: return solve_cubic(t[3], t[2], t[1], t[0]);
        case 5: return solve_quartic(t[4], t[3], t[2], t[1], t[0]);
        default: throw Error(ErrorCode::InvalidInput, "closed form needs degree 1..4");
    }
}

std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
    auto t = trimmed(c);
    int n = static_cast<int>(t.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -t[i] / t[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

double match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<bool> used(b.size(), false);
    double worst = 0;
    for (const auto& x : a) {
        int best = -1;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && (best < 0 || std::abs(b[j] - x) < std::abs(b[best] - x))) best = static_cast<int>(j);
        if (best < 0) return std::numeric_limits<double>::infinity();
        used[best] = true;
        worst = std::max(worst, std::abs(b[best] - x));
    }
    return worst;
}

}  // namespace qflow::univariate
