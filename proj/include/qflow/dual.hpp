#pragma once

#include <array>
#include <complex>

namespace qflow {

/// Forward-mode dual number over the complex field with N tangent directions.
template <int N>
struct Dual {
    std::complex<double> v{};
    std::array<std::complex<double>, N> d{};

    Dual() = default;
    Dual(std::complex<double> value) : v(value) {}  // NOLINT: implicit lift of constants
    Dual(double value) : v(value) {}                // NOLINT

    static Dual variable(std::complex<double> value, int index) {
        Dual r(value);
        r.d[index] = 1.0;
        return r;
    }

    Dual& operator+=(const Dual& o) {
        v += o.v;
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        v -= o.v;
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
        v *= o.v;
        return *this;
    }
    Dual& operator/=(const Dual& o) {
        std::complex<double> inv = 1.0 / o.v;
        for (int i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
        v *= inv;
        return *this;
    }
};

template <int N> Dual<N> operator+(Dual<N> a, const Dual<N>& b) { return a += b; }
template <int N> Dual<N> operator-(Dual<N> a, const Dual<N>& b) { return a -= b; }
template <int N> Dual<N> operator*(Dual<N> a, const Dual<N>& b) { return a *= b; }
template <int N> Dual<N> operator/(Dual<N> a, const Dual<N>& b) { return a /= b; }
template <int N> Dual<N> operator-(Dual<N> a) {
    a.v = -a.v;
    for (auto& x : a.d) x = -x;
    return a;
}

template <int N> Dual<N> operator*(Dual<N> a, std::complex<double> s) {
    a.v *= s;
    for (auto& x : a.d) x *= s;
    return a;
}
template <int N> Dual<N> operator*(std::complex<double> s, Dual<N> a) { return a * s; }
template <int N> Dual<N> operator*(Dual<N> a, double s) { return a * std::complex<double>(s); }
template <int N> Dual<N> operator*(double s, Dual<N> a) { return a * std::complex<double>(s); }
template <int N> Dual<N> operator+(Dual<N> a, std::complex<double> s) {
    a.v += s;
    return a;
}
template <int N> Dual<N> operator+(std::complex<double> s, Dual<N> a) { return a + s; }
template <int N> Dual<N> operator-(Dual<N> a, std::complex<double> s) {
    a.v -= s;
    return a;
}
template <int N> Dual<N> operator-(std::complex<double> s, const Dual<N>& a) { return Dual<N>(s) - a; }

using Dual4 = Dual<4>;
using Dual1 = Dual<1>;

}  // namespace qflow
