#include "qflow/equivariants.hpp"

#include <map>

#include "qflow/rng.hpp"

namespace qflow {

namespace {

std::vector<Monomial4> parse_terms(std::initializer_list<std::pair<double, std::array<int, 4>>> list) {
    std::vector<Monomial4> out;
    for (const auto& [c, e] : list) out.push_back({c, e});
    return out;
}

template <std::size_t N>
std::array<Complex, N> checked_normalize(const std::array<Complex, N>& img, const Tolerances& tol, const char* what) {
    double m = 0;
    for (const auto& c : img) m = std::max(m, std::abs(c));
    if (!(m >= tol.indeterminate)) throw Error(ErrorCode::Indeterminate, what);
    std::array<Complex, N> out{};
    if constexpr (N == 4) {
        out = normalize(PointU{img}).c;
    } else {
        out = normalize(PointX{img}).c;
    }
    return out;
}

}  // namespace

const std::array<Poly4, 4>& phi6_display_polys() {
    static const std::array<Poly4, 4> polys = [] {
        Poly4 a(parse_terms({{2, {6, 0, 0, 0}},   {-4, {1, 5, 0, 0}},   {-74, {2, 3, 1, 0}}, {-46, {3, 1, 2, 0}},
                             {-14, {0, 2, 4, 0}}, {-2, {1, 0, 5, 0}},   {-38, {3, 2, 0, 1}}, {-44, {4, 0, 1, 1}},
                             {-50, {0, 3, 2, 1}}, {-122, {1, 1, 3, 1}}, {-14, {0, 4, 0, 2}}, {-152, {1, 2, 1, 2}},
                             {-68, {2, 0, 2, 2}}, {-72, {2, 1, 0, 3}},  {-22, {0, 0, 3, 3}}, {-29, {0, 1, 1, 4}},
                             {-1, {1, 0, 0, 5}}}));
        Poly4 b(parse_terms({{-2, {5, 1, 0, 0}},  {2, {0, 6, 0, 0}},    {-44, {1, 4, 1, 0}}, {-68, {2, 2, 2, 0}},
                             {-22, {3, 0, 3, 0}}, {-1, {0, 1, 5, 0}},   {-46, {2, 3, 0, 1}}, {-122, {3, 1, 1, 1}},
                             {-72, {0, 2, 3, 1}}, {-29, {1, 0, 4, 1}},  {-14, {4, 0, 0, 2}}, {-38, {0, 3, 1, 2}},
                             {-152, {1, 1, 2, 2}}, {-74, {1, 2, 0, 3}}, {-50, {2, 0, 1, 3}}, {-14, {0, 0, 2, 4}},
                             {-4, {0, 1, 0, 5}}}));
        Poly4 c(parse_terms({{-14, {4, 2, 0, 0}}, {-4, {5, 0, 1, 0}},   {-1, {0, 5, 1, 0}},  {-72, {1, 3, 2, 0}},
                             {-38, {2, 1, 3, 0}}, {2, {0, 0, 6, 0}},    {-29, {1, 4, 0, 1}}, {-152, {2, 2, 1, 1}},
                             {-74, {3, 0, 2, 1}}, {-44, {0, 1, 4, 1}},  {-50, {3, 1, 0, 2}}, {-68, {0, 2, 2, 2}},
                             {-46, {1, 0, 3, 2}}, {-22, {0, 3, 0, 3}},  {-122, {1, 1, 1, 3}}, {-14, {2, 0, 0, 4}},
                             {-2, {0, 0, 1, 5}}}));
        Poly4 d(parse_terms({{-22, {3, 3, 0, 0}}, {-29, {4, 1, 1, 0}},  {-14, {0, 4, 2, 0}}, {-50, {1, 2, 3, 0}},
                             {-14, {2, 0, 4, 0}}, {-1, {5, 0, 0, 1}},   {-2, {0, 5, 0, 1}},  {-122, {1, 3, 1, 1}},
                             {-152, {2, 1, 2, 1}}, {-4, {0, 0, 5, 1}},  {-68, {2, 2, 0, 2}}, {-72, {3, 0, 1, 2}},
                             {-74, {0, 1, 3, 2}}, {-46, {0, 2, 1, 3}},  {-38, {1, 0, 2, 3}}, {-44, {1, 1, 0, 4}},
                             {2, {0, 0, 0, 6}}}));
        return std::array<Poly4, 4>{a, b, c, d};
    }();
    return polys;
}

PointX f_basic(const PointX& p, int k, const Tolerances& tol) {
    if (k < 1 || k > 4) throw Error(ErrorCode::InvalidInput, "basic equivariant index must be 1..4");
    PointX n = normalize(p);
    auto img = f_basic_raw(n.c, k);
    double m = 0;
    for (const auto& c : img) m = std::max(m, std::abs(c));
    if (!(m >= tol.indeterminate)) throw Error(ErrorCode::Degenerate, "basic equivariant image vanishes");
    return normalize(PointX{img});
}

PointU phi_basic(const PointU& p, int k) {
    if (k < 1 || k > 4) throw Error(ErrorCode::InvalidInput, "basic equivariant index must be 1..4");
    return normalize(PointU{phi_basic_raw(normalize(p).c, k)});
}

PointU phi6(const PointU& p, const Tolerances& tol) {
    return PointU{checked_normalize(phi6_raw(normalize(p).c), tol, "phi6 image vanishes")};
}

PointU phi6_display(const PointU& p) {
    return PointU{checked_normalize(phi6_display_raw(normalize(p).c), default_tolerances(), "phi6 image vanishes")};
}

PointX h11(const PointX& p, const Tolerances& tol) {
    return PointX{checked_normalize(h11_raw(normalize(p).c), tol, "h11 image vanishes")};
}

PointX g11(const PointX& p, const G11Alphas& alphas, const Tolerances& tol) {
    return PointX{checked_normalize(g11_raw(normalize(p).c, alphas), tol, "g11 image vanishes")};
}

// ---------------------------------------------------------------- registry

PointU EquivariantMap::apply(const PointU& p, const Tolerances& tol) const {
    return PointU{checked_normalize(eval(normalize(p).c), tol, "map image vanishes")};
}

Mat4 EquivariantMap::jacobian(const Vec4& u) const {
    std::array<Dual4, 4> du;
    for (int i = 0; i < 4; ++i) du[i] = Dual4::variable(u[i], i);
    auto out = eval_dual(du);
    Mat4 j;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) j(r, c) = out[r].d[c];
    return j;
}

namespace {

template <class F>
EquivariantMap make_u_map(std::string name, int degree, F f) {
    EquivariantMap m;
    m.name = std::move(name);
    m.degree = degree;
    m.eval = [f](const Vec4& u) { return f(u); };
    m.eval_dual = [f](const std::array<Dual4, 4>& u) { return f(u); };
    return m;
}

struct PhiBasic {
    int k;
    template <class T>
    std::array<T, 4> operator()(const std::array<T, 4>& u) const {
        return phi_basic_raw(u, k);
    }
};

struct Phi6Combination {
    template <class T>
    std::array<T, 4> operator()(const std::array<T, 4>& u) const {
        return phi6_raw(u);
    }
};

struct Phi6Display {
    template <class T>
    std::array<T, 4> operator()(const std::array<T, 4>& u) const {
        return phi6_display_raw(u);
    }
};

struct H11InU {
    template <class T>
    std::array<T, 4> operator()(const std::array<T, 4>& u) const {
        return x_to_u_raw(h11_raw(u_to_x_raw(u)));
    }
};

struct G11InU {
    G11Alphas alphas;
    template <class T>
    std::array<T, 4> operator()(const std::array<T, 4>& u) const {
        return x_to_u_raw(g11_raw(u_to_x_raw(u), alphas));
    }
};

const std::map<std::string, EquivariantMap>& registry() {
    static const std::map<std::string, EquivariantMap> reg = [] {
        std::map<std::string, EquivariantMap> r;
        for (int k = 1; k <= 4; ++k) r["phi" + std::to_string(k)] = make_u_map("phi" + std::to_string(k), k, PhiBasic{k});
        r["phi6"] = make_u_map("phi6", 6, Phi6Combination{});
        r["phi6_display"] = make_u_map("phi6_display", 6, Phi6Display{});
        r["h11"] = make_u_map("h11", 11, H11InU{});
        for (int k = 1; k <= 4; ++k)
            r["phi" + std::to_string(k)].eval_real_x = [k](const std::array<double, 5>& x) { return f_basic_raw(x, k); };
        r["phi6"].eval_real_x = [](const std::array<double, 5>& x) { return phi6_x_raw(x); };
        r["phi6_display"].eval_real_x = r["phi6"].eval_real_x;
        r["h11"].eval_real_x = [](const std::array<double, 5>& x) { return h11_raw(x); };
        r["g11"] = make_u_map("g11", 11, G11InU{});
        return r;
    }();
    return reg;
}

}  // namespace

const EquivariantMap& equivariant_map(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw Error(ErrorCode::UnknownName, "no equivariant map named '" + name + "'");
    return it->second;
}

std::vector<std::string> equivariant_map_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

EquivariantMap g11_map(const G11Alphas& alphas) { return make_u_map("g11", 11, G11InU{alphas}); }

// ---------------------------------------------------------------- rulings

RulingCoords ruling_coords(const PointU& p, const Tolerances& tol) {
    double n = norm(p.c);
    if (!(n >= tol.zero_vector)) throw Error(ErrorCode::RankZero, "U vanishes");
    if (std::abs(phi(p, 2)) >= tol.degeneracy * n * n) throw Error(ErrorCode::NotOnQuadric, "point is not on the quadric");
    const Complex u11 = p[0], u12 = -p[1], u21 = p[2], u22 = p[3];
    RulingCoords r;
    // Left kernel: orthogonal to the larger column; right kernel: orthogonal to the larger row.
    if (std::norm(u11) + std::norm(u21) >= std::norm(u12) + std::norm(u22))
        r.a = {u21, -u11};
    else
        r.a = {u22, -u12};
    if (std::norm(u11) + std::norm(u12) >= std::norm(u21) + std::norm(u22))
        r.b = {-u12, u11};
    else
        r.b = {-u22, u21};
    return r;
}

std::array<Vec4, 2> a_line_forms(const std::array<Complex, 2>& a) {
    return {Vec4{a[0], 0.0, a[1], 0.0}, Vec4{0.0, -a[0], 0.0, a[1]}};
}

std::array<Vec4, 2> b_line_forms(const std::array<Complex, 2>& b) {
    return {Vec4{b[0], -b[1], 0.0, 0.0}, Vec4{0.0, 0.0, b[0], b[1]}};
}

// ---------------------------------------------------------------- 1-D maps

Complex Poly1::eval(Complex z) const {
    Complex s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
    return s;
}

Poly1 Poly1::derivative() const {
    Poly1 d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * static_cast<double>(k));
    if (d.c.empty()) d.c.push_back(0.0);
    return d;
}

int RestrictedMap1D::degree() const { return std::max(num.degree(), den.degree()); }

std::array<Complex, 2> RestrictedMap1D::eval_homogeneous(const std::array<Complex, 2>& h) const {
    const int d = degree();
    // N_h(z0, z1) = sum n_k z1^k z0^(d-k)
    auto homog = [&](const Poly1& p) {
        Complex s = 0, p1 = 1.0;
        std::vector<Complex> z0pow(d + 1);
        z0pow[0] = 1.0;
        for (int k = 1; k <= d; ++k) z0pow[k] = z0pow[k - 1] * h[0];
        for (int k = 0; k <= p.degree(); ++k) {
            s += p.c[k] * p1 * z0pow[d - k];
            p1 *= h[1];
        }
        return s;
    };
    return {homog(den), homog(num)};
}

ChartValue RestrictedMap1D::operator()(const ChartValue& z) const {
    auto h = z.homogeneous();
    double s = std::max(std::abs(h[0]), std::abs(h[1]));
    auto img = eval_homogeneous({h[0] / s, h[1] / s});
    return ChartValue::from_homogeneous(img[0], img[1]);
}

Complex RestrictedMap1D::derivative(Complex z) const {
    Complex n = num.eval(z), d = den.eval(z);
    return (num.derivative().eval(z) * d - n * den.derivative().eval(z)) / (d * d);
}

namespace {

const std::map<std::string, RestrictedMap1D>& map1d_registry() {
    static const std::map<std::string, RestrictedMap1D> reg = [] {
        const Complex i(0.0, 1.0);
        const double s5 = kSqrt5;
        std::map<std::string, RestrictedMap1D> r;
        auto add = [&](std::string name, std::string desc, std::vector<Complex> n, std::vector<Complex> d) {
            r[name] = RestrictedMap1D{name, std::move(desc), Poly1{std::move(n)}, Poly1{std::move(d)}};
        };
        std::vector<Complex> dn(12, 0.0), dd(11, 0.0);
        dn[1] = 11;
        dn[6] = -66;
        dn[11] = -1;
        dd[0] = -1;
        dd[5] = 66;
        dd[10] = 11;
        add("dodeca11", "ruling action of the ruling-preserving 11-map, z = a2/a1", dn, dd);
        add("h11_L10", "h11 on a 10-line {x_i = x_j = 0}, 20-points at 0 and inf: -1/z^2", {-1.0}, {0.0, 0.0, 1.0});
        add("h11_M10", "h11 on a 10-line {x_i = x_j = x_k}, 20-points at 0 and inf: -1/z^2", {-1.0}, {0.0, 0.0, 1.0});
        add("h11_L15", "h11 on a 15-line, 30-points at 0 and inf: (19z^2-9)/(z^2(9z^2-19))", {-9.0, 0.0, 19.0},
            {0.0, 0.0, -19.0, 0.0, 9.0});
        add("h11_L30", "h11 on a 30-line, 60-points at 0 and inf: -(11z^2+9)/(z^2(9z^2+11))", {-9.0, 0.0, -11.0},
            {0.0, 0.0, 11.0, 0.0, 9.0});
        add("h11_M15", "h11 on a 15-line {x_i = -x_j, x_k = -x_l}, 30-points at 0 and inf: z(z^2+6)/(6z^2+1)", {0.0, 6.0, 0.0, 1.0},
            {1.0, 0.0, 6.0});
        add("conic_s3", "quadric map on the conic in {x_i = x_j}, 20-points at 0 and inf", {5.0 * i, 0.0, 0.0, 7.0 * s5},
            {0.0, 0.0, 7.0 * s5, 0.0, 0.0, 5.0 * i});
        add("h11_Q5", "h11 on the S4 conic Q in {x_k = 0}, 30-points at 0 and inf: -z(z^4+5)/(5z^4+1)",
            {0.0, -5.0, 0.0, 0.0, 0.0, -1.0}, {1.0, 0.0, 0.0, 0.0, 5.0});
        add("f6_M10", "phi6 on a 10-line {x_i = x_j = x_k}, 5-points at 0 and inf: z^4", {0.0, 0.0, 0.0, 0.0, 1.0},
            {1.0});
        add("f6_L15", "phi6 on a 15-line, 5-point at 0, 15-point at inf, 10-points at +-1",
            {0.0, 0.0, 0.0, 0.0, 0.0, 48.0}, {-3.0, 0.0, -1.0, 0.0, 35.0, 0.0, 17.0});
        return r;
    }();
    return reg;
}

}  // namespace

const RestrictedMap1D& restricted_map(const std::string& name) {
    const auto& reg = map1d_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw Error(ErrorCode::UnknownName, "no restricted map named '" + name + "'");
    return it->second;
}

std::vector<std::string> restricted_map_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : map1d_registry()) out.push_back(k);
    return out;
}

ChartValue induced_chart_map(const std::function<PointU(const PointU&)>& f, const CurveChart& chart,
                             const ChartValue& z) {
    return chart.invert(f(chart.eval(z)));
}

namespace {

double conformance_error(const std::function<PointU(const PointU&)>& f, const CurveChart& chart,
                         const RestrictedMap1D& r, const std::vector<Complex>& zs) {
    double worst = 0;
    for (Complex z : zs) {
        ChartValue g = induced_chart_map(f, chart, ChartValue::at(z));
        worst = std::max(worst, chordal_distance(g, r(ChartValue::at(z))));
    }
    return worst;
}

}  // namespace

ConformanceResult restricted_map_conformance(const std::function<PointU(const PointU&)>& f, const CurveChart& chart,
                                             const RestrictedMap1D& r, int samples, std::uint64_t seed, double tol,
                                             bool fix_scale) {
    Rng rng(seed);
    std::vector<Complex> zs;
    for (int k = 0; k < samples; ++k) zs.push_back(std::polar(0.3 + 2.0 * rng.uniform(), 2.0 * kPi * rng.uniform()));
    ConformanceResult best;
    best.max_error = 2.0;
    auto consider = [&](Complex c) {
        try {
            double e = conformance_error(f, chart.rescaled(c), r, zs);
            if (e < best.max_error) best = {e < tol, c, e};
        } catch (const Error&) {
        }
    };
    if (!fix_scale) {
        consider(1.0);
        return best;
    }
    // E(c) = g(c z0) - c r(z0) vanishes at the right scale; Newton from a ring of starts.
    const Complex z0 = std::polar(0.83, 0.61);
    const Complex r0 = r(ChartValue::at(z0)).z;
    auto residual = [&](Complex c) {
        ChartValue g = induced_chart_map(f, chart, ChartValue::at(c * z0));
        if (g.infinite) throw Error(ErrorCode::Degenerate, "sample maps to infinity");
        return g.z - c * r0;
    };
    for (double rho : {0.25, 1.0, 4.0})
        for (int k = 0; k < 12 && !best.pass; ++k) {
            Complex c = std::polar(rho, 2.0 * kPi * (k + 0.5) / 12.0);
            try {
                for (int it = 0; it < 60; ++it) {
                    Complex e = residual(c);
                    Complex h = 1e-7 * std::max(1.0, std::abs(c));
                    Complex d = (residual(c + h) - e) / h;
                    if (d == 0.0) break;
                    Complex step = e / d;
                    c -= step;
                    if (std::abs(step) < 1e-14 * std::abs(c)) break;
                }
                if (std::abs(c) > 1e-8 && std::isfinite(c.real()) && std::isfinite(c.imag())) consider(c);
            } catch (const Error&) {
            }
        }
    return best;
}

std::array<Complex, 2> quadric_affine_map(Complex x, Complex y) {
    Complex x2 = x * x, y2 = y * y;
    return {(x2 + 3.0 * y - 2.0 * x * y2 * y) / (2.0 * x + 3.0 * x2 * y2 - y2 * y),
            (3.0 * x2 + 2.0 * y + x2 * x * y2) / (1.0 + 2.0 * x2 * x * y - 3.0 * x * y2)};
}

}  // namespace qflow
