#include "qflow/basin_renderer.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "qflow/rng.hpp"

namespace qflow {

namespace {

using Real5 = std::array<double, 5>;
using H2 = std::array<Complex, 2>;

void parallel_rows(int rows, const std::function<void(int)>& row_fn) {
    const int workers = std::min(render_threads(), std::max(rows, 1));
    const int chunk = 4;
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int start = next.fetch_add(chunk);
            if (start >= rows) return;
            for (int j = start; j < std::min(rows, start + chunk); ++j) row_fn(j);
        }
    };
    if (workers <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

template <std::size_t N, class T>
double scaled_max(std::array<T, N>& v) {
    double m = 0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    if (m > 0)
        for (auto& c : v) c /= m;
    return m;
}

// sin of the angle between two real lines, via the wedge product
double real_chordal(const Real5& p, const Real5& q) {
    double pp = 0, qq = 0, w = 0;
    for (int i = 0; i < 5; ++i) {
        pp += p[i] * p[i];
        qq += q[i] * q[i];
        for (int j = i + 1; j < 5; ++j) {
            double d = p[i] * q[j] - p[j] * q[i];
            w += d * d;
        }
    }
    return std::sqrt(w / (pp * qq));
}

double h2_chordal(const H2& p, const H2& q) {
    double w = std::abs(p[0] * q[1] - p[1] * q[0]);
    return w / std::sqrt((std::norm(p[0]) + std::norm(p[1])) * (std::norm(q[0]) + std::norm(q[1])));
}

// Flattened attractor points with their cycle index and position.
template <class P>
struct Targets {
    std::vector<P> pts;
    std::vector<int> owner, pos, len;
    double radius = 1e-4;
};

// Capture logic shared by every renderer: a hit must be followed by a hit on the next
// member of the same cycle.
template <class P, class Dist, class Step>
void classify(P p, const Targets<P>& t, int max_iter, Dist dist, Step step, int& label, int& iter) {
    label = -1;
    iter = -1;
    int pend = -1;
    for (int it = 0;; ++it) {
        int hit = -1;
        for (std::size_t k = 0; k < t.pts.size(); ++k)
            if (dist(p, t.pts[k]) < t.radius) {
                hit = static_cast<int>(k);
                break;
            }
        if (hit >= 0 && pend >= 0 && t.owner[hit] == t.owner[pend] &&
            t.pos[hit] == (t.pos[pend] + 1) % t.len[t.owner[pend]]) {
            label = t.owner[hit];
            iter = it - 1;
            return;
        }
        pend = hit;
        if (it == max_iter) return;
        if (!step(p)) return;
    }
}

template <class Set>
void check_separation(const Set& s, const std::function<double(std::size_t, std::size_t, std::size_t, std::size_t)>& d) {
    if (!(s.radius > 0)) throw Error(ErrorCode::InvalidInput, "capture radius must be positive");
    for (std::size_t a = 0; a < s.items.size(); ++a) {
        if (s.items[a].cycle.empty()) throw Error(ErrorCode::InvalidInput, "attractor '" + s.items[a].label + "' is empty");
        for (std::size_t i = 0; i < s.items[a].cycle.size(); ++i)
            for (std::size_t b = a; b < s.items.size(); ++b)
                for (std::size_t j = (a == b ? i + 1 : 0); j < s.items[b].cycle.size(); ++j)
                    if (d(a, i, b, j) <= 3 * s.radius)
                        throw Error(ErrorCode::InvalidInput, "attractor points closer than three capture radii");
    }
}

Portrait empty_portrait(const GridSpec& grid, std::vector<std::string> labels) {
    grid.validate();
    Portrait p;
    p.grid = grid;
    p.labels = std::move(labels);
    p.cell.assign(grid.cells(), -1);
    p.iterations.assign(grid.cells(), -1);
    return p;
}

Real5 real_rep(const PointU& p, bool& real) {
    PointX x = normalize(u_to_x(p));
    Real5 r;
    real = true;
    for (int i = 0; i < 5; ++i) {
        r[i] = x[i].real();
        if (std::abs(x[i].imag()) > 1e-9) real = false;
    }
    return r;
}

}  // namespace

void GridSpec::validate() const {
    if (!(width > 0) || !(height > 0) || nx <= 0 || ny <= 0)
        throw Error(ErrorCode::InvalidInput, "grid extents and resolution must be positive");
}

bool GridSpec::cell_of(double px, double py, int& i, int& j) const {
    double fi = (px - (cx - 0.5 * width)) / width * nx;
    double fj = ((cy + 0.5 * height) - py) / height * ny;
    if (!(fi >= 0 && fi < nx && fj >= 0 && fj < ny)) return false;
    i = static_cast<int>(fi);
    j = static_cast<int>(fj);
    return true;
}

void AttractorSet1D::validate() const {
    check_separation(*this, [&](std::size_t a, std::size_t i, std::size_t b, std::size_t j) {
        return chordal_distance(items[a].cycle[i], items[b].cycle[j]);
    });
}

void AttractorSetU::validate() const {
    check_separation(*this, [&](std::size_t a, std::size_t i, std::size_t b, std::size_t j) {
        return chordal_distance(items[a].cycle[i], items[b].cycle[j]);
    });
}

Portrait render_1d(const RestrictedMap1D& map, const GridSpec& grid, const AttractorSet1D& attractors, int max_iter) {
    attractors.validate();
    std::vector<std::string> labels;
    Targets<H2> t;
    t.radius = attractors.radius;
    for (std::size_t a = 0; a < attractors.items.size(); ++a) {
        const auto& c = attractors.items[a].cycle;
        labels.push_back(attractors.items[a].label);
        t.len.push_back(static_cast<int>(c.size()));
        for (std::size_t k = 0; k < c.size(); ++k) {
            t.pts.push_back(c[k].homogeneous());
            t.owner.push_back(static_cast<int>(a));
            t.pos.push_back(static_cast<int>(k));
        }
    }
    Portrait out = empty_portrait(grid, labels);
    auto step = [&map](H2& h) {
        h = map.eval_homogeneous(h);
        return scaled_max<2>(h) > 0 && std::isfinite(std::abs(h[0]) + std::abs(h[1]));
    };
    parallel_rows(grid.ny, [&](int j) {
        for (int i = 0; i < grid.nx; ++i) {
            H2 h{1.0, Complex(grid.x(i), grid.y(j))};
            scaled_max<2>(h);
            std::size_t idx = static_cast<std::size_t>(j) * grid.nx + i;
            classify(h, t, max_iter, h2_chordal, step, out.cell[idx], out.iterations[idx]);
        }
    });
    return out;
}

Real5 PlaneChart::embed(double x, double y) const {
    Real5 r;
    for (int i = 0; i < 5; ++i) r[i] = origin[i] + x * e1[i] + y * e2[i];
    return r;
}

PointU PlaneChart::embed_u(double x, double y) const {
    Real5 r = embed(x, y);
    Vec5 c;
    for (int i = 0; i < 5; ++i) c[i] = r[i];
    return x_to_u(PointX{c});
}

std::pair<double, double> PlaneChart::coords(const Real5& p, double tol) const {
    auto dotp = [](const Real5& a, const Real5& b) {
        double s = 0;
        for (int i = 0; i < 5; ++i) s += a[i] * b[i];
        return s;
    };
    double a = dotp(p, origin) / dotp(origin, origin);
    double b = dotp(p, e1) / dotp(e1, e1);
    double c = dotp(p, e2) / dotp(e2, e2);
    double res = 0, n = std::sqrt(dotp(p, p));
    for (int i = 0; i < 5; ++i) res = std::max(res, std::abs(p[i] - a * origin[i] - b * e1[i] - c * e2[i]));
    if (!(res <= tol * n)) throw Error(ErrorCode::NotOnChart, "point is off the plane");
    if (!(std::abs(a) > tol * n)) throw Error(ErrorCode::NotOnChart, "point is on the line at infinity");
    return {b / a, c / a};
}

std::pair<double, double> PlaneChart::coords(const PointU& p, double tol) const {
    bool real = false;
    Real5 r = real_rep(p, real);
    if (!real) throw Error(ErrorCode::NotOnChart, "point is not real");
    return coords(r, tol);
}

PlaneChart s3_plane_chart(int i, int j) {
    if (i < 1 || j > 5 || i >= j) throw Error(ErrorCode::BadIndices, "need 1 <= i < j <= 5");
    std::vector<int> rest;
    for (int k = 1; k <= 5; ++k)
        if (k != i && k != j) rest.push_back(k);
    // c represents p10_ij_2; the five-point representatives sum to -c
    Real5 c;
    c.fill(2.0);
    c[i - 1] = c[j - 1] = -3.0;
    auto d = [&](int k) {
        Real5 r;
        for (int l = 0; l < 5; ++l) r[l] = (l == k - 1 ? -4.0 : 1.0) + c[l] / 3.0;
        return r;
    };
    PlaneChart ch;
    ch.plane = "L2_10_" + std::to_string(i) + std::to_string(j);
    Real5 d2 = d(rest[1]), d3 = d(rest[2]);
    ch.e1 = d(rest[0]);
    for (int l = 0; l < 5; ++l) {
        ch.origin[l] = -c[l] / 3.0;
        ch.e2[l] = (d2[l] - d3[l]) / std::sqrt(3.0);
    }
    return ch;
}

double plane_invariance_residual(const PlaneChart& chart, const EquivariantMap& map, int samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        PointX y = u_to_x(map.apply(chart.embed_u(4 * rng.uniform() - 2, 4 * rng.uniform() - 2)));
        // distance from the complex span of the three orthogonal real vectors
        Vec5 r = y.c;
        for (const Real5* b : {&chart.origin, &chart.e1, &chart.e2}) {
            Complex yb = 0;
            double bb = 0;
            for (int i = 0; i < 5; ++i) {
                yb += y[i] * (*b)[i];
                bb += (*b)[i] * (*b)[i];
            }
            for (int i = 0; i < 5; ++i) r[i] -= yb / bb * (*b)[i];
        }
        worst = std::max(worst, norm(r) / norm(y.c));
    }
    return worst;
}

Portrait render_plane(const PlaneChart& chart, const EquivariantMap& map, const GridSpec& grid,
                      const AttractorSetU& attractors, int max_iter) {
    attractors.validate();
    if (!(plane_invariance_residual(chart, map) < 1e-8))
        throw Error(ErrorCode::PlaneNotInvariant, map.name + " does not preserve " + chart.plane);
    std::vector<std::string> labels;
    Targets<Real5> rt;
    Targets<Vec4> ut;
    rt.radius = ut.radius = attractors.radius;
    bool real_path = static_cast<bool>(map.eval_real_x);
    for (std::size_t a = 0; a < attractors.items.size(); ++a) {
        const auto& c = attractors.items[a].cycle;
        labels.push_back(attractors.items[a].label);
        rt.len.push_back(static_cast<int>(c.size()));
        ut.len.push_back(static_cast<int>(c.size()));
        for (std::size_t k = 0; k < c.size(); ++k) {
            bool real = false;
            rt.pts.push_back(real_rep(c[k], real));
            real_path = real_path && real;
            ut.pts.push_back(normalize(c[k]).c);
            for (auto* t : {&rt.owner, &ut.owner}) t->push_back(static_cast<int>(a));
            for (auto* t : {&rt.pos, &ut.pos}) t->push_back(static_cast<int>(k));
        }
    }
    Portrait out = empty_portrait(grid, labels);
    auto real_step = [&map](Real5& x) {
        x = map.eval_real_x(x);
        double m = scaled_max<5>(x);
        return m > 0 && std::isfinite(m);
    };
    auto u_step = [&map](Vec4& u) {
        u = map.eval(u);
        double m = scaled_max<4>(u);
        return m > 0 && std::isfinite(m);
    };
    auto u_dist = [](const Vec4& p, const Vec4& q) { return chordal_distance(p, q); };
    parallel_rows(grid.ny, [&](int j) {
        for (int i = 0; i < grid.nx; ++i) {
            std::size_t idx = static_cast<std::size_t>(j) * grid.nx + i;
            if (real_path) {
                Real5 x = chart.embed(grid.x(i), grid.y(j));
                scaled_max<5>(x);
                classify(x, rt, max_iter, real_chordal, real_step, out.cell[idx], out.iterations[idx]);
            } else {
                Vec4 u = chart.embed_u(grid.x(i), grid.y(j)).c;
                scaled_max<4>(u);
                classify(u, ut, max_iter, u_dist, u_step, out.cell[idx], out.iterations[idx]);
            }
        }
    });
    return out;
}

PortraitStats attractor_statistics(const Portrait& portrait, const std::function<bool(double, double)>& mask) {
    const GridSpec& g = portrait.grid;
    PortraitStats s;
    std::vector<std::size_t> counts(portrait.labels.size(), 0);
    std::size_t black = 0, resolved = 0;
    double iters = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            if (mask && !mask(g.x(i), g.y(j))) continue;
            ++s.counted;
            std::size_t idx = static_cast<std::size_t>(j) * g.nx + i;
            int l = portrait.cell[idx];
            if (l < 0) {
                ++black;
                continue;
            }
            ++counts[l];
            ++resolved;
            iters += portrait.iterations[idx];
        }
    double n = s.counted > 0 ? static_cast<double>(s.counted) : 1.0;
    for (auto c : counts) s.fractions.push_back(c / n);
    s.black = black / n;
    s.mean_iterations = resolved > 0 ? iters / resolved : 0.0;
    return s;
}

double symmetry_agreement(const Portrait& portrait, const std::function<std::pair<double, double>(double, double)>& transform,
                          const std::vector<int>& label_map) {
    const GridSpec& g = portrait.grid;
    std::size_t counted = 0, agree = 0;
    for (int j = 1; j + 1 < g.ny; ++j)
        for (int i = 1; i + 1 < g.nx; ++i) {
            int l = portrait.at(i, j);
            bool uniform = true;
            for (int dj = -1; dj <= 1 && uniform; ++dj)
                for (int di = -1; di <= 1; ++di)
                    if (portrait.at(i + di, j + dj) != l) {
                        uniform = false;
                        break;
                    }
            if (!uniform) continue;
            auto [tx, ty] = transform(g.x(i), g.y(j));
            int ti, tj;
            if (!g.cell_of(tx, ty, ti, tj)) continue;
            ++counted;
            int want = l < 0 ? -1 : label_map.at(l);
            if (portrait.at(ti, tj) == want) ++agree;
        }
    return counted > 0 ? static_cast<double>(agree) / counted : 0.0;
}

AttractorSet1D find_attractors_1d(const RestrictedMap1D& map, const GridSpec& window, int max_period, int seeds_per_side) {
    window.validate();
    auto step = [&map](H2 h) {
        h = map.eval_homogeneous(h);
        scaled_max<2>(h);
        return h;
    };
    AttractorSet1D out;
    std::vector<H2> known;
    for (int sj = 0; sj < seeds_per_side; ++sj)
        for (int si = 0; si < seeds_per_side; ++si) {
            double x = window.cx - 0.5 * window.width + (si + 0.5) * window.width / seeds_per_side;
            double y = window.cy + 0.5 * window.height - (sj + 0.5) * window.height / seeds_per_side;
            H2 h{1.0, Complex(x, y)};
            scaled_max<2>(h);
            for (int it = 0; it < 400; ++it) h = step(h);
            if (!(std::abs(h[0]) + std::abs(h[1]) > 0) || !std::isfinite(std::abs(h[0]) + std::abs(h[1]))) continue;
            int period = 0;
            H2 q = h;
            for (int p = 1; p <= max_period; ++p) {
                q = step(q);
                if (h2_chordal(q, h) < 1e-10) {
                    period = p;
                    break;
                }
            }
            if (period == 0) continue;
            bool seen = false;
            for (const auto& k : known)
                if (h2_chordal(k, h) < 1e-7) seen = true;
            if (seen) continue;
            // attracting: a small perturbation returns
            H2 pert{h[0], h[1] + 1e-6 * (std::abs(h[0]) + std::abs(h[1]))};
            for (int it = 0; it < 40 * period; ++it) pert = step(pert);
            if (!(h2_chordal(pert, h) < 1e-8)) {
                H2 back = h;
                bool close = false;
                for (int p = 0; p < period && !close; ++p) {
                    close = h2_chordal(pert, back) < 1e-8;
                    back = step(back);
                }
                if (!close) continue;
            }
            Attractor1D a;
            a.label = "c" + std::to_string(out.items.size() + 1);
            H2 c = h;
            for (int p = 0; p < period; ++p) {
                a.cycle.push_back(ChartValue::from_homogeneous(c[0], c[1]));
                known.push_back(c);
                c = step(c);
            }
            out.items.push_back(std::move(a));
        }
    return out;
}

namespace {

PortraitPreset f6_rp2_preset() {
    PortraitPreset p;
    p.name = "f6_RP2";
    p.plane = true;
    p.map = "phi6";
    p.chart = s3_plane_chart(4, 5);
    p.grid = GridSpec{0.0, 0.0, 3.0, 3.0, 720, 720};
    for (const char* d : {"p5_1", "p5_2", "p5_3", "p10_45_2"}) p.attractors_u.items.push_back({d, {point(d).u()}});
    return p;
}

}  // namespace

PortraitPreset portrait_preset(const std::string& name) {
    if (name == "f6_RP2") return f6_rp2_preset();
    const RestrictedMap1D& m = restricted_map(name);
    PortraitPreset p;
    p.name = name;
    p.map = m.name;
    p.grid = GridSpec{0.0, 0.0, 4.0, 4.0, 720, 720};
    p.attractors_1d = find_attractors_1d(m, p.grid);
    return p;
}

std::vector<std::string> portrait_preset_names() {
    std::vector<std::string> out = restricted_map_names();
    out.push_back("f6_RP2");
    return out;
}

Portrait render_preset(const PortraitPreset& preset, int max_iter) {
    if (preset.plane)
        return render_plane(preset.chart, equivariant_map(preset.map), preset.grid, preset.attractors_u, max_iter);
    return render_1d(restricted_map(preset.map), preset.grid, preset.attractors_1d, max_iter);
}

std::vector<std::uint8_t> ppm_bytes(const Portrait& portrait) {
    static const unsigned char palette[][3] = {{230, 60, 50},  {60, 170, 80},  {60, 110, 220}, {240, 190, 40},
                                               {170, 70, 200}, {40, 190, 200}, {240, 130, 40}, {150, 150, 150},
                                               {120, 200, 60}, {220, 90, 150}, {100, 80, 40},  {90, 60, 150}};
    const GridSpec& g = portrait.grid;
    std::string header = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + 3 * g.cells());
    for (std::size_t k = 0; k < g.cells(); ++k) {
        int l = portrait.cell[k];
        if (l < 0) {
            out.insert(out.end(), {0, 0, 0});
            continue;
        }
        double shade = 1.0 - 0.6 * std::min(portrait.iterations[k], 30) / 30.0;
        for (int c = 0; c < 3; ++c) out.push_back(static_cast<std::uint8_t>(palette[l % 12][c] * shade));
    }
    return out;
}

void write_ppm(const std::string& path, const Portrait& portrait) {
    auto bytes = ppm_bytes(portrait);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "' for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(ErrorCode::InvalidInput, "failed writing '" + path + "'");
}

int render_threads() {
    if (const char* env = std::getenv("QUINTIC_FLOW_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h > 0 ? static_cast<int>(h) : 1;
}

}  // namespace qflow
