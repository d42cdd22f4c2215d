#include "qflow/quintic_solver.hpp"

#include <cmath>

#include "qflow/rng.hpp"
#include "qflow/univariate.hpp"

namespace qflow {

namespace uv = univariate;

Quintic Quintic::from_roots(const std::array<Complex, 5>& roots) {
    auto c = uv::from_roots({roots.begin(), roots.end()});
    Quintic q;
    for (int k = 0; k < 5; ++k) q.a[k] = c[4 - k];
    return q;
}

std::vector<Complex> Quintic::ascending() const { return {a[4], a[3], a[2], a[1], a[0], 1.0}; }

Complex Quintic::eval(Complex x) const { return uv::eval_compensated(ascending(), x); }

DepressedQuintic depress(const Quintic& p) {
    Complex s = -p.a[0] / 5.0;
    // Taylor shift by repeated synthetic division: coefficients of p(y + s)
    std::vector<Complex> c = p.ascending();
    const int n = 5;
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) c[j] += s * c[j + 1];
    return {c[3], c[2], c[1], c[0], s};
}

Reduction reduce_to_K(const DepressedQuintic& q, double rel_tol) {
    double scale = 0;
    const Complex b[4] = {q.b2, q.b3, q.b4, q.b5};
    for (int k = 0; k < 4; ++k) scale = std::max(scale, std::pow(std::abs(b[k]), 1.0 / (k + 2)));
    if (scale == 0.0) throw Error(ErrorCode::DegenerateReduction, "all coefficients vanish");
    if (std::abs(q.b2) <= rel_tol * scale * scale) throw Error(ErrorCode::DegenerateReduction, "b2 vanishes");
    if (std::abs(q.b3) <= rel_tol * scale * scale * scale) throw Error(ErrorCode::DegenerateReduction, "b3 vanishes");
    Complex b2 = q.b2, b3 = q.b3;
    Reduction r;
    r.K.k1 = (b2 * b2 - 2.0 * q.b4) / (2.0 * b2 * b2);
    r.K.k2 = -9.0 * b3 * b3 / (8.0 * b2 * b2 * b2);
    r.K.k3 = 5.0 * (b2 * b3 - q.b5) / (6.0 * b2 * b3);
    r.lambda = -3.0 * b3 / (10.0 * kSqrt5 * b2);
    return r;
}

std::array<Complex, 4> resolvent_C(const KParams& K) {
    if (K.k2 == 0.0) throw Error(ErrorCode::DegenerateK, "K2 vanishes");
    Complex k2s = K.k2 * K.k2;
    return {-125.0 / (2.0 * K.k2), 625.0 * kSqrt5 / (3.0 * K.k2), -15625.0 * (2.0 * K.k1 - 1.0) / (8.0 * k2s),
            15625.0 * kSqrt5 * (6.0 * K.k3 - 5.0) / (6.0 * k2s)};
}

std::vector<Complex> resolvent_RK(const KParams& K) {
    auto c = resolvent_C(K);
    return {c[3], c[2], c[1], c[0], 0.0, 1.0};
}

Quintic transform_roots(const Quintic& p, const Mobius& m) {
    // roots y = M(x) satisfy p(M^{-1}(y)) = 0; clear the denominators (-c y + a)^5
    const std::vector<Complex> num{-m.b, m.d}, den{m.a, -m.c};
    std::vector<Complex> acc(6, 0.0);
    const Complex coef[6] = {1.0, p.a[0], p.a[1], p.a[2], p.a[3], p.a[4]};
    double size = 0;
    for (int k = 0; k <= 5; ++k) {
        std::vector<Complex> t{coef[k]};
        for (int i = 0; i < 5 - k; ++i) t = uv::multiply(t, num);
        for (int i = 0; i < k; ++i) t = uv::multiply(t, den);
        for (int j = 0; j < 6; ++j) {
            acc[j] += t[j];
            size = std::max(size, std::abs(t[j]));
        }
    }
    if (!(std::abs(acc[5]) > 1e-8 * size)) throw Error(ErrorCode::Degenerate, "a root is sent to infinity");
    Quintic q;
    for (int k = 0; k < 5; ++k) q.a[k] = acc[4 - k] / acc[5];
    return q;
}

namespace {

struct Prepared {
    DepressedQuintic depressed;
    Reduction reduction;
    ParamPolys polys;
};

Prepared prepare(const Quintic& p) {
    Prepared r;
    r.depressed = depress(p);
    r.reduction = reduce_to_K(r.depressed);
    r.polys = build_param_polys(r.reduction.K);
    return r;
}

bool degenerate(const Error& e) {
    return e.code() == ErrorCode::DegenerateReduction || e.code() == ErrorCode::DegenerateK;
}

double resolvent_residual(const KParams& K, Complex s) {
    auto c = resolvent_RK(K);
    double size = 0, a = 1;
    for (const auto& ck : c) {
        size += std::abs(ck) * a;
        a *= std::abs(s);
    }
    return std::abs(uv::eval_compensated(c, s)) / size;
}

}  // namespace

Regularized mobius_regularize(const Quintic& p, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 1; attempt <= 10; ++attempt) {
        Mobius m{1.0 + 0.5 * rng.complex_normal(), 0.5 * rng.complex_normal(), 0.3 * rng.complex_normal(),
                 1.0 + 0.5 * rng.complex_normal()};
        Complex s = std::sqrt(m.det());
        if (std::abs(s) < 1e-3) continue;
        m = {m.a / s, m.b / s, m.c / s, m.d / s};
        try {
            Quintic q = transform_roots(p, m);
            prepare(q);
            return {q, m, attempt};
        } catch (const Error& e) {
            if (!degenerate(e) && e.code() != ErrorCode::Degenerate) throw;
        }
    }
    throw Error(ErrorCode::RegularizationFailed, "no Moebius transform gave a usable reduction");
}

IterateResult iterate_phiK(const ParamPolys& pp, const IterateOptions& opts, std::optional<PointU> start) {
    Rng rng(opts.seed);
    for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
        PointU w;
        if (attempt == 0 && start) {
            w = normalize(*start);
        } else {
            for (auto& c : w.c) c = rng.complex_normal();
            w = normalize(w);
        }
        int run = 0, floor_run = 0;
        try {
            for (int it = 1; it <= opts.max_iter; ++it) {
                PointU next = phiK(pp, w);
                double d = chordal_distance(next, w);
                w = next;
                run = d < opts.tol ? run + 1 : 0;
                floor_run = d < opts.floor_tol ? floor_run + 1 : 0;
                int settled = run >= opts.consecutive ? opts.consecutive : floor_run >= opts.floor_steps ? opts.floor_steps : 0;
                if (settled > 0) {
                    // a limit on Phi2K = 0 cannot select a root
                    root_selector_J(pp, w.c);
                    return {w, it - settled, attempt};
                }
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Indeterminate && e.code() != ErrorCode::OnQuadricK) throw;
        }
    }
    throw Error(ErrorCode::NoConvergence, "phi_K iteration did not settle after all restarts");
}

SolveReport solve(const Quintic& p, const SolveOptions& opts) {
    SolveReport rep;
    Quintic work = p;
    Mobius mob;
    Prepared prep;
    try {
        prep = prepare(p);
    } catch (const Error& e) {
        if (!degenerate(e)) throw;
        Regularized reg = mobius_regularize(p, opts.iterate.seed ^ 0x9E3779B97F4A7C15ULL);
        work = reg.quintic;
        mob = reg.mobius;
        rep.regularized = true;
        prep = prepare(work);
    }
    rep.K = prep.reduction.K;
    rep.lambda = prep.reduction.lambda;
    rep.shift = prep.depressed.shift;

    IterateOptions io = opts.iterate;
    int restarts = 0;
    for (;;) {
        IterateResult it = iterate_phiK(prep.polys, io);
        restarts += it.restarts;
        Complex s = root_selector_J(prep.polys, it.point.c);
        if (resolvent_residual(rep.K, s) < opts.resolvent_tol) {
            rep.iterations = it.iterations;
            rep.converged_point = it.point;
            rep.selected_root_raw = s;
            break;
        }
        // settled somewhere other than a five-point: start over with fresh seeds
        ++restarts;
        if (restarts > io.max_restarts) throw Error(ErrorCode::NoConvergence, "no run selected a resolvent root");
        io.seed = io.seed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
    rep.restarts = restarts;

    Complex x = rep.lambda * rep.selected_root_raw + rep.shift;
    if (rep.regularized) {
        x = uv::newton_polish(work.ascending(), x, opts.polish_steps);
        x = mob.inverse().apply(x);
    }
    const auto pc = p.ascending();
    Complex polished = uv::newton_polish(pc, x, opts.polish_steps);
    rep.polish_moved = std::abs(polished - x) > 1e-4 * std::max(1.0, std::abs(x));
    rep.roots[0] = polished;

    auto rest = uv::closed_form_roots(uv::deflate(pc, polished));
    for (int k = 0; k < 4; ++k) rep.roots[k + 1] = uv::newton_polish(pc, rest[k], opts.polish_steps);
    for (int k = 0; k < 5; ++k) rep.residuals[k] = std::abs(p.eval(rep.roots[k]));
    return rep;
}

}  // namespace qflow
