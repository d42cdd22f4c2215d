#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qflow/param_family.hpp"

namespace qflow {

/// Monic p(x) = x^5 + a1 x^4 + a2 x^3 + a3 x^2 + a4 x + a5, stored as a[0..4] = a1..a5.
struct Quintic {
    std::array<Complex, 5> a{};

    static Quintic from_roots(const std::array<Complex, 5>& roots);
    /// Ascending coefficient vector (a5, a4, ..., a1, 1).
    std::vector<Complex> ascending() const;
    Complex eval(Complex x) const;
};

/// q(y) = y^5 + b2 y^3 + b3 y^2 + b4 y + b5 with q(y) = p(y + shift).
struct DepressedQuintic {
    Complex b2{}, b3{}, b4{}, b5{};
    Complex shift{};
};

DepressedQuintic depress(const Quintic& p);

struct Reduction {
    KParams K{};
    Complex lambda{};
};

/// K from a depressed quintic. Throws DegenerateReduction when b2 or b3 is negligible
/// against the root scale (relative threshold rel_tol).
Reduction reduce_to_K(const DepressedQuintic& q, double rel_tol = 1e-10);

/// C2..C5 of R_K(s) = s^5 + C2 s^3 + C3 s^2 + C4 s + C5 (there is no s^4 term).
std::array<Complex, 4> resolvent_C(const KParams& K);
/// Ascending coefficients of R_K. Throws DegenerateK when K2 = 0.
std::vector<Complex> resolvent_RK(const KParams& K);

/// z -> (a z + b) / (c z + d)
struct Mobius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
    Mobius inverse() const { return {d, -b, -c, a}; }
    Complex det() const { return a * d - b * c; }
};

/// Monic quintic whose roots are M(r) for the roots r of p. Throws Degenerate when a
/// root is sent to (numerical) infinity.
Quintic transform_roots(const Quintic& p, const Mobius& m);

struct Regularized {
    Quintic quintic;
    Mobius mobius;
    int attempts = 0;
};

/// Seeded random Moebius maps (det 1) until the transformed quintic reduces; up to 10 tries.
Regularized mobius_regularize(const Quintic& p, std::uint64_t seed);

struct IterateOptions {
    double tol = 1e-13;     ///< chordal step size counted as converged
    int consecutive = 3;    ///< required run of sub-tolerance steps
    /// Rounding floor: this many consecutive steps below floor_tol also count as settled
    /// (for badly conditioned K the evaluation noise near a fixed point exceeds tol).
    double floor_tol = 1e-8;
    int floor_steps = 5;
    int max_iter = 500;
    int max_restarts = 25;
    std::uint64_t seed = 1;
};

struct IterateResult {
    PointU point;
    int iterations = 0;  ///< in the successful run
    int restarts = 0;
};

/// Iterates phi_K from seeded random starts (or from `start` first). Restarts on indeterminate
/// images, on convergence onto Phi2K = 0 and on running out of iterations. Throws NoConvergence.
IterateResult iterate_phiK(const ParamPolys& pp, const IterateOptions& opts = {},
                           std::optional<PointU> start = std::nullopt);

struct SolveOptions {
    IterateOptions iterate;
    int polish_steps = 10;
    /// the raw selected root must satisfy |R_K(S)| / ||R_K|| below this
    double resolvent_tol = 1e-6;
};

struct SolveReport {
    std::array<Complex, 5> roots{};
    std::array<double, 5> residuals{};
    int iterations = 0;
    int restarts = 0;
    PointU converged_point;
    Complex selected_root_raw{};  ///< J_K at the converged point
    bool regularized = false;
    bool polish_moved = false;    ///< Newton moved the dynamic root by more than 1e-4 relative
    KParams K{};
    Complex lambda{}, shift{};
};

/// Throws NoConvergence, RegularizationFailed.
SolveReport solve(const Quintic& p, const SolveOptions& opts = {});

}  // namespace qflow
