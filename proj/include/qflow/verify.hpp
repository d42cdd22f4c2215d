#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qflow/core_geometry.hpp"
#include "qflow/rng.hpp"

namespace qflow {

struct Check {
    std::string group;
    std::string name;
    bool pass = false;
    double measured = 0;   ///< worst error (or count) observed
    double threshold = 0;  ///< pass bound for `measured`
    std::string detail;
};

/// Random point with Phi2..Phi5 and Psi10 at least `margin` (relative) away from zero.
PointU random_generic_point(Rng& rng, double margin = 1e-6);

/// 120 unitary representatives: unitarity, parity, projective distinctness, homomorphism.
std::vector<Check> group_checks();
/// Orbit sizes, stabilizer orders and incidences of the special configuration.
std::vector<Check> configuration_checks();
/// Degree-4 and degree-5 hessian identities at `points` random points (rel err < 1e-9), and invariance.
std::vector<Check> invariant_checks(int points = 1000, std::uint64_t seed = 1);
/// phi6, h11, g11 commute with all 120 elements (chordal < 1e-8).
std::vector<Check> equivariance_checks(int points = 20, std::uint64_t seed = 1);
/// phi6 on the 10-lines (z^4) and 15-lines, h11 on both 10-line orbits (-1/z^2), rel err < 1e-7.
std::vector<Check> restricted_checks(int samples = 50, std::uint64_t seed = 1);
/// The tau_v oracles (Phi2, Phi3, det, repose, Gamma, conjugacy) at `pairs` random (v, w), rel err < 1e-7.
/// perturb_phi2K multiplies the first coefficient of Phi2K by (1 + perturb_phi2K).
std::vector<Check> oracle_checks(int pairs = 20, std::uint64_t seed = 1, double perturb_phi2K = 0);
/// J at the conjugated 5-points equals S_l(v) and each S_l(v) is a root of R_K(v).
std::vector<Check> root_selector_checks(int points = 20, std::uint64_t seed = 1);

/// group, configuration, invariants, equivariance, restricted, oracles, root_selector
std::vector<std::string> check_groups();

struct VerifyOptions {
    std::string filter;  ///< run only groups whose name contains this (all when empty)
    std::uint64_t seed = 1;
    double perturb_phi2K = 0;
};

std::vector<Check> run_checks(const VerifyOptions& opts = {});

}  // namespace qflow
