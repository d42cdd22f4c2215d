#pragma once

#include <array>

namespace qflow::tables {

/// coef * K1^k[0] K2^k[1] K3^k[2] * w1^w[0] w2^w[1] w3^w[2] w4^w[3]
struct KTerm {
    double coef;
    std::array<int, 3> k;
    std::array<int, 4> w;
};

// Phi2K = 5/48 * sum
extern const std::array<KTerm, 21> kPhi2K;
// Phi3K = 5/1728 * sum
extern const std::array<KTerm, 80> kPhi3K;
// t_K = -3125 K1^2 K2^2 K3^2 / 13824 * sum
extern const std::array<KTerm, 28> kTK;
// Gamma_K = -125 sqrt5 / 36 * sum
extern const std::array<KTerm, 28> kGammaK;

}  // namespace qflow::tables
