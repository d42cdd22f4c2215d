#include "qflow/param_tables.hpp"

namespace qflow::tables {

// Each entry: integer coefficient, exponents of (K1, K2, K3), exponents of (w1..w4).

// Phi2K = 5/48 * sum
const std::array<KTerm, 21> kPhi2K = {{
    {240, {0, 1, 2}, {2, 0, 0, 0}},
    {480, {1, 1, 1}, {1, 1, 0, 0}},
    {-48, {2, 0, 0}, {0, 2, 0, 0}},
    {240, {3, 0, 0}, {0, 2, 0, 0}},
    {480, {1, 1, 1}, {1, 0, 1, 0}},
    {-96, {1, 1, 0}, {0, 1, 1, 0}},
    {480, {1, 1, 1}, {0, 1, 1, 0}},
    {-30, {0, 1, 0}, {0, 0, 2, 0}},
    {180, {1, 1, 0}, {0, 0, 2, 0}},
    {32, {0, 2, 0}, {0, 0, 2, 0}},
    {480, {0, 1, 2}, {1, 0, 0, 1}},
    {-60, {1, 0, 0}, {0, 1, 0, 1}},
    {264, {2, 0, 0}, {0, 1, 0, 1}},
    {160, {1, 1, 0}, {0, 1, 0, 1}},
    {-140, {0, 1, 0}, {0, 0, 1, 1}},
    {184, {1, 1, 0}, {0, 0, 1, 1}},
    {336, {0, 1, 1}, {0, 0, 1, 1}},
    {-15, {0, 0, 0}, {0, 0, 0, 2}},
    {60, {1, 0, 0}, {0, 0, 0, 2}},
    {12, {2, 0, 0}, {0, 0, 0, 2}},
    {128, {0, 1, 1}, {0, 0, 0, 2}},
}};

// Phi3K = 5/1728 * sum
const std::array<KTerm, 80> kPhi3K = {{
    {-43200, {0, 2, 3}, {3, 0, 0, 0}},
    {25920, {1, 1, 2}, {2, 1, 0, 0}},
    {-129600, {2, 1, 2}, {2, 1, 0, 0}},
    {51840, {2, 1, 1}, {1, 2, 0, 0}},
    {-129600, {2, 1, 2}, {1, 2, 0, 0}},
    {1944, {3, 0, 0}, {0, 3, 0, 0}},
    {-6480, {4, 0, 0}, {0, 3, 0, 0}},
    {-14400, {3, 1, 0}, {0, 3, 0, 0}},
    {25920, {0, 2, 2}, {2, 0, 1, 0}},
    {-129600, {0, 2, 3}, {2, 0, 1, 0}},
    {32400, {1, 1, 1}, {1, 1, 1, 0}},
    {-142560, {2, 1, 1}, {1, 1, 1, 0}},
    {-34560, {1, 2, 1}, {1, 1, 1, 0}},
    {27432, {2, 1, 0}, {0, 2, 1, 0}},
    {-49680, {3, 1, 0}, {0, 2, 1, 0}},
    {-38880, {2, 1, 1}, {0, 2, 1, 0}},
    {37800, {0, 2, 1}, {1, 0, 2, 0}},
    {-23760, {1, 2, 1}, {1, 0, 2, 0}},
    {-90720, {0, 2, 2}, {1, 0, 2, 0}},
    {4860, {1, 1, 0}, {0, 1, 2, 0}},
    {-12960, {2, 1, 0}, {0, 1, 2, 0}},
    {-32400, {3, 1, 0}, {0, 1, 2, 0}},
    {-1728, {1, 2, 0}, {0, 1, 2, 0}},
    {-17280, {1, 2, 1}, {0, 1, 2, 0}},
    {4860, {0, 2, 0}, {0, 0, 3, 0}},
    {3240, {1, 2, 0}, {0, 0, 3, 0}},
    {384, {0, 3, 0}, {0, 0, 3, 0}},
    {-9720, {0, 2, 1}, {0, 0, 3, 0}},
    {-19440, {1, 2, 1}, {0, 0, 3, 0}},
    {16200, {0, 1, 2}, {2, 0, 0, 1}},
    {-71280, {1, 1, 2}, {2, 0, 0, 1}},
    {-43200, {0, 2, 2}, {2, 0, 0, 1}},
    {75600, {1, 1, 1}, {1, 1, 0, 1}},
    {-99360, {2, 1, 1}, {1, 1, 0, 1}},
    {-129600, {1, 1, 2}, {1, 1, 0, 1}},
    {1620, {2, 0, 0}, {0, 2, 0, 1}},
    {-3888, {3, 0, 0}, {0, 2, 0, 1}},
    {-6480, {4, 0, 0}, {0, 2, 0, 1}},
    {17280, {2, 1, 0}, {0, 2, 0, 1}},
    {-69120, {2, 1, 1}, {0, 2, 0, 1}},
    {16200, {0, 1, 1}, {1, 0, 1, 1}},
    {-64800, {1, 1, 1}, {1, 0, 1, 1}},
    {-12960, {2, 1, 1}, {1, 0, 1, 1}},
    {-86400, {0, 2, 2}, {1, 0, 1, 1}},
    {27000, {1, 1, 0}, {0, 1, 1, 1}},
    {-48816, {2, 1, 0}, {0, 1, 1, 1}},
    {-11520, {1, 2, 0}, {0, 1, 1, 1}},
    {-22032, {1, 1, 1}, {0, 1, 1, 1}},
    {-64800, {2, 1, 1}, {0, 1, 1, 1}},
    {2025, {0, 1, 0}, {0, 0, 2, 1}},
    {-3240, {1, 1, 0}, {0, 0, 2, 1}},
    {-21060, {2, 1, 0}, {0, 0, 2, 1}},
    {2880, {0, 2, 0}, {0, 0, 2, 1}},
    {-7488, {1, 2, 0}, {0, 0, 2, 1}},
    {-6912, {0, 2, 1}, {0, 0, 2, 1}},
    {-25920, {0, 2, 2}, {0, 0, 2, 1}},
    {24300, {0, 1, 1}, {1, 0, 0, 2}},
    {-48600, {1, 1, 1}, {1, 0, 0, 2}},
    {-14400, {0, 2, 1}, {1, 0, 0, 2}},
    {-29160, {0, 1, 2}, {1, 0, 0, 2}},
    {-6480, {1, 1, 2}, {1, 0, 0, 2}},
    {405, {1, 0, 0}, {0, 1, 0, 2}},
    {-5508, {3, 0, 0}, {0, 1, 0, 2}},
    {18000, {1, 1, 0}, {0, 1, 0, 2}},
    {-18720, {2, 1, 0}, {0, 1, 0, 2}},
    {-29376, {1, 1, 1}, {0, 1, 0, 2}},
    {-25920, {1, 1, 2}, {0, 1, 0, 2}},
    {5805, {0, 1, 0}, {0, 0, 1, 2}},
    {-8640, {1, 1, 0}, {0, 0, 1, 2}},
    {-3348, {2, 1, 0}, {0, 0, 1, 2}},
    {-34992, {1, 1, 1}, {0, 0, 1, 2}},
    {-17856, {0, 2, 1}, {0, 0, 1, 2}},
    {405, {1, 0, 0}, {0, 0, 0, 3}},
    {-1620, {2, 0, 0}, {0, 0, 0, 3}},
    {324, {3, 0, 0}, {0, 0, 0, 3}},
    {3600, {0, 1, 0}, {0, 0, 0, 3}},
    {-7200, {1, 1, 0}, {0, 0, 0, 3}},
    {-1600, {0, 2, 0}, {0, 0, 0, 3}},
    {-3456, {1, 1, 1}, {0, 0, 0, 3}},
    {-10368, {0, 1, 2}, {0, 0, 0, 3}},
}};

// tK = -3125 K1^2 K2^2 K3^2 / 13824 * sum
const std::array<KTerm, 28> kTK = {{
    {-675, {0, 0, 0}, {0, 0, 0, 0}},
    {9450, {1, 0, 0}, {0, 0, 0, 0}},
    {-51300, {2, 0, 0}, {0, 0, 0, 0}},
    {135000, {3, 0, 0}, {0, 0, 0, 0}},
    {-172800, {4, 0, 0}, {0, 0, 0, 0}},
    {86400, {5, 0, 0}, {0, 0, 0, 0}},
    {23700, {0, 1, 0}, {0, 0, 0, 0}},
    {-147600, {1, 1, 0}, {0, 0, 0, 0}},
    {111600, {2, 1, 0}, {0, 0, 0, 0}},
    {436800, {3, 1, 0}, {0, 0, 0, 0}},
    {-271800, {0, 2, 0}, {0, 0, 0, 0}},
    {424800, {1, 2, 0}, {0, 0, 0, 0}},
    {7200, {2, 2, 0}, {0, 0, 0, 0}},
    {25600, {0, 3, 0}, {0, 0, 0, 0}},
    {-79200, {0, 1, 1}, {0, 0, 0, 0}},
    {535680, {1, 1, 1}, {0, 0, 0, 0}},
    {-777600, {2, 1, 1}, {0, 0, 0, 0}},
    {-576000, {3, 1, 1}, {0, 0, 0, 0}},
    {1552320, {0, 2, 1}, {0, 0, 0, 0}},
    {-1238400, {1, 2, 1}, {0, 0, 0, 0}},
    {-30720, {0, 3, 1}, {0, 0, 0, 0}},
    {68256, {0, 1, 2}, {0, 0, 0, 0}},
    {-475200, {1, 1, 2}, {0, 0, 0, 0}},
    {864000, {2, 1, 2}, {0, 0, 0, 0}},
    {-3628800, {0, 2, 2}, {0, 0, 0, 0}},
    {864000, {1, 2, 2}, {0, 0, 0, 0}},
    {4032000, {0, 2, 3}, {0, 0, 0, 0}},
    {-1728000, {0, 2, 4}, {0, 0, 0, 0}},
}};

// GammaK = -125 sqrt(5) / 36 * sum
const std::array<KTerm, 28> kGammaK = {{
    {720, {0, 1, 2}, {2, 0, 0, 0}},
    {-288, {1, 0, 1}, {1, 1, 0, 0}},
    {1440, {2, 0, 1}, {1, 1, 0, 0}},
    {-288, {2, 0, 0}, {0, 2, 0, 0}},
    {720, {2, 0, 1}, {0, 2, 0, 0}},
    {-288, {0, 1, 1}, {1, 0, 1, 0}},
    {1440, {0, 1, 2}, {1, 0, 1, 0}},
    {-180, {1, 0, 0}, {0, 1, 1, 0}},
    {792, {2, 0, 0}, {0, 1, 1, 0}},
    {192, {1, 1, 0}, {0, 1, 1, 0}},
    {-210, {0, 1, 0}, {0, 0, 2, 0}},
    {132, {1, 1, 0}, {0, 0, 2, 0}},
    {504, {0, 1, 1}, {0, 0, 2, 0}},
    {-180, {0, 0, 1}, {1, 0, 0, 1}},
    {792, {1, 0, 1}, {1, 0, 0, 1}},
    {480, {0, 1, 1}, {1, 0, 0, 1}},
    {-420, {1, 0, 0}, {0, 1, 0, 1}},
    {552, {2, 0, 0}, {0, 1, 0, 1}},
    {720, {1, 0, 1}, {0, 1, 0, 1}},
    {-90, {0, 0, 0}, {0, 0, 1, 1}},
    {360, {1, 0, 0}, {0, 0, 1, 1}},
    {72, {2, 0, 0}, {0, 0, 1, 1}},
    {480, {0, 1, 1}, {0, 0, 1, 1}},
    {-135, {0, 0, 0}, {0, 0, 0, 2}},
    {270, {1, 0, 0}, {0, 0, 0, 2}},
    {80, {0, 1, 0}, {0, 0, 0, 2}},
    {162, {0, 0, 1}, {0, 0, 0, 2}},
    {36, {1, 0, 1}, {0, 0, 0, 2}},
}};

}  // namespace qflow::tables
