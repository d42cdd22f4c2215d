#pragma once

#include <array>
#include <vector>

#include "qflow/core_geometry.hpp"

namespace qflow {

/// Bijection of {0..4}; images[j] is where j goes.
struct Permutation {
    std::array<int, 5> images{0, 1, 2, 3, 4};

    static Permutation identity() { return {}; }
    /// Swap of two 0-based indices.
    static Permutation transposition(int i, int j);
    /// (this o other)(j) = this(other(j))
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_even() const;
    bool operator==(const Permutation&) const = default;
};

/// Throws InvalidInput unless images is a bijection of {0..4}.
Permutation make_permutation(const std::array<int, 5>& images);

enum class Parity { Even, Odd };

struct GroupElement {
    Permutation perm;
    Mat4 matrix_u;  ///< H P conj(H)^T
    Parity parity = Parity::Even;

    PointU apply(const PointU& p) const { return PointU{matrix_u * p.c}; }
    /// Action on x-coordinates: moves coordinate j to position perm(j).
    PointX apply(const PointX& p) const;
};

GroupElement element(const Permutation& perm);

/// All 120 elements in lexicographic order of images; built once.
const std::vector<GroupElement>& all_elements();

/// Projectively distinct images of p under the group (identified below tol).
std::vector<PointU> orbit(const PointU& p, double tol = 1e-9);

int stabilizer_order(const PointU& p, double tol = 1e-9);

}  // namespace qflow
