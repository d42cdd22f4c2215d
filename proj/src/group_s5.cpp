#include "qflow/group_s5.hpp"

#include <algorithm>

namespace qflow {

Permutation Permutation::transposition(int i, int j) {
    Permutation p;
    std::swap(p.images[i], p.images[j]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    Permutation r;
    for (int j = 0; j < 5; ++j) r.images[j] = images[other.images[j]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    for (int j = 0; j < 5; ++j) r.images[images[j]] = j;
    return r;
}

bool Permutation::is_even() const {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (images[i] > images[j]) ++inversions;
    return inversions % 2 == 0;
}

Permutation make_permutation(const std::array<int, 5>& images) {
    std::array<bool, 5> seen{};
    for (int v : images) {
        if (v < 0 || v > 4 || seen[v]) throw Error(ErrorCode::InvalidInput, "not a permutation of {0..4}");
        seen[v] = true;
    }
    return Permutation{images};
}

PointX GroupElement::apply(const PointX& p) const {
    PointX r;
    for (int j = 0; j < 5; ++j) r.c[perm.images[j]] = p.c[j];
    return r;
}

GroupElement element(const Permutation& perm) {
    const auto& h = hyperplane_matrix();
    GroupElement g;
    g.perm = perm;
    g.parity = perm.is_even() ? Parity::Even : Parity::Odd;
    // (H P conj(H)^T)_{kl} = sum_j H[k][perm(j)] conj(H[l][j])
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            Complex s = 0;
            for (int j = 0; j < 5; ++j) s += h[k][perm.images[j]] * std::conj(h[l][j]);
            g.matrix_u(k, l) = s;
        }
    return g;
}

const std::vector<GroupElement>& all_elements() {
    static const std::vector<GroupElement> elems = [] {
        std::vector<GroupElement> out;
        std::array<int, 5> a{0, 1, 2, 3, 4};
        do {
            out.push_back(element(Permutation{a}));
        } while (std::next_permutation(a.begin(), a.end()));
        return out;
    }();
    return elems;
}

std::vector<PointU> orbit(const PointU& p, double tol) {
    std::vector<PointU> out;
    for (const auto& g : all_elements()) {
        PointU q = normalize(g.apply(p));
        bool dup = false;
        for (const auto& o : out)
            if (chordal_distance(o, q) < tol) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(q);
    }
    return out;
}

int stabilizer_order(const PointU& p, double tol) { return 120 / static_cast<int>(orbit(p, tol).size()); }

}  // namespace qflow
