#pragma once

#include <algorithm>

#include "barytet/criteria.hpp"
#include "barytet/oracle.hpp"

namespace barytet {

inline const GroundedTetra kClassT334{3, 3, 4};
inline const GroundedTetra kClassT71120{7, 11, 20};

enum class ClassKind { T334, T71120, Other };

inline const char* class_kind_name(ClassKind k) {
    switch (k) {
        case ClassKind::T334: return "T(3,3,4)";
        case ClassKind::T71120: return "T(7,11,20)";
        default: return "Other";
    }
}

// Decide unimodular equivalence.  An affine bijection between tetrahedra must
// send vertices to vertices, so it suffices to solve exactly for the affine
// map through each of the 24 vertex assignments and accept the first integral
// one with det +-1.  Volume is an invariant, so unequal volume6 settles the
// question immediately.
inline std::optional<AffineUnimodularMap> is_equivalent(const Tetrahedron& t1,
                                                        const Tetrahedron& t2) {
    if (volume6(t1) != volume6(t2)) return std::nullopt;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        std::array<LatticePoint, 4> dst;
        for (int i = 0; i < 4; ++i)
            dst[static_cast<std::size_t>(i)] = t2.vertex(perm[static_cast<std::size_t>(i)]);
        if (auto m = affine_map_through(t1.vertices(), dst)) return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline std::optional<AffineUnimodularMap> is_equivalent(const GroundedTetra& g1,
                                                        const GroundedTetra& g2) {
    return is_equivalent(g1.to_tetrahedron(), g2.to_tetrahedron());
}

// Which of the two canonical classes a lattice barycentric tetrahedron belongs
// to.  Rejects input that the point oracle does not confirm as barycentric.
inline ClassKind classify(const GroundedTetra& g) {
    if (!is_lattice_barycentric_oracle(g))
        throw std::invalid_argument("classify: input is not lattice barycentric");
    if (is_equivalent(g, kClassT334)) return ClassKind::T334;
    if (is_equivalent(g, kClassT71120)) return ClassKind::T71120;
    return ClassKind::Other;
}

struct SearchHit {
    GroundedTetra tetra;
    ClassKind label;
};

// Exhaustive, oracle-driven confirmation of the classification: every
// lattice barycentric T(a,b,c) has a = b = 3 (mod 4) and c = 0 (mod 4), and
// representatives a, b in [0, c) suffice because the shear (x,y,z) ->
// (x+z,y,z) is unimodular, fixes the ground face and moves a by c.  Each
// candidate is judged by the brute-force point census alone; no gcd shortcut.
inline std::vector<SearchHit> search(i64 c_max) {
    if (c_max < 4) throw std::invalid_argument("search: c_max must be at least 4");
    std::vector<SearchHit> hits;
    for (i64 c = 4; c <= c_max; c += 4)
        for (i64 a = 3; a < c; a += 4)
            for (i64 b = 3; b < c; b += 4) {
                GroundedTetra g(a, b, c);
                if (!is_lattice_barycentric_oracle(g)) continue;
                hits.push_back({g, classify(g)});
            }
    return hits;
}

}  // namespace barytet
