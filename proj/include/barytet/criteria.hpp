#pragma once

#include "barytet/maps.hpp"

namespace barytet {

// T(a,b,c) is fundamental iff gcd(a,c) = gcd(b,c) = gcd(a+b-1,c) = 1.
inline bool is_fundamental_gcd(const GroundedTetra& g) {
    i64 c = g.c();
    return gcd_nonneg(g.a(), c) == 1 && gcd_nonneg(g.b(), c) == 1 &&
           gcd_nonneg(checked_sub(checked_add(g.a(), g.b()), 1), c) == 1;
}

// T(a,b,c) is primitive iff it is fundamental and one of
//   a = 1 (mod c),  b = 1 (mod c),  a + b = 0 (mod c)
// holds.  The three alternatives are labelled a, b, c in the case analysis.
inline bool is_primitive_gcd(const GroundedTetra& g) {
    if (!is_fundamental_gcd(g)) return false;
    i64 c = g.c();
    return mod_floor(checked_sub(g.a(), 1), c) == 0 || mod_floor(checked_sub(g.b(), 1), c) == 0 ||
           mod_floor(checked_add(g.a(), g.b()), c) == 0;
}

// Vertices of the j-th barycentre-cone sub-tetrahedron: the barycentre
// together with the face opposite vertex j.  Requires a lattice barycentre.
inline Tetrahedron sub_tetra(SubTetraIndex j, const GroundedTetra& g) {
    auto bc = lattice_barycentre(g.to_tetrahedron());
    if (!bc) throw std::invalid_argument("sub_tetra: barycentre is not a lattice point");
    switch (j.value()) {
        case 1: return Tetrahedron(kE1, kE2, *bc, g.apex());
        case 2: return Tetrahedron(kOrigin, kE2, *bc, g.apex());
        case 3: return Tetrahedron(kOrigin, kE1, *bc, g.apex());
        default: return Tetrahedron(kOrigin, kE1, kE2, *bc);
    }
}

// The grounded form of sub-tetrahedron j: the grounding map carries it onto
// T((a~+1)/4, (b~+1)/4, c/4) where (a~, b~) is the apex image of j.  Absent
// when a~ or b~ is not 3 mod 4 (the residue is well defined since 4 | c);
// that can only happen for inputs that are not barycentric candidates.
inline std::optional<GroundedTetra> sub_tetra_grounded(SubTetraIndex j, const GroundedTetra& g) {
    if (mod_floor(g.c(), 4) != 0) return std::nullopt;
    ApexImage im = apex_image(j, g);
    if (mod_floor(im.a_t, 4) != 3 || mod_floor(im.b_t, 4) != 3) return std::nullopt;
    return GroundedTetra((im.a_t + 1) / 4, (im.b_t + 1) / 4, g.c() / 4);
}

// Number-theoretic test for lattice barycentricity: the barycentre must be a
// lattice point, T must be fundamental, and all four grounded sub-tetrahedra
// must be primitive.  Does not assume 8 does not divide c; that fact must
// emerge from the sub-tetra tests themselves.
inline bool is_lattice_barycentric_criteria(const GroundedTetra& g) {
    if (mod_floor(g.a(), 4) != 3 || mod_floor(g.b(), 4) != 3 || mod_floor(g.c(), 4) != 0)
        return false;
    if (!is_fundamental_gcd(g)) return false;
    for (SubTetraIndex j : SubTetraIndex::all()) {
        auto sub = sub_tetra_grounded(j, g);
        if (!sub || !is_primitive_gcd(*sub)) return false;
    }
    return true;
}

}  // namespace barytet
