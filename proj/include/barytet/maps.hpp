#pragma once

#include "barytet/lattice.hpp"

namespace barytet {

// Index of one of the four barycentre-cone sub-tetrahedra of a grounded
// tetrahedron: sub-tetra j is the cone from the barycentre over the face
// opposite the j-th vertex in the order (0, e1, e2, apex).  The grounding map
// for index j carries sub-tetra j onto grounded position.
class SubTetraIndex {
  public:
    explicit SubTetraIndex(int j) : j_(j) {
        if (j < 1 || j > 4) throw std::invalid_argument("SubTetraIndex: must be 1..4");
    }
    int value() const { return j_; }
    static std::array<SubTetraIndex, 4> all() {
        return {SubTetraIndex(1), SubTetraIndex(2), SubTetraIndex(3), SubTetraIndex(4)};
    }
    friend bool operator==(const SubTetraIndex&, const SubTetraIndex&) = default;

  private:
    int j_;
};

// Inverse of x modulo m, in [0, m).  Extended Euclid; requires gcd(x, m) = 1.
inline i64 mod_inverse(i64 x, i64 m) {
    if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    i64 r0 = m, r1 = mod_floor(x, m);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = checked_sub(s0, checked_mul(q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(s0, m);
}

// Where the apex (a,b,c) lands, mod c, under the grounding map of a
// sub-tetrahedron.  Both residues are canonical representatives in [0, c).
struct ApexImage {
    i64 a_t;
    i64 b_t;
    i64 c;

    friend bool operator==(const ApexImage&, const ApexImage&) = default;
};

// The congruences satisfied by the apex image for each sub-tetra index:
//   j=1: (a+b-1)^-1 * (a, b),   j=2: (a^-1, -a^-1 b),
//   j=3: (-b^-1 a, b^-1),       j=4: (a, b),          all mod c.
// Solvable exactly when T(a,b,c) is fundamental.
inline ApexImage apex_image(SubTetraIndex j, const GroundedTetra& g) {
    const i64 c = g.c();
    const i64 a = mod_floor(g.a(), c);
    const i64 b = mod_floor(g.b(), c);
    switch (j.value()) {
        case 1: {
            i64 inv = mod_inverse(checked_sub(checked_add(a, b), 1), c);
            return {mod_floor(checked_mul(inv, a), c), mod_floor(checked_mul(inv, b), c), c};
        }
        case 2: {
            i64 inv = mod_inverse(a, c);
            return {inv, mod_floor(checked_neg(checked_mul(inv, b)), c), c};
        }
        case 3: {
            i64 inv = mod_inverse(b, c);
            return {mod_floor(checked_neg(checked_mul(inv, a)), c), inv, c};
        }
        default:
            return {a, b, c};
    }
}

// The affine unimodular map that grounds sub-tetrahedron j.  Its action on the
// four vertices of T(a,b,c):
//   j=1: 0 -> apex image, e1 -> e1, e2 -> e2, apex -> 0
//   j=2: 0 -> 0, e1 -> apex image, e2 -> e2, apex -> e1
//   j=3: 0 -> 0, e1 -> e1, e2 -> apex image, apex -> e2
//   j=4: identity
// The matrix is solved exactly from these four images; the apex-image
// congruences make it integral, and it has det +-1 because it carries a
// volume-c tetrahedron to a volume-c tetrahedron.
inline AffineUnimodularMap grounding_map(SubTetraIndex j, const GroundedTetra& g) {
    if (j.value() == 4) return AffineUnimodularMap::identity();
    ApexImage im = apex_image(j, g);
    LatticePoint target{im.a_t, im.b_t, im.c};
    std::array<LatticePoint, 4> src{kOrigin, kE1, kE2, g.apex()};
    std::array<LatticePoint, 4> dst;
    switch (j.value()) {
        case 1: dst = {target, kE1, kE2, kOrigin}; break;
        case 2: dst = {kOrigin, target, kE2, kE1}; break;
        default: dst = {kOrigin, kE1, target, kE2}; break;
    }
    auto m = affine_map_through(src, dst);
    if (!m)
        throw std::logic_error("grounding_map: vertex images do not define a unimodular map");
    return *m;
}

}  // namespace barytet
