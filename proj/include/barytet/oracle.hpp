#pragma once

#include <algorithm>
#include <vector>

#include "barytet/lattice.hpp"

namespace barytet {

enum class PointClass { Vertex, Boundary, Interior, Outside };

// Exhaustive classification of the lattice points of a tetrahedron.  The three
// sets are pairwise disjoint and sorted lexicographically by (x, y, z).
struct LatticeCensus {
    std::vector<LatticePoint> vertices;
    std::vector<LatticePoint> boundary_nonvertex;
    std::vector<LatticePoint> interior;
};

namespace detail {

// The four barycentric numerators of a tetrahedron, as affine functionals
// N_i(p) = dot(n_i, p) + d_i.  With denominator normalised positive:
//   sum_i N_i(p) == denom for every p,
//   p in closure  <=>  all N_i(p) >= 0,
//   p in interior <=>  all N_i(p) > 0.
struct BarycentricFunctionals {
    std::array<LatticePoint, 4> n;
    std::array<i64, 4> d;
    i64 denom;

    explicit BarycentricFunctionals(const Tetrahedron& t) {
        const auto& v = t.vertices();
        LatticePoint e2 = v[1] - v[0], e3 = v[2] - v[0], e4 = v[3] - v[0];
        denom = det3(e2, e3, e4);
        // N_2, N_3, N_4 are the Cramer numerators for the coordinates along
        // e2, e3, e4; N_1 = denom - N_2 - N_3 - N_4.
        n[1] = cross(e3, e4);
        n[2] = cross(e4, e2);
        n[3] = cross(e2, e3);
        n[0] = -(n[1] + n[2] + n[3]);
        for (int i = 1; i < 4; ++i) d[static_cast<std::size_t>(i)] = checked_neg(dot(v[0], n[static_cast<std::size_t>(i)]));
        d[0] = checked_sub(denom, checked_add(checked_add(d[1], d[2]), d[3]));
        if (denom < 0) {
            for (auto& g : n) g = -g;
            for (auto& e : d) e = checked_neg(e);
            denom = checked_neg(denom);
        }
    }

    std::array<i64, 4> evaluate(const LatticePoint& p) const {
        std::array<i64, 4> r;
        for (std::size_t i = 0; i < 4; ++i) r[i] = checked_add(dot(n[i], p), d[i]);
        return r;
    }
};

inline PointClass classify_values(const Tetrahedron& t, const LatticePoint& p,
                                  const std::array<i64, 4>& num) {
    bool zero = false;
    for (i64 v : num) {
        if (v < 0) return PointClass::Outside;
        if (v == 0) zero = true;
    }
    if (!zero) return PointClass::Interior;
    const auto& vs = t.vertices();
    if (p == vs[0] || p == vs[1] || p == vs[2] || p == vs[3]) return PointClass::Vertex;
    return PointClass::Boundary;
}

struct Box {
    LatticePoint lo, hi;
};

inline Box bounding_box(const Tetrahedron& t) {
    Box b{t.vertex(0), t.vertex(0)};
    for (int i = 1; i < 4; ++i) {
        const auto& v = t.vertex(i);
        b.lo = {std::min(b.lo.x, v.x), std::min(b.lo.y, v.y), std::min(b.lo.z, v.z)};
        b.hi = {std::max(b.hi.x, v.x), std::max(b.hi.y, v.y), std::max(b.hi.z, v.z)};
    }
    return b;
}

// Scan every lattice point of the bounding box, visiting the points of the
// closed tetrahedron.  Visitor: bool(PointClass, const LatticePoint&); return
// false to stop early.  The numerators are updated incrementally along x;
// evaluating the affine functionals at all box corners first proves that no
// intermediate value can overflow.
template <typename Visitor>
void scan_box(const Tetrahedron& t, Visitor&& visit) {
    BarycentricFunctionals f(t);
    Box box = bounding_box(t);
    for (i64 cx : {box.lo.x, box.hi.x})
        for (i64 cy : {box.lo.y, box.hi.y})
            for (i64 cz : {box.lo.z, box.hi.z}) (void)f.evaluate({cx, cy, cz});

    for (i64 z = box.lo.z; z <= box.hi.z; ++z) {
        for (i64 y = box.lo.y; y <= box.hi.y; ++y) {
            std::array<i64, 4> num = f.evaluate({box.lo.x, y, z});
            for (i64 x = box.lo.x;; ++x) {
                LatticePoint p{x, y, z};
                PointClass c = classify_values(t, p, num);
                if (c != PointClass::Outside && !visit(c, p)) return;
                if (x == box.hi.x) break;
                for (std::size_t i = 0; i < 4; ++i) num[i] += f.n[i].x;
            }
        }
    }
}

}  // namespace detail

// Exact barycentric-coordinate classification of a single lattice point.
inline PointClass classify_point(const Tetrahedron& t, const LatticePoint& p) {
    detail::BarycentricFunctionals f(t);
    return detail::classify_values(t, p, f.evaluate(p));
}

inline LatticeCensus census(const Tetrahedron& t) {
    LatticeCensus out;
    detail::scan_box(t, [&](PointClass c, const LatticePoint& p) {
        switch (c) {
            case PointClass::Vertex: out.vertices.push_back(p); break;
            case PointClass::Boundary: out.boundary_nonvertex.push_back(p); break;
            case PointClass::Interior: out.interior.push_back(p); break;
            case PointClass::Outside: break;
        }
        return true;
    });
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.boundary_nonvertex.begin(), out.boundary_nonvertex.end());
    std::sort(out.interior.begin(), out.interior.end());
    return out;
}

// Boundary contains no lattice points beyond the four vertices.
inline bool is_fundamental_oracle(const Tetrahedron& t) {
    bool ok = true;
    detail::scan_box(t, [&](PointClass c, const LatticePoint&) {
        if (c == PointClass::Boundary) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// Fundamental with empty lattice interior.
inline bool is_primitive_oracle(const Tetrahedron& t) {
    bool ok = true;
    detail::scan_box(t, [&](PointClass c, const LatticePoint&) {
        if (c == PointClass::Boundary || c == PointClass::Interior) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// Fundamental with the barycentre as the single interior lattice point.
inline bool is_lattice_barycentric_oracle(const Tetrahedron& t) {
    auto bc = lattice_barycentre(t);
    if (!bc) return false;
    bool ok = true;
    bool saw_bc = false;
    detail::scan_box(t, [&](PointClass c, const LatticePoint& p) {
        if (c == PointClass::Boundary || (c == PointClass::Interior && p != *bc)) {
            ok = false;
            return false;
        }
        if (c == PointClass::Interior) saw_bc = true;
        return true;
    });
    return ok && saw_bc;
}

inline bool is_fundamental_oracle(const GroundedTetra& g) {
    return is_fundamental_oracle(g.to_tetrahedron());
}
inline bool is_primitive_oracle(const GroundedTetra& g) {
    return is_primitive_oracle(g.to_tetrahedron());
}
inline bool is_lattice_barycentric_oracle(const GroundedTetra& g) {
    return is_lattice_barycentric_oracle(g.to_tetrahedron());
}

}  // namespace barytet
