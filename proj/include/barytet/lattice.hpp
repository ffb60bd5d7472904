#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>

#include "barytet/int_arith.hpp"

namespace barytet {

// A point of the integer lattice Z^3.
struct LatticePoint {
    i64 x{0};
    i64 y{0};
    i64 z{0};

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const {
        return {checked_add(x, o.x), checked_add(y, o.y), checked_add(z, o.z)};
    }
    LatticePoint operator-(const LatticePoint& o) const {
        return {checked_sub(x, o.x), checked_sub(y, o.y), checked_sub(z, o.z)};
    }
    LatticePoint operator-() const {
        return {checked_neg(x), checked_neg(y), checked_neg(z)};
    }
    LatticePoint operator*(i64 k) const {
        return {checked_mul(x, k), checked_mul(y, k), checked_mul(z, k)};
    }
};

inline i64 dot(const LatticePoint& a, const LatticePoint& b) {
    return checked_add(checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)),
                       checked_mul(a.z, b.z));
}

inline LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
    return {checked_sub(checked_mul(a.y, b.z), checked_mul(a.z, b.y)),
            checked_sub(checked_mul(a.z, b.x), checked_mul(a.x, b.z)),
            checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x))};
}

// det of the 3x3 matrix whose columns are a, b, c.
inline i64 det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return dot(a, cross(b, c));
}

inline constexpr LatticePoint kOrigin{0, 0, 0};
inline constexpr LatticePoint kE1{1, 0, 0};
inline constexpr LatticePoint kE2{0, 1, 0};
inline constexpr LatticePoint kE3{0, 0, 1};

// Exact 3x3 integer matrix, row-major.
struct IntMatrix3 {
    std::array<i64, 9> m{};

    friend bool operator==(const IntMatrix3&, const IntMatrix3&) = default;

    i64& at(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
    i64 at(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }

    static IntMatrix3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    static IntMatrix3 from_columns(const LatticePoint& c0, const LatticePoint& c1,
                                   const LatticePoint& c2) {
        return {{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
    }

    LatticePoint column(int c) const { return {at(0, c), at(1, c), at(2, c)}; }
    LatticePoint row(int r) const { return {at(r, 0), at(r, 1), at(r, 2)}; }

    LatticePoint operator*(const LatticePoint& p) const {
        return {dot(row(0), p), dot(row(1), p), dot(row(2), p)};
    }

    IntMatrix3 operator*(const IntMatrix3& o) const {
        IntMatrix3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.at(i, j) = dot(row(i), o.column(j));
        return r;
    }

    i64 det() const { return det3(column(0), column(1), column(2)); }

    // Transpose of the cofactor matrix; A * adjugate(A) = det(A) * I.
    IntMatrix3 adjugate() const {
        auto cof = [&](int r, int c) {
            int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
            int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
            return checked_sub(checked_mul(at(r1, c1), at(r2, c2)),
                               checked_mul(at(r1, c2), at(r2, c1)));
        };
        IntMatrix3 adj;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                adj.at(i, j) = cof(j, i);
        return adj;
    }
};

// Affine map v -> A*v + b with A integral and det(A) = +-1: exactly the maps
// that preserve the lattice and (unsigned) volume.
class AffineUnimodularMap {
  public:
    AffineUnimodularMap(const IntMatrix3& matrix, const LatticePoint& translation)
        : mat_(matrix), shift_(translation) {
        i64 d = mat_.det();
        if (d != 1 && d != -1)
            throw std::invalid_argument("AffineUnimodularMap: matrix determinant must be +-1");
    }

    static AffineUnimodularMap identity() {
        return AffineUnimodularMap(IntMatrix3::identity(), kOrigin);
    }

    const IntMatrix3& matrix() const { return mat_; }
    const LatticePoint& translation() const { return shift_; }

    LatticePoint apply(const LatticePoint& p) const { return mat_ * p + shift_; }

    friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

  private:
    IntMatrix3 mat_;
    LatticePoint shift_;
};

inline LatticePoint apply(const AffineUnimodularMap& m, const LatticePoint& p) {
    return m.apply(p);
}

// compose(m1, m2) acts as m1 after m2.
inline AffineUnimodularMap compose(const AffineUnimodularMap& m1, const AffineUnimodularMap& m2) {
    return AffineUnimodularMap(m1.matrix() * m2.matrix(),
                               m1.matrix() * m2.translation() + m1.translation());
}

inline AffineUnimodularMap invert(const AffineUnimodularMap& m) {
    i64 d = m.matrix().det();  // +-1, so 1/d == d
    IntMatrix3 inv = m.matrix().adjugate();
    for (auto& e : inv.m) e = checked_mul(e, d);
    return AffineUnimodularMap(inv, -(inv * m.translation()));
}

// Lattice tetrahedron given by its four vertices; rejects degenerate input.
class Tetrahedron {
  public:
    Tetrahedron(const LatticePoint& v1, const LatticePoint& v2, const LatticePoint& v3,
                const LatticePoint& v4)
        : v_{v1, v2, v3, v4} {
        if (det3(v2 - v1, v3 - v1, v4 - v1) == 0)
            throw std::invalid_argument("Tetrahedron: vertices are coplanar");
    }

    const std::array<LatticePoint, 4>& vertices() const { return v_; }
    const LatticePoint& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;

  private:
    std::array<LatticePoint, 4> v_;
};

// 6 * volume, always a positive integer for a valid Tetrahedron.
inline i64 volume6(const Tetrahedron& t) {
    const auto& v = t.vertices();
    i64 d = det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]);
    return d < 0 ? checked_neg(d) : d;
}

// Sum of the four vertices: the barycentre scaled by 4, kept integral.
inline LatticePoint barycentre4(const Tetrahedron& t) {
    const auto& v = t.vertices();
    return v[0] + v[1] + v[2] + v[3];
}

// The barycentre itself, when it is a lattice point.
inline std::optional<LatticePoint> lattice_barycentre(const Tetrahedron& t) {
    LatticePoint s = barycentre4(t);
    if (mod_floor(s.x, 4) != 0 || mod_floor(s.y, 4) != 0 || mod_floor(s.z, 4) != 0)
        return std::nullopt;
    return LatticePoint{s.x / 4, s.y / 4, s.z / 4};
}

inline Tetrahedron map_tetrahedron(const AffineUnimodularMap& m, const Tetrahedron& t) {
    return Tetrahedron(m.apply(t.vertex(0)), m.apply(t.vertex(1)), m.apply(t.vertex(2)),
                       m.apply(t.vertex(3)));
}

// The unique affine map sending src[i] -> dst[i], when it is integral with
// det(A) = +-1.  src must be affinely independent.  All arithmetic stays in
// integers: A = N * adjugate(M) / det(M), accepted only if the division is
// exact entrywise.
inline std::optional<AffineUnimodularMap> affine_map_through(
    const std::array<LatticePoint, 4>& src, const std::array<LatticePoint, 4>& dst) {
    IntMatrix3 m = IntMatrix3::from_columns(src[1] - src[0], src[2] - src[0], src[3] - src[0]);
    i64 md = m.det();
    if (md == 0) throw std::invalid_argument("affine_map_through: source points are coplanar");
    IntMatrix3 n = IntMatrix3::from_columns(dst[1] - dst[0], dst[2] - dst[0], dst[3] - dst[0]);
    IntMatrix3 num = n * m.adjugate();
    IntMatrix3 a;
    for (std::size_t i = 0; i < 9; ++i) {
        if (num.m[i] % md != 0) return std::nullopt;
        a.m[i] = num.m[i] / md;
    }
    i64 ad = a.det();
    if (ad != 1 && ad != -1) return std::nullopt;
    return AffineUnimodularMap(a, dst[0] - a * src[0]);
}

// T(a,b,c): the grounded tetrahedron with vertices 0, e1, e2 and apex (a,b,c).
// c is normalised to be positive (negating z is unimodular and fixes the other
// three vertices).
class GroundedTetra {
  public:
    GroundedTetra(i64 a, i64 b, i64 c) : a_(a), b_(b), c_(c) {
        if (c_ == 0) throw std::invalid_argument("GroundedTetra: c must be nonzero");
        if (c_ < 0) c_ = checked_neg(c_);
    }

    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }

    LatticePoint apex() const { return {a_, b_, c_}; }

    Tetrahedron to_tetrahedron() const { return Tetrahedron(kOrigin, kE1, kE2, apex()); }

    friend bool operator==(const GroundedTetra&, const GroundedTetra&) = default;
    friend auto operator<=>(const GroundedTetra&, const GroundedTetra&) = default;

  private:
    i64 a_, b_, c_;
};

}  // namespace barytet
