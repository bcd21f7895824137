#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "sweeprec/rational.hpp"

namespace sweeprec {

/// Dimension of the affine hull of a nonempty point set.
int affine_dim(std::span<const Vector> points);

/// Orthogonal (unnormalized, primitive-integer) basis of the complement of
/// the direction space of aff(points). When `keep` is given it must be
/// orthogonal to every edge vector and becomes the first basis vector.
/// Remaining vectors come from the standard basis in index order.
/// Throws NoPerpendicular when the points affinely span the ambient space.
std::vector<Vector> complement_basis(std::span<const Vector> points,
                                     const std::optional<Vector>& keep = std::nullopt);

/// True when v is orthogonal to every edge vector of the point set.
bool is_perpendicular(const Vector& v, std::span<const Vector> points);

enum class Side { Below, On, Above };

/// Position of v relative to the hyperplane <s, x> = height.
Side halfspace_side(const Vector& s, const Scalar& height, const Vector& v);

/// An angle in [0, 2*pi) on a DirectionCircle, stored as the coefficients of
/// the direction c*u + s*w in the circle's (u, w) frame. Comparisons use only
/// quadrant signs and cross products, so the unnormalized frame is harmless:
/// keys on the same circle order exactly like their angles.
class AngleKey {
public:
    AngleKey(Scalar c, Scalar s);

    static AngleKey zero() { return {1, 0}; }
    static AngleKey pi() { return {-1, 0}; }

    const Scalar& c() const { return c_; }
    const Scalar& s() const { return s_; }

    /// 0..3 for [0, pi/2), [pi/2, pi), [pi, 3pi/2), [3pi/2, 2pi).
    int quadrant() const;
    /// Angle lies in [0, pi].
    bool at_most_pi() const { return sgn(s_) >= 0; }
    AngleKey opposite() const { return {-c_, -s_}; }

    friend std::weak_ordering operator<=>(const AngleKey& a, const AngleKey& b);
    friend bool operator==(const AngleKey& a, const AngleKey& b) { return (a <=> b) == 0; }

private:
    Scalar c_;
    Scalar s_;
};

enum class CircleMode {
    Perpendicular,  // u and w both orthogonal to the simplex
    Codim1,         // simplex spans a hyperplane; u is its normal, w anything orthogonal to u
};

/// A circle of directions gamma(alpha) = cos(alpha) u/|u| + sin(alpha) w/|w|,
/// centred on `base`, a point of the simplex's affine hull.
struct DirectionCircle {
    Vector base;
    Vector u;
    Vector w;
    CircleMode mode = CircleMode::Perpendicular;

    /// Direction for a key, up to positive scaling.
    Vector direction_at(const AngleKey& key) const;
    DirectionCircle rebased(Vector new_base) const;
};

struct GammaNormal {
    AngleKey key;
    Vector direction;  // primitive integer form
};

/// Angle and direction at which the halfspace rotating about the circle's
/// base has p on its boundary. A point projecting onto the base gets angle 0.
/// In Codim1 mode the result is angle 0 (p on or above) or pi (p below).
GammaNormal gamma_normal(const DirectionCircle& circle, const Vector& p);

/// A maximally perpendicular circle through s for the given simplex points,
/// chosen deterministically (w from complement_basis).
DirectionCircle maximal_circle(std::span<const Vector> simplex_points, const Vector& s);

/// conv(A) and conv(B) meet exactly in conv(A n B). A and B are sorted vertex
/// id lists into `table`.
bool injective_pair_test(std::span<const Vector> table, std::span<const VertexId> a,
                         std::span<const VertexId> b);

/// Axis-aligned exact bounding box, used to skip pair tests.
struct BoundingBox {
    Vector lo;
    Vector hi;

    static BoundingBox of(std::span<const Vector> table, std::span<const VertexId> ids);
    bool overlaps(const BoundingBox& other) const;
};

}  // namespace sweeprec
