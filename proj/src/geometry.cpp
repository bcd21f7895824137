#include "sweeprec/geometry.hpp"

#include <algorithm>

#include "lp.hpp"
#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

std::vector<Vector> edge_vectors(std::span<const Vector> points) {
    std::vector<Vector> edges;
    for (std::size_t i = 1; i < points.size(); ++i) edges.push_back(sub(points[i], points[0]));
    return edges;
}

Vector unit_vector(std::size_t d, std::size_t k) {
    Vector e(d, Scalar(0));
    e[k] = 1;
    return e;
}

void require_points(std::span<const Vector> points) {
    if (points.empty()) throw Error(ErrorKind::InvalidInput, "empty point set");
    for (const Vector& p : points) {
        if (p.size() != points[0].size()) throw Error(ErrorKind::InvalidInput, "mixed point dimensions");
    }
}

}  // namespace

int affine_dim(std::span<const Vector> points) {
    require_points(points);
    return rank(edge_vectors(points));
}

bool is_perpendicular(const Vector& v, std::span<const Vector> points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (sgn(dot(v, sub(points[i], points[0]))) != 0) return false;
    }
    return true;
}

std::vector<Vector> complement_basis(std::span<const Vector> points, const std::optional<Vector>& keep) {
    require_points(points);
    const std::size_t d = points[0].size();
    std::vector<Vector> span = gram_schmidt(edge_vectors(points));
    if (span.size() >= d) {
        throw Error(ErrorKind::NoPerpendicular,
                    "simplex spans R^" + std::to_string(d) + "; no perpendicular direction exists");
    }
    std::vector<Vector> out;
    if (keep) {
        if (keep->size() != d || is_zero(*keep)) throw Error(ErrorKind::InvalidInput, "bad kept direction");
        if (!is_perpendicular(*keep, points)) {
            throw Error(ErrorKind::InvalidInput, "kept direction is not perpendicular to the simplex");
        }
        out.push_back(*keep);
        span.push_back(*keep);
    }
    for (std::size_t k = 0; k < d && span.size() < d; ++k) {
        Vector r = primitive(orthogonalize(unit_vector(d, k), span));
        if (is_zero(r)) continue;
        span.push_back(r);
        out.push_back(std::move(r));
    }
    return out;
}

Side halfspace_side(const Vector& s, const Scalar& height, const Vector& v) {
    int c = cmp(dot(s, v), height);
    if (c < 0) return Side::Below;
    if (c == 0) return Side::On;
    return Side::Above;
}

AngleKey::AngleKey(Scalar c, Scalar s) : c_(std::move(c)), s_(std::move(s)) {
    if (sgn(c_) == 0 && sgn(s_) == 0) throw Error(ErrorKind::InvalidInput, "zero angle key");
}

int AngleKey::quadrant() const {
    int sc = sgn(c_);
    int ss = sgn(s_);
    if (sc > 0 && ss >= 0) return 0;
    if (sc <= 0 && ss > 0) return 1;
    if (sc < 0 && ss <= 0) return 2;
    return 3;
}

std::weak_ordering operator<=>(const AngleKey& a, const AngleKey& b) {
    int qa = a.quadrant();
    int qb = b.quadrant();
    if (qa != qb) return qa <=> qb;
    int cross = sgn(a.c_ * b.s_ - a.s_ * b.c_);
    if (cross > 0) return std::weak_ordering::less;
    if (cross < 0) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

Vector DirectionCircle::direction_at(const AngleKey& key) const {
    return add(scaled(u, key.c()), scaled(w, key.s()));
}

DirectionCircle DirectionCircle::rebased(Vector new_base) const {
    DirectionCircle out = *this;
    out.base = std::move(new_base);
    return out;
}

GammaNormal gamma_normal(const DirectionCircle& circle, const Vector& p) {
    Vector rel = sub(p, circle.base);
    Scalar a = dot(rel, circle.u);
    if (circle.mode == CircleMode::Codim1) {
        if (sgn(a) >= 0) return {AngleKey::zero(), primitive(circle.u)};
        return {AngleKey::pi(), primitive(negated(circle.u))};
    }
    Scalar b = dot(rel, circle.w);
    if (sgn(a) == 0 && sgn(b) == 0) return {AngleKey::zero(), primitive(circle.u)};
    Vector dir = add(scaled(circle.u, -b), scaled(circle.w, a));
    return {AngleKey(-b, a), primitive(dir)};
}

DirectionCircle maximal_circle(std::span<const Vector> simplex_points, const Vector& s) {
    require_points(simplex_points);
    const std::size_t d = simplex_points[0].size();
    if (s.size() != d || is_zero(s)) throw Error(ErrorKind::InvalidInput, "bad circle direction");
    int k = affine_dim(simplex_points);
    if (static_cast<std::size_t>(k) + 1 == d) {
        if (!is_perpendicular(s, simplex_points)) {
            throw Error(ErrorKind::NotPerpendicular, "direction " + format_vector(s) + " is not perpendicular");
        }
        std::vector<Vector> span{s};
        for (std::size_t i = 0; i < d; ++i) {
            Vector r = primitive(orthogonalize(unit_vector(d, i), span));
            if (!is_zero(r)) return {simplex_points[0], s, std::move(r), CircleMode::Codim1};
        }
    }
    std::vector<Vector> basis = complement_basis(simplex_points, s);
    return {simplex_points[0], s, basis.at(1), CircleMode::Perpendicular};
}

BoundingBox BoundingBox::of(std::span<const Vector> table, std::span<const VertexId> ids) {
    BoundingBox box{table[ids[0]], table[ids[0]]};
    for (VertexId id : ids) {
        const Vector& p = table[id];
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] < box.lo[k]) box.lo[k] = p[k];
            if (p[k] > box.hi[k]) box.hi[k] = p[k];
        }
    }
    return box;
}

bool BoundingBox::overlaps(const BoundingBox& other) const {
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (hi[k] < other.lo[k] || other.hi[k] < lo[k]) return false;
    }
    return true;
}

namespace {

bool affinely_independent(std::span<const Vector> table, std::span<const VertexId> ids) {
    std::vector<Vector> pts;
    for (VertexId id : ids) pts.push_back(table[id]);
    return affine_dim(pts) + 1 == static_cast<int>(ids.size());
}

}  // namespace

bool injective_pair_test(std::span<const Vector> table, std::span<const VertexId> a,
                         std::span<const VertexId> b) {
    if (a.empty() || b.empty()) return true;
    const std::size_t d = table[a[0]].size();
    for (VertexId id : a) {
        if (table[id].size() != d) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
    }
    for (VertexId id : b) {
        if (table[id].size() != d) throw Error(ErrorKind::InvalidInput, "dimension mismatch");
    }
    if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
        std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        return true;
    }
    if (!BoundingBox::of(table, a).overlaps(BoundingBox::of(table, b))) return true;

    auto shared = [&](std::span<const VertexId> ids, VertexId id) {
        return std::binary_search(ids.begin(), ids.end(), id);
    };
    // A point whose barycentric support leaves the shared face is a witness,
    // provided barycentric coordinates are unique on that side.
    bool mark_a = affinely_independent(table, a);
    bool mark_b = !mark_a && affinely_independent(table, b);
    if (!mark_a && !mark_b) mark_a = mark_b = true;

    const std::size_t n = a.size() + b.size();
    std::vector<Vector> rows(d + 2, Vector(n, Scalar(0)));
    Vector rhs(d + 2, Scalar(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
        for (std::size_t k = 0; k < d; ++k) rows[k][j] = table[a[j]][k];
        rows[d][j] = 1;
        if (mark_a && !shared(b, a[j])) rows[d + 1][j] = 1;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        const std::size_t col = a.size() + j;
        for (std::size_t k = 0; k < d; ++k) rows[k][col] = -table[b[j]][k];
        rows[d][col] = -1;
        if (mark_b && !shared(a, b[j])) rows[d + 1][col] = 1;
    }
    rhs[d + 1] = 1;
    return !detail::lp_feasible(std::move(rows), std::move(rhs));
}

}  // namespace sweeprec
