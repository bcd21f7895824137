#pragma once

// Fixtures and brute-force reference computations shared by the tests. The
// references deliberately avoid the library's own predicates.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sweeprec/candidates.hpp"
#include "sweeprec/complex.hpp"
#include "sweeprec/geometry.hpp"
#include "sweeprec/rational.hpp"

namespace fixtures {

using namespace sweeprec;

inline Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline SimplicialComplex make(int d, std::vector<Vector> pts, std::vector<Simplex> maximal) {
    return SimplicialComplex::from_maximal(d, std::move(pts), maximal);
}

/// Triangle (0,0), (2,0), (1,1).
inline SimplicialComplex t1() { return make(2, {vec({0, 0}), vec({2, 0}), vec({1, 1})}, {{0, 1, 2}}); }

/// Path (0,0) - (1,1) - (2,0).
inline SimplicialComplex p1() { return make(2, {vec({0, 0}), vec({1, 1}), vec({2, 0})}, {{0, 1}, {1, 2}}); }

/// Four collinear points joined as a path.
inline SimplicialComplex l4() {
    return make(2, {vec({0, 0}), vec({1, 0}), vec({2, 0}), vec({3, 0})}, {{0, 1}, {1, 2}, {2, 3}});
}

/// Centre 0 at the origin, candidates A=(-1,1), B=(0,1), C=(1,1), D=(0,-1);
/// only the edges to C and D exist.
inline SimplicialComplex star() {
    return make(2, {vec({0, 0}), vec({-1, 1}), vec({0, 1}), vec({1, 1}), vec({0, -1})}, {{0, 3}, {0, 4}});
}

/// Two triangles sharing an edge plus a disjoint edge.
inline SimplicialComplex fig3a() {
    return make(2, {vec({0, 0}), vec({2, 0}), vec({1, 2}), vec({1, -2}), vec({4, 0}), vec({5, 1})},
                {{0, 1, 2}, {0, 1, 3}, {4, 5}});
}

/// A triangle pierced through its interior by an edge sharing none of its vertices.
inline SimplicialComplex fig3b() {
    return make(3, {vec({0, 0, 0}), vec({4, 0, 0}), vec({0, 4, 0}), vec({1, 1, -1}), vec({1, 1, 1})},
                {{0, 1, 2}, {3, 4}});
}

/// The 2-skeleton of a tetrahedron flattened into the plane.
inline SimplicialComplex flat_tetrahedron() {
    return make(2, {vec({0, 0}), vec({4, 0}), vec({0, 4}), vec({1, 1})}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// A three-dimensional complex with nine vertices stacked by height along
/// (0,1,0); most of it lies in the plane z = 0.
inline SimplicialComplex worked_example() {
    return make(3,
                {vec({0, 0, 0}), vec({8, 1, 0}), vec({-4, 2, 0}), vec({6, 3, 5}), vec({3, 5, 0}), vec({0, 6, -4}),
                 vec({-6, 7, 0}), vec({10, 8, 0}), vec({-3, 9, 0})},
                {{0, 5}, {1, 4}, {1, 7}, {0, 2, 4}, {2, 6, 8}, {2, 8, 4}, {2, 8, 3}});
}

}  // namespace fixtures

namespace reference {

using namespace sweeprec;

/// Unique solution of rows * x = rhs, if there is exactly one.
inline std::optional<Vector> solve_unique(std::vector<Vector> rows, Vector rhs) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && rows[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Scalar f = rows[i][col] / rows[r][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivots.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (rhs[i] != 0) return std::nullopt;
    }
    if (r < n) return std::nullopt;
    Vector x(n);
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = rhs[i] / rows[i][pivots[i]];
    return x;
}

inline int rank_of(std::vector<Vector> rows) {
    int r = 0;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[static_cast<std::size_t>(r)]);
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
            Scalar f = rows[i][col] / rows[static_cast<std::size_t>(r)][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

inline int hull_dim(const std::vector<Vector>& pts) {
    std::vector<Vector> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vector e(pts[i].size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = pts[i][k] - pts[0][k];
        rows.push_back(e);
    }
    return rank_of(rows);
}

/// Barycentric coordinates of x in the affinely independent point list.
inline std::optional<Vector> barycentric(const std::vector<Vector>& pts, const Vector& x) {
    const std::size_t d = x.size();
    std::vector<Vector> rows(d + 1, Vector(pts.size()));
    Vector rhs(d + 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        for (std::size_t k = 0; k < d; ++k) rows[k][j] = pts[j][k];
        rows[d][j] = 1;
    }
    for (std::size_t k = 0; k < d; ++k) rhs[k] = x[k];
    rhs[d] = 1;
    return solve_unique(rows, rhs);
}

inline std::vector<std::vector<VertexId>> nonempty_subsets(const std::vector<VertexId>& ids) {
    std::vector<std::vector<VertexId>> out;
    for (unsigned mask = 1; mask < (1u << ids.size()); ++mask) {
        std::vector<VertexId> f;
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (mask & (1u << j)) f.push_back(ids[j]);
        }
        out.push_back(f);
    }
    return out;
}

/// conv(A) and conv(B) meet exactly in conv(A n B), for affinely independent
/// A and B. Enumerates the vertices of conv(A) n conv(B) as isolated
/// intersections of face pairs and checks each lies on the shared face.
inline bool injective(const std::vector<Vector>& table, const std::vector<VertexId>& a,
                      const std::vector<VertexId>& b) {
    const std::size_t d = table[0].size();
    auto pts_of = [&](const std::vector<VertexId>& ids) {
        std::vector<Vector> p;
        for (VertexId v : ids) p.push_back(table[v]);
        return p;
    };
    const auto pa = pts_of(a);
    for (const auto& f : nonempty_subsets(a)) {
        for (const auto& g : nonempty_subsets(b)) {
            // f0 + sum alpha (f_i - f0) = g0 + sum beta (g_j - g0)
            const std::size_t unknowns = f.size() - 1 + g.size() - 1;
            std::vector<Vector> rows(d, Vector(unknowns));
            Vector rhs(d);
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t i = 1; i < f.size(); ++i) rows[k][i - 1] = table[f[i]][k] - table[f[0]][k];
                for (std::size_t j = 1; j < g.size(); ++j)
                    rows[k][f.size() - 1 + j - 1] = table[g[0]][k] - table[g[j]][k];
                rhs[k] = table[g[0]][k] - table[f[0]][k];
            }
            std::optional<Vector> sol;
            if (unknowns == 0) {
                if (table[f[0]] != table[g[0]]) continue;
                sol = Vector{};
            } else {
                sol = solve_unique(rows, rhs);
            }
            if (!sol) continue;
            Vector x = table[f[0]];
            for (std::size_t i = 1; i < f.size(); ++i) {
                for (std::size_t k = 0; k < d; ++k) x[k] += (*sol)[i - 1] * (table[f[i]][k] - table[f[0]][k]);
            }
            auto la = barycentric(pa, x);
            auto lb = barycentric(pts_of(b), x);
            if (!la || !lb) continue;
            bool inside = std::all_of(la->begin(), la->end(), [](const Scalar& t) { return t >= 0; }) &&
                          std::all_of(lb->begin(), lb->end(), [](const Scalar& t) { return t >= 0; });
            if (!inside) continue;
            for (std::size_t j = 0; j < a.size(); ++j) {
                bool shared = std::find(b.begin(), b.end(), a[j]) != b.end();
                if (!shared && (*la)[j] != 0) return false;
            }
        }
    }
    return true;
}

/// Candidate vertices by definition: every boundary face present and the
/// property preserved when sigma + v is added.
inline std::vector<VertexId> candidates(const SimplicialComplex& k, const Simplex& sigma, Property property) {
    std::vector<VertexId> out;
    const int i = sigma.dim();
    for (VertexId v = 0; v < k.points().size(); ++v) {
        if (sigma.contains(v)) continue;
        Simplex tau = sigma.with(v);
        bool boundary = true;
        for (const Simplex& f : tau.facets()) boundary = boundary && k.contains(f);
        if (!boundary) continue;
        if (property != Property::FacetsOnly) {
            if (hull_dim(k.points_of(tau)) != i + 1) continue;
            bool ok = true;
            for (int j = 0; j <= i && ok; ++j) {
                for (const Simplex& other : k.simplices(j)) {
                    if (property == Property::LocallyInjective && !tau.shares_vertex(other)) continue;
                    if (!injective(k.points(), tau.vertices(), other.vertices())) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
        }
        out.push_back(v);
    }
    return out;
}

inline Scalar inner(const Vector& a, const Vector& b) {
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Cofacets of sigma in k with no vertex strictly above sigma along s.
inline std::size_t indeg(const SimplicialComplex& k, const Simplex& sigma, const Vector& s) {
    const Scalar h = inner(s, k.point(sigma.vertices()[0]));
    std::size_t n = 0;
    for (const Simplex& tau : k.simplices(sigma.dim() + 1)) {
        if (!std::includes(tau.vertices().begin(), tau.vertices().end(), sigma.vertices().begin(),
                           sigma.vertices().end()))
            continue;
        for (VertexId v : tau.vertices()) {
            if (!sigma.contains(v) && inner(s, k.point(v)) <= h) ++n;
        }
    }
    return n;
}

/// A random nonzero integer direction orthogonal to sigma.
inline Vector random_perpendicular(const SimplicialComplex& k, const Simplex& sigma, std::mt19937_64& rng) {
    auto pts = k.points_of(sigma);
    std::vector<Vector> edges;
    for (std::size_t i = 1; i < pts.size(); ++i) edges.push_back(sub(pts[i], pts[0]));
    auto basis = gram_schmidt(edges);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (;;) {
        Vector v(pts[0].size());
        for (auto& x : v) x = dist(rng);
        v = primitive(orthogonalize(v, basis));
        if (!is_zero(v)) return v;
    }
}

}  // namespace reference
