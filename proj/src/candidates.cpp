#include "sweeprec/candidates.hpp"

#include <algorithm>
#include <iterator>

#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

struct Boxed {
    const Simplex* simplex;
    BoundingBox box;
};

/// Simplices of k up to dimension i with their bounding boxes.
std::vector<Boxed> boxed_skeleton(const SimplicialComplex& k, int i) {
    std::vector<Boxed> out;
    for (int j = 0; j <= std::min(i, k.dim()); ++j) {
        for (const Simplex& s : k.simplices(j)) out.push_back({&s, BoundingBox::of(k.points(), s.vertices())});
    }
    return out;
}

/// Vertices v such that every i-face of sigma + v other than sigma is in k.
std::vector<VertexId> boundary_vertices(const SimplicialComplex& k, const Simplex& sigma) {
    std::vector<VertexId> out;
    if (sigma.size() == 1) {
        for (VertexId v = 0; v < k.points().size(); ++v) {
            if (v != sigma.vertices()[0]) out.push_back(v);
        }
        return out;
    }
    bool first = true;
    for (VertexId u : sigma.vertices()) {
        std::vector<VertexId> reach;
        for (const Simplex& c : k.cofacets_of(sigma.without(u))) {
            for (VertexId v : c.vertices()) {
                if (!sigma.contains(v)) reach.push_back(v);
            }
        }
        std::sort(reach.begin(), reach.end());
        if (first) {
            out = std::move(reach);
            first = false;
        } else {
            std::vector<VertexId> both;
            std::set_intersection(out.begin(), out.end(), reach.begin(), reach.end(), std::back_inserter(both));
            out = std::move(both);
        }
        if (out.empty()) break;
    }
    return out;
}

bool nondegenerate(const SimplicialComplex& k, const Simplex& tau) {
    return affine_dim(k.points_of(tau)) == tau.dim();
}

/// The geometric half of the candidate condition for tau = sigma + v.
bool property_allows(const SimplicialComplex& k, const std::vector<Boxed>& skeleton, const Simplex& tau,
                     Property property) {
    if (property == Property::FacetsOnly) return true;
    if (!nondegenerate(k, tau)) return false;
    BoundingBox box = BoundingBox::of(k.points(), tau.vertices());
    for (const Boxed& other : skeleton) {
        if (property == Property::LocallyInjective && !tau.shares_vertex(*other.simplex)) continue;
        if (!box.overlaps(other.box)) continue;
        if (!injective_pair_test(k.points(), tau.vertices(), other.simplex->vertices())) return false;
    }
    return true;
}

Vector random_vector(std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-1000, 1000);
    Vector v(d);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

CandidateSet candidate_vertices(const SimplicialComplex& k, const Simplex& sigma, Property property) {
    if (!k.contains(sigma)) throw Error(ErrorKind::NotFound, "simplex " + format_simplex(sigma) + " not in complex");
    CandidateSet out{sigma, {}, property};
    auto skeleton = boxed_skeleton(k, sigma.dim());
    for (VertexId v : boundary_vertices(k, sigma)) {
        if (property_allows(k, skeleton, sigma.with(v), property)) out.vertices.push_back(v);
    }
    return out;
}

CandidateIndex::CandidateIndex(const SimplicialComplex& k, int i, Property property)
    : k_(k), dim_(i), property_(property) {
    auto skeleton = boxed_skeleton(k, i);
    std::unordered_map<Simplex, bool, SimplexHash> verdicts;
    for (const Simplex& sigma : k.simplices(i)) {
        CandidateSet set{sigma, {}, property};
        for (VertexId v : boundary_vertices(k, sigma)) {
            Simplex tau = sigma.with(v);
            auto it = verdicts.find(tau);
            if (it == verdicts.end()) it = verdicts.emplace(tau, property_allows(k, skeleton, tau, property)).first;
            if (it->second) set.vertices.push_back(v);
        }
        sets_.emplace(sigma, std::move(set));
    }
}

const CandidateSet& CandidateIndex::at(const Simplex& sigma) const {
    auto it = sets_.find(sigma);
    if (it == sets_.end()) throw Error(ErrorKind::NotFound, "no candidates recorded for " + format_simplex(sigma));
    return it->second;
}

bool CandidateIndex::all_empty() const {
    return std::all_of(sets_.begin(), sets_.end(), [](const auto& kv) { return kv.second.vertices.empty(); });
}

std::vector<AssumptionViolation> check_assumption_reconstruction(const SimplicialComplex& k, int i,
                                                                 Property property) {
    std::vector<AssumptionViolation> out;
    if (property == Property::Embedded) return out;
    CandidateIndex index(k, i, property);
    auto skeleton = boxed_skeleton(k, i);
    for (const Simplex& sigma : k.simplices(i)) {
        std::vector<Simplex> taus;
        for (VertexId v : index.at(sigma).vertices) taus.push_back(sigma.with(v));
        for (std::size_t x = 0; x < taus.size(); ++x) {
            const Simplex& tau = taus[x];
            if (property == Property::FacetsOnly) {
                if (!nondegenerate(k, tau)) {
                    out.push_back({sigma, tau, tau});
                    continue;
                }
                for (const Boxed& other : skeleton) {
                    if (!tau.shares_vertex(*other.simplex)) continue;
                    if (!injective_pair_test(k.points(), tau.vertices(), other.simplex->vertices())) {
                        out.push_back({sigma, tau, *other.simplex});
                    }
                }
            }
            for (std::size_t y = x + 1; y < taus.size(); ++y) {
                if (!injective_pair_test(k.points(), tau.vertices(), taus[y].vertices())) {
                    out.push_back({sigma, tau, taus[y]});
                }
            }
        }
    }
    return out;
}

bool is_candidate_ordering(const DirectionCircle& circle, const SimplicialComplex& k, const CandidateSet& cand) {
    std::vector<AngleKey> keys;
    keys.reserve(cand.vertices.size());
    for (VertexId v : cand.vertices) keys.push_back(gamma_normal(circle, k.point(v)).key);
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

DirectionCircle candidate_ordering_circle(const SimplicialComplex& k, const CandidateSet& cand, const Vector& s,
                                          std::mt19937_64& rng, int max_retries) {
    const auto pts = k.points_of(cand.center);
    const std::size_t d = static_cast<std::size_t>(k.ambient_dim());
    if (s.size() != d || is_zero(s) || !is_perpendicular(s, pts)) {
        throw Error(ErrorKind::NotPerpendicular,
                    format_vector(s) + " is not perpendicular to " + format_simplex(cand.center));
    }
    const int a = affine_dim(pts);
    if (a == static_cast<int>(d)) {
        throw Error(ErrorKind::NoPerpendicular, format_simplex(cand.center) + " spans the ambient space");
    }
    if (a + 1 == static_cast<int>(d)) {
        DirectionCircle circle = maximal_circle(pts, s);
        if (is_candidate_ordering(circle, k, cand)) return circle;
        throw Error(ErrorKind::VerificationFailed,
                    "candidates of " + format_simplex(cand.center) + " are not separated by its hyperplane");
    }
    std::vector<Vector> span;
    for (std::size_t j = 1; j < pts.size(); ++j) span.push_back(sub(pts[j], pts[0]));
    span = gram_schmidt(span);
    span.push_back(s);
    // The deterministic circle goes first; sampling only starts if it fails.
    DirectionCircle first = maximal_circle(pts, s);
    if (is_candidate_ordering(first, k, cand)) return first;
    for (int attempt = 1; attempt < max_retries; ++attempt) {
        Vector w = primitive(orthogonalize(random_vector(d, rng), span));
        if (is_zero(w)) continue;
        DirectionCircle circle{pts[0], s, std::move(w), CircleMode::Perpendicular};
        if (is_candidate_ordering(circle, k, cand)) return circle;
    }
    throw Error(ErrorKind::VerificationFailed, "no candidate-ordering circle around " + format_simplex(cand.center) +
                                                   " after " + std::to_string(max_retries) + " attempts");
}

DirectionCircle candidate_ordering_circle(const SimplicialComplex& k, const Simplex& sigma, const Vector& s,
                                          Property property, std::mt19937_64& rng, int max_retries) {
    return candidate_ordering_circle(k, candidate_vertices(k, sigma, property), s, rng, max_retries);
}

namespace {

// Candidates level with a vertex on both sides make the radial search count
// the far one as lying on the starting hyperplane.
bool level_on_both_sides(const DirectionCircle& circle, const SimplicialComplex& k, const CandidateSet& cand) {
    bool at_zero = false;
    bool at_pi = false;
    for (VertexId v : cand.vertices) {
        AngleKey key = gamma_normal(circle, k.point(v)).key;
        at_zero = at_zero || key == AngleKey::zero();
        at_pi = at_pi || key == AngleKey::pi();
    }
    return at_zero && at_pi;
}

bool orders_all_vertices(const DirectionCircle& circle, const CandidateIndex& index) {
    const SimplicialComplex& k = index.complex();
    for (const Simplex& v : k.simplices(0)) {
        DirectionCircle around = circle.rebased(k.point(v.vertices()[0]));
        if (!is_candidate_ordering(around, k, index.at(v))) return false;
        if (level_on_both_sides(around, k, index.at(v))) return false;
    }
    return true;
}

}  // namespace

DirectionCircle global_vertex_circle(const CandidateIndex& vertex_candidates, std::mt19937_64& rng,
                                     int max_retries) {
    const SimplicialComplex& k = vertex_candidates.complex();
    if (k.points().empty()) throw Error(ErrorKind::InvalidInput, "complex has no vertices");
    const std::size_t d = static_cast<std::size_t>(k.ambient_dim());
    const Vector& base = k.points()[0];
    if (d == 2) {
        DirectionCircle circle{base, {0, 1}, {1, 0}, CircleMode::Perpendicular};
        if (orders_all_vertices(circle, vertex_candidates)) return circle;
    }
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Vector u = primitive(random_vector(d, rng));
        if (is_zero(u)) continue;
        Vector w;
        if (d == 2) {
            // Every planar circle is the same; only the starting direction moves.
            w = {u[1], -u[0]};
        } else {
            std::vector<Vector> span{u};
            w = primitive(orthogonalize(random_vector(d, rng), span));
        }
        if (is_zero(w)) continue;
        DirectionCircle circle{base, std::move(u), std::move(w), CircleMode::Perpendicular};
        if (orders_all_vertices(circle, vertex_candidates)) return circle;
    }
    throw Error(ErrorKind::VerificationFailed,
                "no circle orders all vertex candidates after " + std::to_string(max_retries) + " attempts");
}

DirectionCircle global_vertex_circle(const SimplicialComplex& k, Property property, std::mt19937_64& rng,
                                     int max_retries) {
    return global_vertex_circle(CandidateIndex(k, 0, property), rng, max_retries);
}

}  // namespace sweeprec
