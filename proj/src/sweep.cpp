#include "sweeprec/sweep.hpp"

#include <algorithm>
#include <unordered_set>

#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

SweepingOrder sorted_vertices(const SimplicialComplex& k, const Vector& s) {
    if (k.points().empty()) throw Error(ErrorKind::InvalidInput, "complex has no vertices");
    if (s.size() != static_cast<std::size_t>(k.ambient_dim()) || is_zero(s)) {
        throw Error(ErrorKind::InvalidInput, "bad sweep direction " + format_vector(s));
    }
    std::vector<std::pair<Scalar, VertexId>> heights;
    for (VertexId v = 0; v < k.points().size(); ++v) heights.emplace_back(dot(s, k.point(v)), v);
    std::sort(heights.begin(), heights.end());
    SweepingOrder out{0, {}};
    for (const auto& [h, v] : heights) out.entries.push_back({Simplex{v}, s, std::nullopt});
    return out;
}

}  // namespace

SweepingOrder order_vertices(const SimplicialComplex& k, const DirectionCircle& circle) {
    SweepingOrder out = sorted_vertices(k, circle.u);
    for (SweepEntry& e : out.entries) e.circle = circle.rebased(k.point(e.simplex.vertices()[0]));
    return out;
}

SweepingOrder order_vertices(const SimplicialComplex& k, const Vector& s) { return sorted_vertices(k, s); }

SweepingOrder order_next(const SimplicialComplex& k, const SweepingOrder& prev, const CircleProvider& provider) {
    SweepingOrder out{prev.dim + 1, {}};
    std::unordered_set<Simplex, SimplexHash> emitted;
    for (const SweepEntry& entry : prev.entries) {
        const auto& cofacets = k.cofacets_of(entry.simplex);
        if (cofacets.empty()) continue;
        DirectionCircle gamma =
            entry.circle ? *entry.circle : maximal_circle(k.points_of(entry.simplex), entry.direction);
        struct Pending {
            AngleKey key;
            VertexId v;
            Simplex tau;
            Vector direction;
        };
        std::vector<Pending> pending;
        for (const Simplex& tau : cofacets) {
            if (emitted.count(tau)) continue;
            VertexId v = 0;
            for (VertexId x : tau.vertices()) {
                if (!entry.simplex.contains(x)) v = x;
            }
            GammaNormal g = gamma_normal(gamma, k.point(v));
            pending.push_back({std::move(g.key), v, tau, std::move(g.direction)});
        }
        std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
            auto c = a.key <=> b.key;
            if (c != 0) return c < 0;
            return a.v < b.v;
        });
        for (Pending& p : pending) {
            emitted.insert(p.tau);
            std::optional<DirectionCircle> circle;
            if (provider) circle = provider(p.tau, p.direction);
            out.entries.push_back({std::move(p.tau), std::move(p.direction), std::move(circle)});
        }
    }
    return out;
}

CircleProvider candidate_circle_provider(const CandidateIndex& index, std::mt19937_64& rng) {
    return [&index, &rng](const Simplex& sigma, const Vector& s) -> std::optional<DirectionCircle> {
        return candidate_ordering_circle(index.complex(), index.at(sigma), s, rng);
    };
}

std::vector<SweepingOrder> circle_reporting_orders(const SimplicialComplex& k, int top, Property property,
                                                   std::mt19937_64& rng) {
    std::vector<SweepingOrder> orders;
    if (top < 0) return orders;
    const int d = k.ambient_dim();
    CandidateIndex index0(k.skeleton(0), 0, property);
    orders.push_back(order_vertices(k, global_vertex_circle(index0, rng)));
    for (int i = 1; i <= top; ++i) {
        SimplicialComplex ki = k.skeleton(i);
        CandidateIndex index(ki, i, property);
        CircleProvider provider = [&](const Simplex& sigma, const Vector& s) -> std::optional<DirectionCircle> {
            if (affine_dim(k.points_of(sigma)) == d) return std::nullopt;
            return candidate_ordering_circle(ki, index.at(sigma), s, rng);
        };
        orders.push_back(order_next(k, orders.back(), provider));
    }
    return orders;
}

SweepReport validate_sweeping_order(const SimplicialComplex& k, const SweepingOrder& so) {
    SweepReport report;
    auto flag = [&](std::size_t j, std::string msg) { report.violations.push_back({j, std::move(msg)}); };
    std::unordered_set<Simplex, SimplexHash> seen;
    for (std::size_t j = 0; j < so.entries.size(); ++j) {
        const SweepEntry& e = so.entries[j];
        const std::string name = format_simplex(e.simplex);
        if (e.simplex.dim() != so.dim || !k.contains(e.simplex)) {
            flag(j, name + " is not a " + std::to_string(so.dim) + "-simplex of the complex");
            continue;
        }
        if (!seen.insert(e.simplex).second) flag(j, name + " appears more than once");
        const auto pts = k.points_of(e.simplex);
        if (e.direction.size() != static_cast<std::size_t>(k.ambient_dim()) || is_zero(e.direction) ||
            !is_perpendicular(e.direction, pts)) {
            flag(j, "direction " + format_vector(e.direction) + " is not perpendicular to " + name);
            continue;
        }
        const Scalar height = dot(e.direction, pts[0]);
        for (const Simplex& tau : k.cofacets_of(e.simplex)) {
            VertexId v = 0;
            for (VertexId x : tau.vertices()) {
                if (!e.simplex.contains(x)) v = x;
            }
            if (halfspace_side(e.direction, height, k.point(v)) != Side::Below) continue;
            bool covered = false;
            for (const Simplex& f : tau.facets()) {
                if (f != e.simplex && seen.count(f)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) flag(j, "cofacet " + format_simplex(tau) + " lies below " + name + " with no earlier facet");
        }
    }
    for (const Simplex& s : k.simplices(so.dim)) {
        if (!seen.count(s)) flag(so.entries.size(), format_simplex(s) + " is missing");
    }
    return report;
}

}  // namespace sweeprec
