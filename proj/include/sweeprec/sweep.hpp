#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sweeprec/candidates.hpp"
#include "sweeprec/complex.hpp"
#include "sweeprec/geometry.hpp"

namespace sweeprec {

struct SweepEntry {
    Simplex simplex;
    Vector direction;
    std::optional<DirectionCircle> circle;
};

struct SweepingOrder {
    int dim = 0;
    std::vector<SweepEntry> entries;
};

/// Circle to attach to a freshly emitted (simplex, direction) entry, or none.
using CircleProvider = std::function<std::optional<DirectionCircle>(const Simplex&, const Vector&)>;

/// Vertices sorted by height along circle.u, ties by id; each entry carries
/// the circle moved onto its vertex.
SweepingOrder order_vertices(const SimplicialComplex& k, const DirectionCircle& circle);
/// Same order without circles.
SweepingOrder order_vertices(const SimplicialComplex& k, const Vector& s);

/// The next sweeping order: rotates around each entry of prev, emitting its
/// unseen cofacets by gamma-normal angle (ties by vertex id). Entries of prev
/// without a circle use the deterministic maximal circle through their direction.
SweepingOrder order_next(const SimplicialComplex& k, const SweepingOrder& prev,
                         const CircleProvider& provider = {});

/// Provider of verified candidate-ordering circles for the i-simplices of
/// index.complex(). Draws from rng on each call.
CircleProvider candidate_circle_provider(const CandidateIndex& index, std::mt19937_64& rng);

/// Circle-reporting orders SO_0..SO_top of k. Candidates at level i are taken
/// against the i-skeleton; simplices spanning the ambient space get no circle.
std::vector<SweepingOrder> circle_reporting_orders(const SimplicialComplex& k, int top, Property property,
                                                   std::mt19937_64& rng);

struct SweepViolation {
    std::size_t entry;  // index into the order, or the order size for global problems
    std::string message;
};

struct SweepReport {
    std::vector<SweepViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Brute-force check of perpendicularity, exactly-once coverage of the
/// dim-simplices, and the lower-halfspace property.
SweepReport validate_sweeping_order(const SimplicialComplex& k, const SweepingOrder& so);

}  // namespace sweeprec
