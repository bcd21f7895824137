#pragma once

#include <random>
#include <unordered_map>
#include <vector>

#include "sweeprec/complex.hpp"
#include "sweeprec/geometry.hpp"

namespace sweeprec {

/// Vertices v for which sigma + v could be a cofacet of sigma in some complex
/// with the given property that contains the skeleton.
struct CandidateSet {
    Simplex center;
    std::vector<VertexId> vertices;  // ascending
    Property property = Property::FacetsOnly;
};

/// Candidates of sigma against the simplices of k up to dimension dim(sigma).
/// Throws NotFound if sigma is not in k.
CandidateSet candidate_vertices(const SimplicialComplex& k, const Simplex& sigma, Property property);

/// Candidate sets for every i-simplex of k. Each prospective cofacet is
/// tested once even though it is reached from each of its facets.
class CandidateIndex {
public:
    CandidateIndex(const SimplicialComplex& k, int i, Property property);

    const CandidateSet& at(const Simplex& sigma) const;
    bool all_empty() const;
    int dim() const { return dim_; }
    Property property() const { return property_; }
    const SimplicialComplex& complex() const { return k_; }

private:
    SimplicialComplex k_;
    int dim_;
    Property property_;
    std::unordered_map<Simplex, CandidateSet, SimplexHash> sets_;
};

struct AssumptionViolation {
    Simplex sigma;
    Simplex tau;
    Simplex tau_prime;  // equal to tau when tau itself is degenerate
};

/// Violations of local injectivity of k_i together with the candidate
/// cofacets of each i-simplex. Always empty for Embedded.
std::vector<AssumptionViolation> check_assumption_reconstruction(const SimplicialComplex& k, int i,
                                                                 Property property);

/// Every candidate of the set gets a distinct gamma-normal angle.
bool is_candidate_ordering(const DirectionCircle& circle, const SimplicialComplex& k, const CandidateSet& cand);

constexpr int kDefaultMaxRetries = 64;

/// A verified candidate-ordering circle around cand.center with gamma(0) = s.
DirectionCircle candidate_ordering_circle(const SimplicialComplex& k, const CandidateSet& cand, const Vector& s,
                                          std::mt19937_64& rng, int max_retries = kDefaultMaxRetries);
DirectionCircle candidate_ordering_circle(const SimplicialComplex& k, const Simplex& sigma, const Vector& s,
                                          Property property, std::mt19937_64& rng,
                                          int max_retries = kDefaultMaxRetries);

/// One circle that is candidate-ordering for every vertex at once, with no
/// vertex having level candidates on both sides. In the plane u = (0,1),
/// w = (1,0) is tried first.
DirectionCircle global_vertex_circle(const CandidateIndex& vertex_candidates, std::mt19937_64& rng,
                                     int max_retries = kDefaultMaxRetries);
DirectionCircle global_vertex_circle(const SimplicialComplex& k, Property property, std::mt19937_64& rng,
                                     int max_retries = kDefaultMaxRetries);

}  // namespace sweeprec
