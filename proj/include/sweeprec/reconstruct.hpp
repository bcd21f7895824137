#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sweeprec/candidates.hpp"
#include "sweeprec/complex.hpp"
#include "sweeprec/oracle.hpp"
#include "sweeprec/sweep.hpp"

namespace sweeprec {

/// What one find_unfound call did.
struct FindUnfoundRecord {
    Simplex sigma;
    std::size_t unfound = 0;     // cofacets above sigma not known at the start
    std::size_t upper = 0;       // candidates with angle <= pi
    std::size_t candidates = 0;
    std::uint64_t queries = 0;
    int max_depth = 0;           // longest single binary search
    std::vector<VertexId> found;
};

/// Vertices of cofacets of sigma that are not in `known`. k supplies vertex
/// coordinates; everything about higher simplices comes from the oracle.
/// Requires gamma(0) ~ s, gamma candidate-ordering for sigma, known a subset
/// of the candidates holding every cofacet strictly below sigma along s.
std::vector<VertexId> find_unfound(IndegreeOracle& oracle, const SimplicialComplex& k, const Simplex& sigma,
                                   const Vector& s, const DirectionCircle& gamma,
                                   const std::vector<VertexId>& known, const CandidateSet& cand,
                                   FindUnfoundRecord* record = nullptr);

/// Vertices known to form cofacets, per simplex, each recorded at most once.
class KnownMap {
public:
    const std::vector<VertexId>& at(const Simplex& sigma) const;
    /// Returns false if v was already recorded for sigma.
    bool add(const Simplex& sigma, VertexId v);

private:
    std::unordered_map<Simplex, std::vector<VertexId>, SimplexHash> lists_;
    std::unordered_map<Simplex, std::unordered_set<VertexId>, SimplexHash> members_;
};

struct ReconOptions {
    /// Called before each find_unfound with (sigma, s, known); test hook.
    std::function<void(const Simplex&, const Vector&, const std::vector<VertexId>&)> audit;
};

struct ReconStats {
    std::vector<std::size_t> n;  // simplices per dimension
    std::uint64_t total_queries = 0;
    std::vector<std::uint64_t> queries_per_dim;
    int max_binary_search_depth = 0;
    std::vector<FindUnfoundRecord> calls;
};

/// The (i+1)-simplices of the hidden complex, from its i-skeleton k and a
/// circle-reporting sweeping order of it.
std::vector<Simplex> reconstruct_next(IndegreeOracle& oracle, const SimplicialComplex& k, const SweepingOrder& so,
                                      const CandidateIndex& candidates, ReconStats* stats = nullptr,
                                      const ReconOptions& options = {});
std::vector<Simplex> reconstruct_next(IndegreeOracle& oracle, const SimplicialComplex& k, const SweepingOrder& so,
                                      Property property);

struct ReconResult {
    SimplicialComplex complex;
    ReconStats stats;
    std::vector<SweepingOrder> orders;  // SO_0, SO_1, ... as used
};

/// Rebuilds the hidden complex from its vertices. Stops as soon as a
/// dimension yields no simplices or no candidates.
ReconResult reconstruct_all(IndegreeOracle& oracle, const SimplicialComplex& k0, Property property,
                            std::mt19937_64& rng, const ReconOptions& options = {});

/// Throws ReconstructionMismatch describing the first differences.
void verify_reconstruction(const SimplicialComplex& rebuilt, const SimplicialComplex& hidden);

}  // namespace sweeprec
