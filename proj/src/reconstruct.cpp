#include "sweeprec/reconstruct.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

[[noreturn]] void invariant(const Simplex& sigma, const std::string& what) {
    throw Error(ErrorKind::InternalInvariantViolation, "find_unfound at " + format_simplex(sigma) + ": " + what);
}

/// Known vertices whose closed lower halfspace at angle alpha (0 <= alpha <= pi)
/// contains them: normal angles in the cyclic interval [alpha + pi, alpha].
std::size_t count_closed_below(const std::vector<AngleKey>& sorted_known, const AngleKey& alpha) {
    auto upto = [&](const AngleKey& k) {
        return static_cast<std::size_t>(std::upper_bound(sorted_known.begin(), sorted_known.end(), k) -
                                        sorted_known.begin());
    };
    if (alpha == AngleKey::pi()) return upto(alpha);
    auto from = std::lower_bound(sorted_known.begin(), sorted_known.end(), alpha.opposite());
    return upto(alpha) + static_cast<std::size_t>(sorted_known.end() - from);
}

}  // namespace

std::vector<VertexId> find_unfound(IndegreeOracle& oracle, const SimplicialComplex& k, const Simplex& sigma,
                                   const Vector& s, const DirectionCircle& gamma,
                                   const std::vector<VertexId>& known, const CandidateSet& cand,
                                   FindUnfoundRecord* record) {
    if (primitive(s) != primitive(gamma.u)) {
        throw Error(ErrorKind::InvalidInput, "circle does not start at " + format_vector(s));
    }
    const std::uint64_t queries_before = oracle.total_queries();

    struct Item {
        AngleKey key;
        VertexId v;
        Vector direction;
    };
    std::vector<Item> items;
    for (VertexId v : cand.vertices) {
        GammaNormal g = gamma_normal(gamma, k.point(v));
        items.push_back({std::move(g.key), v, std::move(g.direction)});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        auto c = a.key <=> b.key;
        if (c != 0) return c < 0;
        return a.v < b.v;
    });
    const std::set<VertexId> known_set(known.begin(), known.end());
    for (VertexId v : known) {
        if (!std::binary_search(cand.vertices.begin(), cand.vertices.end(), v)) {
            invariant(sigma, "known vertex " + std::to_string(v) + " is not a candidate");
        }
    }
    std::vector<AngleKey> known_keys;
    for (VertexId v : known) known_keys.push_back(gamma_normal(gamma, k.point(v)).key);
    std::sort(known_keys.begin(), known_keys.end());

    std::size_t l = 0;
    while (l < items.size() && items[l].key.at_most_pi()) ++l;

    std::size_t known_above = 0;
    if (gamma.mode == CircleMode::Codim1) {
        const Scalar height = dot(s, gamma.base);
        for (VertexId v : known) {
            if (halfspace_side(s, height, k.point(v)) != Side::Below) ++known_above;
        }
    } else {
        known_above = count_closed_below(known_keys, AngleKey::pi());
    }
    const std::size_t upper_indeg = oracle.indeg(sigma, negated(s));
    if (upper_indeg < known_above) invariant(sigma, "oracle reports fewer upper cofacets than are known");
    const std::size_t unfound = upper_indeg - known_above;

    std::vector<VertexId> out;
    int max_depth = 0;
    auto emit = [&](const Item& item) {
        if (known_set.count(item.v) || std::find(out.begin(), out.end(), item.v) != out.end()) {
            invariant(sigma, "search landed on already known vertex " + std::to_string(item.v));
        }
        out.push_back(item.v);
    };

    if (gamma.mode == CircleMode::Codim1) {
        if (unfound > 1) invariant(sigma, "more than one unfound cofacet across a hyperplane");
        if (unfound == 1) {
            if (items.empty() || items[0].key != AngleKey::zero()) invariant(sigma, "no candidate above the hyperplane");
            emit(items[0]);
        }
    } else {
        if (unfound > 0 && l == 0) invariant(sigma, "unfound cofacets but no upper candidates");
        std::vector<std::size_t> known_below(l + 1, 0);  // 1-based like the candidate list
        for (std::size_t c = 1; c <= l; ++c) known_below[c] = count_closed_below(known_keys, items[c - 1].key);
        std::size_t found = 0;
        while (found < unfound) {
            std::size_t a = 1;
            std::size_t b = l + 1;
            int depth = 0;
            while (a + 1 < b) {
                const std::size_t c = (a + b) / 2 - 1;
                ++depth;
                if (oracle.indeg(sigma, items[c - 1].direction) > found + known_below[c]) {
                    b = c + 1;
                } else {
                    a = c + 1;
                }
            }
            max_depth = std::max(max_depth, depth);
            ++found;
            emit(items[a - 1]);
        }
    }

    if (record) {
        record->sigma = sigma;
        record->unfound = unfound;
        record->upper = l;
        record->candidates = items.size();
        record->queries = oracle.total_queries() - queries_before;
        record->max_depth = max_depth;
        record->found = out;
    }
    return out;
}

const std::vector<VertexId>& KnownMap::at(const Simplex& sigma) const {
    static const std::vector<VertexId> none;
    auto it = lists_.find(sigma);
    return it == lists_.end() ? none : it->second;
}

bool KnownMap::add(const Simplex& sigma, VertexId v) {
    if (!members_[sigma].insert(v).second) return false;
    lists_[sigma].push_back(v);
    return true;
}

std::vector<Simplex> reconstruct_next(IndegreeOracle& oracle, const SimplicialComplex& k, const SweepingOrder& so,
                                      const CandidateIndex& candidates, ReconStats* stats,
                                      const ReconOptions& options) {
    KnownMap known;
    std::vector<Simplex> out;
    std::unordered_set<Simplex, SimplexHash> emitted;
    for (const SweepEntry& entry : so.entries) {
        if (!entry.circle) {
            throw Error(ErrorKind::InvalidInput, "sweep entry " + format_simplex(entry.simplex) + " has no circle");
        }
        const std::vector<VertexId>& known_here = known.at(entry.simplex);
        if (options.audit) options.audit(entry.simplex, entry.direction, known_here);
        FindUnfoundRecord record;
        std::vector<VertexId> fresh = find_unfound(oracle, k, entry.simplex, entry.direction, *entry.circle,
                                                   known_here, candidates.at(entry.simplex), &record);
        for (VertexId v : fresh) {
            Simplex rho = entry.simplex.with(v);
            if (!emitted.insert(rho).second) {
                throw Error(ErrorKind::InternalInvariantViolation, format_simplex(rho) + " found twice");
            }
            for (VertexId x : rho.vertices()) {
                if (!known.add(rho.without(x), x)) {
                    throw Error(ErrorKind::InternalInvariantViolation,
                                "vertex " + std::to_string(x) + " recorded twice for " + format_simplex(rho.without(x)));
                }
            }
            out.push_back(std::move(rho));
        }
        if (stats) {
            stats->max_binary_search_depth = std::max(stats->max_binary_search_depth, record.max_depth);
            stats->calls.push_back(std::move(record));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> reconstruct_next(IndegreeOracle& oracle, const SimplicialComplex& k, const SweepingOrder& so,
                                      Property property) {
    return reconstruct_next(oracle, k, so, CandidateIndex(k, so.dim, property));
}

ReconResult reconstruct_all(IndegreeOracle& oracle, const SimplicialComplex& k0, Property property,
                            std::mt19937_64& rng, const ReconOptions& options) {
    if (k0.dim() > 0) throw Error(ErrorKind::InvalidInput, "reconstruction starts from vertices only");
    ReconResult result{k0, {}, {}};
    const std::uint64_t queries_before = oracle.total_queries();
    SimplicialComplex& k = result.complex;
    const int d = k.ambient_dim();

    if (!k.points().empty()) {
        auto index = std::make_unique<CandidateIndex>(k, 0, property);
        if (!index->all_empty()) {
            SweepingOrder so = order_vertices(k, global_vertex_circle(*index, rng));
            for (int i = 0;; ++i) {
                std::vector<Simplex> found = reconstruct_next(oracle, k, so, *index, &result.stats, options);
                result.orders.push_back(std::move(so));
                if (found.empty()) break;
                k = k.with_simplices(found);
                if (property == Property::Embedded && i + 1 >= d) break;
                index = std::make_unique<CandidateIndex>(k, i + 1, property);
                if (index->all_empty()) break;
                so = order_next(k, result.orders.back(), candidate_circle_provider(*index, rng));
            }
        }
    }

    for (int i = 0; i <= k.dim(); ++i) result.stats.n.push_back(k.count(i));
    QueryStats q = oracle.query_stats();
    result.stats.total_queries = q.total - queries_before;
    result.stats.queries_per_dim = q.per_dim;
    return result;
}

void verify_reconstruction(const SimplicialComplex& rebuilt, const SimplicialComplex& hidden) {
    if (rebuilt == hidden) return;
    std::string msg;
    if (rebuilt.points() != hidden.points()) msg = "vertex tables differ";
    const int top = std::max(rebuilt.dim(), hidden.dim());
    for (int i = 0; i <= top && msg.empty(); ++i) {
        for (const Simplex& s : hidden.simplices(i)) {
            if (!rebuilt.contains(s)) {
                msg = "missing " + format_simplex(s);
                break;
            }
        }
        if (!msg.empty()) break;
        for (const Simplex& s : rebuilt.simplices(i)) {
            if (!hidden.contains(s)) {
                msg = "spurious " + format_simplex(s);
                break;
            }
        }
    }
    if (msg.empty()) msg = "complexes differ";
    throw Error(ErrorKind::ReconstructionMismatch, msg);
}

}  // namespace sweeprec
