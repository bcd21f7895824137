#include "sweeprec/oracle.hpp"

#include "json.hpp"

#include "sweeprec/error.hpp"
#include "sweeprec/geometry.hpp"

namespace sweeprec {

IndegreeOracle::IndegreeOracle(SimplicialComplex hidden, bool record_trace)
    : hidden_(std::move(hidden)), record_trace_(record_trace) {
    for (int i = 0; i <= std::max(hidden_.dim(), 0); ++i) {
        per_dim_.push_back(std::make_unique<std::atomic<std::uint64_t>>(0));
    }
}

std::size_t IndegreeOracle::indeg(const Simplex& sigma, const Vector& s) {
    const auto& cofacets = hidden_.cofacets_of(sigma);
    const auto pts = hidden_.points_of(sigma);
    if (s.size() != static_cast<std::size_t>(hidden_.ambient_dim()) || is_zero(s) || !is_perpendicular(s, pts)) {
        throw Error(ErrorKind::NotPerpendicular,
                    format_vector(s) + " is not a direction perpendicular to " + format_simplex(sigma));
    }
    const Scalar height = dot(s, pts[0]);
    std::size_t count = 0;
    for (const Simplex& tau : cofacets) {
        for (VertexId v : tau.vertices()) {
            if (sigma.contains(v)) continue;
            if (halfspace_side(s, height, hidden_.point(v)) != Side::Above) ++count;
        }
    }
    total_.fetch_add(1);
    per_dim_[static_cast<std::size_t>(sigma.dim())]->fetch_add(1);
    if (record_trace_) {
        std::lock_guard lock(trace_mutex_);
        trace_.push_back({sigma, s, count});
    }
    return count;
}

QueryStats IndegreeOracle::query_stats() const {
    QueryStats stats;
    stats.total = total_.load();
    for (const auto& c : per_dim_) stats.per_dim.push_back(c->load());
    std::lock_guard lock(trace_mutex_);
    stats.trace = trace_;
    return stats;
}

void IndegreeOracle::write_trace(std::ostream& out) const {
    std::lock_guard lock(trace_mutex_);
    for (const QueryRecord& r : trace_) {
        nlohmann::json line;
        line["sigma"] = r.sigma.vertices();
        nlohmann::json s = nlohmann::json::array();
        for (const Scalar& x : r.s) s.push_back(format_scalar(x));
        line["s"] = s;
        line["result"] = r.result;
        out << line.dump() << '\n';
    }
}

}  // namespace sweeprec
