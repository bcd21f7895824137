#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <vector>

#include "sweeprec/complex.hpp"

namespace sweeprec {

struct QueryRecord {
    Simplex sigma;
    Vector s;
    std::size_t result;
};

struct QueryStats {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_dim;  // indexed by dim(sigma)
    std::vector<QueryRecord> trace;      // empty unless tracing
};

/// Answers indegree queries about a complex it never exposes.
class IndegreeOracle {
public:
    explicit IndegreeOracle(SimplicialComplex hidden, bool record_trace = false);

    /// Number of cofacets sigma + v with <s, v> <= <s, sigma>.
    /// Throws NotFound for unknown sigma, NotPerpendicular unless s is a
    /// nonzero direction orthogonal to sigma.
    std::size_t indeg(const Simplex& sigma, const Vector& s);

    QueryStats query_stats() const;
    std::uint64_t total_queries() const { return total_.load(); }

    /// One JSON object per line: {"sigma": [...], "s": [...], "result": n}.
    void write_trace(std::ostream& out) const;

private:
    SimplicialComplex hidden_;
    bool record_trace_;
    std::atomic<std::uint64_t> total_{0};
    std::vector<std::unique_ptr<std::atomic<std::uint64_t>>> per_dim_;
    mutable std::mutex trace_mutex_;
    std::vector<QueryRecord> trace_;
};

}  // namespace sweeprec
