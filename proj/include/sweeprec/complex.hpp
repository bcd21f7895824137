#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sweeprec/rational.hpp"

namespace sweeprec {

/// A sorted, duplicate-free set of vertex ids.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> ids);
    Simplex(std::initializer_list<VertexId> ids);

    const std::vector<VertexId>& vertices() const { return ids_; }
    int dim() const { return static_cast<int>(ids_.size()) - 1; }
    std::size_t size() const { return ids_.size(); }
    bool contains(VertexId v) const;
    bool shares_vertex(const Simplex& other) const;

    std::vector<Simplex> facets() const;
    Simplex with(VertexId v) const;
    Simplex without(VertexId v) const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<VertexId> ids_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

std::string format_simplex(const Simplex& s);

/// Immutable, face-closed geometric simplicial complex. Copies share storage.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Closure of the given simplices plus every listed vertex. Ambient
    /// dimensions below 2 are lifted to 2 by zero padding.
    static SimplicialComplex from_maximal(int d, std::vector<Vector> vertices,
                                          const std::vector<Simplex>& maximal);

    int ambient_dim() const;
    const std::vector<Vector>& points() const;
    const Vector& point(VertexId v) const;
    std::vector<Vector> points_of(const Simplex& s) const;

    /// -1 for the empty complex.
    int dim() const;
    /// Sorted simplices of dimension i; empty outside [0, dim()].
    const std::vector<Simplex>& simplices(int i) const;
    std::size_t count(int i) const { return simplices(i).size(); }
    std::size_t size() const;
    bool contains(const Simplex& s) const;

    /// Throws NotFound if s is not in the complex.
    const std::vector<Simplex>& cofacets_of(const Simplex& s) const;

    SimplicialComplex skeleton(int i) const;
    /// This complex with the closure of the extra simplices added.
    SimplicialComplex with_simplices(const std::vector<Simplex>& extra) const;
    std::vector<Simplex> maximal_simplices() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    struct Impl;
    explicit SimplicialComplex(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

enum class Property { FacetsOnly, LocallyInjective, Embedded };

std::string_view to_string(Property p);
/// "facets-only", "locally-injective", "embedded"; InvalidInput otherwise.
Property parse_property(std::string_view text);

struct PairViolation {
    Simplex a;
    Simplex b;  // equal to a when the simplex itself is degenerate
};

struct StructureReport {
    std::vector<Simplex> no_perpendicular;  // simplices spanning the ambient space
    std::vector<PairViolation> pairs;

    bool ok() const { return no_perpendicular.empty() && pairs.empty(); }
};

/// Under Embedded, simplices of dimension d are legitimate and never swept,
/// so only lower-dimensional ones are checked for a perpendicular direction.
StructureReport check_structure(const SimplicialComplex& k, Property property);

}  // namespace sweeprec
