#include "sweeprec/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sweeprec/error.hpp"
#include "sweeprec/geometry.hpp"

namespace sweeprec {

Simplex::Simplex(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw Error(ErrorKind::InvalidInput, "repeated vertex in simplex");
    }
}

Simplex::Simplex(std::initializer_list<VertexId> ids) : Simplex(std::vector<VertexId>(ids)) {}

bool Simplex::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool Simplex::shares_vertex(const Simplex& other) const {
    auto i = ids_.begin();
    auto j = other.ids_.begin();
    while (i != ids_.end() && j != other.ids_.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (ids_.size() < 2) return out;
    for (VertexId v : ids_) out.push_back(without(v));
    return out;
}

Simplex Simplex::with(VertexId v) const {
    std::vector<VertexId> ids = ids_;
    ids.push_back(v);
    return Simplex(std::move(ids));
}

Simplex Simplex::without(VertexId v) const {
    Simplex out;
    for (VertexId x : ids_) {
        if (x != v) out.ids_.push_back(x);
    }
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexId v : s.vertices()) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

std::string format_simplex(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.vertices()[i]);
    }
    return out + "}";
}

struct SimplicialComplex::Impl {
    int d = 2;
    std::vector<Vector> points;
    std::vector<std::vector<Simplex>> by_dim;
    std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> cofacets;
};

SimplicialComplex::SimplicialComplex() : impl_(std::make_shared<Impl>()) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SimplicialComplex SimplicialComplex::from_maximal(int d, std::vector<Vector> vertices,
                                                  const std::vector<Simplex>& maximal) {
    if (d < 0) throw Error(ErrorKind::InvalidInput, "negative ambient dimension");
    for (const Vector& p : vertices) {
        if (static_cast<int>(p.size()) != d) {
            throw Error(ErrorKind::InvalidInput, "vertex has " + std::to_string(p.size()) +
                                                     " coordinates, expected " + std::to_string(d));
        }
    }
    if (d < 2) {
        for (Vector& p : vertices) p.resize(2, Scalar(0));
        d = 2;
    }
    {
        std::vector<std::size_t> order(vertices.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (vertices[order[i]] == vertices[order[i - 1]]) {
                throw Error(ErrorKind::InvalidInput, "vertices " + std::to_string(order[i - 1]) + " and " +
                                                         std::to_string(order[i]) + " coincide");
            }
        }
    }

    auto impl = std::make_shared<Impl>();
    impl->d = d;
    std::vector<std::unordered_set<Simplex, SimplexHash>> sets;
    auto insert = [&](Simplex s) {
        std::size_t k = static_cast<std::size_t>(s.dim());
        if (sets.size() <= k) sets.resize(k + 1);
        sets[k].insert(std::move(s));
    };
    for (VertexId v = 0; v < vertices.size(); ++v) insert(Simplex{v});
    for (const Simplex& m : maximal) {
        if (m.size() == 0) throw Error(ErrorKind::InvalidInput, "empty simplex");
        if (m.size() > 24) throw Error(ErrorKind::InvalidInput, "simplex too large");
        for (VertexId v : m.vertices()) {
            if (v >= vertices.size()) {
                throw Error(ErrorKind::InvalidInput, "vertex id " + std::to_string(v) + " out of range");
            }
        }
        const auto& ids = m.vertices();
        const std::uint32_t full = (1u << ids.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            std::vector<VertexId> face;
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (mask & (1u << j)) face.push_back(ids[j]);
            }
            insert(Simplex(std::move(face)));
        }
    }
    impl->points = std::move(vertices);
    for (auto& set : sets) {
        std::vector<Simplex> list(set.begin(), set.end());
        std::sort(list.begin(), list.end());
        impl->by_dim.push_back(std::move(list));
    }
    for (const auto& list : impl->by_dim) {
        for (const Simplex& s : list) impl->cofacets.emplace(s, std::vector<Simplex>{});
    }
    for (std::size_t k = 1; k < impl->by_dim.size(); ++k) {
        for (const Simplex& s : impl->by_dim[k]) {
            for (const Simplex& f : s.facets()) impl->cofacets[f].push_back(s);
        }
    }
    // by_dim is sorted, so every cofacet list is already in ascending order.
    return SimplicialComplex(std::move(impl));
}

int SimplicialComplex::ambient_dim() const { return impl_->d; }

const std::vector<Vector>& SimplicialComplex::points() const { return impl_->points; }

const Vector& SimplicialComplex::point(VertexId v) const {
    if (v >= impl_->points.size()) throw Error(ErrorKind::NotFound, "vertex " + std::to_string(v));
    return impl_->points[v];
}

std::vector<Vector> SimplicialComplex::points_of(const Simplex& s) const {
    std::vector<Vector> out;
    out.reserve(s.size());
    for (VertexId v : s.vertices()) out.push_back(point(v));
    return out;
}

int SimplicialComplex::dim() const { return static_cast<int>(impl_->by_dim.size()) - 1; }

const std::vector<Simplex>& SimplicialComplex::simplices(int i) const {
    static const std::vector<Simplex> none;
    if (i < 0 || i > dim()) return none;
    return impl_->by_dim[static_cast<std::size_t>(i)];
}

std::size_t SimplicialComplex::size() const { return impl_->cofacets.size(); }

bool SimplicialComplex::contains(const Simplex& s) const { return impl_->cofacets.count(s) > 0; }

const std::vector<Simplex>& SimplicialComplex::cofacets_of(const Simplex& s) const {
    auto it = impl_->cofacets.find(s);
    if (it == impl_->cofacets.end()) throw Error(ErrorKind::NotFound, "simplex " + format_simplex(s) + " not in complex");
    return it->second;
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    std::vector<Simplex> keep;
    for (int k = 1; k <= std::min(i, dim()); ++k) {
        keep.insert(keep.end(), simplices(k).begin(), simplices(k).end());
    }
    return from_maximal(impl_->d, impl_->points, keep);
}

SimplicialComplex SimplicialComplex::with_simplices(const std::vector<Simplex>& extra) const {
    std::vector<Simplex> all = maximal_simplices();
    all.insert(all.end(), extra.begin(), extra.end());
    return from_maximal(impl_->d, impl_->points, all);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 1; k <= dim(); ++k) {
        for (const Simplex& s : simplices(k)) {
            if (cofacets_of(s).empty()) out.push_back(s);
        }
    }
    return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->d == b.impl_->d && a.impl_->points == b.impl_->points && a.impl_->by_dim == b.impl_->by_dim;
}

std::string_view to_string(Property p) {
    switch (p) {
        case Property::FacetsOnly: return "facets-only";
        case Property::LocallyInjective: return "locally-injective";
        case Property::Embedded: return "embedded";
    }
    return "?";
}

Property parse_property(std::string_view text) {
    for (Property p : {Property::FacetsOnly, Property::LocallyInjective, Property::Embedded}) {
        if (text == to_string(p)) return p;
    }
    throw Error(ErrorKind::InvalidInput, "unknown property '" + std::string(text) + "'");
}

StructureReport check_structure(const SimplicialComplex& k, Property property) {
    StructureReport report;
    const int d = k.ambient_dim();
    const int top = property == Property::Embedded ? std::min(k.dim(), d - 1) : k.dim();
    for (int i = 1; i <= top; ++i) {
        if (i < d) continue;
        for (const Simplex& s : k.simplices(i)) {
            auto pts = k.points_of(s);
            if (affine_dim(pts) == d) report.no_perpendicular.push_back(s);
        }
    }
    if (property == Property::FacetsOnly) return report;

    struct Entry {
        const Simplex* s;
        BoundingBox box;
    };
    std::vector<Entry> all;
    for (int i = 0; i <= k.dim(); ++i) {
        for (const Simplex& s : k.simplices(i)) {
            if (i > 0 && affine_dim(k.points_of(s)) < i) report.pairs.push_back({s, s});
            all.push_back({&s, BoundingBox::of(k.points(), s.vertices())});
        }
    }
    for (std::size_t x = 0; x < all.size(); ++x) {
        for (std::size_t y = x + 1; y < all.size(); ++y) {
            const Simplex& a = *all[x].s;
            const Simplex& b = *all[y].s;
            if (property == Property::LocallyInjective && !a.shares_vertex(b)) continue;
            if (!all[x].box.overlaps(all[y].box)) continue;
            if (!injective_pair_test(k.points(), a.vertices(), b.vertices())) report.pairs.push_back({a, b});
        }
    }
    return report;
}

}  // namespace sweeprec
