#include "sweeprec/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "sweeprec/candidates.hpp"
#include "sweeprec/error.hpp"

namespace sweeprec {

namespace {

constexpr int kMaxAttempts = 100;

/// Top simplices of the standard triangulation of a g^d grid, as grid indices.
/// Squares are split along their main diagonal; cubes into the six Kuhn
/// tetrahedra.
std::vector<std::vector<std::size_t>> grid_triangulation(int d, std::size_t g) {
    std::vector<std::vector<std::size_t>> out;
    if (g < 2) return out;
    auto index = [&](std::size_t x, std::size_t y, std::size_t z) { return x + g * (y + g * z); };
    const std::size_t zcells = d == 3 ? g - 1 : 1;
    for (std::size_t z = 0; z < zcells; ++z) {
        for (std::size_t y = 0; y + 1 < g; ++y) {
            for (std::size_t x = 0; x + 1 < g; ++x) {
                if (d == 2) {
                    out.push_back({index(x, y, 0), index(x + 1, y, 0), index(x + 1, y + 1, 0)});
                    out.push_back({index(x, y, 0), index(x, y + 1, 0), index(x + 1, y + 1, 0)});
                    continue;
                }
                std::array<int, 3> axes{0, 1, 2};
                do {
                    std::array<std::size_t, 3> p{x, y, z};
                    std::vector<std::size_t> tet{index(p[0], p[1], p[2])};
                    for (int axis : axes) {
                        ++p[static_cast<std::size_t>(axis)];
                        tet.push_back(index(p[0], p[1], p[2]));
                    }
                    out.push_back(std::move(tet));
                } while (std::next_permutation(axes.begin(), axes.end()));
            }
        }
    }
    return out;
}

std::vector<Simplex> faces_of_dim(const std::vector<Simplex>& tops, int dim) {
    std::set<Simplex> out;
    for (const Simplex& t : tops) {
        const auto& ids = t.vertices();
        const std::uint32_t full = (1u << ids.size()) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (__builtin_popcount(mask) != dim + 1) continue;
            std::vector<VertexId> f;
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (mask & (1u << j)) f.push_back(ids[j]);
            }
            out.insert(Simplex(std::move(f)));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

SimplicialComplex gen_complex(int d, int n, std::uint64_t seed) {
    if (d != 2 && d != 3) throw Error(ErrorKind::InvalidInput, "gen supports d = 2 or 3");
    if (n < 1) throw Error(ErrorKind::InvalidInput, "gen needs n >= 1");
    std::size_t g = 1;
    auto cells = [d](std::size_t side) { return d == 2 ? side * side : side * side * side; };
    while (cells(g) < static_cast<std::size_t>(n)) ++g;

    std::vector<Simplex> tops;
    for (const auto& t : grid_triangulation(d, g)) {
        if (std::all_of(t.begin(), t.end(), [&](std::size_t i) { return i < static_cast<std::size_t>(n); })) {
            tops.emplace_back(std::vector<VertexId>(t.begin(), t.end()));
        }
    }
    std::sort(tops.begin(), tops.end());
    // Each dimension below the top is offered with its own keep probability.
    const std::vector<double> keep = d == 2 ? std::vector<double>{0.5, 0.4} : std::vector<double>{0.35, 0.25, 0.25};
    std::vector<std::vector<Simplex>> layers;
    for (int k = 1; k <= d; ++k) layers.push_back(faces_of_dim(tops, k));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> jitter(-100, 100);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Vector> points;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            std::size_t rest = i;
            Vector p;
            for (int axis = 0; axis < d; ++axis) {
                Scalar offset(jitter(rng), 1000);
                offset.canonicalize();
                p.push_back(Scalar(static_cast<long>(rest % g)) + offset);
                rest /= g;
            }
            points.push_back(std::move(p));
        }
        std::vector<Simplex> chosen;
        for (std::size_t k = 0; k < layers.size(); ++k) {
            std::bernoulli_distribution pick(keep[k]);
            for (const Simplex& s : layers[k]) {
                if (pick(rng)) chosen.push_back(s);
            }
        }
        SimplicialComplex k = SimplicialComplex::from_maximal(d, std::move(points), chosen);
        if (!check_structure(k, Property::Embedded).ok()) continue;
        bool assumptions = true;
        for (int i = 0; i < k.dim() && assumptions; ++i) {
            assumptions = check_assumption_reconstruction(k.skeleton(i), i, Property::Embedded).empty();
        }
        if (assumptions) return k;
    }
    throw Error(ErrorKind::InvalidInput, "no valid complex after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace sweeprec
