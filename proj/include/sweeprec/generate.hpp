#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sweeprec/complex.hpp"
#include "sweeprec/sweep.hpp"

namespace sweeprec {

/// A random embedded complex on n perturbed grid points in R^d (d = 2 or 3):
/// a face-closed random subset of the grid's triangulation, keeping every
/// vertex. The same (d, n, seed) always gives the same complex.
SimplicialComplex gen_complex(int d, int n, std::uint64_t seed);

/// Deterministic SVG drawing; R^3 is projected orthographically. With an
/// order, its simplices are numbered from 1 and their directions drawn.
std::string plot_svg(const SimplicialComplex& k, const std::optional<SweepingOrder>& order = std::nullopt);

}  // namespace sweeprec
