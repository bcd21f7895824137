#pragma once

#include <string>
#include <string_view>

#include "sweeprec/complex.hpp"
#include "sweeprec/reconstruct.hpp"
#include "sweeprec/sweep.hpp"

namespace sweeprec {

/// {"dimension": d, "vertices": [[coord, ...], ...], "maximal_simplices": [[id, ...], ...]}
/// Coordinates are decimal or rational strings, or JSON integers.
SimplicialComplex parse_complex_json(std::string_view text);
std::string complex_to_json(const SimplicialComplex& k);

/// [{"simplex": [...], "direction": [...], "circle": {"u", "w", "mode"}}, ...]
std::string sweeping_order_to_json(const SweepingOrder& so, bool with_circles = true);
/// Circles are re-based on the first vertex of their simplex.
SweepingOrder parse_sweeping_order_json(std::string_view text, const SimplicialComplex& k);

/// {"n": [...], "queries": {"total": n, "per_dim": [...]}, "max_binary_search_depth": n}
std::string stats_to_json(const ReconStats& stats);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace sweeprec
