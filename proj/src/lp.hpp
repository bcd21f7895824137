#pragma once

#include "sweeprec/rational.hpp"

namespace sweeprec::detail {

/// Exact feasibility of { z >= 0 : rows * z = rhs } by phase-one simplex with
/// Bland's rule. rows is dense, one Vector per constraint.
bool lp_feasible(std::vector<Vector> rows, Vector rhs);

}  // namespace sweeprec::detail
