#pragma once

#include "gid/types.hpp"

namespace gid {

/// Ascending copy of one column.
Eigen::VectorXd sorted_column(const MatrixRef& data, Index feature);

/// Minimal spreads of feature `feature` for every subset size k = 2..n.
/// On sorted values v the best k-subset is always a contiguous window, so
/// entry k-2 is min_i (v[i+k-1] - v[i]); quadratic overall instead of the
/// exponential subset search. Output does not depend on row order.
DiameterProfile diameter_profile(const MatrixRef& data, Index feature);

/// Averaged observable diameter: mean over k = 2..n of the per-size maximum
/// of the feature profiles. The k-sum runs upward and the feature maximum is
/// taken in ascending column order, so results are reproducible bit for bit
/// at any thread count. Zero iff every feature is constant.
double delta_exact(const MatrixRef& data, int threads = 1);

/// Exact intrinsic dimension 1/delta^2 with collapsed bounds; all-constant
/// data yields the infinite variant.
IdEstimate id_exact(const MatrixRef& data, int threads = 1);

}  // namespace gid
