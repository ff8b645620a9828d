#pragma once

#include "gid/types.hpp"

#include <vector>

namespace gid::oracle {

// Exponential reference implementations by direct subset enumeration.
// Ground truth for tests and the `oracle` CLI subcommand; hard size guards
// keep runtimes deterministic.

/// Smallest spread max|v_i - v_j| over all subsets of size k, enumerated.
/// Guard: 2 <= k <= n <= 20.
double brute_min_subset_spread(const std::vector<double>& values, Index k);

/// Averaged per-size maximum of the enumerated spreads. Guard: n <= 12, d <= 6.
double brute_delta(const MatrixRef& data);

/// Exact per-feature scores by direct summation. Guard: n <= 12.
std::vector<FeatureScore> brute_feature_scores(const MatrixRef& data);

}  // namespace gid::oracle
