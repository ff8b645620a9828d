#pragma once

#include "gid/selection.hpp"
#include "gid/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gid {

struct SweepCell {
  Policy policy = Policy::top;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  Index kept = 0;
  double remaining_share = 1.0;
  std::optional<double> accuracy;
};

/// One row per (policy, alpha, seed), sorted by that key; the alpha = 0 row
/// is always present and carries remaining_share exactly 1.
struct SweepResult {
  std::vector<SweepCell> cells;
};

struct SweepOptions {
  std::vector<double> grid;            // alpha values; 0 is added if missing
  std::vector<Policy> policies = {Policy::top, Policy::reversed, Policy::random};
  std::uint64_t seed_count = 10;       // seeds 0..seed_count-1
  bool evaluate = false;
  ShareBasis basis = ShareBasis::discriminability;
  Index threshold = 100000;            // exact/approx dispatch, row count
  Index support_length = 10000;
  int threads = 1;
};

/// Scores the data once (exact or support-sequence approximated depending on
/// the row count), then resolves every (policy, alpha, seed) cell: selection
/// plan, remaining share, kept count, and, with `evaluate` on, nearest-
/// centroid accuracy of the reduced data under the fixed even/odd row split.
/// Deterministic for fixed inputs; the evaluator requires labels.
SweepResult run_sweep(const MatrixRef& data, const std::vector<int>& labels,
                      const SweepOptions& options);

/// Labeled synthetic data: `d_signal` columns carry two well-separated
/// label-dependent clusters (unit spread, centers 4 apart), `d_noise` columns
/// are near-constant (spread 0.01) so they score a high NID and are the first
/// to go under the top policy. Labels are balanced overall and within the
/// even/odd halves. All randomness comes from one splitmix64 stream.
struct SyntheticData {
  Matrix values;
  std::vector<int> labels;
};
SyntheticData generate_synthetic(Index n, Index d_signal, Index d_noise,
                                 std::uint64_t seed);

/// Even rows train, odd rows test; per-class mean centroids over the given
/// columns; squared-distance argmin with ties to the smallest label. Classes
/// unseen in training can never be predicted.
double nearest_centroid_accuracy(const MatrixRef& data,
                                 const std::vector<int>& labels);

}  // namespace gid
