#pragma once

#include "gid/types.hpp"

namespace gid {

struct DeltaBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Geometric support sequence: a length-`length` geometric ladder from n down
/// to 2 is mirrored through s'_i = floor(n + 2 - g_i) and deduplicated, which
/// packs support points densely near k = n where diameters change fastest.
/// Endpoints 2 and n are forced in case floor/dedup drops them. For n <=
/// length the exhaustive sequence (2, 3, ..., n) is returned, which collapses
/// the bounds to the exact values.
SupportSequence default_support_sequence(Index n, Index length = 10000);

/// Two-sided bracket of the averaged observable diameter. Diameter profiles
/// are evaluated at the support sizes only; a gap s_i < k < s_{i+1} of
/// (s_{i+1} - s_i - 1) missing sizes contributes that multiple of the left
/// (lower bound) or right (upper bound) support value, computed analytically
/// rather than per k. Equal to the exact delta when s is exhaustive.
DeltaBounds delta_bounds(const MatrixRef& data, const SupportSequence& s,
                         int threads = 1);

/// Bracket of the intrinsic dimension: reciprocal squares of the swapped
/// delta bounds, midpoint as the point estimate.
IdEstimate id_bounds(const MatrixRef& data, const SupportSequence& s,
                     int threads = 1);

/// Exact computation below `threshold` rows, support-sequence bounds at or
/// above it; the result records which method ran.
IdEstimate id_auto(const MatrixRef& data, Index threshold = 100000,
                   Index support_length = 10000, int threads = 1);

/// Per-size maxima of the feature profiles, evaluated at the support sizes
/// only. Shared by the delta bracket and the per-feature approximations.
Eigen::VectorXd observable_diameters_at(const MatrixRef& data,
                                        const SupportSequence& s, int threads);

}  // namespace gid
