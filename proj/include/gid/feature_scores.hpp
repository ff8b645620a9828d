#pragma once

#include "gid/types.hpp"

#include <vector>

namespace gid {

/// One exact score per column: discriminability is the plain mean of the
/// feature's diameter profile, normalized discriminability down-weights the
/// size-k entry by 1/k (damping the influence of single outliers on the
/// full-size spread), and NID is its reciprocal square. Constant columns get
/// the infinite variant.
std::vector<FeatureScore> score_features_exact(const MatrixRef& data,
                                               int threads = 1);

/// Support-sequence bracket per column. Gap sizes s_i < k < s_{i+1} carry
/// their exact 1/k weights (summed ascending k, once, shared by all columns)
/// against the left or right support diameter; NID bounds are the swapped
/// reciprocal squares and nid is their midpoint. The bracket always contains
/// the exact NID and collapses when s is exhaustive.
std::vector<FeatureScore> score_features_approx(const MatrixRef& data,
                                                const SupportSequence& s,
                                                int threads = 1);

/// Exact below `threshold` rows, approximated with the default support
/// sequence at or above.
std::vector<FeatureScore> score_features_auto(const MatrixRef& data,
                                              Index threshold = 100000,
                                              Index support_length = 10000,
                                              int threads = 1);

/// Ranked curve over the scores: features sorted by ascending NID (infinite
/// last, ties by index), x = rank/d, y = NID over the largest value. Infinite
/// entries plot at y = 1; when every NID is infinite the whole curve is flat
/// at 1. Throws on an empty score list.
NidCurve nid_curve(const std::vector<FeatureScore>& scores);

}  // namespace gid
