#pragma once

#include "gid/types.hpp"

#include <vector>

namespace gid {

/// Which per-feature quantity the remaining-share metric sums.
/// `discriminability` follows the normalized-discriminability definition;
/// `nid` sums raw NID instead and is exposed as an explicit alternative only
/// (undefined when any feature is constant).
enum class ShareBasis { discriminability, nid };

/// Resolves a discard decision over the scored features. `top` removes the
/// floor(fraction*d) highest-NID features first, `reversed` the lowest-NID
/// first (ties by ascending feature index in both), `random` draws a uniform
/// sample via a splitmix64-seeded partial Fisher-Yates shuffle of the column
/// indices. The count nudge floor(fraction*d + 1e-9) keeps decimal fractions
/// on their mathematical grid (0.9 * 10 discards 9, not 8). At least one
/// feature always remains.
SelectionPlan plan_selection(const std::vector<FeatureScore>& scores,
                             Policy policy, double fraction,
                             std::uint64_t seed = 0);

/// Materializes the reduced data set: kept columns in their original order,
/// rows untouched.
Matrix apply_selection(const MatrixRef& data, const SelectionPlan& plan);

/// Fraction of total (normalized) discriminability retained by the kept
/// features; exactly 1 when nothing was discarded. Throws when the total is
/// zero (all-constant data) or, in NID mode, when any feature is constant.
double remaining_share(const std::vector<FeatureScore>& scores,
                       const SelectionPlan& plan,
                       ShareBasis basis = ShareBasis::discriminability);

}  // namespace gid
