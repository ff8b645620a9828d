#include "gid/selection.hpp"

#include "gid/splitmix64.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gid {

namespace {

std::vector<Index> ranked_indices(const std::vector<FeatureScore>& scores,
                                  bool highest_first) {
  std::vector<Index> order(scores.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const FeatureScore& sa = scores[static_cast<std::size_t>(a)];
    const FeatureScore& sb = scores[static_cast<std::size_t>(b)];
    if (highest_first) {
      if (sa.infinite != sb.infinite) return sa.infinite;
      if (sa.nid != sb.nid) return sa.nid > sb.nid;
      return sa.feature < sb.feature;
    }
    return nid_ascending(sa, sb);
  });
  return order;
}

}  // namespace

SelectionPlan plan_selection(const std::vector<FeatureScore>& scores,
                             Policy policy, double fraction,
                             std::uint64_t seed) {
  if (scores.empty()) throw std::invalid_argument("selection: no scores");
  if (!(fraction >= 0.0) || fraction >= 1.0)
    throw std::invalid_argument("selection: fraction must be in [0, 1)");
  const Index d = static_cast<Index>(scores.size());
  const Index discard_count = static_cast<Index>(
      std::floor(fraction * static_cast<double>(d) + 1e-9));
  if (discard_count >= d)
    throw std::invalid_argument("selection: would leave zero features");

  SelectionPlan plan;
  plan.policy = policy;
  plan.fraction = fraction;
  plan.seed = policy == Policy::random ? seed : 0;

  std::vector<Index> order;
  switch (policy) {
    case Policy::top:
      order = ranked_indices(scores, /*highest_first=*/true);
      break;
    case Policy::reversed:
      order = ranked_indices(scores, /*highest_first=*/false);
      break;
    case Policy::random: {
      order.resize(static_cast<std::size_t>(d));
      std::iota(order.begin(), order.end(), Index{0});
      SplitMix64 rng(seed);
      for (Index i = 0; i < discard_count; ++i) {
        const Index j =
            i + static_cast<Index>(
                    rng.next_below(static_cast<std::uint64_t>(d - i)));
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(j)]);
      }
      break;
    }
  }

  plan.discarded.assign(order.begin(), order.begin() + discard_count);
  std::sort(plan.discarded.begin(), plan.discarded.end());
  plan.kept.reserve(static_cast<std::size_t>(d - discard_count));
  auto next_discarded = plan.discarded.begin();
  for (Index j = 0; j < d; ++j) {
    if (next_discarded != plan.discarded.end() && *next_discarded == j) {
      ++next_discarded;
    } else {
      plan.kept.push_back(j);
    }
  }
  return plan;
}

Matrix apply_selection(const MatrixRef& data, const SelectionPlan& plan) {
  const Index d = data.cols();
  if (plan.kept.empty())
    throw std::invalid_argument("selection: plan keeps zero features");
  if (static_cast<Index>(plan.kept.size() + plan.discarded.size()) != d)
    throw std::invalid_argument("selection: plan does not match column count");
  for (Index j : plan.kept)
    if (j < 0 || j >= d)
      throw std::invalid_argument("selection: kept index out of range");

  Matrix reduced(data.rows(), static_cast<Index>(plan.kept.size()));
  for (std::size_t c = 0; c < plan.kept.size(); ++c)
    reduced.col(static_cast<Index>(c)) = data.col(plan.kept[c]);
  return reduced;
}

double remaining_share(const std::vector<FeatureScore>& scores,
                       const SelectionPlan& plan, ShareBasis basis) {
  if (scores.empty()) throw std::invalid_argument("remaining share: no scores");
  auto value_of = [&](const FeatureScore& s) {
    if (basis == ShareBasis::nid) {
      if (s.infinite)
        throw std::invalid_argument(
            "remaining share: NID basis undefined with constant features");
      return s.nid;
    }
    return s.norm_discriminability;
  };

  // Both sums walk features in ascending index order so that the untouched
  // plan divides two identical accumulations (share exactly 1 at fraction 0).
  double total = 0.0;
  for (const FeatureScore& s : scores) total += value_of(s);
  if (total == 0.0)
    throw std::invalid_argument(
        "remaining share: all features have zero discriminability");
  double kept = 0.0;
  for (Index j : plan.kept) {
    if (j < 0 || j >= static_cast<Index>(scores.size()))
      throw std::invalid_argument("remaining share: plan does not match scores");
    kept += value_of(scores[static_cast<std::size_t>(j)]);
  }
  return kept / total;
}

}  // namespace gid
