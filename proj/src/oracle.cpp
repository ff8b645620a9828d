#include "gid/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gid::oracle {

namespace {

// Walks all k-combinations of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(Index n, Index k, Visit&& visit) {
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    Index pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (Index i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

double subset_spread(const std::vector<double>& values,
                     const std::vector<Index>& idx) {
  double lo = values[static_cast<std::size_t>(idx.front())];
  double hi = lo;
  for (Index i : idx) {
    const double v = values[static_cast<std::size_t>(i)];
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace

double brute_min_subset_spread(const std::vector<double>& values, Index k) {
  const Index n = static_cast<Index>(values.size());
  if (n > 20) throw std::invalid_argument("oracle: n > 20");
  if (k < 2 || k > n) throw std::invalid_argument("oracle: need 2 <= k <= n");
  double best = kInf;
  for_each_combination(n, k, [&](const std::vector<Index>& idx) {
    best = std::min(best, subset_spread(values, idx));
  });
  return best;
}

double brute_delta(const MatrixRef& data) {
  require_data(data);
  const Index n = data.rows();
  const Index d = data.cols();
  if (n > 12 || d > 6) throw std::invalid_argument("oracle: guard n <= 12, d <= 6");
  double sum = 0.0;
  for (Index k = 2; k <= n; ++k) {
    double widest = 0.0;
    for (Index j = 0; j < d; ++j) {
      std::vector<double> column(data.col(j).begin(), data.col(j).end());
      widest = std::max(widest, brute_min_subset_spread(column, k));
    }
    sum += widest;
  }
  return sum / static_cast<double>(n);
}

std::vector<FeatureScore> brute_feature_scores(const MatrixRef& data) {
  require_data(data);
  const Index n = data.rows();
  if (n > 12) throw std::invalid_argument("oracle: guard n <= 12");
  std::vector<FeatureScore> scores;
  scores.reserve(static_cast<std::size_t>(data.cols()));
  for (Index j = 0; j < data.cols(); ++j) {
    std::vector<double> column(data.col(j).begin(), data.col(j).end());
    double plain = 0.0;
    double weighted = 0.0;
    for (Index k = 2; k <= n; ++k) {
      const double spread = brute_min_subset_spread(column, k);
      plain += spread;
      weighted += spread / static_cast<double>(k);
    }
    FeatureScore score;
    score.feature = j;
    score.discriminability = plain / static_cast<double>(n);
    score.norm_discriminability = weighted / static_cast<double>(n);
    score.infinite = score.norm_discriminability == 0.0;
    score.nid = score.infinite
                    ? kInf
                    : 1.0 / (score.norm_discriminability * score.norm_discriminability);
    score.nid_lower = score.nid;
    score.nid_upper = score.nid;
    scores.push_back(score);
  }
  return scores;
}

}  // namespace gid::oracle
