#include "gid/sweep.hpp"

#include "gid/feature_scores.hpp"
#include "gid/splitmix64.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gid {

namespace {

// Sum of 12 unit uniforms minus 6: zero mean, unit variance, bounded, and
// built from dyadic uniforms only, so the stream is reproducible bit for bit.
double gaussian_like(SplitMix64& rng) {
  double sum = 0.0;
  for (int i = 0; i < 12; ++i) sum += rng.next_unit();
  return sum - 6.0;
}

std::vector<double> cleaned_grid(std::vector<double> grid) {
  for (double alpha : grid)
    if (!(alpha >= 0.0) || alpha >= 1.0)
      throw std::invalid_argument("sweep: grid values must lie in [0, 1)");
  grid.push_back(0.0);  // the alpha = 0 baseline row is always present
  std::sort(grid.begin(), grid.end());
  std::vector<double> unique;
  for (double alpha : grid)
    if (unique.empty() || alpha - unique.back() > 1e-12) unique.push_back(alpha);
  return unique;
}

}  // namespace

double nearest_centroid_accuracy(const MatrixRef& data,
                                 const std::vector<int>& labels) {
  const Index n = data.rows();
  if (static_cast<Index>(labels.size()) != n)
    throw std::invalid_argument("evaluator: label count does not match rows");
  if (n < 2) throw std::invalid_argument("evaluator: need at least 2 rows");

  // Class means over the even (training) rows, in ascending label order.
  std::map<int, std::pair<Eigen::RowVectorXd, Index>> sums;
  for (Index r = 0; r < n; r += 2) {
    auto [it, inserted] = sums.try_emplace(
        labels[static_cast<std::size_t>(r)],
        Eigen::RowVectorXd::Zero(data.cols()), Index{0});
    it->second.first += data.row(r);
    it->second.second += 1;
  }
  if (sums.empty()) throw std::invalid_argument("evaluator: no training rows");
  std::vector<int> class_labels;
  std::vector<Eigen::RowVectorXd> centroids;
  for (auto& [label, sum_count] : sums) {
    class_labels.push_back(label);
    centroids.push_back(sum_count.first / static_cast<double>(sum_count.second));
  }

  Index correct = 0;
  Index tested = 0;
  for (Index r = 1; r < n; r += 2) {
    double best = kInf;
    int predicted = class_labels.front();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
      const double dist = (data.row(r) - centroids[c]).squaredNorm();
      if (dist < best) {  // ties keep the smaller label
        best = dist;
        predicted = class_labels[c];
      }
    }
    if (predicted == labels[static_cast<std::size_t>(r)]) ++correct;
    ++tested;
  }
  if (tested == 0) throw std::invalid_argument("evaluator: no test rows");
  return static_cast<double>(correct) / static_cast<double>(tested);
}

SyntheticData generate_synthetic(Index n, Index d_signal, Index d_noise,
                                 std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("synthetic: need even n >= 4");
  if (d_signal < 1) throw std::invalid_argument("synthetic: need d_signal >= 1");
  if (d_noise < 1) throw std::invalid_argument("synthetic: need d_noise >= 1");

  SyntheticData out;
  out.labels.resize(static_cast<std::size_t>(n));
  // Period-4 pattern 0,1,1,0: balanced overall and within both halves of the
  // even/odd evaluation split.
  for (Index i = 0; i < n; ++i)
    out.labels[static_cast<std::size_t>(i)] = static_cast<int>((i + i / 2) % 2);

  out.values.resize(n, d_signal + d_noise);
  SplitMix64 rng(seed);
  for (Index j = 0; j < d_signal; ++j)
    for (Index i = 0; i < n; ++i) {
      const double center = out.labels[static_cast<std::size_t>(i)] ? 2.0 : -2.0;
      out.values(i, j) = center + gaussian_like(rng);
    }
  for (Index j = d_signal; j < d_signal + d_noise; ++j)
    for (Index i = 0; i < n; ++i)
      out.values(i, j) = 0.01 * gaussian_like(rng);
  return out;
}

SweepResult run_sweep(const MatrixRef& data, const std::vector<int>& labels,
                      const SweepOptions& options) {
  require_data(data);
  if (options.policies.empty())
    throw std::invalid_argument("sweep: need at least one policy");
  if (options.seed_count == 0)
    throw std::invalid_argument("sweep: need at least one seed");
  if (options.evaluate && labels.empty())
    throw std::invalid_argument("sweep: evaluator requires labels");

  const std::vector<double> grid = cleaned_grid(options.grid);
  const std::vector<FeatureScore> scores = score_features_auto(
      data, options.threshold, options.support_length, options.threads);

  std::vector<Policy> policies = options.policies;
  std::sort(policies.begin(), policies.end());
  policies.erase(std::unique(policies.begin(), policies.end()), policies.end());

  SweepResult result;
  result.cells.reserve(policies.size() * grid.size() * options.seed_count);
  for (Policy policy : policies) {
    for (double alpha : grid) {
      for (std::uint64_t seed = 0; seed < options.seed_count; ++seed) {
        const SelectionPlan plan = plan_selection(scores, policy, alpha, seed);
        SweepCell cell;
        cell.policy = policy;
        cell.alpha = alpha;
        cell.seed = seed;
        cell.kept = static_cast<Index>(plan.kept.size());
        cell.remaining_share = remaining_share(scores, plan, options.basis);
        if (options.evaluate) {
          const Matrix reduced = apply_selection(data, plan);
          cell.accuracy = nearest_centroid_accuracy(reduced, labels);
        }
        result.cells.push_back(std::move(cell));
      }
    }
  }
  return result;
}

}  // namespace gid
