#include "gid/feature_scores.hpp"

#include "gid/core_id.hpp"
#include "gid/approx_id.hpp"
#include "gid/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace gid {

namespace {

FeatureScore finish_exact(Index feature, double plain_sum, double weighted_sum,
                          double n) {
  FeatureScore score;
  score.feature = feature;
  score.discriminability = plain_sum / n;
  score.norm_discriminability = weighted_sum / n;
  const double nid =
      score.norm_discriminability == 0.0
          ? kInf
          : 1.0 / (score.norm_discriminability * score.norm_discriminability);
  score.infinite = !std::isfinite(nid);
  if (!score.infinite) score.nid = nid;
  score.nid_lower = score.nid;
  score.nid_upper = score.nid;
  return score;
}

}  // namespace

std::vector<FeatureScore> score_features_exact(const MatrixRef& data,
                                               int threads) {
  require_data(data);
  const Index n = data.rows();
  const Index d = data.cols();
  std::vector<FeatureScore> scores(static_cast<std::size_t>(d));
  parallel_for(static_cast<std::size_t>(d), threads, [&](std::size_t jj) {
    const Index j = static_cast<Index>(jj);
    const Eigen::VectorXd v = sorted_column(data, j);
    double plain = 0.0;
    double weighted = 0.0;
    for (Index k = 2; k <= n; ++k) {
      const Index windows = n - k + 1;
      const double spread = (v.tail(windows) - v.head(windows)).minCoeff();
      plain += spread;
      weighted += spread / static_cast<double>(k);
    }
    scores[jj] = finish_exact(j, plain, weighted, static_cast<double>(n));
  });
  return scores;
}

std::vector<FeatureScore> score_features_approx(const MatrixRef& data,
                                                const SupportSequence& s,
                                                int threads) {
  require_data(data);
  const Index n = data.rows();
  validate_support_sequence(s, n);
  const Index l = s.length();
  const Index d = data.cols();

  // Gap weights are column-independent: count of missing sizes per gap and
  // the exact partial harmonic sum over them, accumulated in ascending k.
  Eigen::VectorXd gap_count = Eigen::VectorXd::Zero(l);
  Eigen::VectorXd gap_harmonic = Eigen::VectorXd::Zero(l);
  for (Index i = 0; i + 1 < l; ++i) {
    const Index lo = s.sizes[static_cast<std::size_t>(i)];
    const Index hi = s.sizes[static_cast<std::size_t>(i + 1)];
    gap_count[i] = static_cast<double>(hi - lo - 1);
    double h = 0.0;
    for (Index k = lo + 1; k < hi; ++k) h += 1.0 / static_cast<double>(k);
    gap_harmonic[i] = h;
  }

  std::vector<FeatureScore> scores(static_cast<std::size_t>(d));
  parallel_for(static_cast<std::size_t>(d), threads, [&](std::size_t jj) {
    const Index j = static_cast<Index>(jj);
    const Eigen::VectorXd v = sorted_column(data, j);
    Eigen::VectorXd spread(l);
    for (Index i = 0; i < l; ++i) {
      const Index k = s.sizes[static_cast<std::size_t>(i)];
      const Index windows = n - k + 1;
      spread[i] = (v.tail(windows) - v.head(windows)).minCoeff();
    }

    double plain_low = 0.0, plain_high = 0.0;
    double norm_low = 0.0, norm_high = 0.0;
    for (Index i = 0; i < l; ++i) {
      const double at_support =
          spread[i] / static_cast<double>(s.sizes[static_cast<std::size_t>(i)]);
      plain_low += spread[i];
      plain_high += spread[i];
      norm_low += at_support;
      norm_high += at_support;
      if (i + 1 < l) {
        plain_low += gap_count[i] * spread[i];
        plain_high += gap_count[i] * spread[i + 1];
        norm_low += gap_harmonic[i] * spread[i];
        norm_high += gap_harmonic[i] * spread[i + 1];
      }
    }
    const double nn = static_cast<double>(n);

    FeatureScore score;
    score.feature = j;
    score.approximated = true;
    score.discriminability = (plain_low / nn + plain_high / nn) / 2.0;
    const double lower_norm = norm_low / nn;
    const double upper_norm = norm_high / nn;
    const double nid_lower =
        upper_norm == 0.0 ? kInf : 1.0 / (upper_norm * upper_norm);
    const double nid_upper =
        lower_norm == 0.0 ? kInf : 1.0 / (lower_norm * lower_norm);
    const double nid = (nid_lower + nid_upper) / 2.0;
    score.infinite = !std::isfinite(nid);
    if (!score.infinite) {
      score.nid_lower = nid_lower;
      score.nid_upper = nid_upper;
      score.nid = nid;
      score.norm_discriminability = 1.0 / std::sqrt(nid);
    } else {
      score.norm_discriminability = 0.0;
    }
    scores[jj] = score;
  });
  return scores;
}

std::vector<FeatureScore> score_features_auto(const MatrixRef& data,
                                              Index threshold,
                                              Index support_length,
                                              int threads) {
  require_data(data);
  if (data.rows() < threshold) return score_features_exact(data, threads);
  return score_features_approx(
      data, default_support_sequence(data.rows(), support_length), threads);
}

NidCurve nid_curve(const std::vector<FeatureScore>& scores) {
  if (scores.empty()) throw std::invalid_argument("nid curve: no scores");
  std::vector<FeatureScore> ranked = scores;
  std::sort(ranked.begin(), ranked.end(), nid_ascending);

  double max_finite = 0.0;
  for (const FeatureScore& s : ranked)
    if (!s.infinite) max_finite = std::max(max_finite, s.nid);

  NidCurve curve;
  curve.points.reserve(ranked.size());
  const double d = static_cast<double>(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    NidCurvePoint point;
    point.rank = static_cast<Index>(i + 1);
    point.rel_rank = static_cast<double>(i + 1) / d;
    point.feature = ranked[i].feature;
    point.nid = ranked[i].nid;
    point.rel_nid = ranked[i].infinite ? 1.0 : ranked[i].nid / max_finite;
    curve.points.push_back(point);
  }
  return curve;
}

}  // namespace gid
