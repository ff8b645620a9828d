#include "gid/approx_id.hpp"

#include "gid/core_id.hpp"
#include "gid/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gid {

SupportSequence default_support_sequence(Index n, Index length) {
  if (n < 2) throw std::invalid_argument("support sequence: need n >= 2");
  if (length < 2) throw std::invalid_argument("support sequence: need length >= 2");

  SupportSequence s;
  if (n <= length) {
    s.sizes.resize(static_cast<std::size_t>(n - 1));
    for (Index k = 2; k <= n; ++k) s.sizes[static_cast<std::size_t>(k - 2)] = k;
    return s;
  }

  const double ratio =
      std::pow(2.0 / static_cast<double>(n),
               1.0 / static_cast<double>(length - 1));
  s.sizes.reserve(static_cast<std::size_t>(length));
  for (Index i = 0; i < length; ++i) {
    const double geometric =
        static_cast<double>(n) * std::pow(ratio, static_cast<double>(i));
    const double mirrored = static_cast<double>(n) + 2.0 - geometric;
    Index size = static_cast<Index>(std::floor(mirrored));
    size = std::clamp(size, Index{2}, n);
    if (s.sizes.empty() || size > s.sizes.back()) s.sizes.push_back(size);
  }
  // Floating-point drift must not break the endpoint invariant.
  if (s.sizes.front() != 2) s.sizes.insert(s.sizes.begin(), 2);
  if (s.sizes.back() != n) s.sizes.push_back(n);
  return s;
}

Eigen::VectorXd observable_diameters_at(const MatrixRef& data,
                                        const SupportSequence& s,
                                        int threads) {
  const Index n = data.rows();
  const Index d = data.cols();
  const Index l = s.length();

  const std::size_t workers =
      std::min<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads),
                            static_cast<std::size_t>(d));
  std::vector<Eigen::VectorXd> partial(workers, Eigen::VectorXd::Zero(l));
  parallel_for(workers, static_cast<int>(workers), [&](std::size_t w) {
    const Index begin = d * static_cast<Index>(w) / static_cast<Index>(workers);
    const Index end = d * static_cast<Index>(w + 1) / static_cast<Index>(workers);
    for (Index j = begin; j < end; ++j) {
      const Eigen::VectorXd v = sorted_column(data, j);
      for (Index i = 0; i < l; ++i) {
        const Index k = s.sizes[static_cast<std::size_t>(i)];
        const Index windows = n - k + 1;
        const double spread = (v.tail(windows) - v.head(windows)).minCoeff();
        partial[w][i] = std::max(partial[w][i], spread);
      }
    }
  });
  Eigen::VectorXd per_point = partial[0];
  for (std::size_t w = 1; w < workers; ++w)
    per_point = per_point.cwiseMax(partial[w]);
  return per_point;
}

DeltaBounds delta_bounds(const MatrixRef& data, const SupportSequence& s,
                         int threads) {
  require_data(data);
  validate_support_sequence(s, data.rows());

  const Eigen::VectorXd diameters = observable_diameters_at(data, s, threads);
  const Index l = s.length();
  double low = 0.0;
  double high = 0.0;
  for (Index i = 0; i < l; ++i) {
    low += diameters[i];
    high += diameters[i];
    if (i + 1 < l) {
      const double gap = static_cast<double>(
          s.sizes[static_cast<std::size_t>(i + 1)] -
          s.sizes[static_cast<std::size_t>(i)] - 1);
      low += gap * diameters[i];
      high += gap * diameters[i + 1];
    }
  }
  const double n = static_cast<double>(data.rows());
  return DeltaBounds{low / n, high / n};
}

IdEstimate id_bounds(const MatrixRef& data, const SupportSequence& s,
                     int threads) {
  const DeltaBounds delta = delta_bounds(data, s, threads);
  IdEstimate estimate;
  estimate.method = Method::support_sequence;
  estimate.delta_lower = delta.lower;
  estimate.delta_upper = delta.upper;
  const double lower =
      delta.upper == 0.0 ? kInf : 1.0 / (delta.upper * delta.upper);
  const double upper =
      delta.lower == 0.0 ? kInf : 1.0 / (delta.lower * delta.lower);
  const double mid = (lower + upper) / 2.0;
  if (!std::isfinite(mid)) {  // zero diameter, or a bound beyond double range
    estimate.infinite = true;
    return estimate;
  }
  estimate.id_lower = lower;
  estimate.id_upper = upper;
  estimate.id_mid = mid;
  return estimate;
}

IdEstimate id_auto(const MatrixRef& data, Index threshold, Index support_length,
                   int threads) {
  require_data(data);
  if (data.rows() < threshold) return id_exact(data, threads);
  return id_bounds(data, default_support_sequence(data.rows(), support_length),
                   threads);
}

}  // namespace gid
