#include "gid/core_id.hpp"

#include "gid/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gid {

Eigen::VectorXd sorted_column(const MatrixRef& data, Index feature) {
  Eigen::VectorXd v = data.col(feature);
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

// values[k-2] = min over windows of width k on sorted v.
Eigen::VectorXd window_minima(const Eigen::VectorXd& v) {
  const Index n = v.size();
  Eigen::VectorXd out(n - 1);
  for (Index k = 2; k <= n; ++k) {
    const Index windows = n - k + 1;
    out[k - 2] = (v.tail(windows) - v.head(windows)).minCoeff();
  }
  return out;
}

}  // namespace

DiameterProfile diameter_profile(const MatrixRef& data, Index feature) {
  require_data(data);
  require_feature(data, feature);
  DiameterProfile profile;
  profile.feature = feature;
  profile.values = window_minima(sorted_column(data, feature));
  return profile;
}

double delta_exact(const MatrixRef& data, int threads) {
  require_data(data);
  const Index n = data.rows();
  const Index d = data.cols();

  // Per-worker running maxima over its feature chunk; chunks are merged in
  // ascending order afterwards. max is an exact operation, so the result is
  // independent of the split.
  const std::size_t workers =
      std::min<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads),
                            static_cast<std::size_t>(d));
  std::vector<Eigen::VectorXd> partial(
      workers, Eigen::VectorXd::Zero(n - 1));
  parallel_for(workers, static_cast<int>(workers), [&](std::size_t w) {
    const Index begin = d * static_cast<Index>(w) / static_cast<Index>(workers);
    const Index end = d * static_cast<Index>(w + 1) / static_cast<Index>(workers);
    for (Index j = begin; j < end; ++j) {
      const Eigen::VectorXd profile = window_minima(sorted_column(data, j));
      partial[w] = partial[w].cwiseMax(profile);
    }
  });
  Eigen::VectorXd per_size = partial[0];
  for (std::size_t w = 1; w < workers; ++w)
    per_size = per_size.cwiseMax(partial[w]);

  double sum = 0.0;
  for (Index k = 2; k <= n; ++k) sum += per_size[k - 2];
  return sum / static_cast<double>(n);
}

IdEstimate id_exact(const MatrixRef& data, int threads) {
  const double delta = delta_exact(data, threads);
  IdEstimate estimate;
  estimate.method = Method::exact;
  estimate.delta_lower = delta;
  estimate.delta_upper = delta;
  const double id = delta == 0.0 ? kInf : 1.0 / (delta * delta);
  if (!std::isfinite(id)) {  // zero diameter, or 1/delta^2 beyond double range
    estimate.infinite = true;
    return estimate;
  }
  estimate.id_lower = id;
  estimate.id_upper = id;
  estimate.id_mid = id;
  return estimate;
}

}  // namespace gid
