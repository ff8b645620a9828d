#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gid {

using Index = Eigen::Index;

// Data sets are dense n x d matrices of finite doubles: rows are data points,
// columns are feature values. Row-major is the one canonical layout, matching
// the binary file format.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixRef = Eigen::Ref<const Matrix>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Per-feature minimal spreads: values[k-2] is the tightest value range any
/// k of the n samples can be squeezed into, for k = 2..n. Nondecreasing in k.
struct DiameterProfile {
  Index feature = 0;
  Eigen::VectorXd values;

  double at_size(Index k) const { return values[k - 2]; }
};

enum class Method { exact, support_sequence };

const char* method_name(Method m);

/// Intrinsic-dimension result. Exact computations carry collapsed bounds
/// (lower == upper == mid); support-sequence runs carry a genuine bracket.
/// All-constant data has zero diameter and is reported through the explicit
/// `infinite` flag instead of letting 1/0 propagate.
struct IdEstimate {
  double delta_lower = 0.0;
  double delta_upper = 0.0;
  double id_lower = kInf;
  double id_upper = kInf;
  double id_mid = kInf;
  bool infinite = false;
  Method method = Method::exact;
};

/// Strictly increasing subset sizes s_1 = 2 < ... < s_l = n at which diameter
/// profiles are evaluated; gaps between entries are bounded from both sides.
struct SupportSequence {
  std::vector<Index> sizes;

  Index length() const { return static_cast<Index>(sizes.size()); }
  Index front() const { return sizes.front(); }
  Index back() const { return sizes.back(); }
};

/// Throws std::invalid_argument unless s is a valid support sequence for a
/// data set with n rows.
void validate_support_sequence(const SupportSequence& s, Index n);

/// Per-feature selection scores. `discriminability` averages the diameter
/// profile uniformly, `norm_discriminability` weights size-k entries by 1/k,
/// and `nid` is the reciprocal square of the latter. Constant features have
/// zero discriminability and infinite NID. Approximated scores additionally
/// carry NID bounds with nid equal to their midpoint; the point values
/// discriminability/norm_discriminability are then the estimates consistent
/// with those bounds (norm_discriminability = 1/sqrt(nid)).
struct FeatureScore {
  Index feature = 0;
  double discriminability = 0.0;
  double norm_discriminability = 0.0;
  double nid = kInf;
  bool infinite = false;
  bool approximated = false;
  double nid_lower = kInf;
  double nid_upper = kInf;
};

/// Ascending NID order: finite before infinite, ties broken by feature index.
/// This is the one ranking used everywhere (curves and selection).
bool nid_ascending(const FeatureScore& a, const FeatureScore& b);

struct NidCurvePoint {
  Index rank = 0;       // 1-based position in ascending NID order
  double rel_rank = 0.0;
  Index feature = 0;
  double nid = kInf;
  double rel_nid = 1.0;
};

/// Ranked NID curve: y is NID divided by the largest value, so it is
/// nondecreasing and ends at exactly 1. Infinite NIDs sort last and plot at 1.
struct NidCurve {
  std::vector<NidCurvePoint> points;
};

enum class Policy { top, reversed, random };

const char* policy_name(Policy p);

/// A resolved feature-discard decision: which columns go, which stay.
/// |discarded| = floor(fraction * d); both lists are sorted and disjoint and
/// together cover all column indices; kept is never empty.
struct SelectionPlan {
  Policy policy = Policy::top;
  double fraction = 0.0;
  std::uint64_t seed = 0;  // consumed by the random policy only
  std::vector<Index> discarded;
  std::vector<Index> kept;
};

// Precondition helpers shared by the computation entry points.
void require_data(const MatrixRef& data);
void require_feature(const MatrixRef& data, Index feature);

}  // namespace gid
