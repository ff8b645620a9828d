#include "gid/types.hpp"

namespace gid {

const char* method_name(Method m) {
  return m == Method::exact ? "exact" : "support-sequence";
}

const char* policy_name(Policy p) {
  switch (p) {
    case Policy::top: return "top";
    case Policy::reversed: return "reversed";
    default: return "random";
  }
}

void validate_support_sequence(const SupportSequence& s, Index n) {
  if (n < 2) throw std::invalid_argument("support sequence: need n >= 2");
  if (s.sizes.empty())
    throw std::invalid_argument("support sequence: empty");
  if (s.front() != 2)
    throw std::invalid_argument("support sequence: first entry must be 2");
  if (s.back() != n)
    throw std::invalid_argument("support sequence: last entry must equal row count");
  for (std::size_t i = 1; i < s.sizes.size(); ++i)
    if (s.sizes[i] <= s.sizes[i - 1])
      throw std::invalid_argument("support sequence: entries must increase strictly");
}

bool nid_ascending(const FeatureScore& a, const FeatureScore& b) {
  if (a.infinite != b.infinite) return b.infinite;
  if (a.nid != b.nid) return a.nid < b.nid;
  return a.feature < b.feature;
}

void require_data(const MatrixRef& data) {
  if (data.rows() < 2)
    throw std::invalid_argument("data set: need at least 2 rows");
  if (data.cols() < 1)
    throw std::invalid_argument("data set: need at least 1 column");
}

void require_feature(const MatrixRef& data, Index feature) {
  if (feature < 0 || feature >= data.cols())
    throw std::invalid_argument("feature index out of range");
}

}  // namespace gid
