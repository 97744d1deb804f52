#pragma once

#include <map>
#include <string>

namespace distlap {

/// Slack granted to every spectral inequality.
inline constexpr double kSlack = 1e-8;
/// |observed - bound| at or below this counts as equality.
inline constexpr double kEqualityTol = 1e-7;

struct Tolerance {
  double slack = kSlack;
  double equality = kEqualityTol;
};

/// Outcome of evaluating one inequality on one graph. When the hypotheses
/// are not met, applicable is false and holds/strict/equality are set
/// vacuously.
struct BoundVerdict {
  std::string theorem_id;
  double bound_value = 0.0;
  double observed = 0.0;
  bool holds = true;
  bool strict = false;
  bool equality = false;
  bool applicable = true;
  std::map<std::string, double> witness;
  std::string note;
};

inline BoundVerdict not_applicable(std::string id, std::string reason) {
  BoundVerdict v;
  v.theorem_id = std::move(id);
  v.applicable = false;
  v.holds = v.strict = v.equality = true;
  v.note = std::move(reason);
  return v;
}

}  // namespace distlap
