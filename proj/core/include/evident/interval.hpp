#pragma once

#include <span>
#include <string>

namespace evident {

/// A closed sub-interval of [0, 1]; point intervals are allowed.
class ProbabilityInterval {
 public:
  /// The vacuous interval [0, 1].
  constexpr ProbabilityInterval() = default;
  /// Throws InvalidArgument unless 0 <= lower <= upper <= 1.
  ProbabilityInterval(double lower, double upper);

  static ProbabilityInterval certain_true() { return {1.0, 1.0}; }
  static ProbabilityInterval certain_false() { return {0.0, 0.0}; }
  static ProbabilityInterval ignorance() { return {}; }

  double lower() const { return lower_; }
  double upper() const { return upper_; }

  /// True if `other` lies inside this interval.
  bool contains(const ProbabilityInterval& other) const {
    return lower_ <= other.lower_ && other.upper_ <= upper_;
  }

  std::string to_string() const;

  friend bool operator==(const ProbabilityInterval&, const ProbabilityInterval&) = default;

 private:
  double lower_ = 0.0;
  double upper_ = 1.0;
};

/// [min of lowers, max of uppers]. Throws InvalidArgument on empty input.
ProbabilityInterval interval_hull(std::span<const ProbabilityInterval> intervals);

}  // namespace evident
