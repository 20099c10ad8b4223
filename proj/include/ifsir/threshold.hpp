#pragma once

#include <string>
#include <variant>

namespace ifsir::threshold {

/// `value` for d > 0, else 0.
struct Step {
  double value = 0.01;
  bool operator==(const Step&) const = default;
};
/// 1 for d > 0.
struct Usual {
  bool operator==(const Usual&) const = default;
};
/// 1 for d > q.
struct UShape {
  double q = 0.0;
  bool operator==(const UShape&) const = default;
};
/// Linear ramp from 0 at d = 0 to 1 at d = p.
struct VShape {
  double p = 1.0;
  bool operator==(const VShape&) const = default;
};
/// 0 up to q, 1/2 up to p, 1 beyond.
struct Level {
  double q = 0.0;
  double p = 1.0;
  bool operator==(const Level&) const = default;
};
/// 0 up to q, linear up to p, 1 beyond.
struct LinearWithIndifference {
  double q = 0.0;
  double p = 1.0;
  bool operator==(const LinearWithIndifference&) const = default;
};
/// 1 - exp(-d^2 / (2 sigma^2)) for d > 0.
struct Gaussian {
  double sigma = 1.0;
  bool operator==(const Gaussian&) const = default;
};

}  // namespace ifsir::threshold

namespace ifsir {

/// A generalized criterion: a non-decreasing map from a performance
/// difference to [0,1] that is 0 for d <= 0.
using ThresholdSpec =
    std::variant<threshold::Step, threshold::Usual, threshold::UShape,
                 threshold::VShape, threshold::Level,
                 threshold::LinearWithIndifference, threshold::Gaussian>;

/// Throws InvalidThresholdParams.
void validate(const ThresholdSpec& spec);

double evaluate(const ThresholdSpec& spec, double d) noexcept;

/// Short name used in problem files: step, usual, u_shape, v_shape, level,
/// linear, gaussian.
std::string kind_name(const ThresholdSpec& spec);

}  // namespace ifsir
