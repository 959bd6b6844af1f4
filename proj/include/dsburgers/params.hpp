#pragma once

#include <cmath>

#include "dsburgers/errors.hpp"

namespace dsburgers {

/// Physical configuration: cosmological constant and light speed.
class Params {
 public:
  explicit Params(double lambda = 0.0, double c = 1.0) : lambda_(lambda), c_(c) {
    if (!std::isfinite(lambda)) throw ConfigError(ConfigErrc::Invalid, "lambda", "must be finite");
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError(ConfigErrc::Invalid, "c", "light speed must be positive");
  }

  double lambda() const noexcept { return lambda_; }
  double c() const noexcept { return c_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  double lambda_;
  double c_;
};

}  // namespace dsburgers
