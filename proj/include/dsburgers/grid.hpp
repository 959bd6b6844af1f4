#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dsburgers/errors.hpp"

namespace dsburgers {

/// Uniform cell-centred mesh on [r_min, r_max]. Cell j spans
/// [interface(j), interface(j + 1)] and is centred at center(j).
class Grid {
 public:
  static constexpr std::size_t kMinCells = 4;

  explicit Grid(std::size_t nx, double r_min = 0.0, double r_max = 1.0)
      : nx_(nx), r_min_(r_min), r_max_(r_max) {
    if (nx < kMinCells) throw ConfigError(ConfigErrc::Invalid, "nx", "need at least 4 cells");
    if (!(r_max > r_min)) throw ConfigError(ConfigErrc::Invalid, "domain", "r_max must exceed r_min");
    dr_ = (r_max - r_min) / static_cast<double>(nx);
    // accumulated so that interface(j + 1) == interface(j) + dr holds exactly
    interfaces_.resize(nx + 1);
    interfaces_[0] = r_min;
    for (std::size_t j = 0; j < nx; ++j) interfaces_[j + 1] = interfaces_[j] + dr_;
    centers_.resize(nx);
    for (std::size_t j = 0; j < nx; ++j) centers_[j] = r_min + (static_cast<double>(j) + 0.5) * dr_;
  }

  std::size_t nx() const noexcept { return nx_; }
  double dr() const noexcept { return dr_; }
  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }

  double center(std::size_t j) const { return centers_[j]; }
  double interface(std::size_t j) const { return interfaces_[j]; }
  std::span<const double> centers() const noexcept { return centers_; }
  std::span<const double> interfaces() const noexcept { return interfaces_; }

  /// Face position for any integer index, including ghost faces outside the domain.
  double face(long j) const {
    if (j >= 0 && j <= static_cast<long>(nx_)) return interfaces_[static_cast<std::size_t>(j)];
    return r_min_ + static_cast<double>(j) * dr_;
  }

  /// Centre position for any integer index, including ghost cells.
  double cell_center(long j) const {
    if (j >= 0 && j < static_cast<long>(nx_)) return centers_[static_cast<std::size_t>(j)];
    return r_min_ + (static_cast<double>(j) + 0.5) * dr_;
  }

 private:
  std::size_t nx_;
  double r_min_;
  double r_max_;
  double dr_ = 0.0;
  std::vector<double> interfaces_;
  std::vector<double> centers_;
};

/// Cell averages at one time level.
struct State {
  std::vector<double> v;
  double time = 0.0;
  long iter = 0;
};

template <class Fn>
State sample_state(const Grid& grid, Fn&& fn) {
  State s;
  s.v.reserve(grid.nx());
  for (double r : grid.centers()) s.v.push_back(fn(r));
  return s;
}

}  // namespace dsburgers
