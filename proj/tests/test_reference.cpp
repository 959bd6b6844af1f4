#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dsburgers/reference.hpp"

namespace dsburgers::reference {
namespace {

TEST(ExactRiemann, ShockExample) {
  const RiemannData d{0.8, 0.2, 0.3};
  EXPECT_EQ(exact_riemann_classical(d, 1.0, 0.79), 0.8);
  EXPECT_EQ(exact_riemann_classical(d, 1.0, 0.81), 0.2);
}

TEST(ExactRiemann, FanExample) {
  const RiemannData d{0.2, 0.8, 0.3};
  EXPECT_DOUBLE_EQ(exact_riemann_classical(d, 1.0, 0.7), 0.4);
  EXPECT_EQ(exact_riemann_classical(d, 1.0, 0.45), 0.2);
  EXPECT_EQ(exact_riemann_classical(d, 1.0, 1.2), 0.8);
}

TEST(ExactRiemann, InitialData) {
  const RiemannData d{0.8, 0.2, 0.3};
  EXPECT_EQ(exact_riemann_classical(d, 0.0, 0.2999), 0.8);
  EXPECT_EQ(exact_riemann_classical(d, 0.0, 0.3), 0.2);
}

TEST(ExactRiemann, RankineHugoniotIdentity) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 1000; ++k) {
    double vl = u(rng), vr = u(rng);
    if (vl <= vr) std::swap(vl, vr);
    if (vl == vr) continue;
    const RiemannData d{vl, vr, 0.0};
    const double s = (vl + vr) / 2.0;
    const double t = 1.0;
    // the states on each side of the jump are the data
    EXPECT_EQ(exact_riemann_classical(d, t, s * t - 1e-9), vl);
    EXPECT_EQ(exact_riemann_classical(d, t, s * t + 1e-9), vr);
    ASSERT_NEAR(vl * vl / 2.0 - vr * vr / 2.0, s * (vl - vr), 1e-14);
  }
}

TEST(ExactRiemann, FanIsContinuous) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    double vl = u(rng), vr = u(rng);
    if (vl > vr) std::swap(vl, vr);
    const RiemannData d{vl, vr, 0.3};
    const double t = 0.5;
    for (double edge : {0.3 + vl * t, 0.3 + vr * t}) {
      const double a = exact_riemann_classical(d, t, edge - 1e-13);
      const double b = exact_riemann_classical(d, t, edge + 1e-13);
      ASSERT_NEAR(a, b, 1e-12);
    }
  }
}

TEST(ExactSmooth, ConstantProfile) {
  const auto prof = constant_profile(0.37);
  for (double t : {0.0, 0.5, 10.0}) EXPECT_NEAR(exact_smooth_classical(prof, t, 0.6), 0.37, 1e-12);
}

TEST(ExactSmooth, InitialTimeIsProfile) {
  const auto prof = sine_profile(0.5, 0.25, 2.0 * std::numbers::pi);
  for (double r = 0.0; r <= 1.0; r += 0.1) EXPECT_EQ(exact_smooth_classical(prof, 0.0, r), prof.value(r));
}

TEST(ExactSmooth, SolvesCharacteristicEquation) {
  const auto prof = sine_profile(0.5, 0.25, 2.0 * std::numbers::pi);
  const double v = exact_smooth_classical(prof, 0.1, 0.5);
  EXPECT_NEAR(v, prof.value(0.5 - 0.1 * v), 1e-11);
}

TEST(ExactSmooth, PdeResidualSmall) {
  const auto prof = sine_profile(0.5, 0.25, 2.0 * std::numbers::pi);
  const double h = 1e-5;
  for (double t : {0.05, 0.1, 0.3})
    for (double r = 0.05; r < 1.0; r += 0.05) {
      const double vt = (exact_smooth_classical(prof, t + h, r) - exact_smooth_classical(prof, t - h, r)) / (2 * h);
      const double vr = (exact_smooth_classical(prof, t, r + h) - exact_smooth_classical(prof, t, r - h)) / (2 * h);
      ASSERT_LE(std::abs(vt + exact_smooth_classical(prof, t, r) * vr), 1e-6) << t << ' ' << r;
    }
}

TEST(ExactSmooth, PastShockTimeRejected) {
  const auto prof = sine_profile(0.5, 0.25, 2.0 * std::numbers::pi);
  EXPECT_NEAR(prof.shock_time(), 2.0 / std::numbers::pi, 1e-15);
  try {
    exact_smooth_classical(prof, 0.7, 0.5);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), DomainErrc::PreShockOnly);
  }
}

TEST(GodunovFlux, AgreesWithScan) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 500; ++k) {
    const double a = u(rng), b = u(rng);
    const double lo = std::min(a, b), hi = std::max(a, b);
    double best = a <= b ? INFINITY : -INFINITY;
    for (int i = 0; i <= 1000; ++i) {
      const double v = lo + (hi - lo) * i / 1000.0;
      best = a <= b ? std::min(best, v * v / 2) : std::max(best, v * v / 2);
    }
    if (lo < 0.0 && hi > 0.0 && a <= b) best = 0.0;
    ASSERT_NEAR(godunov_flux(a, b), best, 1e-9);
  }
}

TEST(PlainBurgers, ConstantUnchanged) {
  const std::vector<double> v(30, -0.4);
  EXPECT_EQ(plain_burgers_step(v, 0.01, 0.005), v);
}

TEST(PlainBurgers, SpikeDecaysMonotonically) {
  std::vector<double> v(50, 0.0);
  v[25] = 1.0;
  double prev = 1.0;
  for (int n = 0; n < 100; ++n) {
    v = plain_burgers_step(v, 0.02, 0.018);
    const double m = *std::max_element(v.begin(), v.end());
    ASSERT_LE(m, prev);
    prev = m;
  }
  EXPECT_LT(prev, 1.0);
}

TEST(TotalVariation, Values) {
  EXPECT_EQ(total_variation(std::vector<double>{0, 1, 0, 2}), 4.0);
  EXPECT_EQ(total_variation(std::vector<double>{3}), 0.0);
}

TEST(FrontPosition, StepProfile) {
  const Grid grid(100);
  std::vector<double> v(100);
  for (std::size_t j = 0; j < 100; ++j) v[j] = j < 30 ? 0.8 : 0.2;
  const double f = front_position(v, grid, 0.5);
  EXPECT_NEAR(f, 0.305, grid.dr());
  EXPECT_EQ(front_position(v, grid, 0.5, Crossing::Falling), f);
  EXPECT_THROW(front_position(v, grid, 0.5, Crossing::Rising), DomainError);
}

TEST(FrontPosition, ConstantHasNoFront) {
  const std::vector<double> v(40, 0.5 + 1e-3);
  try {
    front_position(v, Grid(40), 0.5);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), DomainErrc::NotFound);
  }
}

TEST(FrontPosition, RampInverse) {
  const Grid grid(64);
  std::vector<double> v;
  for (double r : grid.centers()) v.push_back(2.0 * r - 0.3);
  for (double level : {0.1, 0.5, 1.2}) EXPECT_NEAR(front_position(v, grid, level), (level + 0.3) / 2.0, grid.dr());
}

TEST(FrontPosition, ReturnsRightmostCrossing) {
  const Grid grid(10);
  const std::vector<double> v{0, 1, 0, 0, 0, 0, 1, 1, 0, 0};
  EXPECT_NEAR(front_position(v, grid, 0.5), 0.8, 1e-12);
}

TEST(ErrorNorms, Definitions) {
  const Grid grid(50);
  std::vector<double> v;
  for (double r : grid.centers()) v.push_back(r * r);
  const auto exact = error_norms(v, [](double r) { return r * r; }, grid);
  EXPECT_EQ(exact.l1, 0.0);
  EXPECT_EQ(exact.linf, 0.0);
  for (double& x : v) x += 0.01;
  const auto off = error_norms(v, [](double r) { return r * r; }, grid);
  EXPECT_NEAR(off.l1, 0.01, 1e-14);
  EXPECT_NEAR(off.linf, 0.01, 1e-14);
  EXPECT_LE(off.l1, off.linf * 1.0 + 1e-15);
  const auto window = error_norms(v, [](double r) { return r * r; }, grid, 0.5, 1.0);
  EXPECT_NEAR(window.l1, 0.005, 1e-14);
}

TEST(ObservedOrder, Values) {
  EXPECT_DOUBLE_EQ(observed_order(4e-3, 1e-3), 2.0);
  EXPECT_DOUBLE_EQ(observed_order(1.0, 0.5), 1.0);
}

}  // namespace
}  // namespace dsburgers::reference
