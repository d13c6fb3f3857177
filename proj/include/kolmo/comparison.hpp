#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "kolmo/exec.hpp"
#include "kolmo/piecewise.hpp"
#include "kolmo/splines.hpp"

namespace kolmo {

/// A periodic test function with value, slope and derivative norms.
class TestFunction {
 public:
  // p(t + shift)
  static TestFunction spline(PeriodicPiecewisePoly p, double shift = 0.0);
  // A sin(nu t + phase)
  static TestFunction sine(double amplitude, double frequency, double phase = 0.0);

  double value(double t) const;
  double slope(double t) const;
  double period() const;
  // ||f^{(order)}||
  double norm(int order) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct ComparisonReport {
  double max_violation = 0;  // max over checked pairs of |f'(xi)| - |psi'(eta)|, clipped at 0
  double argmax_xi = 0;
  double tolerance = 0;      // tol.compare * ||psi'||
  std::vector<std::pair<int, double>> hypothesis_margins;  // order -> M_s(psi) - M_s(f)
  int grid = 0;
  long level_points = 0;     // number of (xi, eta) pairs examined
  bool experimental = false; // kk for which the comparison theorem is not proved in the literature used here
  bool passed() const { return max_violation <= tolerance; }
};

// For xi on a uniform grid over one period of f, finds every eta in a period of
// amplitude * phi_{lambda,r} with matching value by per-segment root solving and
// records |f'(xi)| - |psi'(eta)|. Throws HypothesisViolated unless
// M_0(f) <= M_0(psi) and M_r(f) <= M_r(psi).
ComparisonReport verify_comparison_euler(const TestFunction& f, const EulerParams& euler, int grid,
                                         Exec exec = Exec::Parallel, const Tolerances& tol = {});

// Same procedure against psi in S_kk, with the hypotheses checked for s = 0 and s in kk-upper.
ComparisonReport verify_comparison_rodov(const TestFunction& f, const OrderVector& kk, const RodovParams& psi,
                                         int grid, Exec exec = Exec::Parallel, const Tolerances& tol = {});

// Every eta in [0, period) with psi(eta) = level, sorted.
std::vector<double> level_set(const PeriodicPiecewisePoly& psi, double level);

}  // namespace kolmo
