#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kolmo/tolerances.hpp"

namespace kolmo {

/// A periodic function given on one period [0, T] by polynomial segments.
///
/// Segment i covers (t_i, t_{i+1}] (the first one also owns t = 0) and stores
/// its coefficients in the local variable u = t - t_i, lowest degree first.
/// Local coordinates keep the conditioning independent of where the segment
/// sits inside a long period.
///
/// Instances are immutable; every operation returns a new value.
class PeriodicPiecewisePoly {
 public:
  // Throws InvalidParams unless breakpoints start at 0, increase strictly and
  // there is exactly one non-empty coefficient row per segment.
  PeriodicPiecewisePoly(std::vector<double> breakpoints, std::vector<std::vector<double>> coeffs);

  static PeriodicPiecewisePoly constant(double value, double period);

  double period() const { return breakpoints_.back(); }
  std::size_t segment_count() const { return coeffs_.size(); }
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> segment(std::size_t i) const { return coeffs_[i]; }
  double segment_start(std::size_t i) const { return breakpoints_[i]; }
  double segment_length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }
  int degree() const;

  // Index of the segment owning t (already reduced to [0, T]).
  std::size_t locate(double t) const;

  double operator()(double t) const;

  PeriodicPiecewisePoly scaled(double factor) const;
  PeriodicPiecewisePoly plus_constant(double shift) const;

  // Largest jump |p(t_i^+) - p(t_i^-)| over interior breakpoints and the period seam.
  double max_jump() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> coeffs_;
};

double eval(const PeriodicPiecewisePoly& p, double t);

PeriodicPiecewisePoly differentiate(const PeriodicPiecewisePoly& p);

// Periodic primitive with zero mean. Throws NonZeroMean when |integral of p over a period|
// exceeds tol.mean * period * max|p|.
PeriodicPiecewisePoly antiderivative_zero_mean(const PeriodicPiecewisePoly& p, const Tolerances& tol = {});

// max |p| over a period from segment endpoints and the real critical points of each segment.
double sup_norm(const PeriodicPiecewisePoly& p);

double integral(const PeriodicPiecewisePoly& p);
double mean(const PeriodicPiecewisePoly& p);

}  // namespace kolmo
