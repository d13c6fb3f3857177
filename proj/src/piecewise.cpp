#include "kolmo/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kolmo/errors.hpp"
#include "kolmo/poly.hpp"

namespace kolmo {

PeriodicPiecewisePoly::PeriodicPiecewisePoly(std::vector<double> breakpoints,
                                             std::vector<std::vector<double>> coeffs)
    : breakpoints_(std::move(breakpoints)), coeffs_(std::move(coeffs)) {
  if (breakpoints_.size() < 2) throw InvalidParams("need at least one segment");
  if (breakpoints_.front() != 0.0) throw InvalidParams("first breakpoint must be 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1]) || !std::isfinite(breakpoints_[i])) {
      throw InvalidParams("breakpoints must be finite and strictly increasing");
    }
  }
  if (coeffs_.size() + 1 != breakpoints_.size()) {
    throw InvalidParams("expected " + std::to_string(breakpoints_.size() - 1) + " coefficient rows, got " +
                        std::to_string(coeffs_.size()));
  }
  for (const auto& row : coeffs_) {
    if (row.empty()) throw InvalidParams("empty coefficient row");
  }
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::constant(double value, double period) {
  return PeriodicPiecewisePoly({0.0, period}, {{value}});
}

int PeriodicPiecewisePoly::degree() const {
  std::size_t d = 0;
  for (const auto& row : coeffs_) d = std::max(d, row.size() - 1);
  return static_cast<int>(d);
}

std::size_t PeriodicPiecewisePoly::locate(double t) const {
  const auto first = breakpoints_.begin() + 1;
  const auto it = std::lower_bound(first, breakpoints_.end(), t);
  const auto idx = static_cast<std::size_t>(it - first);
  return std::min(idx, coeffs_.size() - 1);
}

double PeriodicPiecewisePoly::operator()(double t) const {
  const double T = period();
  double r = t - T * std::floor(t / T);
  if (r >= T) r -= T;
  if (r < 0) r = 0;
  const std::size_t i = locate(r);
  return poly::eval(coeffs_[i], r - breakpoints_[i]);
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::scaled(double factor) const {
  auto rows = coeffs_;
  for (auto& row : rows)
    for (double& v : row) v *= factor;
  return {breakpoints_, std::move(rows)};
}

PeriodicPiecewisePoly PeriodicPiecewisePoly::plus_constant(double shift) const {
  auto rows = coeffs_;
  for (auto& row : rows) row[0] += shift;
  return {breakpoints_, std::move(rows)};
}

double PeriodicPiecewisePoly::max_jump() const {
  double jump = 0;
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double left = poly::eval(coeffs_[i], segment_length(i));
    const double right = coeffs_[(i + 1) % n][0];
    jump = std::max(jump, std::abs(left - right));
  }
  return jump;
}

double eval(const PeriodicPiecewisePoly& p, double t) { return p(t); }

PeriodicPiecewisePoly differentiate(const PeriodicPiecewisePoly& p) {
  std::vector<std::vector<double>> rows;
  rows.reserve(p.segment_count());
  for (std::size_t i = 0; i < p.segment_count(); ++i) rows.push_back(poly::derivative(p.segment(i)));
  return {std::vector<double>(p.breakpoints().begin(), p.breakpoints().end()), std::move(rows)};
}

double integral(const PeriodicPiecewisePoly& p) {
  double total = 0;
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    total += poly::definite_integral(p.segment(i), p.segment_length(i));
  }
  return total;
}

double mean(const PeriodicPiecewisePoly& p) { return integral(p) / p.period(); }

double sup_norm(const PeriodicPiecewisePoly& p) {
  double best = 0;
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    const auto c = p.segment(i);
    const double h = p.segment_length(i);
    best = std::max({best, std::abs(c[0]), std::abs(poly::eval(c, h))});
    if (c.size() > 2) {
      for (double u : poly::critical_points(c, 0.0, h)) best = std::max(best, std::abs(poly::eval(c, u)));
    }
  }
  return best;
}

PeriodicPiecewisePoly antiderivative_zero_mean(const PeriodicPiecewisePoly& p, const Tolerances& tol) {
  const double T = p.period();
  const double total = integral(p);
  const double limit = tol.mean * T * sup_norm(p);
  if (std::abs(total) > limit) {
    throw NonZeroMean("integral over one period is " + std::to_string(total) + ", limit " + std::to_string(limit));
  }
  const std::size_t n = p.segment_count();
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  double running = 0;
  double area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double h = p.segment_length(i);
    rows.push_back(poly::integral(p.segment(i), running));
    running = poly::eval(rows.back(), h);
    area += poly::definite_integral(rows.back(), h);
  }
  const double offset = area / T;
  for (auto& row : rows) row[0] -= offset;
  return {std::vector<double>(p.breakpoints().begin(), p.breakpoints().end()), std::move(rows)};
}

}  // namespace kolmo
