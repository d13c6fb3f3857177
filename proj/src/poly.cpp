#include "kolmo/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kolmo::poly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Single simple root of a monotone c on [lo, hi] with sign change; f_lo, f_hi are the endpoint values.
double monotone_root(std::span<const double> c, double lo, double hi, double f_lo, double f_hi) {
  const bool increasing = f_lo < f_hi;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    double fx = 0, dfx = 0;
    eval_with_slope(c, x, fx, dfx);
    if (fx == 0) return x;
    if ((fx < 0) == increasing) lo = x; else hi = x;
    const double width = hi - lo;
    if (width <= 4 * kEps * std::max(std::abs(lo), std::abs(hi)) || width <= std::numeric_limits<double>::min()) break;
    double next = (dfx != 0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // A Newton step that barely moves the iterate is finished once the bracket agrees.
    if (next == x) break;
    x = next;
  }
  return std::abs(eval(c, lo)) < std::abs(eval(c, hi)) ? lo : hi;
}

void push_unique(std::vector<double>& roots, double x, double scale) {
  if (!roots.empty() && std::abs(roots.back() - x) <= 8 * kEps * scale) return;
  roots.push_back(x);
}

}  // namespace

double eval(std::span<const double> c, double u) {
  double acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

void eval_with_slope(std::span<const double> c, double u, double& value, double& slope) {
  value = 0;
  slope = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    slope = slope * u + value;
    value = value * u + c[i];
  }
}

std::vector<double> derivative(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
  return d;
}

std::vector<double> integral(std::span<const double> c, double constant) {
  std::vector<double> q(c.size() + 1);
  q[0] = constant;
  for (std::size_t i = 0; i < c.size(); ++i) q[i + 1] = c[i] / static_cast<double>(i + 1);
  return q;
}

double definite_integral(std::span<const double> c, double h) {
  double acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * h + c[i] / static_cast<double>(i + 1);
  return acc * h;
}

bool is_zero(std::span<const double> c) {
  return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
}

int effective_degree(std::span<const double> c, double h) {
  const double r = std::max(std::abs(h), 1.0);
  double scale = 0;
  double pw = 1;
  std::vector<double> mag(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mag[i] = std::abs(c[i]) * pw;
    scale += mag[i];
    pw *= r;
  }
  if (scale == 0) return -1;
  int deg = static_cast<int>(c.size()) - 1;
  while (deg > 0 && mag[deg] <= 1e-15 * scale) --deg;
  return deg;
}

double eval_error_bound(std::span<const double> c, double radius) {
  double acc = 0;
  double pw = 1;
  for (double v : c) {
    acc += std::abs(v) * pw;
    pw *= radius;
  }
  return 4.0 * static_cast<double>(c.size() + 1) * kEps * acc;
}

std::vector<double> real_roots(std::span<const double> c, double lo, double hi) {
  std::vector<double> roots;
  if (hi < lo) return roots;
  const double radius = std::max(std::abs(lo), std::abs(hi));
  const int deg = effective_degree(c, radius);
  if (deg < 0) return roots;
  const auto p = c.first(static_cast<std::size_t>(deg) + 1);
  if (deg == 0) return roots;
  const double scale = std::max(radius, hi - lo);
  if (deg == 1) {
    const double x = -p[0] / p[1];
    if (x >= lo && x <= hi) roots.push_back(x);
    return roots;
  }

  const double zero_tol = eval_error_bound(p, radius);
  std::vector<double> nodes{lo};
  for (double x : critical_points(p, lo, hi)) nodes.push_back(x);
  nodes.push_back(hi);

  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    values[i] = eval(p, nodes[i]);
    if (std::abs(values[i]) <= zero_tol) values[i] = 0;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i] == 0) {
      push_unique(roots, nodes[i], scale);
    }
    if (i + 1 < nodes.size() && values[i] != 0 && values[i + 1] != 0 &&
        (values[i] < 0) != (values[i + 1] < 0)) {
      push_unique(roots, monotone_root(p, nodes[i], nodes[i + 1], values[i], values[i + 1]), scale);
    }
  }
  return roots;
}

std::vector<double> critical_points(std::span<const double> c, double lo, double hi) {
  const auto d = derivative(c);
  auto r = real_roots(d, lo, hi);
  std::erase_if(r, [&](double x) { return x <= lo || x >= hi; });
  return r;
}

}  // namespace kolmo::poly
