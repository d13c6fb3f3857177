#pragma once

// Test-only reference computations. None of these call into the piecewise
// engine's root finding or the modulus optimizer they are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

// Dense sampling of |f| followed by ternary refinement around the best few samples.
inline double sampled_sup_norm(const std::function<double(double)>& f, double period, int samples = 100000) {
  std::vector<double> v(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) v[i] = std::abs(f(period * i / samples));
  std::vector<int> idx(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) idx[i] = i;
  const int keep = std::min(samples, 16);
  std::partial_sort(idx.begin(), idx.begin() + keep, idx.end(), [&](int x, int y) { return v[x] > v[y]; });
  double best = v[idx[0]];
  const double h = period / samples;
  for (int j = 0; j < keep; ++j) {
    double lo = (idx[j] - 1) * h, hi = (idx[j] + 1) * h;
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (std::abs(f(m1)) < std::abs(f(m2))) lo = m1; else hi = m2;
    }
    best = std::max({best, std::abs(f(lo)), std::abs(f(hi))});
  }
  return best;
}

// Composite Simpson rule over one period.
inline double simpson_mean(const std::function<double(double)>& f, double period, int intervals = 200000) {
  const double h = period / intervals;
  double s = f(0) + f(period);
  for (int i = 1; i < intervals; ++i) s += f(i * h) * (i % 2 ? 4 : 2);
  return s * h / 3 / period;
}

// Direct transcription of the three-piece displays, extended by the stated symmetries:
// even (psi_0, psi_2) or odd (psi_1) about L, then odd/even about 2L, then 4L-periodic.
inline double rodov_closed(int s, double a, double b, double c, double t) {
  const double L = a + b + c;
  const double T = 4 * L;
  t = t - T * std::floor(t / T);
  const auto base = [&](double u) {
    switch (s) {
      case 0: return (u <= a) ? 0.0 : (u <= a + b ? 1.0 : 0.0);
      case 1: return (u <= a) ? -b : (u <= a + b ? u - a - b : 0.0);
      default:
        if (u <= a) return -b * u;
        if (u <= a + b) return (u - a - b) * (u - a - b) / 2 - a * b - b * b / 2;
        return -a * b - b * b / 2;
    }
  };
  const double sym_l = (s == 1) ? -1.0 : 1.0;   // behaviour under reflection about L
  const double sym_2l = (s == 1) ? 1.0 : -1.0;  // behaviour under reflection about 2L
  const auto half = [&](double u) { return u <= L ? base(u) : sym_l * base(2 * L - u); };
  return t <= 2 * L ? half(t) : sym_2l * half(4 * L - t);
}

inline double sgn(double x) { return (x > 0) - (x < 0); }

// Favard constants with known closed forms.
inline double favard_closed(int r) {
  const double pi = std::numbers::pi;
  switch (r) {
    case 0: return 1.0;
    case 1: return pi / 2;
    case 2: return pi * pi / 8;
    case 3: return pi * pi * pi / 24;
    case 4: return 5 * std::pow(pi, 4) / 384;
    default: return std::nan("");
  }
}

/// omega(delta) for the Dragomir class by exhaustive search over the ramp width b.
///
/// Uses the closed-form norms of alpha * psi_3(a, b, 0): alpha = b^{eta-1} from p = 1,
/// a from the quadratic M_0 = delta, objective alpha (a b + b^2 / 2). The log-spaced
/// grid holds `nodes` points on (0, b_max]; each refinement pass zooms into the
/// neighbours of the best node with 1000 fresh points.
inline double dragomir_grid_omega(double eta, double delta, int nodes = 1000000, int refinements = 6) {
  const auto objective = [&](double b) {
    const double alpha = std::pow(b, eta - 1);
    const double k = delta / alpha - b * b * b / 3;
    if (k < 0) return -1.0;
    const double a = 2 * k / (b * b + std::sqrt(b * b * b * b + 2 * b * k));
    return alpha * (a * b + b * b / 2);
  };
  const double b_max = std::pow(3 * delta, 1 / (2 + eta));
  const double span = 10.0;  // decades below b_max
  double lo_t = 0, hi_t = span;
  int n = nodes;
  double best_val = -1, best_t = 0;
  for (int pass = 0; pass <= refinements; ++pass) {
    const double step = (hi_t - lo_t) / (n - 1);
    int best_i = 0;
    double local_best = -1;
    for (int i = 0; i < n; ++i) {
      const double t = lo_t + i * step;
      const double v = objective(b_max * std::pow(10.0, -t));
      if (v > local_best) {
        local_best = v;
        best_i = i;
      }
    }
    if (local_best > best_val) {
      best_val = local_best;
      best_t = lo_t + best_i * step;
    }
    lo_t = std::max(0.0, best_t - step);
    hi_t = std::min(span, best_t + step);
    n = 1000;
  }
  return best_val;
}

}  // namespace oracle
