#include "kolmo/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kolmo/errors.hpp"

namespace kolmo {

double NormVector::at(int order) const {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == order) return values[i];
  }
  throw BadOrders("order " + std::to_string(order) + " not present in norm vector");
}

NormVector NormVector::restricted(std::span<const int> keep) const {
  NormVector out;
  for (int o : keep) {
    out.orders.push_back(o);
    out.values.push_back(at(o));
  }
  return out;
}

std::optional<double> closed_form_rodov_norm(double a, double b, double c, int s) {
  switch (s) {
    case 0: return 1.0;
    case 1: return b;
    case 2: return a * b + b * b / 2;
    case 3:
      if (c == 0) return a * a * b / 2 + a * b * b + b * b * b / 3;
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::vector<double> rodov_norm_profile_numeric(double a, double b, double c, int s_max, const Tolerances& tol) {
  const auto chain = build_rodov_chain({a, b, c, s_max, 1.0}, tol);
  std::vector<double> out;
  out.reserve(chain.size());
  for (const auto& p : chain) out.push_back(sup_norm(p));
  return out;
}

std::vector<double> rodov_norm_profile(double a, double b, double c, int s_max, const Tolerances& tol) {
  std::vector<double> out(static_cast<std::size_t>(s_max) + 1);
  bool need_numeric = false;
  for (int j = 0; j <= s_max; ++j) {
    if (auto v = closed_form_rodov_norm(a, b, c, j)) out[j] = *v;
    else need_numeric = true;
  }
  if (!need_numeric) return out;
  RodovParams params{a, b, c, 0, 1.0};
  params.validate();
  auto p = build_rodov(params, tol);
  for (int j = 1; j <= s_max; ++j) {
    p = antiderivative_zero_mean(p, tol);
    if (!closed_form_rodov_norm(a, b, c, j)) out[j] = sup_norm(p);
  }
  return out;
}

double rodov_norm(double a, double b, double c, int s, const Tolerances& tol) {
  if (auto v = closed_form_rodov_norm(a, b, c, s)) return *v;
  return sup_norm(build_rodov({a, b, c, s, 1.0}, tol));
}

NormVector norm_vector(const RodovParams& spline, std::span<const int> orders, const Tolerances& tol) {
  spline.validate();
  int highest = 0;
  for (int o : orders) {
    if (o < 0) throw OrderTooHigh("negative order");
    if (o > spline.s) throw OrderTooHigh("order " + std::to_string(o) + " exceeds spline order " + std::to_string(spline.s));
    highest = std::max(highest, spline.s - o);
  }
  const auto profile = rodov_norm_profile(spline.a, spline.b, spline.c, highest, tol);
  NormVector out;
  for (int o : orders) {
    out.orders.push_back(o);
    out.values.push_back(spline.alpha * profile[spline.s - o]);
  }
  return out;
}

double favard_series(int r) {
  if (r < 0) throw BadOrders("r must be non-negative");
  if (r == 0) return 1.0;
  const int power = r + 1;
  const bool alternating = (r % 2) == 0;
  // Alternating sums: the tail is below the first omitted term, (2J+1)^{-power} < 1e-16 for power >= 3.
  // Positive sums: add the Euler-Maclaurin tail of sum_{j>=J} (2j+1)^{-power}.
  constexpr long kTerms = 200000;
  double sum = 0;
  for (long j = kTerms - 1; j >= 0; --j) {
    const double term = std::pow(2.0 * static_cast<double>(j) + 1.0, -power);
    sum += (alternating && (j % 2 == 1)) ? -term : term;
  }
  if (!alternating) {
    const double x = 2.0 * static_cast<double>(kTerms) + 1.0;
    const double f = std::pow(x, -power);
    const double tail = x * f / (2.0 * (power - 1)) + f / 2 + power * f / x / 6;
    sum += tail;
  }
  return 4.0 / std::numbers::pi * sum;
}

double favard_norm(int r) {
  if (r < 0) throw BadOrders("r must be non-negative");
  if (r == 0) return 1.0;
  static std::mutex mu;
  static std::map<int, double> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  const double spline = sup_norm(build_euler({1.0, r, 1.0}));
  const double series = favard_series(r);
  if (std::abs(spline - series) > 1e-9 * series) {
    throw std::logic_error("Favard constant mismatch for r=" + std::to_string(r) + ": spline " +
                           std::to_string(spline) + " vs series " + std::to_string(series));
  }
  std::lock_guard lock(mu);
  cache.emplace(r, spline);
  return spline;
}

double kolmogorov_constant(int k, int r) {
  if (!(0 < k && k < r)) throw BadOrders("need 0 < k < r, got k=" + std::to_string(k) + ", r=" + std::to_string(r));
  const double kr = static_cast<double>(k) / r;
  return favard_norm(r - k) / std::pow(favard_norm(r), 1.0 - kr);
}

}  // namespace kolmo
