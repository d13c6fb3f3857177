#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kolmo/splines.hpp"

namespace kolmo {

/// Uniform norms M_j = ||f^{(j)}|| for a strictly increasing list of orders.
struct NormVector {
  std::vector<int> orders;
  std::vector<double> values;

  // Throws BadOrders when `order` is not listed.
  double at(int order) const;
  NormVector restricted(std::span<const int> keep) const;
};

// ||psi_s(a, b, c)|| in closed form when available: s <= 2 always, s = 3 when c = 0.
std::optional<double> closed_form_rodov_norm(double a, double b, double c, int s);

// ||psi_j(a, b, c)|| for j = 0..s_max: closed forms where available, exact piecewise extrema otherwise.
std::vector<double> rodov_norm_profile(double a, double b, double c, int s_max, const Tolerances& tol = {});

// Norms from the exact piecewise extremum only, for every j (used to cross-check the closed forms).
std::vector<double> rodov_norm_profile_numeric(double a, double b, double c, int s_max, const Tolerances& tol = {});

double rodov_norm(double a, double b, double c, int s, const Tolerances& tol = {});

// M_j(alpha * psi_s) = alpha * ||psi_{s-j}|| for each requested order; throws OrderTooHigh for j > s.
NormVector norm_vector(const RodovParams& spline, std::span<const int> orders, const Tolerances& tol = {});

// ||phi_r|| at lambda = 1 (Favard's constant), from the extremum of the constructed Euler spline.
// Cross-checked against favard_series; a disagreement beyond 1e-9 throws std::logic_error.
double favard_norm(int r);

// (4/pi) sum_{j>=0} (-1)^{j(r+1)} / (2j+1)^{r+1}.
double favard_series(int r);

// ||phi_{r-k}|| / ||phi_r||^{1-k/r}; throws BadOrders unless 0 < k < r.
double kolmogorov_constant(int k, int r);

}  // namespace kolmo
