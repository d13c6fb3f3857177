#pragma once

// Dense univariate polynomials in a local variable u, coefficients lowest degree first.

#include <span>
#include <vector>

namespace kolmo::poly {

double eval(std::span<const double> c, double u);

// Value and first derivative in one Horner pass.
void eval_with_slope(std::span<const double> c, double u, double& value, double& slope);

std::vector<double> derivative(std::span<const double> c);

// Antiderivative vanishing at u = 0, shifted by `constant`.
std::vector<double> integral(std::span<const double> c, double constant = 0.0);

// Exact value of the integral over [0, h].
double definite_integral(std::span<const double> c, double h);

// Degree after dropping leading coefficients that are negligible on [0, h]; -1 for the zero polynomial.
int effective_degree(std::span<const double> c, double h);

bool is_zero(std::span<const double> c);

// All real roots of c inside [lo, hi], sorted and deduplicated.
//
// Roots are isolated recursively: the critical points of c (roots of c')
// split [lo, hi] into monotone pieces, each of which holds at most one
// simple root found by safeguarded Newton. Critical points and endpoints
// where |c| is within rounding of zero count as roots, so tangential
// contacts are reported. The zero polynomial yields no roots.
std::vector<double> real_roots(std::span<const double> c, double lo, double hi);

// Roots of c' in the open interval (lo, hi).
std::vector<double> critical_points(std::span<const double> c, double lo, double hi);

// Bound on the rounding error of eval(c, u) for |u| <= radius.
double eval_error_bound(std::span<const double> c, double radius);

}  // namespace kolmo::poly
