#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kolmo/exec.hpp"
#include "kolmo/splines.hpp"

namespace kolmo {

/// Constraint set A on the upper norms M_{kk-upper}(f).
///
/// Box:         M_s <= bound_s for each listed order (unlisted orders are free).
/// Homogeneous: prod_s M_s^{theta_s} <= level.
/// Both are sublevel sets of a functional p with p(c f) = c^degree p(f); for
/// Box that functional is max_s M_s / bound_s with degree 1.
struct ClassSpec {
  enum class Kind { Box, Homogeneous };

  Kind kind = Kind::Box;
  std::vector<std::pair<int, double>> terms;  // order -> bound (Box) or exponent theta (Homogeneous)
  double level = 1.0;

  static ClassSpec box(std::vector<std::pair<int, double>> bounds);
  static ClassSpec homogeneous(std::vector<std::pair<int, double>> theta, double level = 1.0);
  // theta = (1 - eta, eta) over orders (2, 3), level 1.
  static ClassSpec dragomir(double eta);

  double degree() const;
  // p(f) normalised so that the class is p <= 1; norms[j] = M_j(f).
  double normalized_functional(std::span<const double> norms) const;
  // Sum of theta_s * s; the exponent of lambda in p(f(lambda .)).
  double dilation_weight() const;

  // Throws UnsupportedSpec for orders outside kk-upper, non-positive bounds, negative theta,
  // or when the attainment condition on A fails.
  void validate(const OrderVector& kk) const;
  // Unbounded top-order norms force another constrained norm to zero.
  bool attainment_condition(const OrderVector& kk) const;

  std::string str() const;
};

struct ModulusOptions {
  Exec exec = Exec::Parallel;
  double grid_lo_decade = -4;   // smallest positive shape ratio 10^lo
  double grid_hi_decade = 6;    // largest shape ratio 10^hi
  double grid_step = 0.05;      // decades between profile nodes (doubled for two free ratios)
};

struct ModulusResult {
  double omega = 0;
  RodovParams argmax;
  double delta = 0;
  bool attained = true;       // false when the best node is the last one (supremum in a degenerate limit)
  int profile_maxima = 0;     // local maxima seen on the sampled profile; 1 for a unimodal profile
  long evaluations = 0;
};

/// Value of sup M_k over members of S_kk with shape ratios x = a/b, z = c/b,
/// M_0 = delta and the spec's constraint active. Also returns the member.
struct ShapeValue {
  double value;
  RodovParams params;
};
ShapeValue shape_objective(const OrderVector& kk, const ClassSpec& spec, double delta, double x, double z,
                           const Tolerances& tol = {});

// shape_objective over a list of x at fixed z; the kernel behind the profile scan.
std::vector<double> shape_profile(const OrderVector& kk, const ClassSpec& spec, double delta,
                                  std::span<const double> xs, double z, Exec exec, const Tolerances& tol = {});

// Numeric omega(D^k, X; delta) over S_kk. ClassSpec::validate errors propagate;
// throws InvalidParams for delta <= 0 and EmptyClass if no member is found.
ModulusResult modulus(const OrderVector& kk, const ClassSpec& spec, double delta, const Tolerances& tol = {},
                      const ModulusOptions& opts = {});

// Dilation exponent gamma with omega(delta) proportional to delta^gamma for a Homogeneous spec: 1 - k * degree / weight.
double homogeneous_exponent(const OrderVector& kk, const ClassSpec& spec);

// Least-squares slope of log omega against log delta.
double fitted_exponent(const OrderVector& kk, const ClassSpec& spec, std::span<const double> deltas,
                       const Tolerances& tol = {}, const ModulusOptions& opts = {});

struct DragomirResult {
  double value = 0;
  std::string method;  // "classical" at the endpoints, "modulus" inside (0, 1)
  double spread = 0;   // relative spread of omega(delta) / delta^gamma over the sampled deltas
};

// Sharp constant for ||f'|| <= C ||f||^{(1+eta)/(2+eta)} ||f''||^{(1-eta)/(2+eta)} ||f'''||^{eta/(2+eta)}.
// eta = 0 and eta = 1 reduce to the classical constants K(1,2) and K(1,3).
// Throws InvalidParams outside [0, 1] and PowerLawMismatch if the sampled deltas disagree.
DragomirResult dragomir(double eta, const Tolerances& tol = {}, const ModulusOptions& opts = {});
double dragomir_constant(double eta, const Tolerances& tol = {}, const ModulusOptions& opts = {});

// M_0..M_r of the candidate functions accepted by sharp_inequality_check.
std::vector<double> norms_of(const RodovParams& p, const Tolerances& tol = {});
std::vector<double> norms_of(const EulerParams& p, const Tolerances& tol = {});
std::vector<double> sine_norms(double amplitude, double frequency, int r);

// M_k(f) / [p^{1/degree}(f) * omega(M_0(f) / p^{1/degree}(f))]; at most 1 for every f in L^r.
double sharp_inequality_check(std::span<const double> norms, const OrderVector& kk, const ClassSpec& spec,
                              const Tolerances& tol = {}, const ModulusOptions& opts = {});

}  // namespace kolmo
