#pragma once

#include <span>
#include <string>
#include <vector>

#include "kolmo/piecewise.hpp"

namespace kolmo {

struct NormVector;

/// Parameters of the scaled Rodov spline alpha * psi_s(a, b, c).
///
/// psi_0 is 0 on [0, a], 1 on (a, a+b], 0 on (a+b, a+b+c], continued evenly
/// about L = a+b+c and oddly about 2L, so the period is 4L. psi_s is its
/// s-th zero-mean periodic primitive.
struct RodovParams {
  double a = 0;      // flat width at the extreme of psi_1
  double b = 1;      // ramp width
  double c = 0;      // flat width at zero of psi_1
  int s = 0;         // primitive order
  double alpha = 1;  // amplitude multiplier

  double half_period() const { return 2 * (a + b + c); }
  double period() const { return 4 * (a + b + c); }
  void validate() const;  // throws InvalidParams
};

/// amplitude * phi_{lambda, r}, where phi_{lambda,r}(t) = lambda^{-r} phi_r(lambda t)
/// and phi_r is the r-th zero-mean periodic primitive of sgn sin.
struct EulerParams {
  double lambda = 1;
  int r = 1;
  double amplitude = 1;

  void validate() const;
  // The same spline as a Rodov spline: psi_r(0, pi / (2 lambda), 0) scaled by amplitude.
  RodovParams as_rodov() const;
};

PeriodicPiecewisePoly build_rodov(const RodovParams& params, const Tolerances& tol = {});
PeriodicPiecewisePoly build_euler(const EulerParams& params, const Tolerances& tol = {});

// Sequence alpha*psi_0, ..., alpha*psi_s sharing the breakpoints of params.
std::vector<PeriodicPiecewisePoly> build_rodov_chain(const RodovParams& params, const Tolerances& tol = {});

/// Which extremal family an order vector selects.
enum class FamilyKind {
  Euler,     // (0, k, r),               S = {a * phi_{lambda,r}}
  TopPair,   // (0, k, r-1, r),   k < r-1, S = {alpha * psi_r(a, b, 0)}
  GapPair,   // (0, k, r-2, r),   k < r-2, S = {alpha * psi_r(0, b, c)}
  TopTriple  // (0, k, r-2, r-1, r), k < r-2, S = {alpha * psi_r(a, b, c)}
};

std::string to_string(FamilyKind kind);

/// Increasing derivative orders (0, k, ..., r) restricted to the shapes above.
class OrderVector {
 public:
  // Throws InvalidOrderVector for anything outside the four shapes.
  explicit OrderVector(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  int k() const { return entries_[1]; }
  int r() const { return entries_.back(); }
  FamilyKind kind() const { return kind_; }
  // True for the three four/five-norm shapes that have a one-parameter extremal family.
  bool in_extended_set() const { return kind_ != FamilyKind::Euler; }
  // Higher orders: every entry after k.
  std::vector<int> upper() const { return {entries_.begin() + 2, entries_.end()}; }
  int min_upper() const { return entries_[2]; }
  std::string str() const;

 private:
  std::vector<int> entries_;
  FamilyKind kind_;
};

/// One-parameter family beta -> alpha * psi_r(...) with prescribed upper norms.
///
/// The free coordinate is c for GapPair and TopTriple and a for TopPair.
struct FamilyGenerator {
  FamilyKind kind;
  int r;
  double alpha;
  double b;
  double a;  // fixed a for TopTriple, unused otherwise

  RodovParams at(double beta) const;
  double beta_of(const RodovParams& p) const;
};

// Throws InvalidOrderVector for the Euler shape and InfeasibleNorms when the
// upper norms are non-positive or violate M_{r-1}^2 <= 2 M_{r-2} M_r.
FamilyGenerator fit_family(const OrderVector& kk, const NormVector& upper_norms);

struct FamilyState {
  RodovParams params;
  double beta = 0;
  double shift = 0;  // d >= 0
};

// Checks that params parametrise a member of S_kk (a = 0 for GapPair, c = 0 for TopPair,
// a = c = 0 for Euler, s = r). Throws InvalidParams otherwise.
void require_family_member(const OrderVector& kk, const RodovParams& params);

}  // namespace kolmo
