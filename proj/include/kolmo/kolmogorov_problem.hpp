#pragma once

#include <optional>
#include <string>

#include "kolmo/norms.hpp"
#include "kolmo/splines.hpp"

namespace kolmo {

/// Verdict for the classical triple (0, k, r); the witness is amplitude * phi_{lambda,r} + shift.
struct TripleVerdict {
  bool admissible = false;
  bool boundary = false;  // shift is zero within tolerance
  double amplitude = 0;
  double lambda = 0;
  double shift = 0;
};

// Kolmogorov's condition M_k <= K(k, r) M_0^{1-k/r} M_r^{k/r}. Throws BadOrders unless 0 < k < r
// and InvalidParams for non-positive norms.
TripleVerdict is_admissible_triple(int k, int r, double m0, double mk, double mr, const Tolerances& tol = {});

struct AdmissibilityVerdict {
  bool admissible = false;
  std::optional<FamilyState> witness;
  std::string reason;  // why the vector was rejected; empty when admissible
};

// Decides whether M is realised by some psi + d with psi in S_kk and d >= 0.
//
// The upper norms fix a one-parameter family; beta* solves M_k(psi(beta*)) = M_k,
// and the vector is admissible iff M_0 >= M_0(psi(beta*)), with d the surplus.
// Throws InvalidOrderVector for the Euler shape (use is_admissible_triple) and
// InfeasibleNorms when the upper norms break Landau's inequality.
AdmissibilityVerdict is_admissible(const OrderVector& kk, const NormVector& m, const Tolerances& tol = {});

// Norm vector of the witness psi + d over the orders of kk.
NormVector witness_norms(const OrderVector& kk, const FamilyState& w, const Tolerances& tol = {});

}  // namespace kolmo
