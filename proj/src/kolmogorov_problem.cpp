#include "kolmo/kolmogorov_problem.hpp"

#include <algorithm>
#include <cmath>

#include "kolmo/errors.hpp"

namespace kolmo {

TripleVerdict is_admissible_triple(int k, int r, double m0, double mk, double mr, const Tolerances& tol) {
  if (!(0 < k && k < r)) throw BadOrders("need 0 < k < r");
  if (!(m0 > 0 && mk > 0 && mr > 0)) throw InvalidParams("norms must be positive");
  TripleVerdict v;
  v.amplitude = mr;
  // M_k(a phi_{lambda,r}) = a lambda^{k-r} K_{r-k}; M_0 = a lambda^{-r} K_r.
  v.lambda = std::pow(mr * favard_norm(r - k) / mk, 1.0 / (r - k));
  const double m0_min = mr * std::pow(v.lambda, -r) * favard_norm(r);
  const double slack = m0 - m0_min;
  if (slack < -tol.admissible * m0) return v;
  v.admissible = true;
  v.boundary = std::abs(slack) <= tol.admissible * m0;
  v.shift = v.boundary ? 0.0 : slack;
  return v;
}

namespace {

double spline_norm(const FamilyGenerator& gen, double beta, int order, const Tolerances& tol) {
  const auto p = gen.at(beta);
  return p.alpha * rodov_norm(p.a, p.b, p.c, p.s - order, tol);
}

}  // namespace

AdmissibilityVerdict is_admissible(const OrderVector& kk, const NormVector& m, const Tolerances& tol) {
  if (!kk.in_extended_set()) throw InvalidOrderVector(kk.str() + ": use the triple test");
  if (m.orders.size() != kk.entries().size() ||
      !std::equal(m.orders.begin(), m.orders.end(), kk.entries().begin())) {
    throw InvalidOrderVector("norm orders do not match " + kk.str());
  }
  for (double v : m.values) {
    if (!(v > 0) || !std::isfinite(v)) throw InvalidParams("norms must be positive and finite");
  }
  const auto upper = kk.upper();
  const FamilyGenerator gen = fit_family(kk, m.restricted(upper));
  const int k = kk.k();
  const double mk = m.at(k);

  AdmissibilityVerdict out;
  const double at_zero = spline_norm(gen, 0.0, k, tol);
  if (mk < at_zero * (1 - tol.admissible)) {
    out.reason = "M_k is below its minimum over the fitted family";
    return out;
  }

  double beta = 0;
  if (mk > at_zero) {
    double lo = 0;
    double hi = std::max(gen.b, 1e-3);
    constexpr double kLimit = 1e15;
    while (spline_norm(gen, hi, k, tol) < mk) {
      lo = hi;
      hi *= 2;
      if (hi > kLimit * std::max(1.0, gen.b)) {
        out.reason = "no finite beta reaches M_k";
        return out;
      }
    }
    while (hi - lo > tol.beta * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (spline_norm(gen, mid, k, tol) < mk) lo = mid; else hi = mid;
    }
    beta = 0.5 * (lo + hi);
  }

  const double m0_min = spline_norm(gen, beta, 0, tol);
  const double m0 = m.at(0);
  if (m0 < m0_min * (1 - tol.admissible)) {
    out.reason = "M_0 is below the minimum admissible value " + std::to_string(m0_min);
    return out;
  }
  out.admissible = true;
  out.witness = FamilyState{gen.at(beta), beta, std::max(0.0, m0 - m0_min)};
  return out;
}

NormVector witness_norms(const OrderVector& kk, const FamilyState& w, const Tolerances& tol) {
  const auto entries = kk.entries();
  auto nv = norm_vector(w.params, entries, tol);
  nv.values[0] += w.shift;
  return nv;
}

}  // namespace kolmo
