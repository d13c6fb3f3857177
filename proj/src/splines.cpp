#include "kolmo/splines.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kolmo/errors.hpp"
#include "kolmo/norms.hpp"

namespace kolmo {

void RodovParams::validate() const {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(alpha))) {
    throw InvalidParams("non-finite Rodov parameter");
  }
  if (!(b > 0)) throw InvalidParams("b must be positive");
  if (a < 0 || c < 0) throw InvalidParams("a and c must be non-negative");
  if (s < 0) throw InvalidParams("s must be non-negative");
  if (!(alpha > 0)) throw InvalidParams("alpha must be positive");
  if (!(period() > 0) || !std::isfinite(period())) throw InvalidParams("degenerate period");
}

void EulerParams::validate() const {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw InvalidParams("lambda must be positive");
  if (r < 1) throw InvalidParams("r must be at least 1");
  if (!(amplitude > 0) || !std::isfinite(amplitude)) throw InvalidParams("amplitude must be positive");
}

RodovParams EulerParams::as_rodov() const {
  return {0.0, std::numbers::pi / (2 * lambda), 0.0, r, amplitude};
}

namespace {

PeriodicPiecewisePoly rodov_step(const RodovParams& p) {
  // Widths and values of the twelve pieces over one period; empty pieces are dropped.
  const double widths[12] = {p.a, p.b, p.c, p.c, p.b, p.a, p.a, p.b, p.c, p.c, p.b, p.a};
  const double values[12] = {0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0};
  std::vector<double> bp{0.0};
  std::vector<std::vector<double>> rows;
  double t = 0;
  for (int i = 0; i < 12; ++i) {
    if (widths[i] <= 0) continue;
    const double next = t + widths[i];
    if (!(next > t)) continue;
    t = next;
    bp.push_back(t);
    rows.push_back({values[i]});
  }
  return {std::move(bp), std::move(rows)};
}

}  // namespace

std::vector<PeriodicPiecewisePoly> build_rodov_chain(const RodovParams& params, const Tolerances& tol) {
  params.validate();
  std::vector<PeriodicPiecewisePoly> chain;
  chain.reserve(static_cast<std::size_t>(params.s) + 1);
  chain.push_back(rodov_step(params));
  for (int j = 1; j <= params.s; ++j) chain.push_back(antiderivative_zero_mean(chain.back(), tol));
  if (params.alpha != 1.0) {
    for (auto& p : chain) p = p.scaled(params.alpha);
  }
  return chain;
}

PeriodicPiecewisePoly build_rodov(const RodovParams& params, const Tolerances& tol) {
  params.validate();
  auto p = rodov_step(params);
  for (int j = 1; j <= params.s; ++j) p = antiderivative_zero_mean(p, tol);
  return params.alpha == 1.0 ? p : p.scaled(params.alpha);
}

PeriodicPiecewisePoly build_euler(const EulerParams& params, const Tolerances& tol) {
  params.validate();
  return build_rodov(params.as_rodov(), tol);
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Euler: return "euler";
    case FamilyKind::TopPair: return "top_pair";
    case FamilyKind::GapPair: return "gap_pair";
    case FamilyKind::TopTriple: return "top_triple";
  }
  return "unknown";
}

OrderVector::OrderVector(std::vector<int> entries) : entries_(std::move(entries)), kind_(FamilyKind::Euler) {
  const auto fail = [&](const std::string& why) { throw InvalidOrderVector(str() + ": " + why); };
  if (entries_.size() < 3 || entries_.size() > 5) fail("expected 3 to 5 orders");
  if (entries_[0] != 0) fail("first order must be 0");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] <= entries_[i - 1]) fail("orders must increase strictly");
  }
  const int k = entries_[1];
  const int r = entries_.back();
  if (k < 1) fail("k must be positive");
  if (entries_.size() == 3) {
    kind_ = FamilyKind::Euler;
  } else if (entries_.size() == 4 && entries_[2] == r - 1) {
    if (!(k < r - 1)) fail("need k < r-1");
    kind_ = FamilyKind::TopPair;
  } else if (entries_.size() == 4 && entries_[2] == r - 2) {
    if (!(k < r - 2)) fail("need k < r-2");
    kind_ = FamilyKind::GapPair;
  } else if (entries_.size() == 5 && entries_[2] == r - 2 && entries_[3] == r - 1) {
    if (!(k < r - 2)) fail("need k < r-2");
    kind_ = FamilyKind::TopTriple;
  } else {
    fail("not one of (0,k,r), (0,k,r-1,r), (0,k,r-2,r), (0,k,r-2,r-1,r)");
  }
}

std::string OrderVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

RodovParams FamilyGenerator::at(double beta) const {
  switch (kind) {
    case FamilyKind::GapPair: return {0.0, b, beta, r, alpha};
    case FamilyKind::TopPair: return {beta, b, 0.0, r, alpha};
    case FamilyKind::TopTriple: return {a, b, beta, r, alpha};
    case FamilyKind::Euler: break;
  }
  throw InvalidOrderVector("the Euler shape has no one-parameter family");
}

double FamilyGenerator::beta_of(const RodovParams& p) const {
  return kind == FamilyKind::TopPair ? p.a : p.c;
}

FamilyGenerator fit_family(const OrderVector& kk, const NormVector& upper_norms) {
  if (!kk.in_extended_set()) throw InvalidOrderVector(kk.str() + " has no fitted family");
  const auto upper = kk.upper();
  if (upper_norms.orders != upper) throw InvalidOrderVector("upper norms must be given for orders of " + kk.str());
  for (double v : upper_norms.values) {
    if (!(v > 0) || !std::isfinite(v)) throw InfeasibleNorms("upper norms must be positive and finite");
  }
  const int r = kk.r();
  const double m_r = upper_norms.at(r);
  FamilyGenerator gen{kk.kind(), r, m_r, 0.0, 0.0};
  switch (kk.kind()) {
    case FamilyKind::GapPair:
      gen.b = std::sqrt(2 * upper_norms.at(r - 2) / m_r);
      break;
    case FamilyKind::TopPair:
      gen.b = upper_norms.at(r - 1) / m_r;
      break;
    case FamilyKind::TopTriple: {
      const double m1 = upper_norms.at(r - 1);
      const double m2 = upper_norms.at(r - 2);
      if (m1 * m1 > 2 * m2 * m_r * (1 + 1e-12)) {
        throw InfeasibleNorms("M_{r-1}^2 > 2 M_{r-2} M_r violates Landau's inequality");
      }
      gen.b = m1 / m_r;
      gen.a = std::max(0.0, m2 / m1 - m1 / (2 * m_r));
      break;
    }
    case FamilyKind::Euler:
      break;
  }
  return gen;
}

void require_family_member(const OrderVector& kk, const RodovParams& p) {
  p.validate();
  if (p.s != kk.r()) throw InvalidParams("spline order must equal r = " + std::to_string(kk.r()));
  const bool ok = [&] {
    switch (kk.kind()) {
      case FamilyKind::Euler: return p.a == 0 && p.c == 0;
      case FamilyKind::TopPair: return p.c == 0;
      case FamilyKind::GapPair: return p.a == 0;
      case FamilyKind::TopTriple: return true;
    }
    return false;
  }();
  if (!ok) throw InvalidParams("spline is not a member of S" + kk.str());
}

}  // namespace kolmo
