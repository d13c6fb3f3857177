#include "kolmo/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "kolmo/errors.hpp"
#include "kolmo/poly.hpp"

namespace kolmo {

struct TestFunction::Impl {
  struct Spline {
    std::vector<PeriodicPiecewisePoly> derivatives;  // p, p', p'', ...
    double shift;
  };
  struct Sine {
    double amplitude, frequency, phase;
  };
  std::variant<Spline, Sine> body;
};

TestFunction TestFunction::spline(PeriodicPiecewisePoly p, double shift) {
  Impl::Spline s;
  s.shift = shift;
  const int deg = p.degree();
  s.derivatives.push_back(std::move(p));
  for (int j = 0; j <= deg; ++j) s.derivatives.push_back(differentiate(s.derivatives.back()));
  TestFunction f;
  f.impl_ = std::make_shared<const Impl>(Impl{std::move(s)});
  return f;
}

TestFunction TestFunction::sine(double amplitude, double frequency, double phase) {
  if (!(amplitude > 0) || !(frequency > 0)) throw InvalidParams("sine needs positive amplitude and frequency");
  TestFunction f;
  f.impl_ = std::make_shared<const Impl>(Impl{Impl::Sine{amplitude, frequency, phase}});
  return f;
}

double TestFunction::value(double t) const {
  if (auto* s = std::get_if<Impl::Spline>(&impl_->body)) return s->derivatives[0](t + s->shift);
  const auto& w = std::get<Impl::Sine>(impl_->body);
  return w.amplitude * std::sin(w.frequency * t + w.phase);
}

double TestFunction::slope(double t) const {
  if (auto* s = std::get_if<Impl::Spline>(&impl_->body)) return s->derivatives[1](t + s->shift);
  const auto& w = std::get<Impl::Sine>(impl_->body);
  return w.amplitude * w.frequency * std::cos(w.frequency * t + w.phase);
}

double TestFunction::period() const {
  if (auto* s = std::get_if<Impl::Spline>(&impl_->body)) return s->derivatives[0].period();
  return 2 * std::numbers::pi / std::get<Impl::Sine>(impl_->body).frequency;
}

double TestFunction::norm(int order) const {
  if (auto* s = std::get_if<Impl::Spline>(&impl_->body)) {
    if (order < 0 || order >= static_cast<int>(s->derivatives.size())) return 0.0;
    return sup_norm(s->derivatives[static_cast<std::size_t>(order)]);
  }
  const auto& w = std::get<Impl::Sine>(impl_->body);
  return w.amplitude * std::pow(w.frequency, order);
}

std::vector<double> level_set(const PeriodicPiecewisePoly& psi, double level) {
  std::vector<double> out;
  for (std::size_t i = 0; i < psi.segment_count(); ++i) {
    auto c = std::vector<double>(psi.segment(i).begin(), psi.segment(i).end());
    c[0] -= level;
    const double h = psi.segment_length(i);
    const double start = psi.segment_start(i);
    if (poly::effective_degree(c, h) <= 0) {
      // Constant segment: either the whole piece matches or none of it.
      if (std::abs(c[0]) <= poly::eval_error_bound(psi.segment(i), h)) out.push_back(start + 0.5 * h);
      continue;
    }
    for (double u : poly::real_roots(c, 0.0, h)) out.push_back(start + u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PointCheck {
  double violation = 0;
  long pairs = 0;
};

ComparisonReport run_comparison(const TestFunction& f, const PeriodicPiecewisePoly& psi,
                                std::vector<std::pair<int, double>> margins, int grid, Exec exec,
                                const Tolerances& tol) {
  if (grid < 1) throw InvalidParams("grid must be positive");
  for (const auto& [order, margin] : margins) {
    if (margin < 0) {
      throw HypothesisViolated("M_" + std::to_string(order) + "(f) exceeds the comparison spline by " +
                               std::to_string(-margin));
    }
  }
  const auto slope = differentiate(psi);
  const double period = f.period();
  const auto checks = map_indices(static_cast<std::size_t>(grid), exec, [&](std::size_t i) {
    const double xi = period * static_cast<double>(i) / grid;
    const double y = f.value(xi);
    const double df = std::abs(f.slope(xi));
    PointCheck pc;
    for (double eta : level_set(psi, y)) {
      pc.violation = std::max(pc.violation, df - std::abs(slope(eta)));
      ++pc.pairs;
    }
    return pc;
  });

  ComparisonReport rep;
  rep.grid = grid;
  rep.hypothesis_margins = std::move(margins);
  rep.tolerance = tol.compare * sup_norm(slope);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    rep.level_points += checks[i].pairs;
    if (checks[i].violation > rep.max_violation) {
      rep.max_violation = checks[i].violation;
      rep.argmax_xi = period * static_cast<double>(i) / grid;
    }
  }
  return rep;
}

// Norm dominance M_s(f) <= M_s(psi) with a relative rounding allowance; returns the signed margin.
double margin(double psi_norm, double f_norm, const Tolerances& tol) {
  const double m = psi_norm - f_norm;
  return (m < 0 && -m <= tol.admissible * psi_norm) ? 0.0 : m;
}

}  // namespace

ComparisonReport verify_comparison_euler(const TestFunction& f, const EulerParams& euler, int grid, Exec exec,
                                         const Tolerances& tol) {
  const auto psi = build_euler(euler, tol);
  const double m0 = sup_norm(psi);
  const double mr = euler.amplitude;
  std::vector<std::pair<int, double>> margins{{0, margin(m0, f.norm(0), tol)},
                                              {euler.r, margin(mr, f.norm(euler.r), tol)}};
  return run_comparison(f, psi, std::move(margins), grid, exec, tol);
}

ComparisonReport verify_comparison_rodov(const TestFunction& f, const OrderVector& kk, const RodovParams& params,
                                         int grid, Exec exec, const Tolerances& tol) {
  require_family_member(kk, params);
  const auto chain = build_rodov_chain(params, tol);
  const int r = kk.r();
  std::vector<std::pair<int, double>> margins;
  margins.emplace_back(0, margin(sup_norm(chain[static_cast<std::size_t>(r)]), f.norm(0), tol));
  for (int s : kk.upper()) {
    margins.emplace_back(s, margin(sup_norm(chain[static_cast<std::size_t>(r - s)]), f.norm(s), tol));
  }
  auto rep = run_comparison(f, chain.back(), std::move(margins), grid, exec, tol);
  rep.experimental = kk.kind() != FamilyKind::GapPair;
  return rep;
}

}  // namespace kolmo
