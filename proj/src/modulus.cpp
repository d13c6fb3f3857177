#include "kolmo/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kolmo/errors.hpp"
#include "kolmo/norms.hpp"

namespace kolmo {

ClassSpec ClassSpec::box(std::vector<std::pair<int, double>> bounds) {
  ClassSpec s;
  s.kind = Kind::Box;
  s.terms = std::move(bounds);
  return s;
}

ClassSpec ClassSpec::homogeneous(std::vector<std::pair<int, double>> theta, double level) {
  ClassSpec s;
  s.kind = Kind::Homogeneous;
  s.terms = std::move(theta);
  s.level = level;
  return s;
}

ClassSpec ClassSpec::dragomir(double eta) { return homogeneous({{2, 1.0 - eta}, {3, eta}}, 1.0); }

double ClassSpec::degree() const {
  if (kind == Kind::Box) return 1.0;
  double sum = 0;
  for (const auto& [order, theta] : terms) sum += theta;
  return sum;
}

double ClassSpec::dilation_weight() const {
  double sum = 0;
  for (const auto& [order, w] : terms) sum += (kind == Kind::Box ? 1.0 : w) * order;
  return sum;
}

double ClassSpec::normalized_functional(std::span<const double> norms) const {
  const auto m = [&](int order) {
    if (order < 0 || order >= static_cast<int>(norms.size())) throw OrderTooHigh("norm of order " + std::to_string(order) + " not supplied");
    return norms[static_cast<std::size_t>(order)];
  };
  if (kind == Kind::Box) {
    double p = 0;
    for (const auto& [order, bound] : terms) p = std::max(p, m(order) / bound);
    return p;
  }
  double log_p = -std::log(level);
  for (const auto& [order, theta] : terms) {
    if (theta > 0) log_p += theta * std::log(m(order));
  }
  return std::exp(log_p);
}

bool ClassSpec::attainment_condition(const OrderVector& kk) const {
  for (const auto& [order, w] : terms) {
    if (order == kk.r()) return kind == Kind::Box ? std::isfinite(w) : w > 0;
  }
  return false;
}

void ClassSpec::validate(const OrderVector& kk) const {
  const auto upper = kk.upper();
  if (terms.empty()) throw UnsupportedSpec("class spec lists no orders");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto [order, w] = terms[i];
    if (std::find(upper.begin(), upper.end(), order) == upper.end()) {
      throw UnsupportedSpec("order " + std::to_string(order) + " is not a higher order of " + kk.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (terms[j].first == order) throw UnsupportedSpec("order " + std::to_string(order) + " listed twice");
    }
    if (kind == Kind::Box && !(w > 0)) throw UnsupportedSpec("box bounds must be positive");
    if (kind == Kind::Homogeneous && !(w >= 0 && std::isfinite(w))) throw UnsupportedSpec("exponents must be non-negative");
  }
  if (kind == Kind::Homogeneous) {
    if (!(degree() > 0)) throw UnsupportedSpec("exponents must not all vanish");
    if (!(level > 0) || !std::isfinite(level)) throw UnsupportedSpec("level must be positive");
  }
  if (!attainment_condition(kk)) {
    throw UnsupportedSpec(str() + ": the top-order norm M_" + std::to_string(kk.r()) +
                          " is unconstrained, so the supremum is not attained on splines");
  }
}

std::string ClassSpec::str() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Box) {
    os << "box:";
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i].first << '=' << terms[i].second;
  } else {
    os << "hom:";
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i].first << '^' << terms[i].second;
    os << '@' << level;
  }
  return os.str();
}

ShapeValue shape_objective(const OrderVector& kk, const ClassSpec& spec, double delta, double x, double z,
                           const Tolerances& tol) {
  const int r = kk.r();
  const int k = kk.k();
  // Shape norms N_j = ||psi_j(x, 1, z)||; the member with ramp width b has M_j = alpha b^{r-j} N_{r-j}.
  const auto n = rodov_norm_profile(x, 1.0, z, r, tol);
  double alpha = 0;
  double b = 0;
  if (spec.kind == ClassSpec::Kind::Homogeneous) {
    // log alpha + r log b = R1 and theta.(log alpha + (r-s) log b + log N_{r-s}) = log level.
    const double r1 = std::log(delta / n[static_cast<std::size_t>(r)]);
    double r2 = std::log(spec.level);
    double weight = 0;
    const double theta_sum = spec.degree();
    for (const auto& [order, theta] : spec.terms) {
      r2 -= theta * std::log(n[static_cast<std::size_t>(r - order)]);
      weight += theta * order;
    }
    const double log_b = (theta_sum * r1 - r2) / weight;
    b = std::exp(log_b);
    alpha = std::exp(r1 - r * log_b);
  } else {
    // alpha = delta / (b^r N_r); each bound M_s <= B_s is a lower bound on b and M_k decreases with b.
    for (const auto& [order, bound] : spec.terms) {
      const double need = std::pow(delta * n[static_cast<std::size_t>(r - order)] /
                                       (n[static_cast<std::size_t>(r)] * bound),
                                   1.0 / order);
      b = std::max(b, need);
    }
    alpha = delta / (std::pow(b, r) * n[static_cast<std::size_t>(r)]);
  }
  ShapeValue out;
  out.params = {x * b, b, z * b, r, alpha};
  out.value = alpha * std::pow(b, r - k) * n[static_cast<std::size_t>(r - k)];
  if (!std::isfinite(out.value)) out.value = -std::numeric_limits<double>::infinity();
  return out;
}

std::vector<double> shape_profile(const OrderVector& kk, const ClassSpec& spec, double delta,
                                  std::span<const double> xs, double z, Exec exec, const Tolerances& tol) {
  return map_indices(xs.size(), exec, [&](std::size_t i) { return shape_objective(kk, spec, delta, xs[i], z, tol).value; });
}

namespace {

struct Search {
  double arg = 0;
  double value = -std::numeric_limits<double>::infinity();
  bool at_far_end = false;
  int maxima = 0;
  long evaluations = 0;
};

std::vector<double> ratio_nodes(const ModulusOptions& opts, double step) {
  std::vector<double> nodes{0.0};
  const int count = static_cast<int>(std::floor((opts.grid_hi_decade - opts.grid_lo_decade) / step + 0.5));
  for (int i = 0; i <= count; ++i) nodes.push_back(std::pow(10.0, opts.grid_lo_decade + i * step));
  return nodes;
}

template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol_rel, long& evals) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  evals += 2;
  for (int iter = 0; iter < 400 && hi - lo > tol_rel * std::max(1.0, std::abs(hi)); ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
    ++evals;
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Samples f on the nodes, brackets the best node by its neighbours and polishes by golden section.
template <class F>
Search maximize_over_ratio(F&& f, const std::vector<double>& nodes, Exec exec, const Tolerances& tol) {
  const auto values = map_indices(nodes.size(), exec, [&](std::size_t i) { return f(nodes[i]); });
  Search s;
  s.evaluations = static_cast<long>(nodes.size());
  const double vmax = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(vmax)) return s;
  const std::size_t n = nodes.size();
  std::size_t best = 0;
  while (values[best] < vmax - 1e-13 * std::abs(vmax)) ++best;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i == 0 || values[i] > values[i - 1];
    const bool right = i + 1 == n || values[i] >= values[i + 1];
    if (left && right) ++s.maxima;
  }
  s.arg = nodes[best];
  s.value = values[best];
  if (best + 1 == n) {
    s.at_far_end = true;
    return s;
  }
  const double lo = nodes[best == 0 ? 0 : best - 1];
  const double hi = nodes[best + 1];
  const auto [x, fx] = golden_max(f, lo, hi, tol.opt, s.evaluations);
  if (fx > s.value) {
    s.arg = x;
    s.value = fx;
  }
  return s;
}

}  // namespace

ModulusResult modulus(const OrderVector& kk, const ClassSpec& spec, double delta, const Tolerances& tol,
                      const ModulusOptions& opts) {
  if (!(delta > 0) || !std::isfinite(delta)) throw InvalidParams("delta must be positive");
  spec.validate(kk);

  ModulusResult res;
  res.delta = delta;
  double x = 0;
  double z = 0;
  const auto value_at = [&](double xx, double zz) { return shape_objective(kk, spec, delta, xx, zz, tol).value; };

  switch (kk.kind()) {
    case FamilyKind::Euler:
      res.profile_maxima = 1;
      res.evaluations = 1;
      break;
    case FamilyKind::TopPair:
    case FamilyKind::GapPair: {
      const bool free_a = kk.kind() == FamilyKind::TopPair;
      const auto nodes = ratio_nodes(opts, opts.grid_step);
      const auto s = maximize_over_ratio(
          [&](double t) { return free_a ? value_at(t, 0.0) : value_at(0.0, t); }, nodes, opts.exec, tol);
      if (!std::isfinite(s.value)) throw EmptyClass("no member of S" + kk.str() + " satisfies the constraints");
      (free_a ? x : z) = s.arg;
      res.attained = !s.at_far_end;
      res.profile_maxima = s.maxima;
      res.evaluations = s.evaluations;
      break;
    }
    case FamilyKind::TopTriple: {
      const auto nodes = ratio_nodes(opts, 2 * opts.grid_step);
      long inner_evals = 0;
      bool inner_far = false;
      const auto inner = [&](double zz) {
        const auto s = maximize_over_ratio([&](double xx) { return value_at(xx, zz); }, nodes, Exec::Serial, tol);
        return s;
      };
      const auto outer = maximize_over_ratio([&](double zz) { return inner(zz).value; }, nodes, opts.exec, tol);
      if (!std::isfinite(outer.value)) throw EmptyClass("no member of S" + kk.str() + " satisfies the constraints");
      z = outer.arg;
      const auto s = inner(z);
      x = s.arg;
      inner_far = s.at_far_end;
      inner_evals = s.evaluations;
      res.attained = !outer.at_far_end && !inner_far;
      res.profile_maxima = outer.maxima;
      res.evaluations = outer.evaluations * inner_evals;
      break;
    }
  }
  const auto best = shape_objective(kk, spec, delta, x, z, tol);
  res.omega = best.value;
  res.argmax = best.params;
  return res;
}

double homogeneous_exponent(const OrderVector& kk, const ClassSpec& spec) {
  if (spec.kind != ClassSpec::Kind::Homogeneous) throw UnsupportedSpec("exponent is analytic only for homogeneous specs");
  return 1.0 - kk.k() * spec.degree() / spec.dilation_weight();
}

double fitted_exponent(const OrderVector& kk, const ClassSpec& spec, std::span<const double> deltas,
                       const Tolerances& tol, const ModulusOptions& opts) {
  if (deltas.size() < 2) throw InvalidParams("need at least two deltas");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double d : deltas) {
    const double lx = std::log(d);
    const double ly = std::log(modulus(kk, spec, d, tol, opts).omega);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(deltas.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DragomirResult dragomir(double eta, const Tolerances& tol, const ModulusOptions& opts) {
  if (!(eta >= 0 && eta <= 1)) throw InvalidParams("eta must lie in [0, 1]");
  DragomirResult out;
  if (eta == 0 || eta == 1) {
    // eta = 0 is Landau's inequality, eta = 1 the Kolmogorov inequality for (k, r) = (1, 3).
    out.value = kolmogorov_constant(1, eta == 0 ? 2 : 3);
    out.method = "classical";
    return out;
  }
  const OrderVector kk({0, 1, 2, 3});
  const auto spec = ClassSpec::dragomir(eta);
  const double gamma = (1 + eta) / (2 + eta);
  const double deltas[3] = {0.5, 1.0, 2.0};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0;
  for (double d : deltas) {
    const auto m = modulus(kk, spec, d, tol, opts);
    const double c = m.omega / std::pow(d, gamma);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
    sum += c;
    if (d == 1.0) out.value = m.omega;
  }
  out.spread = (hi - lo) / (sum / 3);
  out.method = "modulus";
  if (out.spread > tol.check) {
    throw PowerLawMismatch("omega(delta) / delta^gamma varies by " + std::to_string(out.spread));
  }
  return out;
}

double dragomir_constant(double eta, const Tolerances& tol, const ModulusOptions& opts) {
  return dragomir(eta, tol, opts).value;
}

std::vector<double> norms_of(const RodovParams& p, const Tolerances& tol) {
  p.validate();
  const auto profile = rodov_norm_profile(p.a, p.b, p.c, p.s, tol);
  std::vector<double> m(profile.size());
  for (int j = 0; j <= p.s; ++j) m[static_cast<std::size_t>(j)] = p.alpha * profile[static_cast<std::size_t>(p.s - j)];
  return m;
}

std::vector<double> norms_of(const EulerParams& p, const Tolerances& tol) {
  p.validate();
  return norms_of(p.as_rodov(), tol);
}

std::vector<double> sine_norms(double amplitude, double frequency, int r) {
  std::vector<double> m(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) m[static_cast<std::size_t>(j)] = amplitude * std::pow(frequency, j);
  return m;
}

double sharp_inequality_check(std::span<const double> norms, const OrderVector& kk, const ClassSpec& spec,
                              const Tolerances& tol, const ModulusOptions& opts) {
  if (norms.size() < static_cast<std::size_t>(kk.r()) + 1) throw OrderTooHigh("need norms up to order r");
  const double p = spec.normalized_functional(norms);
  if (!(p > 0)) throw InvalidParams("p(f) must be positive");
  const double scale = std::pow(p, 1.0 / spec.degree());
  const double omega = modulus(kk, spec, norms[0] / scale, tol, opts).omega;
  return norms[static_cast<std::size_t>(kk.k())] / (scale * omega);
}

}  // namespace kolmo
