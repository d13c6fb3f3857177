#include <doctest.h>

#include <cmath>
#include <random>

#include "kolmo/comparison.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/norms.hpp"

using namespace kolmo;

namespace {

// Largest sine A sin(nu t) whose norms of orders 0 and `orders` stay below `limits` (scaled by 0.95).
TestFunction dominated_sine(const std::vector<int>& orders, const std::vector<double>& limits, double nu) {
  double amp = limits[0];
  for (std::size_t i = 1; i < orders.size(); ++i) amp = std::min(amp, limits[i] / std::pow(nu, orders[i]));
  return TestFunction::sine(0.95 * amp, nu);
}

}  // namespace

TEST_CASE("level sets solve psi(eta) = y exactly") {
  const auto psi = build_rodov({0.4, 1.0, 0.6, 4, 1.0});
  const double top = sup_norm(psi);
  for (double y : {-0.9 * top, -0.3 * top, 0.0, 0.5 * top, 0.99 * top}) {
    const auto etas = level_set(psi, y);
    CHECK(etas.size() >= 2);
    for (double eta : etas) CHECK(std::abs(psi(eta) - y) <= 1e-12 * top);
  }
  CHECK(level_set(psi, 1.1 * top).empty());
}

TEST_CASE("Euler comparison: scaled, shifted and sine subjects") {
  const EulerParams e{1.3, 4, 2.0};
  const auto phi = build_euler(e);

  const auto half = verify_comparison_euler(TestFunction::spline(phi.scaled(0.5)), e, 2000);
  CHECK(half.max_violation == 0.0);
  CHECK(half.level_points > 0);

  const auto shifted = verify_comparison_euler(TestFunction::spline(phi, 0.377), e, 2000);
  CHECK(shifted.passed());

  const double m0 = sup_norm(phi);
  const auto sine = dominated_sine({0, 4}, {m0, e.amplitude}, 2.1);
  const auto rep = verify_comparison_euler(sine, e, 2000);
  CHECK(rep.passed());
  CHECK(rep.hypothesis_margins.size() == 2);
}

TEST_CASE("Euler comparison rejects undominated subjects") {
  const EulerParams e{1.0, 3, 1.0};
  CHECK_THROWS_AS(verify_comparison_euler(TestFunction::spline(build_euler(e).scaled(1.2)), e, 100), HypothesisViolated);
  CHECK_THROWS_AS(verify_comparison_euler(TestFunction::spline(build_euler({0.9, 3, 1.0})), e, 100), HypothesisViolated);
  CHECK(verify_comparison_euler(TestFunction::spline(build_euler({1.1, 3, 1.0})), e, 100).passed());
}

TEST_CASE("Rodov comparison across the three extended shapes") {
  struct Case {
    std::vector<int> orders;
    RodovParams psi;
    RodovParams smaller;  // same family, smaller beta
  };
  const std::vector<Case> cases{
      {{0, 1, 3, 5}, {0, 1.2, 0.8, 5, 1.5}, {0, 1.2, 0.3, 5, 1.5}},
      {{0, 2, 4, 5}, {0.9, 0.7, 0, 5, 2.0}, {0.2, 0.7, 0, 5, 2.0}},
      {{0, 1, 2, 3, 4}, {0.5, 1.0, 0.7, 4, 1.0}, {0.5, 1.0, 0.1, 4, 1.0}},
  };
  for (const auto& cs : cases) {
    const OrderVector kk(cs.orders);
    const auto psi = build_rodov(cs.psi);
    CAPTURE(kk.str());

    const auto scaled = verify_comparison_rodov(TestFunction::spline(psi.scaled(0.9)), kk, cs.psi, 2000);
    CHECK(scaled.passed());
    CHECK(scaled.experimental == (kk.kind() != FamilyKind::GapPair));

    const auto family = verify_comparison_rodov(TestFunction::spline(build_rodov(cs.smaller)), kk, cs.psi, 2000);
    CHECK(family.passed());

    std::vector<int> orders{0};
    for (int s : kk.upper()) orders.push_back(s);
    const auto m = norm_vector(cs.psi, orders);
    const auto sine = dominated_sine(orders, m.values, 1.7);
    CHECK(verify_comparison_rodov(sine, kk, cs.psi, 2000).passed());
  }
}

TEST_CASE("Rodov comparison checks family membership and hypotheses") {
  const OrderVector kk({0, 1, 2, 4});
  CHECK_THROWS_AS(verify_comparison_rodov(TestFunction::sine(0.1, 1), kk, {0.5, 1, 1, 4, 1.0}, 10), InvalidParams);
  const RodovParams p{0, 1, 1, 4, 1.0};
  CHECK_THROWS_AS(verify_comparison_rodov(TestFunction::spline(build_rodov(p).scaled(1.5)), kk, p, 10),
                  HypothesisViolated);
}

TEST_CASE("serial and parallel comparison reports are identical") {
  const OrderVector kk({0, 1, 3, 5});
  const RodovParams p{0, 1, 0.5, 5, 1.0};
  const auto f = TestFunction::spline(build_rodov({0, 1, 0.2, 5, 1.0}));
  const auto s = verify_comparison_rodov(f, kk, p, 777, Exec::Serial);
  const auto q = verify_comparison_rodov(f, kk, p, 777, Exec::Parallel);
  CHECK(s.max_violation == q.max_violation);
  CHECK(s.argmax_xi == q.argmax_xi);
  CHECK(s.level_points == q.level_points);
}
