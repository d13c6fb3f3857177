#include <doctest.h>

#include <cmath>
#include <random>

#include "kolmo/errors.hpp"
#include "kolmo/modulus.hpp"
#include "kolmo/norms.hpp"
#include "oracles.hpp"
#include "random_family.hpp"

using namespace kolmo;

TEST_CASE("Dragomir maximiser satisfies the reduced system") {
  const OrderVector kk({0, 1, 2, 3});
  for (double eta : {0.25, 0.5, 0.75}) {
    const auto res = modulus(kk, ClassSpec::dragomir(eta), 1.0);
    const auto& p = res.argmax;
    CAPTURE(eta);
    CHECK(res.attained);
    CHECK(p.c == 0.0);
    CHECK(p.alpha * std::pow(p.b, 1 - eta) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p.alpha * (p.a * p.a * p.b / 2 + p.a * p.b * p.b + p.b * p.b * p.b / 3) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.omega == doctest::Approx(p.alpha * (p.a * p.b + p.b * p.b / 2)).epsilon(1e-10));
    CHECK(norms_of(p)[0] == doctest::Approx(res.delta).epsilon(1e-10));
  }
}

TEST_CASE("inactive lower bound recovers the classical constant") {
  for (auto [k, r] : {std::pair{1, 4}, std::pair{2, 5}, std::pair{1, 3}}) {
    const OrderVector kk({0, k, r - 1, r});
    const auto spec = ClassSpec::box({{r - 1, 1e6}, {r, 1.0}});
    for (double delta : {0.5, 2.0}) {
      const auto res = modulus(kk, spec, delta);
      const double classical = kolmogorov_constant(k, r) * std::pow(delta, 1.0 - double(k) / r);
      CHECK(res.omega >= classical - 1e-6);
      CHECK(res.omega <= classical * (1 + 1e-9));
    }
  }
}

TEST_CASE("power laws under dilation") {
  const OrderVector kk({0, 1, 2, 3});
  for (double eta : {0.2, 0.5, 0.8}) {
    const auto spec = ClassSpec::dragomir(eta);
    const double gamma = homogeneous_exponent(kk, spec);
    CHECK(gamma == doctest::Approx((1 + eta) / (2 + eta)).epsilon(1e-15));
    const double base = modulus(kk, spec, 1.0).omega;
    for (double delta : {0.25, 0.5, 2.0, 4.0}) {
      CHECK(modulus(kk, spec, delta).omega / std::pow(delta, gamma) == doctest::Approx(base).epsilon(1e-6));
    }
  }

  struct Case {
    std::vector<int> orders;
    ClassSpec spec;
  };
  const std::vector<Case> cases{
      {{0, 1, 2, 4}, ClassSpec::homogeneous({{2, 0.5}, {4, 0.5}})},
      {{0, 2, 4, 5}, ClassSpec::homogeneous({{4, 0.3}, {5, 1.2}}, 2.0)},
      {{0, 1, 2, 3, 4}, ClassSpec::homogeneous({{2, 0.2}, {3, 0.3}, {4, 0.5}})},
  };
  for (const auto& cs : cases) {
    const OrderVector kk(cs.orders);
    CAPTURE(kk.str());
    const double gamma = homogeneous_exponent(kk, cs.spec);
    const std::vector<double> deltas{0.5, 1.0, 2.0};
    CHECK(fitted_exponent(kk, cs.spec, deltas) == doctest::Approx(gamma).epsilon(1e-6));
  }

  // a single top bound dilates like the triple (0, k, r)
  const OrderVector top({0, 1, 3, 4});
  const std::vector<double> deltas{0.5, 1.0, 2.0};
  CHECK(fitted_exponent(top, ClassSpec::box({{4, 1.0}}), deltas) == doctest::Approx(0.75).epsilon(1e-6));
}

TEST_CASE("Dragomir endpoints take the classical path") {
  const auto lo = dragomir(0.0);
  CHECK(lo.method == "classical");
  CHECK(lo.value == kolmogorov_constant(1, 2));
  const auto hi = dragomir(1.0);
  CHECK(hi.method == "classical");
  CHECK(hi.value == kolmogorov_constant(1, 3));
  const auto mid = dragomir(0.5);
  CHECK(mid.method == "modulus");
  CHECK(mid.spread < 1e-6);
  CHECK(dragomir_constant(0.5) == mid.value);
  CHECK_THROWS_AS(dragomir(-0.1), InvalidParams);
  CHECK_THROWS_AS(dragomir(1.5), InvalidParams);
}

TEST_CASE("optimiser agrees with the grid oracle") {
  const OrderVector kk({0, 1, 2, 3});
  for (double eta : {0.25, 0.5, 0.75}) {
    for (double delta : {0.5, 1.0, 2.0}) {
      CAPTURE(eta);
      CAPTURE(delta);
      const double omega = modulus(kk, ClassSpec::dragomir(eta), delta).omega;
      CHECK(omega == doctest::Approx(oracle::dragomir_grid_omega(eta, delta, 200000)).epsilon(1e-5));
    }
  }
}

TEST_CASE("modulus stays below the unconstrained bound and grows with delta") {
  const std::vector<std::pair<std::vector<int>, ClassSpec>> cases{
      {{0, 1, 2, 3}, ClassSpec::dragomir(0.4)},
      {{0, 1, 3, 5}, ClassSpec::box({{3, 0.7}, {5, 1.0}})},
      {{0, 2, 4, 5}, ClassSpec::box({{4, 0.2}, {5, 1.0}})},
      {{0, 1, 2, 3, 4}, ClassSpec::box({{2, 0.5}, {3, 0.6}, {4, 1.0}})},
  };
  for (const auto& [orders, spec] : cases) {
    const OrderVector kk(orders);
    CAPTURE(kk.str());
    double last = 0;
    for (double delta : {0.1, 0.3, 1.0, 3.0, 10.0}) {
      const auto res = modulus(kk, spec, delta);
      const int k = kk.k(), r = kk.r();
      const double mr = res.argmax.alpha;
      const double bound = kolmogorov_constant(k, r) * std::pow(delta, 1.0 - double(k) / r) * std::pow(mr, double(k) / r);
      CHECK(res.omega <= bound * (1 + 1e-9));
      CHECK(res.omega >= last);
      last = res.omega;
    }
  }
}

TEST_CASE("unsupported specs and bad deltas") {
  const OrderVector kk({0, 1, 2, 3});
  CHECK_THROWS_AS(modulus(kk, ClassSpec::dragomir(0.0), 1.0), UnsupportedSpec);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::box({{2, 1.0}}), 1.0), UnsupportedSpec);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::box({{4, 1.0}}), 1.0), UnsupportedSpec);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::box({{3, -1.0}}), 1.0), UnsupportedSpec);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::homogeneous({{2, -0.5}, {3, 1.0}}), 1.0), UnsupportedSpec);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::dragomir(0.5), 0.0), InvalidParams);
  CHECK_THROWS_AS(modulus(kk, ClassSpec::dragomir(0.5), -1.0), InvalidParams);
  CHECK(ClassSpec::dragomir(0.5).attainment_condition(kk));
  CHECK_FALSE(ClassSpec::dragomir(0.0).attainment_condition(kk));
  CHECK(ClassSpec::box({{3, 1.0}}).attainment_condition(kk));
}

TEST_CASE("sharp inequality check") {
  const OrderVector kk({0, 1, 2, 3});
  for (double eta : {0.3, 0.7}) {
    const auto spec = ClassSpec::dragomir(eta);
    const auto res = modulus(kk, spec, 1.3);
    CHECK(sharp_inequality_check(norms_of(res.argmax), kk, spec) == doctest::Approx(1.0).epsilon(1e-6));
    for (double nu : {0.3, 1.0, 4.0}) {
      CHECK(sharp_inequality_check(sine_norms(2.0, nu, 3), kk, spec) <= 1 + 1e-8);
    }
    CHECK(sharp_inequality_check(norms_of(EulerParams{1.7, 3, 0.5}), kk, spec) <= 1 + 1e-8);
  }

  std::mt19937 gen(59);
  std::uniform_real_distribution<double> theta(0.1, 1.0);
  for (int i = 0; i < 12; ++i) {
    const auto draw = draw_family_member(gen, 6);
    std::vector<std::pair<int, double>> terms;
    for (int s : draw.kk.upper()) terms.emplace_back(s, theta(gen));
    const auto spec = ClassSpec::homogeneous(terms);
    CAPTURE(draw.kk.str());
    CHECK(sharp_inequality_check(norms_of(draw.psi), draw.kk, spec) <= 1 + 1e-8);
  }
}

TEST_CASE("serial and parallel profiles agree bit for bit") {
  const OrderVector kk({0, 1, 5, 6});
  const auto spec = ClassSpec::box({{5, 2.0}, {6, 1.0}});
  std::vector<double> xs;
  for (int i = 0; i < 300; ++i) xs.push_back(std::pow(10.0, -3 + 0.02 * i));
  CHECK(shape_profile(kk, spec, 1.0, xs, 0.0, Exec::Serial) == shape_profile(kk, spec, 1.0, xs, 0.0, Exec::Parallel));

  const OrderVector tri({0, 1, 2, 3, 4});
  const auto box = ClassSpec::box({{2, 0.5}, {3, 0.6}, {4, 1.0}});
  const auto a = modulus(tri, box, 1.0, {}, {.exec = Exec::Serial});
  const auto b = modulus(tri, box, 1.0, {}, {.exec = Exec::Parallel});
  CHECK(a.omega == b.omega);
  CHECK(a.argmax.a == b.argmax.a);
  CHECK(a.argmax.c == b.argmax.c);
  CHECK(a.evaluations == b.evaluations);
}
