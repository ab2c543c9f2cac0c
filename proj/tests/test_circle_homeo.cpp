#include <doctest.h>

#include <random>

#include "lkweld/circle_homeo.hpp"
#include "lkweld/errors.hpp"

using namespace lkweld;

namespace {

// x + sum a_k sin(k x + b_k) with sum k |a_k| < 1, hence strictly increasing.
struct RandomHomeo {
  double shift;
  std::vector<double> a, b;

  static RandomHomeo draw(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), ph(0.0, kTwoPi);
    RandomHomeo h{0.5 * u(rng), {}, {}};
    double budget = 0.8;
    for (int k = 1; k <= 4; ++k) {
      const double amp = budget * std::abs(u(rng)) / (2.0 * k);
      h.a.push_back(amp);
      h.b.push_back(ph(rng));
      budget -= k * amp;
    }
    return h;
  }

  double operator()(double x) const {
    double v = x + shift;
    for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * std::sin((k + 1) * x + b[k]);
    return v;
  }
};

}  // namespace

TEST_SUITE("circle_homeo") {
  TEST_CASE("identity") {
    const auto id = CircleHomeo::identity(64);
    for (double x : {0.0, 0.3, 3.0, 6.2, -1.0, 10.0}) {
      CHECK(std::abs(id(x) - x) < 1e-15);
      CHECK(std::abs(id.inverse(x) - x) < 1e-13);
      CHECK(std::abs(id.derivative(x) - 1.0) < 1e-15);
    }
    CHECK(std::abs(id.min_step() - kTwoPi / 64) < 1e-15);
  }

  TEST_CASE("non-monotone samples are rejected") {
    std::vector<double> v(16);
    for (std::size_t j = 0; j < 16; ++j) v[j] = grid_angle(j, 16);
    v[5] = v[4];
    CHECK_THROWS_AS(CircleHomeo{v}, NumericalFailure);
    for (std::size_t j = 0; j < 16; ++j) v[j] = grid_angle(j, 16);
    v[15] = v[0] + kTwoPi + 0.01;  // breaks the wrap-around step
    CHECK_THROWS_AS(CircleHomeo{v}, NumericalFailure);
    try {
      v[5] = v[4] - 0.1;
      CircleHomeo h(v);
    } catch (const NumericalFailure& e) {
      CHECK(e.stage() == "circle-homeo");
    }
  }

  TEST_CASE("random monotone lifts: invariants") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = RandomHomeo::draw(rng);
      const auto h = CircleHomeo::sample(256, f);
      CHECK(h.min_step() > 0.0);
      for (int i = 0; i < 25; ++i) {
        const double x = -7.0 + 0.6 * i;
        CHECK(std::abs(h(x) - f(x)) < 1e-12);
        CHECK(std::abs(h(x + kTwoPi) - h(x) - kTwoPi) < 1e-12);
        CHECK(h.derivative(x) > 0.0);
        CHECK(h(x + 0.01) > h(x));
        CHECK(std::abs(h.inverse(h(x)) - x) < 1e-12);
        CHECK(std::abs(h(h.inverse(x)) - x) < 1e-12);
      }
      const auto inv = h.inverted();
      const auto round = inv.compose(h);
      CHECK(circle_sup_distance(round, CircleHomeo::identity(256), 256) < 1e-9);
    }
  }

  TEST_CASE("composition follows function composition") {
    std::mt19937 rng(7);
    const auto f = RandomHomeo::draw(rng);
    const auto g = RandomHomeo::draw(rng);
    const auto hf = CircleHomeo::sample(256, f);
    const auto hg = CircleHomeo::sample(256, g);
    const auto fg = hf.compose(hg);  // f after g
    for (double x : {0.1, 1.7, 4.4}) CHECK(std::abs(fg(x) - f(g(x))) < 1e-11);
  }

  TEST_CASE("circle distance helpers") {
    CHECK(std::abs(circle_diff(0.1, kTwoPi - 0.1) - 0.2) < 1e-15);
    CHECK(std::abs(circle_diff(3.0, 3.0 + 4 * kPi)) < 1e-15);
    const double d = circle_diff(kPi, 0.0);
    CHECK(d > -kPi);
    CHECK(d <= kPi);
    const auto a = CircleHomeo::sample(64, [](double x) { return x + 0.05 * std::sin(x); });
    const auto b = CircleHomeo::sample(64, [](double x) { return x + kTwoPi; });
    CHECK(std::abs(circle_sup_distance(a, CircleHomeo::identity(64), 64) - 0.05) < 1e-12);
    CHECK(circle_sup_distance(b, CircleHomeo::identity(64), 64) < 1e-12);
  }
}
