#include <doctest.h>

#include <limits>
#include <random>

#include "lkweld/caratheodory.hpp"
#include "lkweld/errors.hpp"

using namespace lkweld;

constexpr double kInf = std::numeric_limits<double>::infinity();

namespace {

DrivingFunction poly(std::vector<std::pair<int, cplx>> terms) {
  std::vector<DrivingTerm> t;
  for (auto [k, c] : terms) t.push_back({k, c, 0.0});
  return DrivingFunction(t);
}

}  // namespace

TEST_SUITE("caratheodory") {
  TEST_CASE("p = 1 everywhere") {
    const DrivingFunction p;
    CHECK(p.degree() == 0);
    for (cplx z : {cplx(0.0), cplx(1.0), cplx(0.3, -0.8)}) {
      CHECK(p.eval(z, 0.5) == cplx(1.0));
      const auto d = p.eval_derivs(z, 0.0);
      CHECK(d.p == cplx(1.0));
      CHECK(d.dp == cplx(0.0));
      CHECK(d.d2p == cplx(0.0));
    }
    const double t0 = 0.0;
    CHECK(check_caratheodory(p, std::span<const double>(&t0, 1)).margin == doctest::Approx(1.0));
  }

  TEST_CASE("direct evaluations") {
    CHECK(std::abs(poly({{1, 0.3}}).eval(1.0, 0.0) - 1.3) < 1e-15);
    const DrivingFunction decaying({DrivingTerm{2, 0.5, -1.0}});
    CHECK(std::abs(decaying.eval(cplx(0, 1), std::log(2.0)) - 0.75) < 1e-15);
    CHECK_FALSE(decaying.time_constant());
    CHECK(poly({{1, 0.3}}).time_constant());
  }

  TEST_CASE("derivative triples") {
    const cplx a(0.2, -0.1);
    const auto lin = poly({{1, a}});
    const cplx z(0.4, 0.3);
    auto d = lin.eval_derivs(z, 0.0);
    CHECK(std::abs(d.p - (1.0 + a * z)) < 1e-15);
    CHECK(std::abs(d.dp - a) < 1e-15);
    CHECK(std::abs(d.d2p) < 1e-15);
    d = poly({{3, a}}).eval_derivs(1.0, 0.0);
    CHECK(std::abs(d.p - (1.0 + a)) < 1e-15);
    CHECK(std::abs(d.dp - 3.0 * a) < 1e-15);
    CHECK(std::abs(d.d2p - 6.0 * a) < 1e-15);
  }

  TEST_CASE("derivatives agree with central differences") {
    const DrivingFunction p({DrivingTerm{1, {0.2, 0.1}, 0.0}, DrivingTerm{2, {0.1, -0.2}, -0.5},
                             DrivingTerm{4, {0.05, 0.0}, 0.0}});
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> r(0.0, 0.9), a(0.0, kTwoPi), tt(0.0, 2.0);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
      const cplx z = std::polar(r(rng), a(rng));
      const double t = tt(rng);
      const auto d = p.eval_derivs(z, t);
      const cplx fd1 = (p.eval(z + h, t) - p.eval(z - h, t)) / (2 * h);
      const cplx fd2 = (p.eval_derivs(z + h, t).dp - p.eval_derivs(z - h, t).dp) / (2 * h);
      CHECK(std::abs(fd1 - d.dp) <= 1e-8 * std::max(1.0, std::abs(d.dp)));
      CHECK(std::abs(fd2 - d.d2p) <= 1e-8 * std::max(1.0, std::abs(d.d2p)));
    }
  }

  TEST_CASE("boundary case p = 1 + z is rejected") {
    const std::vector<DrivingTerm> terms{{1, 1.0, 0.0}};
    const double t0 = 0.0;
    const auto m = check_caratheodory(std::span<const DrivingTerm>(terms), std::span<const double>(&t0, 1));
    CHECK(std::abs(m.margin) < 1e-12);
    CHECK(std::abs(m.theta - kPi) < 1e-12);
    CHECK_THROWS_AS(DrivingFunction{terms}, InvalidArgument);
  }

  TEST_CASE("margin of 1 + 0.4z + 0.2z^2 against a fine grid") {
    const auto p = poly({{1, 0.4}, {2, 0.2}});
    double fine = 1e300;
    for (int j = 0; j < 8192; ++j) {
      const double th = kTwoPi * j / 8192.0;
      fine = std::min(fine, 1.0 + 0.4 * std::cos(th) + 0.2 * std::cos(2 * th));
    }
    const double t0 = 0.0;
    const auto m = check_caratheodory(p, std::span<const double>(&t0, 1));
    CHECK(m.margin > 0.0);
    CHECK(m.margin >= fine - 1e-12);
    CHECK(m.margin - fine < 1e-5);
  }

  TEST_CASE("positivity holds at random interior points") {
    const auto p = poly({{1, {0.3, 0.2}}, {3, {-0.1, 0.25}}});
    const auto times = p.check_times();
    const double mu = check_caratheodory(p, times).margin;
    REQUIRE(mu > 0.0);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> r(0.0, 1.0), a(0.0, kTwoPi);
    for (int i = 0; i < 100; ++i) {
      const cplx z = std::polar(std::sqrt(r(rng)), a(rng));
      CHECK(p.eval(z, 0.0).real() >= mu - 1e-12);
    }
  }

  TEST_CASE("time-dependent positivity is checked over the horizon") {
    // Re p fails once 0.5 e^{t} exceeds 1, i.e. beyond t = ln 2.
    const std::vector<DrivingTerm> growing{{1, 0.5, 1.0}};
    CHECK_NOTHROW(DrivingFunction(growing, 0.5));
    CHECK_THROWS_AS(DrivingFunction(growing, 1.0), InvalidArgument);
    CHECK_THROWS_AS(DrivingFunction{growing}, InvalidArgument);
    const DrivingFunction ok(growing, 0.5);
    CHECK_THROWS_AS(ok.eval(0.0, 0.5), InvalidArgument);
    CHECK_THROWS_AS(ok.eval(0.0, -0.1), InvalidArgument);
    const auto times = ok.check_times();
    CHECK(times.size() == kMarginTimeSamples);
    CHECK(times.front() == 0.0);
    CHECK(times.back() < 0.5);
  }

  TEST_CASE("argument validation") {
    const auto p = poly({{1, 0.3}});
    CHECK_THROWS_AS(p.eval(cplx(1.0 + 1e-9, 0.0), 0.0), InvalidArgument);
    CHECK_NOTHROW(p.eval(cplx(1.0 + 1e-13, 0.0), 0.0));
    CHECK_THROWS_AS(DrivingFunction({DrivingTerm{0, 0.1, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(DrivingFunction({DrivingTerm{1, {NAN, 0.0}, 0.0}}), InvalidArgument);
  }

  TEST_CASE("reflection to the exterior") {
    CHECK(reflect_p_star(DrivingFunction()).terms().empty());
    // 1 + iz touches Re p = 0 on the circle, so admit it with a zero margin.
    const auto q = reflect_p_star(DrivingFunction({DrivingTerm{1, {0.0, 1.0}, 0.0}}, kInf, -1e-12));
    const cplx z(1.3, -0.4);
    CHECK(std::abs(q.eval(z, 0.0) - (1.0 - cplx(0, 1) / z)) < 1e-15);
    const auto q2 = reflect_p_star(poly({{2, {0.2, 0.1}}}));
    CHECK(std::abs(q2.coefficient(2, 0.0) - cplx(0.2, -0.1)) < 1e-15);
    CHECK(std::abs(q2.eval(z, 0.0) - (1.0 + cplx(0.2, -0.1) / (z * z))) < 1e-15);
  }

  TEST_CASE("reflecting twice restores the coefficients") {
    const auto p = poly({{1, {0.2, 0.3}}, {2, {-0.1, 0.05}}});
    const auto back = reflect_q_star(reflect_p_star(p));
    REQUIRE(back.terms().size() == p.terms().size());
    for (int k = 1; k <= 2; ++k) CHECK(back.coefficient(k, 0.0) == p.coefficient(k, 0.0));
  }

  TEST_CASE("p star equals q at 1/z") {
    const auto p = poly({{1, {0.2, 0.3}}, {3, {-0.1, 0.05}}});
    const auto q = reflect_p_star(p);
    for (cplx z : {cplx(0.5, 0.2), cplx(-0.3, 0.8)}) {
      CHECK(std::abs(eval_p_star(p, z) - std::conj(p.eval(std::conj(z), 0.0))) < 1e-15);
      CHECK(std::abs(eval_p_star(p, z) - q.eval(1.0 / z, 0.0)) < 1e-14);
    }
  }
}
