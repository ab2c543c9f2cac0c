#include <doctest.h>

#include <random>
#include <thread>

#include "lkweld/errors.hpp"
#include "support.hpp"

using namespace lkweld;
using lkweld::testing::trapezoid_mean;
using lkweld::testing::WarningCapture;

namespace {

// Random real trigonometric polynomial of degree < max_k.
std::function<double(double)> random_band_limited(std::mt19937& rng, int max_k) {
  std::normal_distribution<double> g;
  std::vector<double> a(max_k), b(max_k);
  for (int k = 0; k < max_k; ++k) {
    a[k] = g(rng) / (1.0 + k * k);
    b[k] = g(rng) / (1.0 + k * k);
  }
  return [a, b](double x) {
    double v = a[0];
    for (std::size_t k = 1; k < a.size(); ++k) v += a[k] * std::cos(k * x) + b[k] * std::sin(k * x);
    return v;
  };
}

double sup_diff(const TrigSeries& u, const std::function<double(double)>& ref, std::size_t n) {
  double e = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid_angle(j, n) + 0.37;
    e = std::max(e, std::abs(u.real_at(x) - ref(x)));
  }
  return e;
}

}  // namespace

TEST_SUITE("trig_series") {
  TEST_CASE("grid size validation") {
    CHECK_THROWS_AS(require_grid_size(8), InvalidArgument);
    CHECK_THROWS_AS(require_grid_size(24), InvalidArgument);
    CHECK_NOTHROW(require_grid_size(16));
    std::vector<double> v(48, 1.0);
    CHECK_THROWS_AS(TrigSeries::analyze(std::span<const double>(v)), InvalidArgument);
  }

  TEST_CASE("constant samples give only c_0") {
    const auto u = TrigSeries::sample(32, [](double) { return cplx(2.5, -1.0); });
    CHECK(std::abs(u.coeff(0) - cplx(2.5, -1.0)) < 1e-15);
    for (int k = -16; k < 16; ++k) {
      if (k != 0) CHECK(std::abs(u.coeff(k)) < 1e-15);
    }
  }

  TEST_CASE("cos theta on 16 points") {
    const auto u = TrigSeries::sample(16, [](double x) { return std::cos(x); });
    CHECK(u.is_real());
    CHECK(std::abs(u.coeff(1) - 0.5) < 1e-15);
    CHECK(std::abs(u.coeff(-1) - 0.5) < 1e-15);
    for (int k = -8; k < 8; ++k) {
      if (std::abs(k) != 1) CHECK(std::abs(u.coeff(k)) < 1e-15);
    }
  }

  TEST_CASE("exp(cos) coefficients match 8192-point quadrature") {
    const auto u = TrigSeries::sample(64, [](double x) { return std::exp(std::cos(x)); });
    for (int k = -10; k <= 10; ++k) {
      const cplx ref = trapezoid_mean(8192, [k](double x) {
        return std::exp(std::cos(x)) * std::polar(1.0, -k * x);
      });
      CHECK(std::abs(u.coeff(k) - ref) < 1e-10);
    }
  }

  TEST_CASE("real flag means conjugate-symmetric coefficients") {
    std::mt19937 rng(11);
    const auto fn = random_band_limited(rng, 20);
    const auto u = TrigSeries::sample(128, fn);
    REQUIRE(u.is_real());
    for (int k = 1; k < 64; ++k) CHECK(std::abs(u.coeff(-k) - std::conj(u.coeff(k))) < 1e-15);
  }

  TEST_CASE("analysis/synthesis round trip on random band-limited data") {
    std::mt19937 rng(2024);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = std::size_t{16} << (trial % 6);
      std::vector<cplx> v(n);
      for (auto& x : v) x = {g(rng), g(rng)};
      const auto u = TrigSeries::analyze(std::span<const cplx>(v));
      const auto back = u.synthesize();
      double err = 0.0, scale = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        err = std::max(err, std::abs(back[j] - v[j]));
        scale = std::max(scale, std::abs(v[j]));
      }
      CHECK(err / scale <= 1e-12);
      const auto again = TrigSeries::from_coefficients(
          [&] {
            std::vector<cplx> c(n);
            const int h = static_cast<int>(n / 2);
            for (int k = -h; k < h; ++k) c[k + h] = u.coeff(k);
            return c;
          }(),
          false);
      for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(again.values()[j] - v[j]) <= 1e-12 * scale);
    }
  }

  TEST_CASE("point evaluation interpolates band-limited data off grid") {
    std::mt19937 rng(5);
    const auto fn = random_band_limited(rng, 30);
    const auto u = TrigSeries::sample(128, fn);
    CHECK(sup_diff(u, fn, 200) < 1e-12);
  }

  TEST_CASE("spectral derivative") {
    const auto u = TrigSeries::sample(64, [](double x) { return std::sin(2 * x) + 0.5 * std::cos(5 * x); });
    const auto d1 = u.derivative(1);
    const auto d2 = u.derivative(2);
    CHECK(sup_diff(d1, [](double x) { return 2 * std::cos(2 * x) - 2.5 * std::sin(5 * x); }, 64) < 1e-12);
    CHECK(sup_diff(d2, [](double x) { return -4 * std::sin(2 * x) - 12.5 * std::cos(5 * x); }, 64) < 1e-11);
  }

  TEST_CASE("schwarz integral of a constant is the constant") {
    const auto u = TrigSeries::sample(64, [](double) { return 0.03; });
    for (cplx z : {cplx(0.0), cplx(0.5, 0.2), cplx(0.0, 1.0)}) {
      CHECK(std::abs(schwarz_integral(u, z) - 0.03) < 1e-15);
    }
  }

  TEST_CASE("schwarz integral matches kernel quadrature") {
    const double eps = 0.02;
    struct Case {
      std::function<double(double)> delta;
      std::function<cplx(cplx)> closed_form;
    };
    const std::vector<Case> cases{
        {[=](double x) { return eps * std::cos(x); }, [=](cplx z) { return eps * z; }},
        {[=](double x) { return eps * std::sin(2 * x); }, [=](cplx z) { return cplx(0, -eps) * z * z; }},
    };
    for (const auto& c : cases) {
      const auto u = TrigSeries::sample(64, c.delta);
      for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(0.0, -0.7)}) {
        const cplx ref = trapezoid_mean(8192, [&](double psi) {
          const cplx e = std::polar(1.0, psi);
          return c.delta(psi) * (e + z) / (e - z);
        });
        CHECK(std::abs(schwarz_integral(u, z) - ref) < 1e-10);
        CHECK(std::abs(ref - c.closed_form(z)) < 1e-10);
      }
    }
  }

  TEST_CASE("schwarz integral argument checks") {
    const auto u = TrigSeries::sample(32, [](double x) { return std::cos(x); });
    CHECK_THROWS_AS(schwarz_integral(u, cplx(1.1, 0.0)), InvalidArgument);
    const auto c = TrigSeries::sample(32, [](double x) { return std::polar(1.0, x); });
    CHECK_THROWS_AS(schwarz_integral(c, cplx(0.1, 0.0)), InvalidArgument);
    CHECK_THROWS_AS(conjugate_pv(c), InvalidArgument);
  }

  TEST_CASE("real part of schwarz integral on the circle recovers the density") {
    std::mt19937 rng(9);
    const auto fn = random_band_limited(rng, 40);
    const auto u = TrigSeries::sample(1024, fn);
    double err = 0.0;
    for (std::size_t j = 0; j < 1024; j += 7) {
      const double x = grid_angle(j, 1024);
      err = std::max(err, std::abs(schwarz_integral(u, std::polar(1.0, x)).real() - fn(x)));
    }
    CHECK(err < 1e-8);
  }

  TEST_CASE("conjugate of a constant vanishes") {
    const auto u = TrigSeries::sample(64, [](double) { return 0.7; });
    CHECK(conjugate_pv(u).sup_norm() < 1e-15);
    CHECK(std::abs(pv_quadrature(TrigSeries::sample(64, [](double) { return 0.0; }), 1.0)) == 0.0);
  }

  TEST_CASE("conjugate sign agrees with the cotangent quadrature") {
    const auto u = TrigSeries::sample(1024, [](double x) { return std::cos(x); });
    const auto h = conjugate_pv(u);
    for (double x : {0.0, kPi / 2, 1.0, 4.0}) {
      const double q = pv_quadrature(u, x);
      CHECK(std::abs(h.real_at(x) - q) < 1e-8);
    }
    // quadrature fixes h(pi/2) = -1 for this kernel orientation
    CHECK(std::abs(pv_quadrature(u, kPi / 2) + 1.0) < 1e-8);
  }

  TEST_CASE("conjugate of sin 3psi is a unit-amplitude frequency-3 harmonic") {
    const auto u = TrigSeries::sample(256, [](double x) { return std::sin(3 * x); });
    const auto h = conjugate_pv(u);
    for (int k = -128; k < 128; ++k) {
      if (std::abs(k) == 3) {
        CHECK(std::abs(std::abs(h.coeff(k)) - 0.5) < 1e-14);
      } else {
        CHECK(std::abs(h.coeff(k)) < 1e-14);
      }
    }
    CHECK(std::abs(h.sup_norm() - 1.0) < 1e-12);
  }

  TEST_CASE("conjugate_pv agrees with pv_quadrature on every grid point") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 3; ++trial) {
      const auto u = TrigSeries::sample(1024, random_band_limited(rng, 60));
      const auto h = conjugate_pv(u);
      const auto hv = h.real_values();
      double err = 0.0;
      for (std::size_t j = 0; j < 1024; ++j) err = std::max(err, std::abs(hv[j] - pv_quadrature(u, grid_angle(j, 1024))));
      CHECK(err < 1e-8);
    }
  }

  TEST_CASE("conjugation is an anti-involution on mean-zero data") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
      const auto fn = random_band_limited(rng, 50);
      const auto u = TrigSeries::sample(256, fn);
      const auto hh = conjugate_pv(conjugate_pv(u));
      const double m = u.mean();
      CHECK(sup_diff(hh, [&](double x) { return -(fn(x) - m); }, 256) < 1e-10);
      const auto kk = harmonic_conjugate(harmonic_conjugate(u));
      CHECK(sup_diff(kk, [&](double x) { return -(fn(x) - m); }, 256) < 1e-10);
    }
  }

  TEST_CASE("imaginary part of schwarz integral on the circle is minus h") {
    std::mt19937 rng(31);
    const auto u = TrigSeries::sample(512, random_band_limited(rng, 40));
    const auto h = conjugate_pv(u);
    double err = 0.0;
    for (std::size_t j = 0; j < 512; j += 3) {
      const double x = grid_angle(j, 512);
      err = std::max(err, std::abs(schwarz_integral(u, std::polar(1.0, x)).imag() + h.real_at(x)));
    }
    CHECK(err < 1e-10);
  }

  TEST_CASE("resolution warning on unresolved data") {
    WarningCapture cap;
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> noise(64);
    for (auto& x : noise) x = d(rng);
    const auto u = TrigSeries::analyze(std::span<const double>(noise));
    CHECK_FALSE(u.resolved());
    conjugate_pv(u);
    CHECK(!cap.messages().empty());

    WarningCapture quiet;
    const auto smooth = TrigSeries::sample(64, [](double x) { return std::cos(x); });
    CHECK(smooth.resolved());
    conjugate_pv(smooth);
    CHECK(quiet.messages().empty());
  }

  TEST_CASE("concurrent analysis is deterministic") {
    std::mt19937 rng(3);
    const auto fn = random_band_limited(rng, 30);
    const auto ref = TrigSeries::sample(512, fn);
    std::vector<std::vector<cplx>> got(8);
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < 8; ++w) {
        pool.emplace_back([&, w] {
          for (int r = 0; r < 20; ++r) got[w] = conjugate_pv(TrigSeries::sample(512, fn)).values();
        });
      }
    }
    const auto expect = conjugate_pv(ref).values();
    for (const auto& g : got) CHECK(g == expect);
  }
}
