#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "lkweld/boundary_curve.hpp"
#include "lkweld/diagnostics.hpp"
#include "lkweld/trig_series.hpp"

namespace lkweld::testing {

// Curve traced by w(e^{i theta}) = e^{i theta} (1 + alpha e^{i m theta}).
// m = k - 1 gives the interior map z + alpha z^k, m = -(k + 1) the exterior
// map z + alpha z^{-k}. Both have unit conformal factor.
struct AnalyticCurve {
  double alpha;
  int m;

  double lift(double theta) const {
    return theta + std::arg(1.0 + alpha * std::polar(1.0, m * theta));
  }
  double lift_prime(double theta) const {
    const cplx u = alpha * std::polar(1.0, m * theta);
    return 1.0 + (cplx(0.0, m) * u / (1.0 + u)).imag();
  }
  double radius_at(double theta) const { return std::abs(1.0 + alpha * std::polar(1.0, m * theta)); }

  // theta with lift(theta) = psi, by Newton from theta = psi.
  double theta_of_psi(double psi) const {
    double th = psi;
    for (int it = 0; it < 100; ++it) {
      const double step = (lift(th) - psi) / lift_prime(th);
      th -= step;
      if (std::abs(step) < 1e-16) break;
    }
    return th;
  }

  BoundaryCurve curve(std::size_t n) const {
    return BoundaryCurve::sample(n, [&](double psi) { return 1.0 - radius_at(theta_of_psi(psi)); });
  }
};

inline AnalyticCurve interior_test_map(double alpha, int k) { return {alpha, k - 1}; }
inline AnalyticCurve exterior_test_map(double alpha, int k) { return {alpha, -(k + 1)}; }

// Plain composite trapezoid rule for (1/2pi) * integral over [0, 2pi).
inline cplx trapezoid_mean(std::size_t n, const std::function<cplx(double)>& fn) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += fn(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return acc / static_cast<double>(n);
}

// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(set_warning_handler([this](const std::string& w) { messages_.push_back(w); })) {}
  ~WarningCapture() { set_warning_handler(previous_); }
  WarningCapture(const WarningCapture&) = delete;
  WarningCapture& operator=(const WarningCapture&) = delete;

  const std::vector<std::string>& messages() const { return messages_; }
  bool any_contains(const std::string& needle) const {
    for (const auto& m : messages_) {
      if (m.find(needle) != std::string::npos) return true;
    }
    return false;
  }

 private:
  std::vector<std::string> messages_;
  WarningHandler previous_;
};

}  // namespace lkweld::testing
