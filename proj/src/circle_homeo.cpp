#include "lkweld/circle_homeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lkweld/errors.hpp"

namespace lkweld {

CircleHomeo::CircleHomeo(std::vector<double> lift_samples) : lift_(std::move(lift_samples)) {
  require_grid_size(lift_.size());
  if (!(min_step() > 0.0)) {
    std::ostringstream msg;
    msg << "lift is not strictly increasing (min step " << min_step() << ")";
    throw NumericalFailure("circle-homeo", msg.str());
  }
  const std::size_t n = lift_.size();
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = lift_[j] - grid_angle(j, n);
  displacement_ = TrigSeries::analyze(std::span<const double>(d));
  displacement_prime_ = displacement_.derivative();
}

CircleHomeo CircleHomeo::identity(std::size_t n) {
  return sample(n, [](double x) { return x; });
}

double CircleHomeo::min_step() const {
  const std::size_t n = lift_.size();
  double m = lift_.front() + kTwoPi - lift_.back();
  for (std::size_t j = 1; j < n; ++j) m = std::min(m, lift_[j] - lift_[j - 1]);
  return m;
}

double CircleHomeo::operator()(double x) const { return x + displacement_.real_at(x); }

double CircleHomeo::derivative(double x) const { return 1.0 + displacement_prime_.real_at(x); }

double CircleHomeo::inverse(double y, double tol) const {
  const std::size_t n = lift_.size();
  const double h = kTwoPi / static_cast<double>(n);
  // Shift y into [lift_0, lift_0 + 2*pi).
  const double turns = std::floor((y - lift_.front()) / kTwoPi);
  const double y0 = y - turns * kTwoPi;
  // Bracket on the samples: lift_[j] <= y0 < lift_[j+1] (with wrap).
  const auto it = std::upper_bound(lift_.begin(), lift_.end(), y0);
  const std::size_t j = static_cast<std::size_t>(std::distance(lift_.begin(), it)) - 1;
  const double next = j + 1 < n ? lift_[j + 1] : lift_.front() + kTwoPi;
  double x = (static_cast<double>(j) + (y0 - lift_[j]) / (next - lift_[j])) * h;
  // The interpolant may overshoot the samples slightly; widen by one cell.
  double lo = (static_cast<double>(j) - 1.0) * h;
  double hi = (static_cast<double>(j) + 2.0) * h;
  auto g = [&](double u) { return (*this)(u) - y0; };
  for (int iter = 0; iter < 100; ++iter) {
    const double gx = g(x);
    if (gx > 0.0) hi = x; else lo = x;
    if (hi - lo <= tol) break;
    const double step = gx / derivative(x);
    double trial = x - step;
    if (!(trial > lo && trial < hi)) trial = 0.5 * (lo + hi);
    if (std::abs(trial - x) <= tol) {
      x = trial;
      break;
    }
    x = trial;
  }
  return x + turns * kTwoPi;
}

CircleHomeo CircleHomeo::inverted(double tol) const {
  const std::size_t n = lift_.size();
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = inverse(grid_angle(j, n), tol);
  return CircleHomeo(std::move(v));
}

CircleHomeo CircleHomeo::compose(const CircleHomeo& other) const {
  const std::size_t n = other.size();
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = (*this)(other.samples()[j]);
  return CircleHomeo(std::move(v));
}

double circle_diff(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

double circle_sup_distance(const CircleHomeo& f, const CircleHomeo& g, std::size_t n) {
  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid_angle(j, n);
    m = std::max(m, std::abs(circle_diff(f(x), g(x))));
  }
  return m;
}

}  // namespace lkweld
