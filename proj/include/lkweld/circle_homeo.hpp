#pragma once

#include <span>
#include <vector>

#include "lkweld/trig_series.hpp"

namespace lkweld {

inline constexpr double kInverseTol = 1e-13;

// Monotone degree-1 circle map, stored as samples of its lift on the
// uniform grid x_j = 2*pi*j/n: value(x + 2*pi) = value(x) + 2*pi and value
// strictly increasing. Off-grid values interpolate the periodic displacement
// value(x) - x spectrally; the inverse brackets with the monotone samples and
// refines by safeguarded Newton/bisection.
class CircleHomeo {
 public:
  CircleHomeo() = default;
  // Throws NumericalFailure("circle-homeo") unless the lift is strictly
  // increasing including the wrap-around step.
  explicit CircleHomeo(std::vector<double> lift_samples);

  static CircleHomeo identity(std::size_t n);
  // Samples fn on the grid (fn returns the lift value).
  template <class Fn>
  static CircleHomeo sample(std::size_t n, Fn&& fn) {
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = fn(grid_angle(j, n));
    return CircleHomeo(std::move(v));
  }

  std::size_t size() const { return lift_.size(); }
  const std::vector<double>& samples() const { return lift_; }
  const TrigSeries& displacement() const { return displacement_; }

  double operator()(double x) const;
  double derivative(double x) const;
  double inverse(double y, double tol = kInverseTol) const;

  // The inverse map sampled on the same grid.
  CircleHomeo inverted(double tol = kInverseTol) const;
  // (this o other) sampled on other's grid.
  CircleHomeo compose(const CircleHomeo& other) const;

  // Smallest gap between consecutive lift samples (positive for a valid map).
  double min_step() const;

 private:
  std::vector<double> lift_;
  TrigSeries displacement_;
  TrigSeries displacement_prime_;
};

// Signed difference a - b reduced to (-pi, pi].
double circle_diff(double a, double b);

// sup_j |f(x_j) - g(x_j)| in circle distance over an n-point grid.
double circle_sup_distance(const CircleHomeo& f, const CircleHomeo& g, std::size_t n);

}  // namespace lkweld
