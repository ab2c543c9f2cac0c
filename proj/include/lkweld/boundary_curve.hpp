#pragma once

#include <cmath>

#include "lkweld/trig_series.hpp"

namespace lkweld {

// Star-like Jordan curve r(psi) = 1 - delta(psi) around the origin, with
// spectral derivative caches and the smallness parameter
//   epsilon = max(sup|delta|, sup|delta'|, sup|delta''|).
class BoundaryCurve {
 public:
  BoundaryCurve() = default;
  // Throws InvalidArgument unless delta is real and 1 - delta > 0 on the grid.
  explicit BoundaryCurve(TrigSeries delta);

  template <class Fn>
  static BoundaryCurve sample(std::size_t n, Fn&& delta_of_psi) {
    return BoundaryCurve(TrigSeries::sample(n, [&](double psi) -> double { return delta_of_psi(psi); }));
  }

  std::size_t size() const { return delta_.size(); }
  const TrigSeries& delta() const { return delta_; }
  const TrigSeries& delta_prime() const { return delta_prime_; }
  const TrigSeries& delta_second() const { return delta_second_; }

  double epsilon() const { return epsilon_; }
  double radius(double psi) const { return 1.0 - delta_.real_at(psi); }
  double log_radius(double psi) const { return std::log(radius(psi)); }

  // sup |d log r / d psi| = sup |delta' / (1 - delta)| on the grid. Finite
  // for every valid curve; governs Theodorsen contraction.
  double max_log_slope() const { return max_log_slope_; }

  // delta(psi - a): the curve rotated by angle a.
  BoundaryCurve rotated(double a) const;
  // delta(-psi): the mirror image in the real axis.
  BoundaryCurve reflected() const;

 private:
  TrigSeries delta_;
  TrigSeries delta_prime_;
  TrigSeries delta_second_;
  double epsilon_ = 0.0;
  double max_log_slope_ = 0.0;
};

}  // namespace lkweld
