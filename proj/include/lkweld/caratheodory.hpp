#pragma once

#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lkweld/trig_series.hpp"

namespace lkweld {

// One term coeff * exp(rate * t) * z^power of a driving function. rate == 0
// is a time-constant coefficient.
struct DrivingTerm {
  int power = 1;
  cplx coeff{0.0, 0.0};
  double rate = 0.0;

  cplx at(double t) const { return rate == 0.0 ? coeff : coeff * std::exp(rate * t); }
  bool operator==(const DrivingTerm&) const = default;
};

struct DrivingValue {
  cplx p;
  cplx dp;   // d/dz
  cplx d2p;  // d^2/dz^2
};

// Minimum of Re p over the boundary grid and time samples, with its location.
struct CaratheodoryMargin {
  double margin = 0.0;
  double theta = 0.0;
  double t = 0.0;
};

inline constexpr double kDefaultMarginMin = 1e-3;
inline constexpr std::size_t kMarginGrid = 1024;
inline constexpr std::size_t kMarginTimeSamples = 64;

// Polynomial Caratheodory-class driving function
//   p(z, t) = 1 + sum_terms coeff * exp(rate * t) * z^power,
// validated at construction: Re p >= margin_min on the boundary grid over
// the sampled time window.
class DrivingFunction {
 public:
  // p == 1.
  DrivingFunction();
  explicit DrivingFunction(std::vector<DrivingTerm> terms,
                           double horizon = std::numeric_limits<double>::infinity(),
                           double margin_min = kDefaultMarginMin);

  const std::vector<DrivingTerm>& terms() const { return terms_; }
  double horizon() const { return horizon_; }
  int degree() const { return degree_; }
  bool time_constant() const;

  // p_k(t); p_0 == 1.
  cplx coefficient(int k, double t) const;

  cplx eval(cplx z, double t) const;
  DrivingValue eval_derivs(cplx z, double t) const;

  // Time samples used for the positivity check.
  std::vector<double> check_times() const;

 private:
  void check_args(cplx z, double t) const;

  std::vector<DrivingTerm> terms_;
  double horizon_;
  int degree_ = 0;
};

// Unchecked evaluation of Re p on a grid; reports the minimum and where it
// occurs. margin <= 0 means p is not in the Caratheodory class there.
CaratheodoryMargin check_caratheodory(const DrivingFunction& p, std::span<const double> t_samples,
                                      std::size_t grid = kMarginGrid);

// Same check on raw terms, before a DrivingFunction exists.
CaratheodoryMargin check_caratheodory(std::span<const DrivingTerm> terms,
                                      std::span<const double> t_samples,
                                      std::size_t grid = kMarginGrid);

// q(z, t) = 1 + sum_k q_k(t) z^{-k} on |z| >= 1.
class ExteriorDriving {
 public:
  ExteriorDriving() = default;
  explicit ExteriorDriving(std::vector<DrivingTerm> terms);

  const std::vector<DrivingTerm>& terms() const { return terms_; }
  cplx coefficient(int k, double t) const;
  cplx eval(cplx z, double t) const;

 private:
  std::vector<DrivingTerm> terms_;
};

// q with q_k = conj(p_k(0)), so that q(1/z, 0) = conj(p(conj z, 0)).
ExteriorDriving reflect_p_star(const DrivingFunction& p);
// Inverse reflection back to a (time-constant) interior driving function.
DrivingFunction reflect_q_star(const ExteriorDriving& q);

// p*(z, 0) = conj(p(conj z, 0)).
cplx eval_p_star(const DrivingFunction& p, cplx z);

}  // namespace lkweld
