#include "lkweld/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

constexpr double kDiskSlack = 1e-12;

CaratheodoryMargin margin_of(std::span<const DrivingTerm> terms, std::span<const double> t_samples,
                             std::size_t grid) {
  CaratheodoryMargin best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (double t : t_samples) {
    for (std::size_t j = 0; j < grid; ++j) {
      const double theta = grid_angle(j, grid);
      double re = 1.0;
      for (const auto& term : terms) {
        re += (term.at(t) * std::polar(1.0, term.power * theta)).real();
      }
      if (re < best.margin) best = {re, theta, t};
    }
  }
  return best;
}

}  // namespace

DrivingFunction::DrivingFunction() : horizon_(std::numeric_limits<double>::infinity()) {}

DrivingFunction::DrivingFunction(std::vector<DrivingTerm> terms, double horizon,
                                 double margin_min)
    : terms_(std::move(terms)), horizon_(horizon) {
  if (!(horizon_ > 0.0)) throw InvalidArgument("driving function: horizon must be positive");
  for (const auto& term : terms_) {
    if (term.power < 1) throw InvalidArgument("driving function: powers of z must be >= 1");
    if (!std::isfinite(term.coeff.real()) || !std::isfinite(term.coeff.imag()) ||
        !std::isfinite(term.rate)) {
      throw InvalidArgument("driving function: non-finite coefficient");
    }
    if (std::isinf(horizon_) && term.rate > 0.0) {
      throw InvalidArgument("driving function: growing coefficient on an unbounded horizon");
    }
    degree_ = std::max(degree_, term.power);
  }
  const auto times = check_times();
  const auto m = margin_of(terms_, times, kMarginGrid);
  if (!(m.margin >= margin_min)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "driving function violates the Caratheodory positivity margin: min Re p = " << m.margin
        << " < " << margin_min << " at theta = " << m.theta << ", t = " << m.t;
    throw InvalidArgument(msg.str());
  }
}

bool DrivingFunction::time_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.rate == 0.0; });
}

std::vector<double> DrivingFunction::check_times() const {
  std::vector<double> times;
  times.reserve(kMarginTimeSamples);
  if (std::isfinite(horizon_)) {
    for (std::size_t j = 0; j < kMarginTimeSamples; ++j) {
      times.push_back(horizon_ * static_cast<double>(j) / kMarginTimeSamples);
    }
    return times;
  }
  double slowest = 0.0;
  for (const auto& term : terms_) {
    if (term.rate < 0.0) slowest = std::max(slowest, 1.0 / -term.rate);
  }
  if (slowest == 0.0) return {0.0};
  // Unbounded horizon with decaying coefficients: samples cluster where the
  // coefficients still change.
  for (std::size_t j = 0; j < kMarginTimeSamples; ++j) {
    times.push_back(-slowest * std::log1p(-static_cast<double>(j) / kMarginTimeSamples));
  }
  return times;
}

cplx DrivingFunction::coefficient(int k, double t) const {
  if (k == 0) return 1.0;
  cplx c = 0.0;
  for (const auto& term : terms_) {
    if (term.power == k) c += term.at(t);
  }
  return c;
}

void DrivingFunction::check_args(cplx z, double t) const {
  if (std::abs(z) > 1.0 + kDiskSlack) {
    throw InvalidArgument("driving function evaluated outside the closed unit disk");
  }
  if (!(t >= 0.0) || !(t < horizon_)) {
    throw InvalidArgument("driving function evaluated outside its time horizon");
  }
}

cplx DrivingFunction::eval(cplx z, double t) const {
  check_args(z, t);
  cplx v = 1.0;
  for (const auto& term : terms_) v += term.at(t) * std::pow(z, term.power);
  return v;
}

DrivingValue DrivingFunction::eval_derivs(cplx z, double t) const {
  check_args(z, t);
  DrivingValue out{1.0, 0.0, 0.0};
  for (const auto& term : terms_) {
    const cplx c = term.at(t);
    const int k = term.power;
    out.p += c * std::pow(z, k);
    out.dp += c * static_cast<double>(k) * std::pow(z, k - 1);
    if (k >= 2) out.d2p += c * static_cast<double>(k * (k - 1)) * std::pow(z, k - 2);
  }
  return out;
}

CaratheodoryMargin check_caratheodory(const DrivingFunction& p, std::span<const double> t_samples,
                                      std::size_t grid) {
  return margin_of(p.terms(), t_samples, grid);
}

CaratheodoryMargin check_caratheodory(std::span<const DrivingTerm> terms,
                                      std::span<const double> t_samples, std::size_t grid) {
  return margin_of(terms, t_samples, grid);
}

ExteriorDriving::ExteriorDriving(std::vector<DrivingTerm> terms) : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (term.power < 1) throw InvalidArgument("exterior driving: powers of 1/z must be >= 1");
  }
}

cplx ExteriorDriving::coefficient(int k, double t) const {
  if (k == 0) return 1.0;
  cplx c = 0.0;
  for (const auto& term : terms_) {
    if (term.power == k) c += term.at(t);
  }
  return c;
}

cplx ExteriorDriving::eval(cplx z, double t) const {
  if (std::abs(z) < 1.0 - kDiskSlack) {
    throw InvalidArgument("exterior driving evaluated inside the unit disk");
  }
  cplx v = 1.0;
  const cplx w = 1.0 / z;
  for (const auto& term : terms_) v += term.at(t) * std::pow(w, term.power);
  return v;
}

ExteriorDriving reflect_p_star(const DrivingFunction& p) {
  std::vector<DrivingTerm> q;
  q.reserve(p.terms().size());
  for (const auto& term : p.terms()) q.push_back({term.power, std::conj(term.at(0.0)), 0.0});
  return ExteriorDriving(std::move(q));
}

DrivingFunction reflect_q_star(const ExteriorDriving& q) {
  std::vector<DrivingTerm> p;
  p.reserve(q.terms().size());
  for (const auto& term : q.terms()) p.push_back({term.power, std::conj(term.at(0.0)), 0.0});
  return DrivingFunction(std::move(p));
}

cplx eval_p_star(const DrivingFunction& p, cplx z) { return std::conj(p.eval(std::conj(z), 0.0)); }

}  // namespace lkweld
