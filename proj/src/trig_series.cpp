#include "lkweld/trig_series.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "lkweld/diagnostics.hpp"
#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

// FFTW planning is not thread-safe; execution of an existing plan on
// caller-provided arrays is.
fftw_plan cached_plan(std::size_t n, int sign) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;
  std::vector<cplx> scratch_in(n), scratch_out(n);
  fftw_plan plan = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(scratch_in.data()),
      reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.emplace(key, plan);
  return plan;
}

void transform(std::span<const cplx> in, std::span<cplx> out, int sign) {
  fftw_plan plan = cached_plan(in.size(), sign);
  // fftw never writes to the input of an out-of-place c2c transform.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

std::size_t wrap_index(int k, std::size_t n) {
  const int ni = static_cast<int>(n);
  return static_cast<std::size_t>(((k % ni) + ni) % ni);
}

}  // namespace

void require_grid_size(std::size_t n) {
  if (n < 16 || (n & (n - 1)) != 0) {
    throw InvalidArgument("grid size must be a power of two >= 16, got " + std::to_string(n));
  }
}

TrigSeries TrigSeries::analyze(std::span<const cplx> samples) {
  const std::size_t n = samples.size();
  require_grid_size(n);
  TrigSeries s;
  s.values_.assign(samples.begin(), samples.end());
  s.coeffs_.resize(n);
  transform(samples, s.coeffs_, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : s.coeffs_) c *= scale;
  s.real_ = false;
  return s;
}

TrigSeries TrigSeries::analyze(std::span<const double> samples) {
  std::vector<cplx> z(samples.begin(), samples.end());
  TrigSeries s = analyze(std::span<const cplx>(z));
  const std::size_t n = s.size();
  s.real_ = true;
  s.coeffs_[0] = s.coeffs_[0].real();
  s.coeffs_[n / 2] = s.coeffs_[n / 2].real();
  for (std::size_t k = 1; k < n / 2; ++k) {
    const cplx avg = 0.5 * (s.coeffs_[k] + std::conj(s.coeffs_[n - k]));
    s.coeffs_[k] = avg;
    s.coeffs_[n - k] = std::conj(avg);
  }
  return s;
}

TrigSeries TrigSeries::from_coefficients(std::span<const cplx> centered, bool real) {
  const std::size_t n = centered.size();
  require_grid_size(n);
  TrigSeries s;
  s.real_ = real;
  s.coeffs_.resize(n);
  const int half = static_cast<int>(n / 2);
  for (int k = -half; k < half; ++k) s.coeffs_[wrap_index(k, n)] = centered[k + half];
  if (real) {
    s.coeffs_[0] = s.coeffs_[0].real();
    s.coeffs_[n / 2] = s.coeffs_[n / 2].real();
    for (std::size_t k = 1; k < n / 2; ++k) {
      const cplx avg = 0.5 * (s.coeffs_[k] + std::conj(s.coeffs_[n - k]));
      s.coeffs_[k] = avg;
      s.coeffs_[n - k] = std::conj(avg);
    }
  }
  s.values_ = s.synthesize();
  if (real) {
    for (auto& v : s.values_) v = v.real();
  }
  return s;
}

std::vector<double> TrigSeries::real_values() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](cplx v) { return v.real(); });
  return out;
}

cplx TrigSeries::coeff(int k) const {
  const int n = static_cast<int>(size());
  if (k < -n / 2 || k >= n / 2) return 0.0;
  return coeffs_[wrap_index(k, size())];
}

std::vector<cplx> TrigSeries::synthesize() const {
  std::vector<cplx> out(size());
  transform(coeffs_, out, FFTW_BACKWARD);
  return out;
}

cplx TrigSeries::operator()(double theta) const {
  const int n = static_cast<int>(size());
  const int half = n / 2;
  const cplx z = std::polar(1.0, theta);
  const cplx zbar = std::conj(z);
  // Horner in z for k = 0..half-1 and in conj(z) for k = 1..half-1.
  cplx pos = 0.0;
  for (int k = half - 1; k >= 0; --k) pos = pos * z + coeffs_[static_cast<std::size_t>(k)];
  cplx neg = 0.0;
  for (int k = half - 1; k >= 1; --k) neg = (neg + coeffs_[static_cast<std::size_t>(n - k)]) * zbar;
  const cplx nyquist = coeffs_[static_cast<std::size_t>(half)] * std::cos(half * theta);
  const cplx v = pos + neg + nyquist;
  return real_ ? cplx(v.real(), 0.0) : v;
}

TrigSeries TrigSeries::derivative(int order) const {
  const int n = static_cast<int>(size());
  return apply_multiplier(
      [order, n](int k) -> cplx {
        if (k == -n / 2) return 0.0;
        return std::pow(cplx(0.0, static_cast<double>(k)), order);
      },
      real_);
}

double TrigSeries::sup_norm() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double TrigSeries::tail_ratio() const {
  const int n = static_cast<int>(size());
  double all = 0.0, tail = 0.0;
  for (int k = -n / 2; k < n / 2; ++k) {
    const double a = std::abs(coeff(k));
    all = std::max(all, a);
    if (std::abs(k) >= n / 4) tail = std::max(tail, a);
  }
  return all > 0.0 ? tail / all : 0.0;
}

bool TrigSeries::resolved() const { return tail_ratio() <= kTailThreshold; }

void TrigSeries::check_resolution(std::string_view context) const {
  if (resolved()) return;
  std::ostringstream msg;
  msg << context << ": series under-resolved on n=" << size()
      << " grid (tail ratio " << tail_ratio() << " > " << kTailThreshold << ")";
  warn(msg.str());
}

TrigSeries harmonic_conjugate(const TrigSeries& u) {
  if (!u.is_real()) throw InvalidArgument("harmonic_conjugate: input must be real");
  const int n = static_cast<int>(u.size());
  return u.apply_multiplier(
      [n](int k) -> cplx {
        if (k == 0 || k == -n / 2) return 0.0;
        return cplx(0.0, k > 0 ? -1.0 : 1.0);
      },
      true);
}

cplx schwarz_integral(const TrigSeries& u, cplx z) {
  if (!u.is_real()) throw InvalidArgument("schwarz_integral: density must be real");
  if (std::abs(z) > 1.0 + 1e-12) throw InvalidArgument("schwarz_integral: |z| > 1");
  const int half = static_cast<int>(u.size() / 2);
  cplx acc = 0.0;
  for (int k = half - 1; k >= 1; --k) acc = (acc + u.coeff(k)) * z;
  return u.coeff(0) + 2.0 * acc;
}

TrigSeries conjugate_pv(const TrigSeries& u) {
  if (!u.is_real()) throw InvalidArgument("conjugate_pv: input must be real");
  u.check_resolution("conjugate_pv");
  const int n = static_cast<int>(u.size());
  return u.apply_multiplier(
      [n](int k) -> cplx {
        if (k == 0 || k == -n / 2) return 0.0;
        return cplx(0.0, k > 0 ? 1.0 : -1.0);
      },
      true);
}

double pv_quadrature(const TrigSeries& u, double x) {
  if (!u.is_real()) throw InvalidArgument("pv_quadrature: input must be real");
  u.check_resolution("pv_quadrature");
  const std::size_t n = u.size();
  const double ux = u.real_at(x);
  const double dux = u.derivative().real_at(x);
  const auto vals = u.real_values();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = grid_angle(j, n) - x;
    const double wrapped = std::remainder(d, kTwoPi);
    if (std::abs(wrapped) < 1e-12) {
      sum += 2.0 * dux;
    } else {
      sum += (vals[j] - ux) / std::tan(0.5 * d);
    }
  }
  return sum / static_cast<double>(n);
}

}  // namespace lkweld
