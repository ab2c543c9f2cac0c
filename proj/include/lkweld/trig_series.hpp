#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

namespace lkweld {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform grid angle theta_j = 2*pi*j/n.
inline double grid_angle(std::size_t j, std::size_t n) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(n);
}

// Throws InvalidArgument unless n is a power of two and n >= 16.
void require_grid_size(std::size_t n);

// Fourier representation of a 2*pi-periodic function sampled on the uniform
// grid theta_j = 2*pi*j/n. Coefficients are normalized so that
//   values_j = sum_{k=-n/2}^{n/2-1} c_k exp(i k theta_j),
//   c_k      = (1/n) sum_j values_j exp(-i k theta_j).
// Real series keep c_{-k} = conj(c_k) exactly.
class TrigSeries {
 public:
  TrigSeries() = default;

  static TrigSeries analyze(std::span<const cplx> samples);
  static TrigSeries analyze(std::span<const double> samples);

  // Coefficients given in index order k = -n/2, ..., n/2 - 1.
  static TrigSeries from_coefficients(std::span<const cplx> centered, bool real);

  // Samples fn(theta_j) on an n-point grid; fn may return double or cplx.
  template <class Fn>
  static TrigSeries sample(std::size_t n, Fn&& fn) {
    using R = std::invoke_result_t<Fn&, double>;
    if constexpr (std::is_convertible_v<R, double> && !std::is_same_v<R, cplx>) {
      std::vector<double> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = fn(grid_angle(j, n));
      return analyze(std::span<const double>(v));
    } else {
      std::vector<cplx> v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = fn(grid_angle(j, n));
      return analyze(std::span<const cplx>(v));
    }
  }

  std::size_t size() const { return coeffs_.size(); }
  bool is_real() const { return real_; }

  const std::vector<cplx>& values() const { return values_; }
  std::vector<double> real_values() const;

  // c_k for k in [-n/2, n/2). Out-of-band k returns 0.
  cplx coeff(int k) const;

  // Re-evaluates the grid values from the coefficients.
  std::vector<cplx> synthesize() const;

  // Trigonometric interpolant at an arbitrary angle. The Nyquist mode is
  // split symmetrically so the interpolant of real data is real.
  cplx operator()(double theta) const;
  double real_at(double theta) const { return (*this)(theta).real(); }

  // Spectral derivative; the Nyquist mode is dropped.
  TrigSeries derivative(int order = 1) const;

  // Multiplies c_k by m(k) for every k (Nyquist included).
  template <class Mult>
  TrigSeries apply_multiplier(Mult&& m, bool real_result) const {
    const int n = static_cast<int>(size());
    std::vector<cplx> centered(size());
    for (int k = -n / 2; k < n / 2; ++k) centered[k + n / 2] = m(k) * coeff(k);
    return from_coefficients(centered, real_result);
  }

  double mean() const { return coeff(0).real(); }
  double sup_norm() const;

  // max_{|k| >= n/4} |c_k| / max_k |c_k|; zero for the zero function.
  double tail_ratio() const;
  bool resolved() const;
  // Emits a resolution warning through lkweld::warn when !resolved().
  void check_resolution(std::string_view context) const;

 private:
  std::vector<cplx> values_;
  std::vector<cplx> coeffs_;  // FFT order: index k mod n
  bool real_ = false;
};

inline constexpr double kTailThreshold = 1e-10;

// Classical harmonic conjugate on the circle (Fourier multiplier -i sgn k):
// maps cos(k x) to sin(k x). Input must be real.
TrigSeries harmonic_conjugate(const TrigSeries& u);

// Schwarz integral (1/2pi) int u(psi) (e^{i psi}+z)/(e^{i psi}-z) dpsi evaluated
// spectrally as c_0 + 2 sum_{k>=1} c_k z^k, |z| <= 1.
cplx schwarz_integral(const TrigSeries& u, cplx z);

// h(x) = (1/2pi) PV int (u(psi)-u(x)) cot((psi-x)/2) dpsi on the grid.
// Fourier multiplier i sgn(k), the negative of harmonic_conjugate; the sign
// is pinned by pv_quadrature.
TrigSeries conjugate_pv(const TrigSeries& u);

// Direct trapezoid evaluation of the same principal-value integral at any x,
// with the removable-singularity value 2 u'(x) substituted at psi = x.
double pv_quadrature(const TrigSeries& u, double x);

}  // namespace lkweld
