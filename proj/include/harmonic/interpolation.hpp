#ifndef HARMONIC_INTERPOLATION_HPP
#define HARMONIC_INTERPOLATION_HPP

/**
 * @file interpolation.hpp
 * @brief Operator norms of square complex matrices, the Riesz-Thorin bound,
 *        the Thorin analytic family and a numerical three lines check.
 *
 * Exact operator norms are only available in closed form for the endpoint
 * pairs p = 1 (column norms), q = infinity (row norms) and p = q = 2 (largest
 * singular value). Every other (p, q) gets a lower bound from
 * op_norm_lower, which is what the interpolation checks compare against the
 * exact endpoint constants.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/norms.hpp"
#include "harmonic/random.hpp"

namespace harmonic {

/// Dense m x m complex matrix, row-major.
class LinearMap {
 public:
  LinearMap(std::size_t m, std::vector<complex> entries) : m_(m), a_(std::move(entries)) {
    if (m_ == 0) throw DomainError("linear map needs dimension >= 1");
    if (a_.size() != m_ * m_) throw DomainError("linear map needs m*m entries");
    for (const auto& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("linear map entries must be finite");
  }

  static LinearMap identity(std::size_t m) {
    std::vector<complex> a(m * m);
    for (std::size_t i = 0; i < m; ++i) a[i * m + i] = 1.0;
    return LinearMap(m, std::move(a));
  }

  std::size_t dim() const noexcept { return m_; }
  complex operator()(std::size_t row, std::size_t col) const { return a_[row * m_ + col]; }
  std::span<const complex> entries() const noexcept { return a_; }
  std::span<const complex> row(std::size_t i) const { return std::span(a_).subspan(i * m_, m_); }

  ComplexTuple column(std::size_t j) const {
    ComplexTuple c(m_);
    for (std::size_t i = 0; i < m_; ++i) c[i] = a_[i * m_ + j];
    return c;
  }

  /// T v.
  ComplexTuple apply(std::span<const complex> v) const {
    check_arity(v);
    ComplexTuple out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      complex s{};
      for (std::size_t j = 0; j < m_; ++j) s += a_[i * m_ + j] * v[j];
      out[i] = s;
    }
    return out;
  }

  /// T^t w, the map with sum_i (Tv)_i w_i = sum_j v_j (T^t w)_j.
  ComplexTuple apply_transpose(std::span<const complex> w) const {
    check_arity(w);
    ComplexTuple out(m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out[j] += a_[i * m_ + j] * w[i];
    return out;
  }

  /// T^* w (conjugate transpose).
  ComplexTuple apply_adjoint(std::span<const complex> w) const {
    check_arity(w);
    ComplexTuple out(m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out[j] += std::conj(a_[i * m_ + j]) * w[i];
    return out;
  }

 private:
  void check_arity(std::span<const complex> v) const {
    if (v.size() != m_) throw DomainError("tuple length does not match map dimension");
  }

  std::size_t m_;
  std::vector<complex> a_;
};

/// 1/p_t = (1 - t)/p0 + t/p1.
inline Exponent intermediate_exponent(Exponent p0, Exponent p1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("interpolation parameter t must lie in [0, 1]");
  if (t == 0.0) return p0;
  if (t == 1.0) return p1;
  return Exponent::from_recip((1.0 - t) * p0.recip() + t * p1.recip());
}

struct InterpSetting {
  Exponent p0, p1, q0, q1;
  double L0 = 0.0;
  double L1 = 0.0;
  double t = 0.5;

  Exponent pt() const { return intermediate_exponent(p0, p1, t); }
  Exponent qt() const { return intermediate_exponent(q0, q1, t); }
};

/// L0^{1-t} L1^t, with a zero constant winning whenever its weight is positive.
inline double riesz_thorin_bound(const InterpSetting& s) {
  if (!(s.t >= 0.0 && s.t <= 1.0)) throw DomainError("interpolation parameter t must lie in [0, 1]");
  if (s.L0 < 0.0 || s.L1 < 0.0) throw DomainError("endpoint constants must be nonnegative");
  if ((s.L0 == 0.0 && s.t < 1.0) || (s.L1 == 0.0 && s.t > 0.0)) return 0.0;
  return std::pow(s.L0, 1.0 - s.t) * std::pow(s.L1, s.t);
}

/// True for the (p, q) pairs op_norm_exact handles.
inline bool has_exact_norm(Exponent p, Exponent q) {
  return p.recip() == 1.0 || q.is_infinite() || (p.recip() == 0.5 && q.recip() == 0.5);
}

namespace detail {

inline constexpr double kPowerTolerance = 1e-10;
inline constexpr int kPowerIterationCap = 10000;

/// Largest singular value by power iteration on T^* T.
inline double spectral_norm(const LinearMap& T) {
  const std::size_t m = T.dim();
  std::mt19937_64 rng(0x5eedu);
  ComplexTuple v(m);
  for (auto& z : v) z = complex{1.0 + 1e-3 * uniform(rng), 1e-3 * uniform(rng)};
  auto normalize = [](ComplexTuple& x) {
    const double n = vec_norm(x, Exponent::two());
    if (n > 0.0)
      for (auto& z : x) z /= n;
    return n;
  };
  normalize(v);
  double residual = 0.0;
  for (int it = 0; it < kPowerIterationCap; ++it) {
    const auto w = T.apply(v);
    auto u = T.apply_adjoint(w);
    // Rayleigh quotient of T^* T at unit v
    double lambda = 0.0;
    for (std::size_t j = 0; j < m; ++j) lambda += (std::conj(v[j]) * u[j]).real();
    double r2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) r2 += std::norm(u[j] - lambda * v[j]);
    residual = std::sqrt(r2) / std::max(lambda, std::numeric_limits<double>::min());
    if (residual <= kPowerTolerance) return std::sqrt(lambda);
    if (normalize(u) == 0.0) return 0.0;
    v = std::move(u);
  }
  throw ConvergenceError("power iteration did not converge", residual);
}

}  // namespace detail

/// Closed-form norm of T from l^p to l^q on the supported endpoint pairs.
inline double op_norm_exact(const LinearMap& T, Exponent p, Exponent q) {
  const std::size_t m = T.dim();
  if (p.recip() == 1.0) {
    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j) best = std::max(best, vec_norm(T.column(j), q));
    return best;
  }
  if (q.is_infinite()) {
    const auto dual = conjugate_exponent(p);
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) best = std::max(best, vec_norm(T.row(i), dual));
    return best;
  }
  if (p.recip() == 0.5 && q.recip() == 0.5) return detail::spectral_norm(T);
  throw DomainError("op_norm_exact supports p = 1, q = inf, or p = q = 2");
}

/// Number of Holder ascent steps taken from every starting tuple.
inline constexpr int kAscentSteps = 50;

/// Lower bound on ||T||_{p->q}: the largest ||T v||_q over unit-p-norm
/// tuples visited from coordinate tuples and `trials` seeded random
/// directions, each refined by Holder-witness ascent. Every visited tuple is
/// renormalized, so the result never exceeds the true norm beyond rounding.
inline double op_norm_lower(const LinearMap& T, Exponent p, Exponent q, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("op_norm_lower needs trials >= 1");
  const std::size_t m = T.dim();
  const auto p_dual = conjugate_exponent(p);
  double best = 0.0;

  auto value = [&](ComplexTuple& v) -> double {
    const double n = vec_norm(v, p);
    if (n == 0.0) return -1.0;
    for (auto& z : v) z /= n;
    const double r = vec_norm(T.apply(v), q);
    best = std::max(best, r);
    return r;
  };

  auto ascend = [&](ComplexTuple v) {
    if (value(v) < 0.0) return;
    for (int step = 0; step < kAscentSteps; ++step) {
      const auto u = T.apply(v);
      if (vec_norm(u, Exponent::infinity()) == 0.0) return;
      const auto w = holder_witness(u, q);  // ||w||_{q'} = 1, <Tv, w> = ||Tv||_q
      const auto s = T.apply_transpose(w);
      if (vec_norm(s, Exponent::infinity()) == 0.0) return;
      v = holder_witness(s, p_dual);  // ||v||_p = 1, <v, T^t w> = ||T^t w||_{p'}
      if (value(v) < 0.0) return;
    }
  };

  for (std::size_t k = 0; k < m; ++k) {
    ComplexTuple e(m);
    e[k] = 1.0;
    ascend(std::move(e));
  }
  for (int trial = 0; trial < trials; ++trial) {
    auto rng = stream(seed, "op_norm_lower", static_cast<std::uint64_t>(trial));
    ComplexTuple v(m);
    for (auto& z : v) z = complex{uniform(rng), uniform(rng)};
    ascend(std::move(v));
  }
  return best;
}

struct ThorinCoefficients {
  double a0 = 0.0;
  double a1 = 0.0;
};

/// Solves (1/p_t)(a0 x + a1 + 1) = 1/p_x for all x: a1 = p_t/p0 - 1 and
/// a0 = p_t (1/p1 - 1/p0). Both vanish when p_t is infinite.
inline ThorinCoefficients thorin_coefficients(Exponent p0, Exponent p1, double t) {
  const double rt = intermediate_exponent(p0, p1, t).recip();
  if (rt == 0.0) return {};
  return {(p1.recip() - p0.recip()) / rt, p0.recip() / rt - 1.0};
}

/// alpha_j(z) = v_j |v_j|^{a0 z + a1} (zero where v_j = 0).
///
/// alpha(t) = v, and ||alpha(x + iy)||_{p_x} = ||v||_{p_t}^{p_t/p_x} on the
/// closed strip, which is 1 for v normalized in p_t.
inline ComplexTuple thorin_family(std::span<const complex> v, Exponent p0, Exponent p1, double t, complex z) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("thorin_family needs 0 < t < 1");
  if (!(z.real() >= 0.0 && z.real() <= 1.0)) throw DomainError("thorin_family needs 0 <= Re z <= 1");
  const auto c = thorin_coefficients(p0, p1, t);
  ComplexTuple out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double a = std::abs(v[j]);
    if (a == 0.0) continue;
    out[j] = v[j] * std::exp((c.a0 * z + c.a1) * std::log(a));
  }
  return out;
}

struct RieszThorinPoint {
  double t = 0.0;
  Exponent pt, qt;
  double lower = 0.0;  ///< op_norm_lower(T, p_t, q_t)
  double bound = 0.0;  ///< L0^{1-t} L1^t
  double ratio() const { return bound == 0.0 ? (lower == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()) : lower / bound; }
};

struct RieszThorinReport {
  double L0 = 0.0;
  double L1 = 0.0;
  std::vector<RieszThorinPoint> points;
  double worst_ratio = 0.0;
  bool ok = true;
};

/// Relative slack allowed between the sampled lower bound and L_t.
inline constexpr double kRieszThorinTolerance = 1e-6;

/// Instantiates L0, L1 as exact endpoint norms and checks that the sampled
/// lower bound at every grid point stays below L0^{1-t} L1^t.
inline RieszThorinReport riesz_thorin_verify(const LinearMap& T, Exponent p0, Exponent q0, Exponent p1, Exponent q1,
                                             std::span<const double> t_grid, int trials, std::uint64_t seed) {
  if (!has_exact_norm(p0, q0) || !has_exact_norm(p1, q1))
    throw DomainError("riesz_thorin_verify needs endpoints with closed-form norms");
  RieszThorinReport r;
  r.L0 = op_norm_exact(T, p0, q0);
  r.L1 = op_norm_exact(T, p1, q1);
  for (double t : t_grid) {
    InterpSetting s{p0, p1, q0, q1, r.L0, r.L1, t};
    RieszThorinPoint pt;
    pt.t = t;
    pt.pt = s.pt();
    pt.qt = s.qt();
    pt.lower = op_norm_lower(T, pt.pt, pt.qt, trials, seed);
    pt.bound = riesz_thorin_bound(s);
    r.worst_ratio = std::max(r.worst_ratio, pt.ratio());
    if (pt.lower > pt.bound * (1.0 + kRieszThorinTolerance)) r.ok = false;
    r.points.push_back(pt);
  }
  return r;
}

/// f(z) = sum_k c_k exp(multiple_k * omega * z). Integer multiples of the base
/// rate make |f(x + iy)| periodic in y with period 2 pi / omega.
class ExpSum {
 public:
  struct Term {
    complex c;
    std::int64_t multiple = 0;
  };

  ExpSum(double omega, std::vector<Term> terms) : omega_(omega), terms_(std::move(terms)) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("ExpSum base rate must be positive");
  }

  double omega() const noexcept { return omega_; }
  double period() const noexcept { return 2.0 * std::numbers::pi / omega_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  complex operator()(complex z) const {
    complex s{};
    for (const auto& term : terms_) s += term.c * std::exp(static_cast<double>(term.multiple) * omega_ * z);
    return s;
  }

 private:
  double omega_;
  std::vector<Term> terms_;
};

/// max |f(x + iy)| over `samples` equispaced y in one period.
inline double strip_max(const ExpSum& f, double x, int samples) {
  if (samples < 2) throw DomainError("strip_max needs at least 2 samples");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("strip_max needs 0 <= x <= 1");
  const double h = f.period() / samples;
  double best = 0.0;
  for (int k = 0; k < samples; ++k) best = std::max(best, std::abs(f(complex{x, k * h})));
  return best;
}

struct ThreeLinesPoint {
  double t = 0.0;
  double Mt = 0.0;
  double bound = 0.0;  ///< M0^{1-t} M1^t
  double ratio() const { return bound == 0.0 ? (Mt == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()) : Mt / bound; }
};

struct ThreeLinesReport {
  double M0 = 0.0;
  double M1 = 0.0;
  std::vector<ThreeLinesPoint> points;
  double worst_ratio = 0.0;
  bool ok = true;
};

inline constexpr double kThreeLinesTolerance = 1e-6;

inline ThreeLinesReport three_lines_check(const ExpSum& f, std::span<const double> t_grid, int samples) {
  ThreeLinesReport r;
  r.M0 = strip_max(f, 0.0, samples);
  r.M1 = strip_max(f, 1.0, samples);
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("three_lines_check needs grid points in (0, 1)");
    ThreeLinesPoint pt;
    pt.t = t;
    pt.Mt = strip_max(f, t, samples);
    pt.bound = std::pow(r.M0, 1.0 - t) * std::pow(r.M1, t);
    r.worst_ratio = std::max(r.worst_ratio, pt.ratio());
    if (pt.Mt > pt.bound * (1.0 + kThreeLinesTolerance)) r.ok = false;
    r.points.push_back(pt);
  }
  return r;
}

/// Sampled view of the scalar function
///   F(z) = sum_j (T alpha(z))_j beta_j(z)
/// where alpha follows (p0, p1) from v and beta follows (q0', q1') from w.
struct ThorinPipelineReport {
  double Ft = 0.0;              ///< |F(t)| = |<T v, w>|
  double boundary_max = 0.0;    ///< max sampled |F| on Re z = 0 and Re z = 1
  double M0 = 0.0, M1 = 0.0;    ///< sampled boundary maxima
  double L0 = 0.0, L1 = 0.0;    ///< exact endpoint norms
  double Lt = 0.0;              ///< L0^{1-t} L1^t
  double norm_deviation = 0.0;  ///< max | ||alpha||_{p_x} - 1 |, | ||beta||_{q_x'} - 1 | on the grid
  bool ok = true;
};

/// v must have unit p_t norm and w unit q_t' norm. Samples y on [-y_max, y_max].
inline ThorinPipelineReport thorin_pipeline_check(const LinearMap& T, std::span<const complex> v,
                                                  std::span<const complex> w, Exponent p0, Exponent q0, Exponent p1,
                                                  Exponent q1, double t, double y_max, int y_samples,
                                                  int x_samples = 5) {
  if (y_samples < 2 || x_samples < 2) throw DomainError("thorin_pipeline_check needs at least 2 samples per axis");
  const auto qd0 = conjugate_exponent(q0);
  const auto qd1 = conjugate_exponent(q1);
  auto F = [&](complex z) {
    const auto alpha = thorin_family(v, p0, p1, t, z);
    const auto beta = thorin_family(w, qd0, qd1, t, z);
    const auto ta = T.apply(alpha);
    complex s{};
    for (std::size_t j = 0; j < ta.size(); ++j) s += ta[j] * beta[j];
    return s;
  };

  ThorinPipelineReport r;
  r.Ft = std::abs(F(complex{t, 0.0}));
  r.L0 = op_norm_exact(T, p0, q0);
  r.L1 = op_norm_exact(T, p1, q1);
  r.Lt = riesz_thorin_bound({p0, p1, q0, q1, r.L0, r.L1, t});
  for (int k = 0; k < y_samples; ++k) {
    const double y = -y_max + 2.0 * y_max * k / (y_samples - 1);
    r.M0 = std::max(r.M0, std::abs(F(complex{0.0, y})));
    r.M1 = std::max(r.M1, std::abs(F(complex{1.0, y})));
    for (int i = 0; i < x_samples; ++i) {
      const double x = static_cast<double>(i) / (x_samples - 1);
      const complex z{x, y};
      const auto px = intermediate_exponent(p0, p1, x);
      const auto qdx = intermediate_exponent(qd0, qd1, x);
      r.norm_deviation = std::max(r.norm_deviation, std::abs(vec_norm(thorin_family(v, p0, p1, t, z), px) - 1.0));
      r.norm_deviation = std::max(r.norm_deviation, std::abs(vec_norm(thorin_family(w, qd0, qd1, t, z), qdx) - 1.0));
    }
  }
  r.boundary_max = std::max(r.M0, r.M1);
  r.ok = r.Ft <= r.boundary_max * (1.0 + kRieszThorinTolerance) && r.Ft <= r.Lt * (1.0 + 1e-9) &&
         r.M0 <= r.L0 * (1.0 + 1e-9) && r.M1 <= r.L1 * (1.0 + 1e-9) && r.norm_deviation <= 1e-9;
  return r;
}

}  // namespace harmonic

#endif  // HARMONIC_INTERPOLATION_HPP
