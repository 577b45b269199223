#ifndef HARMONIC_NORMS_HPP
#define HARMONIC_NORMS_HPP

/**
 * @file norms.hpp
 * @brief Lebesgue exponents, p-norms and the elementary norm inequalities.
 *
 * Exponents are stored by their reciprocal 1/p in [0, 1], so p = infinity is
 * an ordinary value (0) and conjugation / convex combination are affine.
 *
 * Norms on functions use two normalizations:
 *   ||f||_{p,A}  = ((1/n) sum_x |f(x)|^p)^{1/p}
 *   ||h||_{p,A*} = (sum_a |h(a)|^p)^{1/p}
 * with the maximum modulus at p = infinity in both cases.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/function.hpp"

namespace harmonic {

class Exponent {
 public:
  /// p = 1.
  constexpr Exponent() = default;

  static Exponent from_recip(double recip) {
    if (!(recip >= 0.0 && recip <= 1.0)) throw DomainError("exponent reciprocal must lie in [0, 1]");
    Exponent e;
    e.recip_ = recip;
    return e;
  }
  /// Accepts p in [1, inf], including +infinity.
  static Exponent from_p(double p) {
    if (std::isnan(p) || p < 1.0) throw DomainError("exponent p must satisfy p >= 1");
    return from_recip(std::isinf(p) ? 0.0 : 1.0 / p);
  }
  static Exponent one() { return from_recip(1.0); }
  static Exponent two() { return from_recip(0.5); }
  static Exponent infinity() { return from_recip(0.0); }

  double recip() const noexcept { return recip_; }
  double p() const noexcept { return recip_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / recip_; }
  bool is_infinite() const noexcept { return recip_ == 0.0; }

  friend bool operator==(Exponent, Exponent) = default;

 private:
  double recip_ = 1.0;
};

/// 1/p + 1/p' = 1.
inline Exponent conjugate_exponent(Exponent p) { return Exponent::from_recip(1.0 - p.recip()); }

/// Exponent q with 1/q = 1/p + 1/r - 1, for the convolution inequality.
inline Exponent young_exponent(Exponent p, Exponent r) {
  const double s = p.recip() + r.recip() - 1.0;
  if (s < 0.0) throw DomainError("young_exponent needs 1/p + 1/r >= 1");
  return Exponent::from_recip(s);
}

using ComplexTuple = std::vector<complex>;

namespace detail {

/// (weight * sum |v_j|^p)^{1/p}, or max |v_j| when p is infinite. Values
/// are scaled by the largest modulus before powering.
inline double weighted_pnorm(std::span<const complex> v, Exponent p, double weight) {
  double top = 0.0;
  for (const auto& z : v) top = std::max(top, std::abs(z));
  if (p.is_infinite() || top == 0.0) return top;
  const double pp = p.p();
  double sum = 0.0;
  for (const auto& z : v) {
    const double a = std::abs(z);
    if (a == 0.0) continue;
    const double r = a / top;
    sum += pp == 1.0 ? r : pp == 2.0 ? r * r : std::exp(pp * std::log(r));
  }
  if (pp == 1.0) return top * weight * sum;
  if (pp == 2.0) return top * std::sqrt(weight * sum);
  return top * std::exp(p.recip() * std::log(weight * sum));
}

}  // namespace detail

inline double vec_norm(std::span<const complex> v, Exponent p) { return detail::weighted_pnorm(v, p, 1.0); }

inline double group_norm(const GroupFunction& f, Exponent p) {
  return detail::weighted_pnorm(f.values(), p, 1.0 / static_cast<double>(f.size()));
}

inline double dual_pnorm(const DualFunction& h, Exponent p) { return detail::weighted_pnorm(h.values(), p, 1.0); }

/// One side-by-side comparison lhs <= rhs. slack = rhs - lhs.
struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;

  double slack() const { return rhs - lhs; }
  /// Relative excess of lhs over rhs; <= 0 when the inequality holds.
  double excess() const {
    if (lhs <= rhs) return rhs == 0.0 ? 0.0 : (lhs - rhs) / rhs;
    return rhs == 0.0 ? std::numeric_limits<double>::infinity() : (lhs - rhs) / rhs;
  }
  bool holds(double rel_tol) const { return lhs <= rhs * (1.0 + rel_tol); }
};

struct HolderReport {
  double lhs = 0.0;  ///< |sum v_j w_j|
  double rhs = 0.0;  ///< ||v||_p ||w||_{p'}
  bool ok = false;

  double slack() const { return rhs - lhs; }
};

inline HolderReport holder_check(std::span<const complex> v, std::span<const complex> w, Exponent p) {
  if (v.size() != w.size()) throw DomainError("holder_check needs tuples of equal length");
  complex pairing{0.0, 0.0};
  for (std::size_t j = 0; j < v.size(); ++j) pairing += v[j] * w[j];
  HolderReport r;
  r.lhs = std::abs(pairing);
  r.rhs = vec_norm(v, p) * vec_norm(w, conjugate_exponent(p));
  r.ok = r.lhs <= r.rhs * (1.0 + 1e-12);
  return r;
}

/// w with ||w||_{p'} = 1 and sum v_j w_j = ||v||_p.
///
/// Tie-breaking: at p = 1 zeros of v get weight 1; at p = infinity the mass
/// sits on the first index of maximal modulus.
inline ComplexTuple holder_witness(std::span<const complex> v, Exponent p) {
  const std::size_t m = v.size();
  if (m == 0) throw DomainError("holder_witness needs a nonempty tuple");
  ComplexTuple w(m);
  auto phase = [](complex z) { return z == complex{} ? complex{1.0, 0.0} : std::conj(z) / std::abs(z); };
  if (p.recip() == 1.0) {
    for (std::size_t j = 0; j < m; ++j) w[j] = phase(v[j]);
    return w;
  }
  if (p.is_infinite()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < m; ++j)
      if (std::abs(v[j]) > std::abs(v[best])) best = j;
    w[best] = phase(v[best]);
    return w;
  }
  const double norm = vec_norm(v, p);
  if (norm == 0.0) throw DomainError("holder_witness: zero tuple has no normalized witness for 1 < p < inf");
  const double power = p.p() - 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double a = std::abs(v[j]);
    if (a == 0.0) continue;
    w[j] = phase(v[j]) * std::exp(power * std::log(a / norm));
  }
  return w;
}

namespace detail {

inline void require_ordered(Exponent p, Exponent q) {
  if (p.recip() < q.recip()) throw DomainError("norm comparison needs p <= q");
}

inline double comparison_factor(double count, Exponent p, Exponent q) {
  return std::pow(count, p.recip() - q.recip());
}

}  // namespace detail

/// ||v||_q <= ||v||_p <= m^{1/p - 1/q} ||v||_q for p <= q.
inline std::vector<Inequality> norm_comparison_report(std::span<const complex> v, Exponent p, Exponent q) {
  detail::require_ordered(p, q);
  const double np = vec_norm(v, p);
  const double nq = vec_norm(v, q);
  const double c = detail::comparison_factor(static_cast<double>(v.size()), p, q);
  return {{"tuple: ||v||_q <= ||v||_p", nq, np}, {"tuple: ||v||_p <= m^(1/p-1/q) ||v||_q", np, c * nq}};
}

/// ||f||_{p,A} <= ||f||_{q,A} <= n^{1/p - 1/q} ||f||_{p,A} for p <= q.
inline std::vector<Inequality> norm_comparison_report(const GroupFunction& f, Exponent p, Exponent q) {
  detail::require_ordered(p, q);
  const double np = group_norm(f, p);
  const double nq = group_norm(f, q);
  const double c = detail::comparison_factor(static_cast<double>(f.size()), p, q);
  return {{"group: ||f||_p <= ||f||_q", np, nq}, {"group: ||f||_q <= n^(1/p-1/q) ||f||_p", nq, c * np}};
}

/// ||h||_{q,A*} <= ||h||_{p,A*} <= n^{1/p - 1/q} ||h||_{q,A*} for p <= q.
inline std::vector<Inequality> norm_comparison_report(const DualFunction& h, Exponent p, Exponent q) {
  detail::require_ordered(p, q);
  const double np = dual_pnorm(h, p);
  const double nq = dual_pnorm(h, q);
  const double c = detail::comparison_factor(static_cast<double>(h.size()), p, q);
  return {{"dual: ||h||_q <= ||h||_p", nq, np}, {"dual: ||h||_p <= n^(1/p-1/q) ||h||_q", np, c * nq}};
}

}  // namespace harmonic

#endif  // HARMONIC_NORMS_HPP
