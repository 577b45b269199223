#ifndef HARMONIC_CONV_OPERATOR_HPP
#define HARMONIC_CONV_OPERATOR_HPP

/**
 * @file conv_operator.hpp
 * @brief The convolution operator T_b(f) = f * b on a finite abelian group.
 *
 * T_b is diagonal in the character basis with eigenvalues F(b)(a), which
 * gives the sharp p = 2 constant ||F(b)||_{inf,A*}. The sharp p = 1
 * constant is ||b||_{1,A}. Interpolating the two gives
 *
 *   ||T_b||_{p->p} <= ||b||_1^{2/p - 1} ||F(b)||_inf^{2 - 2/p},  1 <= p <= 2,
 *
 * and the same constant at the conjugate exponent for p >= 2.
 */

#include <cmath>
#include <string>
#include <vector>

#include "harmonic/characters.hpp"
#include "harmonic/norms.hpp"
#include "harmonic/spectral.hpp"

namespace harmonic {

class ConvKernel {
 public:
  explicit ConvKernel(GroupFunction b)
      : b_(std::move(b)), l1_(group_norm(b_, Exponent::one())), fb_(fourier(b_)),
        fb_sup_(dual_pnorm(fb_, Exponent::infinity())) {}

  const GroupFunction& kernel() const noexcept { return b_; }
  const GroupSpec& owner() const noexcept { return b_.owner(); }
  /// ||b||_{1,A}
  double l1_norm() const noexcept { return l1_; }
  /// F(b)
  const DualFunction& transform() const noexcept { return fb_; }
  /// ||F(b)||_{inf,A*}
  double transform_sup() const noexcept { return fb_sup_; }

 private:
  GroupFunction b_;
  double l1_;
  DualFunction fb_;
  double fb_sup_;
};

/// T_b(f) = f * b.
inline GroupFunction conv_apply(const ConvKernel& k, const GroupFunction& f) { return convolve(f, k.kernel()); }

/// Interpolated constant for ||T_b||_{p->p}; p > 2 reuses the value at p'.
inline double bound_p(const ConvKernel& k, Exponent p) {
  double r = p.recip();
  if (r < 0.5) r = 1.0 - r;
  const double e1 = 2.0 * r - 1.0;  // weight on ||b||_1
  const double e2 = 2.0 - 2.0 * r;  // weight on ||F(b)||_inf
  const double a = e1 == 0.0 ? 1.0 : std::pow(k.l1_norm(), e1);
  const double b = e2 == 0.0 ? 1.0 : std::pow(k.transform_sup(), e2);
  return a * b;
}

/// Kernel x -> b(-x).
inline ConvKernel reflect(const ConvKernel& k) { return ConvKernel(reflect(k.kernel())); }

struct DualityReport {
  complex lhs;                   ///< (1/n) sum_x T_b(f1)(x) f2(x)
  complex rhs;                   ///< (1/n) sum_y f1(y) T_{b~}(f2)(y)
  double pairing_error = 0.0;    ///< |lhs - rhs|
  double pairing_scale = 0.0;    ///< ||b||_1 ||f1||_2 ||f2||_2
  double reflection_error = 0.0; ///< max_x |T_{b~}(f1)(-x) - T_b(f1~)(x)|
  double reflection_scale = 0.0; ///< ||b||_1 ||f1||_inf
  bool ok = false;
};

inline constexpr double kDualityTolerance = 1e-9;

inline DualityReport duality_pairing_check(const ConvKernel& k, const GroupFunction& f1, const GroupFunction& f2) {
  require_same_owner(f1, k.kernel());
  require_same_owner(f2, k.kernel());
  const auto& g = k.owner();
  const double inv_n = 1.0 / static_cast<double>(g.size());
  const auto kr = reflect(k);

  DualityReport r;
  const auto tb_f1 = conv_apply(k, f1);
  const auto tbr_f2 = conv_apply(kr, f2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    r.lhs += tb_f1[i] * f2[i];
    r.rhs += f1[i] * tbr_f2[i];
  }
  r.lhs *= inv_n;
  r.rhs *= inv_n;
  r.pairing_error = std::abs(r.lhs - r.rhs);
  r.pairing_scale = k.l1_norm() * group_norm(f1, Exponent::two()) * group_norm(f2, Exponent::two());

  const auto left = conv_apply(kr, f1);
  const auto right = conv_apply(k, reflect(f1));
  for (std::size_t i = 0; i < g.size(); ++i)
    r.reflection_error = std::max(r.reflection_error, std::abs(left[neg_index(g, i)] - right[i]));
  r.reflection_scale = k.l1_norm() * group_norm(f1, Exponent::infinity());

  auto within = [](double err, double scale) { return err <= kDualityTolerance * scale + 1e-12; };
  r.ok = within(r.pairing_error, r.pairing_scale) && within(r.reflection_error, r.reflection_scale);
  return r;
}

struct SharpnessWitness {
  GroupFunction f;
  double ratio = 0.0;  ///< ||T_b f||_p / ||f||_p
};

/// p = 1: f = delta_0. p = 2: the character at the first dual index where
/// |F(b)| is maximal.
inline SharpnessWitness sharpness_witness(const ConvKernel& k, Exponent p) {
  const auto& g = k.owner();
  if (p.recip() == 1.0) {
    auto f = delta0(g);
    const double ratio = group_norm(conv_apply(k, f), p) / group_norm(f, p);
    return {std::move(f), ratio};
  }
  if (p.recip() == 0.5) {
    const auto& fb = k.transform();
    std::size_t best = 0;
    for (std::size_t i = 1; i < fb.size(); ++i)
      if (std::abs(fb[i]) > std::abs(fb[best])) best = i;
    auto f = character(g, element_at<dual_tag>(g, best));
    const double ratio = group_norm(conv_apply(k, f), p) / group_norm(f, p);
    return {std::move(f), ratio};
  }
  throw DomainError("sharpness_witness is defined for p = 1 and p = 2 only");
}

}  // namespace harmonic

#endif  // HARMONIC_CONV_OPERATOR_HPP
