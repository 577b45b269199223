#ifndef HARMONIC_SPECTRAL_HPP
#define HARMONIC_SPECTRAL_HPP

/**
 * @file spectral.hpp
 * @brief Inner products, Fourier transform, inversion and convolution on A.
 *
 * Normalizations:
 *   <f1, f2>_A   = (1/n) sum_x f1(x) conj(f2(x))
 *   <h1, h2>_A*  =       sum_a h1(a) conj(h2(a))
 *   F(f)(a)      = <f, chi_a>_A
 *   F^{-1}(h)(x) = sum_a h(a) chi_a(x)
 *   (f1 * f2)(x) = (1/n) sum_y f1(y) f2(x - y)
 *
 * With these choices F is unitary and F(f1 * f2) = F(f1) F(f2).
 */

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include "harmonic/characters.hpp"
#include "harmonic/function.hpp"
#include "harmonic/group.hpp"

namespace harmonic {

inline complex inner_product(const GroupFunction& f1, const GroupFunction& f2) {
  require_same_owner(f1, f2);
  complex s{0.0, 0.0};
  for (std::size_t i = 0; i < f1.size(); ++i) s += f1[i] * std::conj(f2[i]);
  return s / static_cast<double>(f1.size());
}

inline complex inner_product(const DualFunction& h1, const DualFunction& h2) {
  require_same_owner(h1, h2);
  complex s{0.0, 0.0};
  for (std::size_t i = 0; i < h1.size(); ++i) s += h1[i] * std::conj(h2[i]);
  return s;
}

namespace detail {

/// Sum over x of values[x] * chi_a(x)^sign for every a, by direct summation.
/// O(n^2 k); the reference every faster path is checked against.
inline std::vector<complex> naive_character_sums(const GroupSpec& g, std::span<const complex> values,
                                                 int sign) {
  const std::size_t n = g.size();
  const std::size_t k = g.rank();
  std::vector<complex> out(n);
  std::vector<std::uint64_t> a(k, 0), x(k, 0), phase(k, 0);
  for (std::size_t ia = 0; ia < n; ++ia) {
    std::fill(x.begin(), x.end(), 0);
    std::fill(phase.begin(), phase.end(), 0);
    complex acc{0.0, 0.0};
    for (std::size_t ix = 0; ix < n; ++ix) {
      complex chi{1.0, 0.0};
      for (std::size_t j = 0; j < k; ++j)
        if (phase[j] != 0) chi *= g.root(j, phase[j]);
      acc += values[ix] * (sign < 0 ? std::conj(chi) : chi);
      // odometer over x; phase_j tracks a_j x_j mod m_j
      for (std::size_t j = 0; j < k; ++j) {
        const auto m = g.order(j);
        if (++x[j] < m) {
          phase[j] = phase[j] >= m - a[j] ? phase[j] - (m - a[j]) : phase[j] + a[j];
          break;
        }
        x[j] = 0;
        phase[j] = 0;
      }
    }
    out[ia] = acc;
    for (std::size_t j = 0; j < k; ++j) {
      if (++a[j] < g.order(j)) break;
      a[j] = 0;
    }
  }
  return out;
}

/// In-place length-m DFT along one axis: out[a] = sum_x in[x] w^{sign a x},
/// w = exp(2 pi i / m).
class AxisTransform {
 public:
  AxisTransform(const GroupSpec& g, std::size_t axis, int sign)
      : g_(g), axis_(axis), m_(g.order(axis)), sign_(sign), pow2_(std::has_single_bit(m_)) {
    if (m_ > kRootTableLimit) throw DomainError("cyclic factor too large for the fast transform");
    if (pow2_) {
      rev_.resize(m_);
      const int bits = std::countr_zero(m_);
      for (std::uint64_t i = 0; i < m_; ++i) {
        std::uint64_t r = 0;
        for (int b = 0; b < bits; ++b)
          if (i & (std::uint64_t{1} << b)) r |= std::uint64_t{1} << (bits - 1 - b);
        rev_[i] = r;
      }
    }
  }

  void operator()(std::vector<complex>& line) const { pow2_ ? radix2(line) : direct(line); }

 private:
  complex w(std::uint64_t r) const {
    const auto z = g_.root(axis_, r);
    return sign_ < 0 ? std::conj(z) : z;
  }

  void direct(std::vector<complex>& line) const {
    std::vector<complex> out(m_);
    for (std::uint64_t a = 0; a < m_; ++a) {
      complex acc{0.0, 0.0};
      std::uint64_t r = 0;
      for (std::uint64_t x = 0; x < m_; ++x) {
        acc += line[x] * w(r);
        r += a;
        if (r >= m_) r -= m_;
      }
      out[a] = acc;
    }
    line.swap(out);
  }

  void radix2(std::vector<complex>& line) const {
    for (std::uint64_t i = 0; i < m_; ++i)
      if (i < rev_[i]) std::swap(line[i], line[rev_[i]]);
    for (std::uint64_t len = 2; len <= m_; len <<= 1) {
      const std::uint64_t step = m_ / len;
      const std::uint64_t half = len / 2;
      for (std::uint64_t start = 0; start < m_; start += len) {
        for (std::uint64_t k = 0; k < half; ++k) {
          const complex t = w(k * step) * line[start + k + half];
          const complex u = line[start + k];
          line[start + k] = u + t;
          line[start + k + half] = u - t;
        }
      }
    }
  }

  const GroupSpec& g_;
  std::size_t axis_;
  std::uint64_t m_;
  int sign_;
  bool pow2_;
  std::vector<std::uint64_t> rev_;
};

/// Same sums as naive_character_sums, one cyclic axis at a time.
inline std::vector<complex> fast_character_sums(const GroupSpec& g, std::span<const complex> values,
                                                int sign) {
  std::vector<complex> data(values.begin(), values.end());
  const std::size_t n = g.size();
  std::vector<complex> line;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto m = static_cast<std::size_t>(g.order(j));
    if (m == 1) continue;
    const AxisTransform transform(g, j, sign);
    const std::size_t stride = g.stride(j);
    const std::size_t block = stride * m;
    line.resize(m);
    for (std::size_t base = 0; base < n; base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        const std::size_t first = base + offset;
        for (std::size_t x = 0; x < m; ++x) line[x] = data[first + x * stride];
        transform(line);
        for (std::size_t x = 0; x < m; ++x) data[first + x * stride] = line[x];
      }
    }
  }
  return data;
}

}  // namespace detail

/// F(f)(a) = <f, chi_a>_A by direct summation, O(n^2).
inline DualFunction fourier_naive(const GroupFunction& f) {
  const auto& g = f.owner();
  auto sums = detail::naive_character_sums(g, f.values(), -1);
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (auto& v : sums) v *= inv_n;
  return DualFunction(dual_group(g), std::move(sums));
}

/// Factorized transform: radix-2 on power-of-two factors, direct DFT on the
/// others. Agrees with fourier_naive to rounding.
inline DualFunction fourier_fast(const GroupFunction& f) {
  const auto& g = f.owner();
  auto sums = detail::fast_character_sums(g, f.values(), -1);
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (auto& v : sums) v *= inv_n;
  return DualFunction(dual_group(g), std::move(sums));
}

inline DualFunction fourier(const GroupFunction& f) { return fourier_fast(f); }

/// f = sum_a h(a) chi_a.
inline GroupFunction inverse_fourier(const DualFunction& h) {
  const auto& g = h.owner();
  return GroupFunction(g, detail::fast_character_sums(g, h.values(), +1));
}

inline GroupFunction inverse_fourier_naive(const DualFunction& h) {
  const auto& g = h.owner();
  return GroupFunction(g, detail::naive_character_sums(g, h.values(), +1));
}

/// (f1 * f2)(x) = (1/n) sum_y f1(y) f2(x - y), by direct summation.
inline GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2) {
  require_same_owner(f1, f2);
  const auto& g = f1.owner();
  const std::size_t n = g.size();
  GroupFunction out(g);
  for (std::size_t y = 0; y < n; ++y) {
    const complex c = f1[y];
    if (c == complex{}) continue;
    for (std::size_t x = 0; x < n; ++x) out[x] += c * f2[sub_index(g, x, y)];
  }
  out *= 1.0 / static_cast<double>(n);
  return out;
}

}  // namespace harmonic

#endif  // HARMONIC_SPECTRAL_HPP
