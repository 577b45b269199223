#ifndef HARMONIC_CHARACTERS_HPP
#define HARMONIC_CHARACTERS_HPP

/**
 * @file characters.hpp
 * @brief Characters of Z_{m_1} x ... x Z_{m_k} and translation operators.
 *
 * The dual group is identified with the group itself through the pairing
 *
 *   chi_a(x) = exp(2 pi i sum_j a_j x_j / m_j).
 *
 * Each factor contributes one tabulated m_j-th root of unity, so character
 * values carry the same rounding error regardless of how large n is.
 */

#include <cmath>
#include <complex>
#include <cstdint>

#include "harmonic/error.hpp"
#include "harmonic/function.hpp"
#include "harmonic/group.hpp"

namespace harmonic {

/// Complex number of modulus one.
class UnitComplex {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit UnitComplex(complex z) : z_(z) {
    if (std::abs(std::norm(z) - 1.0) > kTolerance) throw DomainError("value is not of modulus 1");
  }

  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  complex value() const noexcept { return z_; }
  operator complex() const noexcept { return z_; }

 private:
  complex z_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline complex character_value_unchecked(const GroupSpec& g, std::span<const std::uint64_t> a,
                                         std::span<const std::uint64_t> x) {
  complex v{1.0, 0.0};
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto r = mulmod(a[j], x[j], g.order(j));
    if (r != 0) v *= g.root(j, r);
  }
  return v;
}

}  // namespace detail

inline UnitComplex character_value(const GroupSpec& g, const DualElement& a, const GroupElement& x) {
  check_element(g, a);
  check_element(g, x);
  return UnitComplex(detail::character_value_unchecked(g, a.residues(), x.residues()));
}

/// A* under the canonical pairing: same orders, same enumeration.
inline GroupSpec dual_group(const GroupSpec& g) { return GroupSpec({g.orders().begin(), g.orders().end()}); }

/// Value table of chi_a as a function on A.
inline GroupFunction character(const GroupSpec& g, const DualElement& a) {
  check_element(g, a);
  GroupFunction f(g);
  std::vector<std::uint64_t> x(g.rank(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    f[i] = detail::character_value_unchecked(g, a.residues(), x);
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (++x[j] < g.order(j)) break;
      x[j] = 0;
    }
  }
  return f;
}

/// (T_a f)(x) = f(x - a).
inline GroupFunction translate(const GroupFunction& f, const GroupElement& a) {
  const auto& g = f.owner();
  const auto ia = index_of(g, a);
  GroupFunction out(g);
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[sub_index(g, i, ia)];
  return out;
}

/// Sum of chi_a over the whole group: n for the unit character, else 0.
inline complex character_sum(const GroupSpec& g, const DualElement& a) {
  const auto chi = character(g, a);
  complex s{0.0, 0.0};
  for (auto v : chi.values()) s += v;
  return s;
}

/// Homomorphism test into the unit circle, exhaustive over pairs.
inline bool is_character(const GroupFunction& f, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const auto& g = f.owner();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::abs(std::abs(f[i]) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k)
      if (std::abs(f[add_index(g, i, k)] - f[i] * f[k]) > tol) return false;
  return true;
}

}  // namespace harmonic

#endif  // HARMONIC_CHARACTERS_HPP
