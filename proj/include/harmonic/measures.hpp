#ifndef HARMONIC_MEASURES_HPP
#define HARMONIC_MEASURES_HPP

/**
 * @file measures.hpp
 * @brief Finite point-mass measures on R^n.
 *
 * A measure lambda = sum_j c_j delta_{x_j} acts on functions by
 * lambda(f) = sum_j c_j f(x_j). For distinct atoms its dual norm is
 * sum_j |c_j|, its Fourier transform is the exponential sum
 *
 *   lambda^(xi) = sum_j c_j exp(-2 pi i xi . x_j),
 *
 * and convolution with a field is (lambda * f)(v) = sum_j c_j f(v - x_j).
 * Exponentials e_xi(x) = exp(-2 pi i xi . x) are eigenfunctions:
 * lambda * e_xi = lambda^(-xi) e_xi.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/function.hpp"

namespace harmonic {

using Point = std::vector<double>;

/// Complex n-tuple xi; real in the common case.
class Frequency {
 public:
  explicit Frequency(std::vector<complex> xi) : xi_(std::move(xi)) {
    if (xi_.empty()) throw DomainError("frequency needs dimension >= 1");
    for (const auto& z : xi_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("frequency must be finite");
  }
  static Frequency real(std::span<const double> xi) { return Frequency(std::vector<complex>(xi.begin(), xi.end())); }

  std::size_t dim() const noexcept { return xi_.size(); }
  std::span<const complex> components() const noexcept { return xi_; }
  bool is_real() const {
    return std::all_of(xi_.begin(), xi_.end(), [](complex z) { return z.imag() == 0.0; });
  }
  Frequency operator-() const {
    auto v = xi_;
    for (auto& z : v) z = -z;
    return Frequency(std::move(v));
  }
  /// xi . x, extended bilinearly.
  complex dot(std::span<const double> x) const {
    complex s{};
    for (std::size_t j = 0; j < xi_.size(); ++j) s += xi_[j] * x[j];
    return s;
  }

 private:
  std::vector<complex> xi_;
};

/// Deterministic map R^dim -> C with an optional declared sup-norm bound.
class ScalarField {
 public:
  using Fn = std::function<complex(std::span<const double>)>;

  ScalarField(std::size_t dim, Fn fn, std::optional<double> sup_bound = std::nullopt)
      : dim_(dim), fn_(std::move(fn)), bound_(sup_bound) {
    if (dim_ == 0) throw DomainError("scalar field needs dimension >= 1");
    if (bound_ && !(*bound_ >= 0.0)) throw DomainError("declared sup bound must be nonnegative");
  }

  std::size_t dim() const noexcept { return dim_; }
  std::optional<double> sup_bound() const noexcept { return bound_; }

  /// Throws EvaluationError on a dimension mismatch, a throwing callback or a
  /// non-finite value.
  complex operator()(std::span<const double> x) const {
    if (x.size() != dim_) throw EvaluationError("point dimension does not match field dimension");
    complex v;
    try {
      v = fn_(x);
    } catch (const std::exception& e) {
      throw EvaluationError(std::string("field evaluation failed: ") + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("field evaluated to a non-finite value");
    return v;
  }

 private:
  std::size_t dim_;
  Fn fn_;
  std::optional<double> bound_;
};

/// e_xi(x) = exp(-2 pi i xi . x); bounded by 1 for real xi.
inline ScalarField exponential_field(const Frequency& xi) {
  std::optional<double> bound;
  if (xi.is_real()) bound = 1.0;
  return ScalarField(
      xi.dim(), [xi](std::span<const double> x) { return std::exp(complex{0.0, -2.0 * std::numbers::pi} * xi.dot(x)); },
      bound);
}

inline ScalarField constant_field(std::size_t dim, complex c) {
  return ScalarField(dim, [c](std::span<const double>) { return c; }, std::abs(c));
}

/// max(0, height (1 - |x - c| / r)), bounded by |height|.
inline ScalarField bump_field(Point center, double radius, double height = 1.0) {
  if (!(radius > 0.0)) throw DomainError("bump radius must be positive");
  const auto dim = center.size();
  return ScalarField(
      dim,
      [center = std::move(center), radius, height](std::span<const double> x) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) d2 += (x[j] - center[j]) * (x[j] - center[j]);
        return complex{height * std::max(0.0, 1.0 - std::sqrt(d2) / radius), 0.0};
      },
      std::abs(height));
}

struct Monomial {
  complex coef;
  std::vector<unsigned> powers;
};

/// sum_k coef_k prod_j x_j^{powers_kj}. Unbounded unless constant.
inline ScalarField polynomial_field(std::size_t dim, std::vector<Monomial> terms) {
  for (const auto& t : terms)
    if (t.powers.size() != dim) throw DomainError("monomial arity does not match field dimension");
  return ScalarField(dim, [terms = std::move(terms)](std::span<const double> x) {
    complex s{};
    for (const auto& t : terms) {
      complex v = t.coef;
      for (std::size_t j = 0; j < x.size(); ++j)
        for (unsigned k = 0; k < t.powers[j]; ++k) v *= x[j];
      s += v;
    }
    return s;
  });
}

/// Pointwise product; bounded when both factors are.
inline ScalarField product_field(ScalarField a, ScalarField b) {
  if (a.dim() != b.dim()) throw DomainError("field dimensions differ");
  std::optional<double> bound;
  if (a.sup_bound() && b.sup_bound()) bound = *a.sup_bound() * *b.sup_bound();
  const auto dim = a.dim();
  return ScalarField(dim, [a = std::move(a), b = std::move(b)](std::span<const double> x) { return a(x) * b(x); },
                     bound);
}

/// 1 - phi.
inline ScalarField one_minus(ScalarField phi) {
  std::optional<double> bound;
  if (phi.sup_bound()) bound = 1.0 + *phi.sup_bound();
  const auto dim = phi.dim();
  return ScalarField(dim, [phi = std::move(phi)](std::span<const double> x) { return 1.0 - phi(x); }, bound);
}

class PointMassMeasure {
 public:
  struct Atom {
    complex weight;
    Point point;
  };

  /// Zero measure on R^dim.
  explicit PointMassMeasure(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw DomainError("measure needs dimension >= 1");
  }

  /// Atoms at exactly equal points are merged by summing their weights;
  /// atoms whose weight is exactly zero are dropped.
  PointMassMeasure(std::size_t dim, std::vector<Atom> atoms) : PointMassMeasure(dim) {
    for (auto& a : atoms) add_atom(std::move(a));
    std::erase_if(atoms_, [](const Atom& a) { return a.weight == complex{}; });
  }

  static PointMassMeasure dirac(Point x, complex weight = 1.0) {
    const auto dim = x.size();
    return PointMassMeasure(dim, {{weight, std::move(x)}});
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

  friend PointMassMeasure operator+(const PointMassMeasure& a, const PointMassMeasure& b) {
    if (a.dim_ != b.dim_) throw DomainError("measures live on different dimensions");
    auto atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    return PointMassMeasure(a.dim_, std::move(atoms));
  }
  friend PointMassMeasure operator*(complex s, const PointMassMeasure& m) {
    auto atoms = m.atoms_;
    for (auto& a : atoms) a.weight *= s;
    return PointMassMeasure(m.dim_, std::move(atoms));
  }

 private:
  void add_atom(Atom a) {
    if (a.point.size() != dim_) throw DomainError("atom dimension does not match measure dimension");
    if (!std::isfinite(a.weight.real()) || !std::isfinite(a.weight.imag()))
      throw DomainError("atom weights must be finite");
    for (double c : a.point)
      if (!std::isfinite(c)) throw DomainError("atom points must be finite");
    for (auto& existing : atoms_) {
      if (existing.point == a.point) {
        existing.weight += a.weight;
        return;
      }
    }
    atoms_.push_back(std::move(a));
  }

  std::size_t dim_;
  std::vector<Atom> atoms_;
};

inline void require_dim(const PointMassMeasure& m, std::size_t dim) {
  if (m.dim() != dim) throw DomainError("dimension mismatch between measure and field");
}

/// lambda(f) = sum_j c_j f(x_j).
inline complex eval_measure(const PointMassMeasure& m, const ScalarField& f) {
  require_dim(m, f.dim());
  complex s{};
  for (const auto& a : m.atoms()) s += a.weight * f(a.point);
  return s;
}

/// ||lambda||_* = sum_j |c_j|.
inline double dual_norm(const PointMassMeasure& m) {
  double s = 0.0;
  for (const auto& a : m.atoms()) s += std::abs(a.weight);
  return s;
}

/// lambda^(xi) = lambda(e_xi). Complex xi may overflow; that raises OverflowError.
inline complex measure_fourier(const PointMassMeasure& m, const Frequency& xi) {
  if (xi.dim() != m.dim()) throw DomainError("frequency dimension does not match measure dimension");
  complex s{};
  for (const auto& a : m.atoms()) {
    const complex e = complex{0.0, -2.0 * std::numbers::pi} * xi.dot(a.point);
    if (e.real() > 709.0) throw OverflowError("exp(-2 pi i xi . x) overflows double precision");
    s += a.weight * std::exp(e);
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw OverflowError("Fourier transform of measure overflows double precision");
  return s;
}

/// (lambda * f)(v) = lambda(tau_v f) = sum_j c_j f(v - x_j). Declares
/// ||lambda||_* B when f declares the bound B.
inline ScalarField measure_convolve(const PointMassMeasure& m, const ScalarField& f) {
  require_dim(m, f.dim());
  std::optional<double> bound;
  if (f.sup_bound()) bound = dual_norm(m) * *f.sup_bound();
  return ScalarField(
      f.dim(),
      [m, f](std::span<const double> v) {
        Point shifted(v.size());
        complex s{};
        for (const auto& a : m.atoms()) {
          for (std::size_t j = 0; j < v.size(); ++j) shifted[j] = v[j] - a.point[j];
          s += a.weight * f(shifted);
        }
        return s;
      },
      bound);
}

/// lambda_phi with atoms (c_j phi(x_j), x_j); lambda_phi(f) = lambda(phi f).
inline PointMassMeasure weight_measure(const PointMassMeasure& m, const ScalarField& phi) {
  require_dim(m, phi.dim());
  std::vector<PointMassMeasure::Atom> atoms;
  for (const auto& a : m.atoms()) {
    const complex w = a.weight * phi(a.point);
    if (w != complex{}) atoms.push_back({w, a.point});
  }
  return PointMassMeasure(m.dim(), std::move(atoms));
}

/// Points carrying nonzero weight.
inline std::vector<Point> support(const PointMassMeasure& m) {
  std::vector<Point> pts;
  for (const auto& a : m.atoms())
    if (a.weight != complex{}) pts.push_back(a.point);
  return pts;
}

inline constexpr double kEigenTolerance = 1e-12;

struct EigenReport {
  double max_error = 0.0;  ///< max_v |(lambda * e_xi)(v) - lambda^(-xi) e_xi(v)|
  double scale = 0.0;      ///< ||lambda||_*
  bool ok = false;
};

inline EigenReport eigen_identity_check(const PointMassMeasure& m, const Frequency& xi, std::span<const Point> samples) {
  if (!xi.is_real()) throw DomainError("eigen_identity_check takes a real frequency");
  const auto e = exponential_field(xi);
  const auto conv = measure_convolve(m, e);
  const complex eigenvalue = measure_fourier(m, -xi);
  EigenReport r;
  r.scale = dual_norm(m);
  for (const auto& v : samples) r.max_error = std::max(r.max_error, std::abs(conv(v) - eigenvalue * e(v)));
  r.ok = r.max_error <= kEigenTolerance * r.scale;
  return r;
}

struct PartitionReport {
  double lhs = 0.0;            ///< sum_j ||lambda_{phi_j}||_*
  double sum_bound = 0.0;      ///< declared || sum_j |phi_j| ||
  double rhs = 0.0;            ///< sum_bound ||lambda||_*
  double atom_sum_max = 0.0;   ///< max over atoms of sum_j |phi_j(x)|
  bool ok = false;
};

inline constexpr double kPartitionTolerance = 1e-12;

/// sum_j ||lambda_{phi_j}||_* <= || sum_j |phi_j| || ||lambda||_*.
///
/// The sup norm of sum_j |phi_j| comes from `sum_bound` when given, else from
/// the sum of the fields' declared bounds. The declared value is also checked
/// against the atoms.
inline PartitionReport partition_inequality_check(const PointMassMeasure& m, std::span<const ScalarField> phis,
                                                  std::optional<double> sum_bound = std::nullopt) {
  PartitionReport r;
  if (sum_bound) {
    r.sum_bound = *sum_bound;
  } else {
    for (const auto& phi : phis) {
      if (!phi.sup_bound()) throw DomainError("partition check needs declared sup bounds");
      r.sum_bound += *phi.sup_bound();
    }
  }
  for (const auto& phi : phis) r.lhs += dual_norm(weight_measure(m, phi));
  for (const auto& a : m.atoms()) {
    double s = 0.0;
    for (const auto& phi : phis) s += std::abs(phi(a.point));
    r.atom_sum_max = std::max(r.atom_sum_max, s);
  }
  r.rhs = r.sum_bound * dual_norm(m);
  r.ok = r.lhs <= r.rhs * (1.0 + kPartitionTolerance) && r.atom_sum_max <= r.sum_bound * (1.0 + kPartitionTolerance);
  return r;
}

/// 2 pi ||lambda||_* max_j |x_j|: Lipschitz constant of lambda^ on real frequencies.
inline double fourier_lipschitz_constant(const PointMassMeasure& m) {
  double radius = 0.0;
  for (const auto& a : m.atoms()) {
    double r2 = 0.0;
    for (double c : a.point) r2 += c * c;
    radius = std::max(radius, std::sqrt(r2));
  }
  return 2.0 * std::numbers::pi * dual_norm(m) * radius;
}

}  // namespace harmonic

#endif  // HARMONIC_MEASURES_HPP
