#ifndef HARMONIC_FUNCTION_HPP
#define HARMONIC_FUNCTION_HPP

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/group.hpp"

namespace harmonic {

using complex = std::complex<double>;

/// Complex-valued function on A (element_tag) or on A* (dual_tag), stored as
/// n values in canonical index order.
template <class Tag>
class BasicFunction {
 public:
  using element_type = BasicElement<Tag>;

  /// The zero function.
  explicit BasicFunction(GroupSpec owner) : owner_(std::move(owner)), values_(owner_.size()) {}

  BasicFunction(GroupSpec owner, std::vector<complex> values)
      : owner_(std::move(owner)), values_(std::move(values)) {
    if (values_.size() != owner_.size())
      throw OwnerMismatch("function length " + std::to_string(values_.size()) +
                          " does not match group order " + std::to_string(owner_.size()));
    for (const auto& v : values_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("function values must be finite");
  }

  const GroupSpec& owner() const noexcept { return owner_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const complex> values() const noexcept { return values_; }
  std::span<complex> values() noexcept { return values_; }

  complex operator[](std::size_t i) const { return values_[i]; }
  complex& operator[](std::size_t i) { return values_[i]; }
  complex operator()(const element_type& x) const { return values_[index_of(owner_, x)]; }

  BasicFunction& operator+=(const BasicFunction& o) {
    require_same_owner(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  BasicFunction& operator-=(const BasicFunction& o) {
    require_same_owner(*this, o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  BasicFunction& operator*=(complex s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend BasicFunction operator+(BasicFunction a, const BasicFunction& b) { return a += b; }
  friend BasicFunction operator-(BasicFunction a, const BasicFunction& b) { return a -= b; }
  friend BasicFunction operator*(complex s, BasicFunction a) { return a *= s; }

  friend void require_same_owner(const BasicFunction& a, const BasicFunction& b) {
    if (!(a.owner_ == b.owner_)) throw OwnerMismatch("functions live on different groups");
  }

 private:
  GroupSpec owner_;
  std::vector<complex> values_;
};

using GroupFunction = BasicFunction<element_tag>;
using DualFunction = BasicFunction<dual_tag>;

/// delta_0: n at the identity, 0 elsewhere (unit mass for the 1/n-weighted sum).
inline GroupFunction delta0(const GroupSpec& g) {
  GroupFunction f(g);
  f[0] = static_cast<double>(g.size());
  return f;
}

inline GroupFunction constant(const GroupSpec& g, complex c) {
  return GroupFunction(g, std::vector<complex>(g.size(), c));
}

/// x -> f(-x).
template <class Tag>
BasicFunction<Tag> reflect(const BasicFunction<Tag>& f) {
  BasicFunction<Tag> out(f.owner());
  for (std::size_t i = 0; i < f.size(); ++i) out[neg_index(f.owner(), i)] = f[i];
  return out;
}

}  // namespace harmonic

#endif  // HARMONIC_FUNCTION_HPP
