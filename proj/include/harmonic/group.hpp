#ifndef HARMONIC_GROUP_HPP
#define HARMONIC_GROUP_HPP

/**
 * @file group.hpp
 * @brief Finite abelian groups as ordered products of cyclic groups.
 *
 * A group Z_{m_1} x ... x Z_{m_k} is described by its list of cyclic
 * orders. Elements are residue tuples (x_1, ..., x_k) with 0 <= x_j < m_j.
 * Every module enumerates elements in little-endian mixed-radix order:
 *
 *   index = x_1 + m_1 (x_2 + m_2 (x_3 + ...))
 *
 * so the first listed factor varies fastest.
 */

#include <charconv>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/error.hpp"

namespace harmonic {

namespace detail {

/// exp(2 pi i r / m) for 0 <= r < m, folded into the first octant before
/// calling sin/cos so all m-th roots carry the same (tiny) phase error.
__extension__ using uint128 = unsigned __int128;

inline std::complex<double> unit_root(std::uint64_t r, std::uint64_t m) {
  r %= m;
  if (r == 0) return {1.0, 0.0};
  // 8r/m selects the octant; work with the exact integer numerator.
  const uint128 eight_r = static_cast<uint128>(r) * 8u;
  const auto octant = static_cast<unsigned>(eight_r / m);
  const auto rem = static_cast<std::uint64_t>(eight_r % m);
  // angle within octant, in [0, pi/4)
  const double theta = (std::numbers::pi / 4.0) * static_cast<double>(rem) / static_cast<double>(m);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double h = std::numbers::sqrt2 / 2.0;
  // rotate (c, s) by octant * pi/4
  switch (octant) {
    case 0: return {c, s};
    case 1: return {h * (c - s), h * (c + s)};
    case 2: return {-s, c};
    case 3: return {-h * (c + s), h * (c - s)};
    case 4: return {-c, -s};
    case 5: return {-h * (c - s), -h * (c + s)};
    case 6: return {s, -c};
    default: return {h * (c + s), -h * (c - s)};
  }
}

/// Factors up to this order get a tabulated root list.
inline constexpr std::uint64_t kRootTableLimit = std::uint64_t{1} << 22;

struct RootCache {
  std::once_flag once;
  std::vector<std::vector<std::complex<double>>> tables;
};

}  // namespace detail

struct element_tag {};
struct dual_tag {};

/// Residue tuple. The tag separates elements of A from elements of A*.
template <class Tag>
class BasicElement {
 public:
  BasicElement() = default;
  explicit BasicElement(std::vector<std::uint64_t> residues) : residues_(std::move(residues)) {}

  std::span<const std::uint64_t> residues() const noexcept { return residues_; }
  std::size_t rank() const noexcept { return residues_.size(); }
  std::uint64_t operator[](std::size_t j) const { return residues_[j]; }

  friend bool operator==(const BasicElement&, const BasicElement&) = default;

 private:
  std::vector<std::uint64_t> residues_;
};

using GroupElement = BasicElement<element_tag>;
using DualElement = BasicElement<dual_tag>;

/// Reinterpret residues under the canonical identification A* = A.
inline DualElement to_dual(const GroupElement& x) {
  return DualElement({x.residues().begin(), x.residues().end()});
}
inline GroupElement to_group(const DualElement& a) {
  return GroupElement({a.residues().begin(), a.residues().end()});
}

class GroupSpec {
 public:
  /// Throws DomainError if orders is empty or has a zero entry, and
  /// OverflowError if the product does not fit in std::size_t.
  explicit GroupSpec(std::vector<std::uint64_t> orders)
      : orders_(std::move(orders)), cache_(std::make_shared<detail::RootCache>()) {
    if (orders_.empty()) throw DomainError("group needs at least one cyclic factor");
    strides_.reserve(orders_.size());
    std::size_t n = 1;
    for (auto m : orders_) {
      if (m < 1) throw DomainError("cyclic order must be >= 1");
      strides_.push_back(n);
      if (m > std::numeric_limits<std::size_t>::max() / n)
        throw OverflowError("group order overflows the native integer width");
      n *= static_cast<std::size_t>(m);
    }
    n_ = n;
  }

  std::span<const std::uint64_t> orders() const noexcept { return orders_; }
  std::uint64_t order(std::size_t j) const { return orders_.at(j); }
  std::size_t rank() const noexcept { return orders_.size(); }
  /// Number of elements n.
  std::size_t size() const noexcept { return n_; }
  /// Index step of factor j in the canonical enumeration.
  std::size_t stride(std::size_t j) const { return strides_.at(j); }

  /// Comma-separated orders; parses back to an equal spec.
  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(orders_[j]);
    }
    return s;
  }

  /// exp(2 pi i r / m_j), tabulated on first use for moderate m_j.
  std::complex<double> root(std::size_t j, std::uint64_t r) const {
    const auto& tables = root_tables();
    if (!tables[j].empty()) return tables[j][r % orders_[j]];
    return detail::unit_root(r, orders_[j]);
  }

  /// Per-factor root tables (empty entry for factors above the table limit).
  const std::vector<std::vector<std::complex<double>>>& root_tables() const {
    std::call_once(cache_->once, [this] {
      cache_->tables.resize(orders_.size());
      for (std::size_t j = 0; j < orders_.size(); ++j) {
        const auto m = orders_[j];
        if (m > detail::kRootTableLimit) continue;
        auto& t = cache_->tables[j];
        t.resize(m);
        for (std::uint64_t r = 0; r < m; ++r) t[r] = detail::unit_root(r, m);
      }
    });
    return cache_->tables;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t n_ = 1;
  std::shared_ptr<detail::RootCache> cache_;
};

namespace detail {

inline std::uint64_t parse_order(std::string_view tok, std::string_view text) {
  std::uint64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec == std::errc::invalid_argument || ptr != last)
    throw ParseError("malformed group spec '" + std::string(text) + "'");
  if (ec == std::errc::result_out_of_range)
    throw OverflowError("cyclic order out of range in '" + std::string(text) + "'");
  if (v < 1) throw DomainError("cyclic order must be >= 1 in '" + std::string(text) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

}  // namespace detail

/// Parses `4,2,3` or `Z4xZ2xZ3`.
inline GroupSpec parse_group_spec(std::string_view text) {
  if (text.empty()) throw ParseError("empty group spec");
  std::vector<std::uint64_t> orders;
  if (text.front() == 'Z') {
    for (auto part : detail::split(text, "x")) {
      if (part.size() < 2 || part.front() != 'Z')
        throw ParseError("malformed group spec '" + std::string(text) + "'");
      orders.push_back(detail::parse_order(part.substr(1), text));
    }
  } else {
    for (auto part : detail::split(text, ",")) orders.push_back(detail::parse_order(part, text));
  }
  return GroupSpec(std::move(orders));
}

/// Throws unless x has the group's arity and every residue is reduced.
template <class Tag>
void check_element(const GroupSpec& g, const BasicElement<Tag>& x) {
  if (x.rank() != g.rank()) throw OwnerMismatch("element arity does not match group rank");
  for (std::size_t j = 0; j < g.rank(); ++j)
    if (x[j] >= g.order(j)) throw OwnerMismatch("residue not reduced modulo its cyclic order");
}

/// Builds an element from arbitrary integers, reducing each modulo m_j.
template <class Tag = element_tag>
BasicElement<Tag> make_element(const GroupSpec& g, std::span<const std::int64_t> values) {
  if (values.size() != g.rank()) throw OwnerMismatch("element arity does not match group rank");
  std::vector<std::uint64_t> r(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const auto m = static_cast<std::int64_t>(g.order(j));
    auto v = values[j] % m;
    if (v < 0) v += m;
    r[j] = static_cast<std::uint64_t>(v);
  }
  return BasicElement<Tag>(std::move(r));
}

template <class Tag = element_tag>
BasicElement<Tag> make_element(const GroupSpec& g, std::initializer_list<std::int64_t> values) {
  return make_element<Tag>(g, std::span<const std::int64_t>(values.begin(), values.size()));
}

template <class Tag = element_tag>
BasicElement<Tag> zero(const GroupSpec& g) {
  return BasicElement<Tag>(std::vector<std::uint64_t>(g.rank(), 0));
}

template <class Tag>
BasicElement<Tag> add(const GroupSpec& g, const BasicElement<Tag>& a, const BasicElement<Tag>& b) {
  check_element(g, a);
  check_element(g, b);
  std::vector<std::uint64_t> r(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto m = g.order(j);
    // both residues < m, so a + b < 2m; avoid overflow for m near 2^64
    r[j] = a[j] >= m - b[j] ? a[j] - (m - b[j]) : a[j] + b[j];
  }
  return BasicElement<Tag>(std::move(r));
}

template <class Tag>
BasicElement<Tag> neg(const GroupSpec& g, const BasicElement<Tag>& a) {
  check_element(g, a);
  std::vector<std::uint64_t> r(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) r[j] = a[j] == 0 ? 0 : g.order(j) - a[j];
  return BasicElement<Tag>(std::move(r));
}

template <class Tag>
BasicElement<Tag> sub(const GroupSpec& g, const BasicElement<Tag>& a, const BasicElement<Tag>& b) {
  return add(g, a, neg(g, b));
}

template <class Tag>
std::size_t index_of(const GroupSpec& g, const BasicElement<Tag>& a) {
  check_element(g, a);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) idx += static_cast<std::size_t>(a[j]) * g.stride(j);
  return idx;
}

template <class Tag = element_tag>
BasicElement<Tag> element_at(const GroupSpec& g, std::size_t i) {
  if (i >= g.size()) throw DomainError("element index out of range");
  std::vector<std::uint64_t> r(g.rank());
  for (std::size_t j = 0; j < g.rank(); ++j) {
    r[j] = i % g.order(j);
    i /= g.order(j);
  }
  return BasicElement<Tag>(std::move(r));
}

/// Index of -x for the element with index i.
inline std::size_t neg_index(const GroupSpec& g, std::size_t i) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto m = g.order(j);
    const auto x = i % m;
    i /= m;
    out += static_cast<std::size_t>(x == 0 ? 0 : m - x) * g.stride(j);
  }
  return out;
}

/// Index of x - y given the indices of x and y.
inline std::size_t sub_index(const GroupSpec& g, std::size_t ix, std::size_t iy) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto m = g.order(j);
    const auto x = ix % m;
    const auto y = iy % m;
    ix /= m;
    iy /= m;
    out += static_cast<std::size_t>(x >= y ? x - y : x + (m - y)) * g.stride(j);
  }
  return out;
}

/// Index of x + y given the indices of x and y.
inline std::size_t add_index(const GroupSpec& g, std::size_t ix, std::size_t iy) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const auto m = g.order(j);
    const auto x = ix % m;
    const auto y = iy % m;
    ix /= m;
    iy /= m;
    out += static_cast<std::size_t>(x >= m - y ? x - (m - y) : x + y) * g.stride(j);
  }
  return out;
}

}  // namespace harmonic

#endif  // HARMONIC_GROUP_HPP
