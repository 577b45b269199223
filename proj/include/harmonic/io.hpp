#ifndef HARMONIC_IO_HPP
#define HARMONIC_IO_HPP

// JSON fixtures and canonical report output.
//
//   function: [[re, im], ...]                       canonical index order
//   matrix:   [[[re, im], ...], ...]                one array per row
//   measure:  {"dim": n, "atoms": [{"w": [re, im], "x": [...]}, ...]}
//
// Canonical JSON sorts object keys and prints every floating-point number
// with 17 significant digits, so equal values always print identically.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "harmonic/error.hpp"
#include "harmonic/function.hpp"
#include "harmonic/interpolation.hpp"
#include "harmonic/measures.hpp"

namespace harmonic::io {

using json = nlohmann::json;

inline json to_json(complex z) { return json::array({z.real(), z.imag()}); }

inline complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(std::span<const complex> values) {
  json arr = json::array();
  for (auto z : values) arr.push_back(to_json(z));
  return arr;
}

inline std::vector<complex> values_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [re, im] pairs");
  std::vector<complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

inline GroupFunction function_from_json(const GroupSpec& g, const json& j) {
  return GroupFunction(g, values_from_json(j));
}

inline json to_json(const LinearMap& T) {
  json rows = json::array();
  for (std::size_t i = 0; i < T.dim(); ++i) rows.push_back(to_json(T.row(i)));
  return rows;
}

inline LinearMap matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix fixture must be a nonempty array of rows");
  const std::size_t m = j.size();
  std::vector<complex> entries;
  entries.reserve(m * m);
  for (const auto& row : j) {
    auto r = values_from_json(row);
    if (r.size() != m) throw ParseError("matrix fixture must be square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return LinearMap(m, std::move(entries));
}

inline json to_json(const PointMassMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) atoms.push_back({{"w", to_json(a.weight)}, {"x", a.point}});
  return {{"dim", m.dim()}, {"atoms", atoms}};
}

inline PointMassMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("atoms") || !j["dim"].is_number_unsigned() ||
      !j["atoms"].is_array())
    throw ParseError("measure fixture needs integer 'dim' and array 'atoms'");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<PointMassMeasure::Atom> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("w") || !a.contains("x") || !a["x"].is_array())
      throw ParseError("measure atom needs 'w' and 'x'");
    Point x;
    for (const auto& c : a["x"]) {
      if (!c.is_number()) throw ParseError("atom coordinates must be numbers");
      x.push_back(c.get<double>());
    }
    atoms.push_back({complex_from_json(a["w"]), std::move(x)});
  }
  return PointMassMeasure(dim, std::move(atoms));
}

/// Raw fixture content, classified by shape.
using Fixture = std::variant<std::vector<complex>, LinearMap, PointMassMeasure>;

inline Fixture fixture_from_json(const json& j) {
  if (j.is_object()) return measure_from_json(j);
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array())
    return matrix_from_json(j);
  return values_from_json(j);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

namespace detail {

inline void format_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // keep the value recognisably floating point
  const std::string_view s(buf);
  if (s.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

inline void dump(std::string& out, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += ": ";
        dump(out, it.value(), depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(out, j[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      format_double(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Sorted keys, two-space indent, %.17g floats, trailing newline.
inline std::string canonical_dump(const json& j) {
  std::string out;
  detail::dump(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace harmonic::io

#endif  // HARMONIC_IO_HPP
