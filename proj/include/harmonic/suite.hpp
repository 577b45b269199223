#ifndef HARMONIC_SUITE_HPP
#define HARMONIC_SUITE_HPP

/**
 * @file suite.hpp
 * @brief Seeded verification suites and their JSON reports.
 *
 * Each suite runs one module's invariant battery over random inputs. Every
 * check draws its inputs from its own stream keyed by (seed, suite/check,
 * trial index), so a report depends only on the configuration. A check
 * records the largest observed error (or relative excess, for inequalities)
 * and passes when that value stays within its tolerance.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/characters.hpp"
#include "harmonic/conv_operator.hpp"
#include "harmonic/error.hpp"
#include "harmonic/group.hpp"
#include "harmonic/interpolation.hpp"
#include "harmonic/io.hpp"
#include "harmonic/measures.hpp"
#include "harmonic/norms.hpp"
#include "harmonic/random.hpp"
#include "harmonic/spectral.hpp"

namespace harmonic {

/// Invalid suite configuration (maps to exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"characters", "fourier",      "convolution", "norms",
                                                 "young",      "hausdorff-young", "riesz-thorin", "three-lines",
                                                 "conv-op",    "measures"};
  return names;
}

struct SuiteConfig {
  std::string suite = "all";
  GroupSpec group = GroupSpec({4, 2, 3});
  int trials = 20;
  std::uint64_t seed = 1;
  std::optional<double> tol;  ///< replaces every per-check tolerance when set
  std::vector<double> t_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<Exponent> p_grid = {Exponent::from_recip(1.0),  Exponent::from_recip(0.8),
                                  Exponent::from_recip(0.75), Exponent::from_recip(2.0 / 3.0),
                                  Exponent::from_recip(0.5),  Exponent::from_recip(0.25),
                                  Exponent::from_recip(0.0)};
  std::optional<io::Fixture> fixture;
  std::string fixture_path;
};

/// Throws ConfigError on anything run_suite cannot accept.
inline void validate(const SuiteConfig& c) {
  if (c.suite != "all" && std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
    throw ConfigError("unknown suite '" + c.suite + "'");
  if (c.trials < 1) throw ConfigError("trials must be >= 1");
  if (c.tol && !(*c.tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (c.t_grid.empty()) throw ConfigError("t grid must not be empty");
  for (double t : c.t_grid)
    if (!(t > 0.0 && t < 1.0)) throw ConfigError("t grid values must lie in (0, 1)");
  if (c.p_grid.empty()) throw ConfigError("p grid must not be empty");
  if (c.fixture) {
    if (const auto* v = std::get_if<std::vector<complex>>(&*c.fixture); v && v->size() != c.group.size())
      throw ConfigError("function fixture length does not match the group order");
  }
}

struct CheckRecord {
  std::string name;
  double observed = 0.0;   ///< max observed error / relative excess
  double tolerance = 0.0;
  std::uint64_t worst_trial = 0;
  std::string witness;     ///< digest of the input that produced `observed`
  std::uint64_t samples = 0;

  bool pass() const { return observed <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  double wall_time = 0.0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass(); });
  }
  std::vector<std::string> violations() const {
    std::vector<std::string> v;
    for (const auto& r : checks)
      if (!r.pass()) v.push_back(r.name);
    return v;
  }
};

namespace suite_detail {

inline std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::uint64_t digest(std::span<const complex> values) {
  std::uint64_t h = fnv1a("");
  for (const auto& z : values) {
    const double parts[2] = {z.real(), z.imag()};
    h = fnv1a(std::string_view(reinterpret_cast<const char*>(parts), sizeof parts), h);
  }
  return h;
}

/// Accumulates one CheckRecord.
class Check {
 public:
  Check(std::string name, double tolerance) {
    rec_.name = std::move(name);
    rec_.observed = -std::numeric_limits<double>::infinity();
    rec_.tolerance = tolerance;
  }

  void observe(double value, std::uint64_t trial, std::span<const complex> input = {}) {
    ++rec_.samples;
    if (std::isnan(value)) value = std::numeric_limits<double>::infinity();
    if (value > rec_.observed) {
      rec_.observed = value;
      rec_.worst_trial = trial;
      rec_.witness = hex_digest(input.empty() ? fnv1a(rec_.name + "#" + std::to_string(trial)) : digest(input));
    }
  }

  CheckRecord finish() && {
    if (rec_.samples == 0) rec_.observed = 0.0;
    // infinite values cannot be written as JSON numbers
    if (std::isinf(rec_.observed)) rec_.observed = std::numeric_limits<double>::max();
    return std::move(rec_);
  }

 private:
  CheckRecord rec_;
};

/// Relative excess of lhs over rhs, with an absolute floor for zero inputs.
inline double excess(double lhs, double rhs) {
  if (rhs <= 1e-300) return lhs <= 1e-12 ? -1.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs - 1.0;
}

/// err / scale; below scale 1e-12 an absolute error of 1e-12 maps to 1e-9.
inline double rel_error(double err, double scale) { return scale <= 1e-12 ? err * 1e3 : err / scale; }

class Runner {
 public:
  Runner(const SuiteConfig& c, std::string suite) : c_(c), suite_(std::move(suite)) {}

  std::vector<CheckRecord> run() {
    if (suite_ == "characters") characters();
    else if (suite_ == "fourier") fourier_suite();
    else if (suite_ == "convolution") convolution();
    else if (suite_ == "norms") norms();
    else if (suite_ == "young") young();
    else if (suite_ == "hausdorff-young") hausdorff_young();
    else if (suite_ == "riesz-thorin") riesz_thorin();
    else if (suite_ == "three-lines") three_lines();
    else if (suite_ == "conv-op") conv_op();
    else if (suite_ == "measures") measures();
    return std::move(out_);
  }

 private:
  const GroupSpec& g() const { return c_.group; }
  std::size_t n() const { return c_.group.size(); }
  int trials() const { return c_.trials; }

  Check check(const std::string& name, double tol) const { return Check(suite_ + "/" + name, c_.tol.value_or(tol)); }
  void record(Check&& ck) { out_.push_back(std::move(ck).finish()); }

  std::mt19937_64 rng(const std::string& check, std::uint64_t trial) const {
    return stream(c_.seed, suite_ + "/" + check, trial);
  }

  /// Dense, sparse and nonnegative inputs in rotation.
  GroupFunction random_function(std::mt19937_64& r, std::uint64_t trial) const {
    GroupFunction f(g());
    switch (trial % 3) {
      case 0:
        for (auto& v : f.values()) v = {uniform(r), uniform(r)};
        break;
      case 1: {
        const auto spikes = 1 + uniform_index(r, 3);
        for (std::uint64_t s = 0; s < spikes; ++s) f[uniform_index(r, n())] += complex{uniform(r), uniform(r)} * 10.0;
        break;
      }
      default:
        for (auto& v : f.values()) v = unit_uniform(r);
    }
    return f;
  }

  const std::vector<complex>* fixture_function() const {
    return c_.fixture ? std::get_if<std::vector<complex>>(&*c_.fixture) : nullptr;
  }

  /// Calls body(f, trial) for every random input plus the function fixture.
  template <class Body>
  void for_functions(const std::string& name, Body&& body) const {
    for (int t = 0; t < trials(); ++t) {
      auto r = rng(name, static_cast<std::uint64_t>(t));
      body(random_function(r, static_cast<std::uint64_t>(t)), r, static_cast<std::uint64_t>(t));
    }
    if (const auto* fx = fixture_function()) {
      auto r = rng(name, static_cast<std::uint64_t>(trials()));
      body(GroupFunction(g(), *fx), r, static_cast<std::uint64_t>(trials()));
    }
  }

  static double norm2(const GroupFunction& f) { return group_norm(f, Exponent::two()); }

  static double max_diff(std::span<const complex> a, std::span<const complex> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  }

  // ---------------------------------------------------------------- suites

  void characters() {
    {
      auto ck = check("orthonormality", 1e-9);
      if (n() <= 64) {
        std::vector<GroupFunction> chis;
        for (std::size_t a = 0; a < n(); ++a) chis.push_back(character(g(), element_at<dual_tag>(g(), a)));
        for (std::size_t a = 0; a < n(); ++a)
          for (std::size_t b = 0; b < n(); ++b)
            ck.observe(std::abs(inner_product(chis[a], chis[b]) - (a == b ? 1.0 : 0.0)), a * n() + b);
      } else {
        for (int t = 0; t < trials() * 8; ++t) {
          auto r = rng("orthonormality", static_cast<std::uint64_t>(t));
          const auto a = uniform_index(r, n());
          const auto b = t % 4 == 0 ? a : uniform_index(r, n());
          const auto ip = inner_product(character(g(), element_at<dual_tag>(g(), a)),
                                        character(g(), element_at<dual_tag>(g(), b)));
          ck.observe(std::abs(ip - (a == b ? 1.0 : 0.0)), static_cast<std::uint64_t>(t));
        }
      }
      record(std::move(ck));
    }
    if (n() <= 512) {
      auto ck = check("dual_count", 0.5);
      std::vector<GroupFunction> chis;
      for (std::size_t a = 0; a < n(); ++a) chis.push_back(character(g(), element_at<dual_tag>(g(), a)));
      std::size_t distinct = 0;
      for (std::size_t a = 0; a < n(); ++a) {
        bool fresh = true;
        for (std::size_t b = 0; b < a && fresh; ++b)
          if (max_diff(chis[a].values(), chis[b].values()) <= 1e-9) fresh = false;
        distinct += fresh;
      }
      ck.observe(std::abs(static_cast<double>(distinct) - static_cast<double>(n())), 0);
      record(std::move(ck));
    }
    {
      auto ck = check("character_sum", 1e-9);
      for (int t = 0; t < trials(); ++t) {
        auto r = rng("character_sum", static_cast<std::uint64_t>(t));
        const auto ia = t == 0 ? 0 : uniform_index(r, n());
        const auto s = character_sum(g(), element_at<dual_tag>(g(), ia));
        ck.observe(std::abs(s - (ia == 0 ? static_cast<double>(n()) : 0.0)) / static_cast<double>(n()),
                   static_cast<std::uint64_t>(t));
      }
      record(std::move(ck));
    }
    {
      auto ck = check("homomorphism", 1e-12);
      for (int t = 0; t < trials(); ++t) {
        auto r = rng("homomorphism", static_cast<std::uint64_t>(t));
        const auto chi = character(g(), element_at<dual_tag>(g(), uniform_index(r, n())));
        double worst = 0.0;
        for (int s = 0; s < 64; ++s) {
          const auto x = uniform_index(r, n());
          const auto y = uniform_index(r, n());
          worst = std::max(worst, std::abs(chi[add_index(g(), x, y)] - chi[x] * chi[y]));
          worst = std::max(worst, std::abs(std::abs(chi[x]) - 1.0));
        }
        ck.observe(worst, static_cast<std::uint64_t>(t), chi.values());
      }
      record(std::move(ck));
    }
    {
      auto ck = check("eigenvector", 1e-12);
      for (int t = 0; t < trials(); ++t) {
        auto r = rng("eigenvector", static_cast<std::uint64_t>(t));
        const auto a = element_at(g(), uniform_index(r, n()));
        const auto b = element_at<dual_tag>(g(), uniform_index(r, n()));
        const auto chi = character(g(), b);
        const auto shifted = translate(chi, a);
        const complex scale = std::conj(character_value(g(), b, a).value());
        double worst = 0.0;
        for (std::size_t i = 0; i < n(); ++i) worst = std::max(worst, std::abs(shifted[i] - scale * chi[i]));
        ck.observe(worst, static_cast<std::uint64_t>(t));
      }
      record(std::move(ck));
    }
    {
      auto ck = check("translation_unitary", 1e-9);
      auto comp = check("translation_composition", 1e-12);
      for_functions("translation_unitary", [&](const GroupFunction& f1, std::mt19937_64& r, std::uint64_t t) {
        const auto f2 = random_function(r, t + 1);
        const auto a = element_at(g(), uniform_index(r, n()));
        const auto b = element_at(g(), uniform_index(r, n()));
        const auto lhs = inner_product(translate(f1, a), translate(f2, a));
        ck.observe(rel_error(std::abs(lhs - inner_product(f1, f2)), norm2(f1) * norm2(f2)), t, f1.values());
        const auto twice = translate(translate(f1, b), a);
        const auto once = translate(f1, add(g(), a, b));
        const auto back = translate(translate(f1, a), neg(g(), a));
        comp.observe(std::max(max_diff(twice.values(), once.values()), max_diff(back.values(), f1.values())), t,
                     f1.values());
      });
      record(std::move(ck));
      record(std::move(comp));
    }
  }

  void fourier_suite() {
    auto planch = check("plancherel", 1e-9);
    auto polar = check("polarized_unitarity", 1e-9);
    auto inv = check("inversion", 1e-9);
    auto surj = check("surjectivity", 1e-9);
    auto fast = check("fast_vs_naive", 1e-9);
    for_functions("transform", [&](const GroupFunction& f, std::mt19937_64& r, std::uint64_t t) {
      const auto F = fourier_fast(f);
      const double nf = norm2(f);
      planch.observe(rel_error(std::abs(dual_pnorm(F, Exponent::two()) - nf), nf), t, f.values());
      const auto f2 = random_function(r, t + 1);
      const auto F2 = fourier_fast(f2);
      polar.observe(rel_error(std::abs(inner_product(F, F2) - inner_product(f, f2)), nf * norm2(f2)), t, f.values());
      const auto back = inverse_fourier(F);
      inv.observe(rel_error(max_diff(back.values(), f.values()), group_norm(f, Exponent::infinity())), t, f.values());
      DualFunction h(dual_group(g()), random_complex(r, n()));
      const auto hh = fourier_fast(inverse_fourier(h));
      surj.observe(rel_error(max_diff(hh.values(), h.values()), dual_pnorm(h, Exponent::infinity())), t, h.values());
      if (n() <= 4096) {
        const auto naive = fourier_naive(f);
        fast.observe(rel_error(max_diff(naive.values(), F.values()), dual_pnorm(naive, Exponent::infinity())), t,
                     f.values());
      }
    });
    record(std::move(planch));
    record(std::move(polar));
    record(std::move(inv));
    record(std::move(surj));
    if (n() <= 4096) record(std::move(fast));
  }

  void convolution() {
    auto thm = check("convolution_theorem", 1e-9);
    auto comm = check("commutative", 1e-12);
    auto assoc = check("associative", 1e-12);
    auto unit = check("delta_identity", 1e-12);
    for_functions("convolution", [&](const GroupFunction& f1, std::mt19937_64& r, std::uint64_t t) {
      const auto f2 = random_function(r, t + 1);
      const auto f3 = random_function(r, t + 2);
      const auto c12 = convolve(f1, f2);
      const auto lhs = fourier_fast(c12);
      const auto F1 = fourier_fast(f1);
      const auto F2 = fourier_fast(f2);
      double worst = 0.0;
      for (std::size_t a = 0; a < n(); ++a) worst = std::max(worst, std::abs(lhs[a] - F1[a] * F2[a]));
      const double scale = norm2(f1) * norm2(f2);
      thm.observe(rel_error(worst, scale), t, f1.values());
      comm.observe(rel_error(max_diff(c12.values(), convolve(f2, f1).values()), scale), t, f1.values());
      const auto left = convolve(c12, f3);
      const auto right = convolve(f1, convolve(f2, f3));
      assoc.observe(rel_error(max_diff(left.values(), right.values()), scale * norm2(f3)), t, f1.values());
      unit.observe(rel_error(max_diff(convolve(delta0(g()), f1).values(), f1.values()),
                             group_norm(f1, Exponent::infinity())),
                   t, f1.values());
    });
    record(std::move(thm));
    record(std::move(comm));
    record(std::move(assoc));
    record(std::move(unit));
  }

  void norms() {
    auto tri = check("triangle", 1e-12);
    auto chain = check("comparison_chains", 1e-12);
    auto holder = check("holder", 1e-12);
    auto witness = check("holder_witness", 1e-12);
    for_functions("norms", [&](const GroupFunction& f1, std::mt19937_64& r, std::uint64_t t) {
      const auto f2 = random_function(r, t + 1);
      const auto h1 = fourier_fast(f1);
      const auto h2 = fourier_fast(f2);
      const auto v = random_complex(r, 1 + uniform_index(r, 8));
      const auto w = random_complex(r, v.size());
      std::vector<complex> vw(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) vw[j] = v[j] + w[j];
      for (auto p : c_.p_grid) {
        const double a = group_norm(f1, p), b = group_norm(f2, p);
        tri.observe(excess(group_norm(f1 + f2, p), (a + b)), t, f1.values());
        const double ha = dual_pnorm(h1, p), hb = dual_pnorm(h2, p);
        tri.observe(excess(dual_pnorm(h1 + h2, p), (ha + hb)), t, f1.values());
        tri.observe(excess(vec_norm(vw, p), vec_norm(v, p) + vec_norm(w, p)), t, v);
        for (auto q : c_.p_grid) {
          if (q.recip() > p.recip()) continue;
          for (const auto& ineq : norm_comparison_report(f1, p, q)) chain.observe(ineq.excess(), t, f1.values());
          for (const auto& ineq : norm_comparison_report(h1, p, q)) chain.observe(ineq.excess(), t, h1.values());
          for (const auto& ineq : norm_comparison_report(std::span<const complex>(v), p, q))
            chain.observe(ineq.excess(), t, v);
        }
        const auto rep = holder_check(v, w, p);
        holder.observe(excess(rep.lhs, rep.rhs), t, v);
        if (vec_norm(v, p) > 0.0) {
          const auto wit = holder_witness(v, p);
          complex pairing{};
          for (std::size_t j = 0; j < v.size(); ++j) pairing += v[j] * wit[j];
          const double nv = vec_norm(v, p);
          witness.observe(std::max(std::abs(pairing - nv) / nv, std::abs(vec_norm(wit, conjugate_exponent(p)) - 1.0)),
                          t, v);
        }
      }
    });
    record(std::move(tri));
    record(std::move(chain));
    record(std::move(holder));
    record(std::move(witness));
  }

  void young() {
    auto ineq = check("young", 1e-9);
    auto l1 = check("young_r1", 1e-9);
    for_functions("young", [&](const GroupFunction& f1, std::mt19937_64& r, std::uint64_t t) {
      const auto f2 = random_function(r, t + 1);
      const auto conv = convolve(f1, f2);
      for (auto p : c_.p_grid) {
        l1.observe(excess(group_norm(conv, p), group_norm(f1, Exponent::one()) * group_norm(f2, p)), t, f1.values());
        for (auto rr : c_.p_grid) {
          if (p.recip() + rr.recip() < 1.0) continue;
          const auto q = young_exponent(p, rr);
          ineq.observe(excess(group_norm(conv, q), group_norm(f1, rr) * group_norm(f2, p)), t, f1.values());
        }
      }
    });
    record(std::move(ineq));
    record(std::move(l1));
  }

  void hausdorff_young() {
    auto hy = check("hausdorff_young", 1e-9);
    auto endpoint = check("endpoint_p1", 1e-9);
    for_functions("hausdorff_young", [&](const GroupFunction& f, std::mt19937_64&, std::uint64_t t) {
      const auto F = fourier_fast(f);
      endpoint.observe(excess(dual_pnorm(F, Exponent::infinity()), group_norm(f, Exponent::one())), t, f.values());
      for (auto p : c_.p_grid) {
        if (p.recip() < 0.5) continue;
        hy.observe(excess(dual_pnorm(F, conjugate_exponent(p)), group_norm(f, p)), t, f.values());
      }
    });
    record(std::move(hy));
    record(std::move(endpoint));
  }

  static LinearMap random_map(std::mt19937_64& r, std::size_t m) { return LinearMap(m, random_complex(r, m * m)); }

  void riesz_thorin() {
    const auto one = Exponent::one(), two = Exponent::two(), inf = Exponent::infinity();
    auto rt = check("riesz_thorin", kRieszThorinTolerance);
    auto lower = check("lower_vs_exact", 1e-9);
    auto family = check("thorin_family_norm", 1e-9);
    auto pipeline = check("thorin_pipeline", kRieszThorinTolerance);
    std::vector<LinearMap> maps;
    for (int t = 0; t < trials(); ++t) {
      auto r = rng("maps", static_cast<std::uint64_t>(t));
      maps.push_back(random_map(r, 4));
    }
    if (c_.fixture)
      if (const auto* fx = std::get_if<LinearMap>(&*c_.fixture)) maps.push_back(*fx);
    for (std::size_t t = 0; t < maps.size(); ++t) {
      const auto& T = maps[t];
      const auto rep = riesz_thorin_verify(T, one, inf, two, two, c_.t_grid, 20, c_.seed + t);
      rt.observe(rep.worst_ratio - 1.0, t, T.entries());
      for (auto [p, q] : {std::pair{one, inf}, std::pair{two, two}, std::pair{one, two}, std::pair{two, inf}}) {
        lower.observe(excess(op_norm_lower(T, p, q, 10, c_.seed + t), op_norm_exact(T, p, q)), t, T.entries());
      }
    }
    for (int t = 0; t < trials(); ++t) {
      auto r = rng("thorin", static_cast<std::uint64_t>(t));
      const double tt = c_.t_grid[static_cast<std::size_t>(t) % c_.t_grid.size()];
      const auto pt = intermediate_exponent(one, two, tt);
      auto v = random_complex(r, 4);
      if (t % 2 == 1) v[uniform_index(r, 4)] = 0.0;
      const double nv = vec_norm(v, pt);
      for (auto& z : v) z /= nv;
      double worst = 0.0;
      for (int ix = 0; ix <= 4; ++ix) {
        const double x = ix / 4.0;
        const auto px = intermediate_exponent(one, two, x);
        for (int iy = 0; iy < 16; ++iy) {
          const double y = -4.0 + 8.0 * iy / 15.0;
          worst = std::max(worst, std::abs(vec_norm(thorin_family(v, one, two, tt, {x, y}), px) - 1.0));
        }
      }
      family.observe(worst, static_cast<std::uint64_t>(t), v);

      // endpoints (1 -> inf), (2 -> 2): q_t' = p_t
      const auto T = random_map(r, 3);
      auto w = random_complex(r, 3);
      auto vv = random_complex(r, 3);
      const double nvv = vec_norm(vv, pt);
      for (auto& z : vv) z /= nvv;
      const auto qdt = conjugate_exponent(intermediate_exponent(inf, two, tt));
      const double nw = vec_norm(w, qdt);
      for (auto& z : w) z /= nw;
      const auto pr = thorin_pipeline_check(T, vv, w, one, inf, two, two, tt, 20.0, 801);
      double metric = std::max(excess(pr.Ft, pr.boundary_max), excess(pr.Ft, pr.Lt));
      metric = std::max({metric, excess(pr.M0, pr.L0), excess(pr.M1, pr.L1), pr.norm_deviation - 1e-9});
      pipeline.observe(metric, static_cast<std::uint64_t>(t), T.entries());
    }
    record(std::move(rt));
    record(std::move(lower));
    record(std::move(family));
    record(std::move(pipeline));
  }

  void three_lines() {
    auto exact = check("single_exponential", 1e-9);
    for (double a : {-2.0, -1.0, 1.0, 2.0}) {
      const ExpSum f(std::abs(a), {{1.0, a > 0 ? 1 : -1}});
      const auto rep = three_lines_check(f, c_.t_grid, 64);
      for (const auto& pt : rep.points) exact.observe(std::abs(pt.ratio() - 1.0), static_cast<std::uint64_t>(a + 2));
    }
    record(std::move(exact));
    auto random = check("random_expsums", kThreeLinesTolerance);
    for (int t = 0; t < trials(); ++t) {
      auto r = rng("expsum", static_cast<std::uint64_t>(t));
      const double omega = uniform(r, 0.5, 2.0);
      std::vector<ExpSum::Term> terms;
      const auto count = 1 + uniform_index(r, 6);
      for (std::uint64_t k = 0; k < count; ++k)
        terms.push_back({complex{uniform(r), uniform(r)}, static_cast<std::int64_t>(uniform_index(r, 9)) - 4});
      const ExpSum f(omega, terms);
      const auto rep = three_lines_check(f, c_.t_grid, 4096);
      std::vector<complex> coeffs;
      for (const auto& term : terms) coeffs.push_back(term.c);
      random.observe(rep.worst_ratio - 1.0, static_cast<std::uint64_t>(t), coeffs);
    }
    record(std::move(random));
  }

  void conv_op() {
    auto bound = check("operator_bound", 1e-9);
    auto diag = check("diagonalization", 1e-9);
    auto sharp1 = check("sharpness_p1", 1e-9);
    auto sharp2 = check("sharpness_p2", 1e-9);
    auto dual = check("duality_pairing", 1e-9);
    auto refl = check("reflection_norms", 1e-9);
    auto transfer = check("bound_duality", 1e-12);
    auto cache = check("kernel_cache", 1e-12);
    for_functions("kernel", [&](const GroupFunction& b, std::mt19937_64& r, std::uint64_t t) {
      const ConvKernel k(b);
      const auto kr = reflect(k);
      const auto f = random_function(r, t + 1);
      const auto f2 = random_function(r, t + 2);
      const auto tf = conv_apply(k, f);
      for (auto p : c_.p_grid) {
        bound.observe(excess(group_norm(tf, p), bound_p(k, p) * group_norm(f, p)), t, b.values());
        const double lhs = group_norm(tf, p);
        const double rhs = group_norm(conv_apply(kr, reflect(f)), p);
        refl.observe(rel_error(std::abs(lhs - rhs), std::max(lhs, rhs)), t, b.values());
        transfer.observe(rel_error(std::abs(bound_p(k, p) - bound_p(kr, conjugate_exponent(p))), bound_p(k, p)), t,
                         b.values());
      }
      const auto lhs = fourier_fast(tf);
      const auto Ff = fourier_fast(f);
      double worst = 0.0;
      for (std::size_t a = 0; a < n(); ++a) worst = std::max(worst, std::abs(lhs[a] - k.transform()[a] * Ff[a]));
      diag.observe(rel_error(worst, k.l1_norm() * norm2(f)), t, b.values());
      const auto s1 = sharpness_witness(k, Exponent::one());
      sharp1.observe(rel_error(std::abs(s1.ratio - k.l1_norm()), k.l1_norm()), t, b.values());
      const auto s2 = sharpness_witness(k, Exponent::two());
      sharp2.observe(rel_error(std::abs(s2.ratio - k.transform_sup()), k.transform_sup()), t, b.values());
      const auto rep = duality_pairing_check(k, f, f2);
      dual.observe(std::max(rel_error(rep.pairing_error, rep.pairing_scale),
                            rel_error(rep.reflection_error, rep.reflection_scale)),
                   t, b.values());
      const double l1 = group_norm(b, Exponent::one());
      const double sup = dual_pnorm(fourier_naive(b), Exponent::infinity());
      cache.observe(std::max(rel_error(std::abs(l1 - k.l1_norm()), l1), rel_error(std::abs(sup - k.transform_sup()), sup)),
                    t, b.values());
    });
    for (auto* ck : {&bound, &diag, &sharp1, &sharp2, &dual, &refl, &transfer, &cache}) record(std::move(*ck));
  }

  static PointMassMeasure random_measure(std::mt19937_64& r, std::size_t dim, std::size_t max_atoms) {
    std::vector<PointMassMeasure::Atom> atoms;
    const auto count = 1 + uniform_index(r, max_atoms);
    for (std::uint64_t k = 0; k < count; ++k) {
      Point x(dim);
      for (auto& c : x) c = uniform(r, -2.0, 2.0);
      atoms.push_back({complex{uniform(r), uniform(r)}, std::move(x)});
    }
    return PointMassMeasure(dim, std::move(atoms));
  }

  static Point random_point(std::mt19937_64& r, std::size_t dim, double radius) {
    Point x(dim);
    for (auto& c : x) c = uniform(r, -radius, radius);
    return x;
  }

  static std::vector<complex> weights(const PointMassMeasure& m) {
    std::vector<complex> w;
    for (const auto& a : m.atoms()) w.push_back(a.weight);
    return w;
  }

  void measures() {
    auto eigen = check("eigen_identity", kEigenTolerance);
    auto ft_bound = check("fourier_bound", 1e-12);
    auto sup = check("convolution_sup_bound", 1e-12);
    auto lin = check("linearity", 1e-12);
    auto weight = check("weight_consistency", 1e-12);
    auto part = check("partition_equality", kPartitionTolerance);
    auto part_ineq = check("partition_inequality", kPartitionTolerance);
    auto tri = check("dual_norm_triangle", 1e-12);
    auto lip = check("fourier_lipschitz", 1e-12);

    std::vector<PointMassMeasure> inputs;
    for (int t = 0; t < trials(); ++t) {
      auto r = rng("measure", static_cast<std::uint64_t>(t));
      inputs.push_back(random_measure(r, 1 + uniform_index(r, 3), 8));
    }
    if (c_.fixture)
      if (const auto* fx = std::get_if<PointMassMeasure>(&*c_.fixture)) inputs.push_back(*fx);

    for (std::size_t t = 0; t < inputs.size(); ++t) {
      const auto& m = inputs[t];
      const auto dim = m.dim();
      const double norm = dual_norm(m);
      const auto w = weights(m);
      auto r = rng("measure_checks", t);

      std::vector<double> xi_re(dim);
      for (auto& c : xi_re) c = uniform(r, -3.0, 3.0);
      const auto xi = Frequency::real(xi_re);
      std::vector<Point> samples;
      for (int s = 0; s < 64; ++s) samples.push_back(random_point(r, dim, 3.0));
      const auto rep = eigen_identity_check(m, xi, samples);
      eigen.observe(norm == 0.0 ? rep.max_error : rep.max_error / norm, t, w);

      for (int s = 0; s < 32; ++s) {
        std::vector<double> eta(dim);
        for (auto& c : eta) c = uniform(r, -10.0, 10.0);
        ft_bound.observe(excess(std::abs(measure_fourier(m, Frequency::real(eta))), norm), t, w);
        std::vector<double> zeta = eta;
        double dist2 = 0.0;
        for (auto& c : zeta) {
          const double d = uniform(r, -0.1, 0.1);
          c += d;
          dist2 += d * d;
        }
        const double diff = std::abs(measure_fourier(m, Frequency::real(eta)) - measure_fourier(m, Frequency::real(zeta)));
        lip.observe(excess(diff, fourier_lipschitz_constant(m) * std::sqrt(dist2)), t, w);
      }

      const auto bump = bump_field(random_point(r, dim, 1.0), uniform(r, 0.5, 3.0));
      const auto conv = measure_convolve(m, bump);
      for (const auto& v : samples) sup.observe(excess(std::abs(conv(v)), norm * *bump.sup_bound()), t, w);

      const auto other = random_measure(r, dim, 8);
      const complex alpha{uniform(r), uniform(r)};
      const auto field = exponential_field(Frequency::real(random_point(r, dim, 2.0)));
      const complex lhs = eval_measure(alpha * m + other, field);
      const complex rhs = alpha * eval_measure(m, field) + eval_measure(other, field);
      lin.observe(rel_error(std::abs(lhs - rhs), std::abs(alpha) * norm + dual_norm(other)), t, w);
      tri.observe(excess(dual_norm(m + other), norm + dual_norm(other)), t, w);
      tri.observe(rel_error(std::abs(dual_norm(alpha * m) - std::abs(alpha) * norm), std::abs(alpha) * norm), t, w);

      const complex wl = eval_measure(weight_measure(m, bump), field);
      const complex wr = eval_measure(m, product_field(bump, field));
      weight.observe(rel_error(std::abs(wl - wr), norm), t, w);

      const std::vector<ScalarField> pair = {bump, one_minus(bump)};
      const auto pe = partition_inequality_check(m, pair, 1.0);
      part.observe(std::max(rel_error(std::abs(pe.lhs - norm), norm), pe.ok ? 0.0 : 1.0), t, w);

      std::vector<ScalarField> phis;
      for (int j = 0; j < 3; ++j) phis.push_back(bump_field(random_point(r, dim, 2.0), uniform(r, 0.5, 2.0), unit_uniform(r)));
      const auto pi = partition_inequality_check(m, phis);
      part_ineq.observe(std::max(excess(pi.lhs, pi.rhs), excess(pi.atom_sum_max, pi.sum_bound)), t, w);
    }
    for (auto* ck : {&eigen, &ft_bound, &sup, &lin, &weight, &part, &part_ineq, &tri, &lip}) record(std::move(*ck));
  }

  const SuiteConfig& c_;
  std::string suite_;
  std::vector<CheckRecord> out_;
};

}  // namespace suite_detail

/// Runs one suite, or every suite in order for "all".
inline SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = config.suite;
  report.config = config;
  const std::vector<std::string> which =
      config.suite == "all" ? suite_names() : std::vector<std::string>{config.suite};
  for (const auto& s : which) {
    auto recs = suite_detail::Runner(config, s).run();
    report.checks.insert(report.checks.end(), recs.begin(), recs.end());
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline io::json to_json(const SuiteReport& r) {
  io::json checks = io::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"observed", c.observed},
                      {"tolerance", c.tolerance},
                      {"worst_trial", c.worst_trial},
                      {"witness", c.witness},
                      {"samples", c.samples},
                      {"pass", c.pass()}});
  io::json p_grid = io::json::array();
  for (auto p : r.config.p_grid) p_grid.push_back(p.recip());
  io::json config = {{"orders", r.config.group.to_string()},
                     {"trials", r.config.trials},
                     {"seed", r.config.seed},
                     {"t_grid", r.config.t_grid},
                     {"p_grid_recip", p_grid},
                     {"tol", r.config.tol ? io::json(*r.config.tol) : io::json(nullptr)},
                     {"fixture", r.config.fixture_path.empty() ? io::json(nullptr) : io::json(r.config.fixture_path)}};
  return {{"suite", r.suite},     {"config", config},          {"checks", checks},
          {"pass", r.pass()},     {"violations", r.violations()}, {"wall_time_s", r.wall_time}};
}

/// Writes canonical JSON to `path`, or to stdout when path is empty or "-".
inline void emit_report(const SuiteReport& r, const std::string& path) {
  const auto text = io::canonical_dump(to_json(r));
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace harmonic

#endif  // HARMONIC_SUITE_HPP
