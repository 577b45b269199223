// harmonic_cli: run verification suites and write a canonical JSON report.
//
// Exit status: 0 all checks pass, 1 some check exceeded its tolerance,
// 2 bad arguments, unreadable fixture or unwritable output.

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "harmonic/harmonic.hpp"

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    std::string item = s.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) throw harmonic::ConfigError("empty entry in list '" + s + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw harmonic::ConfigError("not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<double> parse_t_grid(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s)) out.push_back(parse_double(item));
  return out;
}

// "1,1.5,2,inf" gives p values; an "r=" prefix gives 1/p directly.
std::vector<harmonic::Exponent> parse_p_grid(const std::string& s) {
  std::vector<harmonic::Exponent> out;
  for (const auto& item : split(s)) {
    try {
      if (item.rfind("r=", 0) == 0)
        out.push_back(harmonic::Exponent::from_recip(parse_double(std::string_view(item).substr(2))));
      else if (item == "inf")
        out.push_back(harmonic::Exponent::infinity());
      else
        out.push_back(harmonic::Exponent::from_p(parse_double(item)));
    } catch (const harmonic::DomainError& e) {
      throw harmonic::ConfigError("bad exponent '" + item + "': " + e.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded verification suites for harmonic analysis on finite abelian groups"};
  std::string suite = "all", orders = "4,2,3", t_grid, p_grid, json_path, fixture_path;
  int trials = 20;
  std::uint64_t seed = 1;
  double tol = 0.0;

  std::string names = "all";
  for (const auto& n : harmonic::suite_names()) names += ", " + n;
  app.add_option("--suite", suite, "Suite to run: " + names)->capture_default_str();
  app.add_option("--orders", orders, "Group orders, e.g. 4,2,3 or Z4xZ2xZ3")->capture_default_str();
  app.add_option("--trials", trials, "Random inputs per check")->capture_default_str();
  app.add_option("--seed", seed, "Base seed")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "Override every check tolerance");
  app.add_option("--t-grid", t_grid, "Interior interpolation parameters, comma separated");
  app.add_option("--p-grid", p_grid, "Exponents: p values (inf allowed) or r=1/p, comma separated");
  app.add_option("--json", json_path, "Report path (default: standard output)");
  app.add_option("--fixture", fixture_path, "Function, matrix or measure JSON fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  harmonic::SuiteConfig config;
  try {
    config.suite = suite;
    config.group = harmonic::parse_group_spec(orders);
    config.trials = trials;
    config.seed = seed;
    if (*tol_opt) config.tol = tol;
    if (!t_grid.empty()) config.t_grid = parse_t_grid(t_grid);
    if (!p_grid.empty()) config.p_grid = parse_p_grid(p_grid);
    if (!fixture_path.empty()) {
      config.fixture = harmonic::io::fixture_from_json(harmonic::io::read_json_file(fixture_path));
      config.fixture_path = fixture_path;
    }
    harmonic::validate(config);
  } catch (const harmonic::Error& e) {
    std::fprintf(stderr, "harmonic_cli: %s\n", e.what());
    return 2;
  }

  harmonic::SuiteReport report;
  try {
    report = harmonic::run_suite(config);
    harmonic::emit_report(report, json_path);
  } catch (const harmonic::Error& e) {
    std::fprintf(stderr, "harmonic_cli: %s\n", e.what());
    return 2;
  }

  const auto bad = report.violations();
  std::fprintf(stderr, "%s: %zu checks, %zu violations, %.3f s\n", report.suite.c_str(), report.checks.size(),
               bad.size(), report.wall_time);
  for (const auto& name : bad) std::fprintf(stderr, "  violation: %s\n", name.c_str());
  return bad.empty() ? 0 : 1;
}
