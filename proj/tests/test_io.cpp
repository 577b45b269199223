#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "harmonic/io.hpp"

using namespace harmonic;
using harmonic::io::json;

TEST(CanonicalDump, SortedKeysAndFixedFloats) {
  json j = {{"b", 0.1}, {"a", 1}, {"c", {{"z", 2.0}, {"y", nullptr}}}, {"d", json::array({1.5, true, "x"})}};
  const auto s = io::canonical_dump(j);
  EXPECT_EQ(s,
            "{\n"
            "  \"a\": 1,\n"
            "  \"b\": 0.10000000000000001,\n"
            "  \"c\": {\n"
            "    \"y\": null,\n"
            "    \"z\": 2.0\n"
            "  },\n"
            "  \"d\": [\n"
            "    1.5,\n"
            "    true,\n"
            "    \"x\"\n"
            "  ]\n"
            "}\n");
}

TEST(CanonicalDump, RoundTripsExactly) {
  json j = {{"v", json::array({0.1, 1.0 / 3.0, 1e-300, -2.5e17, 123456789.125})}, {"e", json::object()}, {"n", json::array()}};
  const auto s = io::canonical_dump(j);
  const auto back = json::parse(s);
  EXPECT_EQ(back, j);
  EXPECT_EQ(io::canonical_dump(back), s);
}

TEST(CanonicalDump, NonFiniteBecomesNull) {
  json j = {{"x", std::numeric_limits<double>::infinity()}};
  EXPECT_EQ(io::canonical_dump(j), "{\n  \"x\": null\n}\n");
}

TEST(Fixtures, Function) {
  const auto f = io::fixture_from_json(json::parse("[[1, 0], [0.5, -2]]"));
  const auto* v = std::get_if<std::vector<complex>>(&f);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ((*v)[1], complex(0.5, -2.0));
  const auto g = io::function_from_json(GroupSpec({2}), json::parse("[[1, 0], [0.5, -2]]"));
  EXPECT_EQ(g[0], complex(1.0));
  EXPECT_THROW(io::function_from_json(GroupSpec({3}), json::parse("[[1, 0], [0.5, -2]]")), OwnerMismatch);
}

TEST(Fixtures, Matrix) {
  const auto f = io::fixture_from_json(json::parse("[[[1,0],[1,0]],[[1,0],[-1,0]]]"));
  const auto* T = std::get_if<LinearMap>(&f);
  ASSERT_NE(T, nullptr);
  EXPECT_EQ((*T)(1, 1), complex(-1.0));
  EXPECT_EQ(io::to_json(*T), json::parse("[[[1.0,0.0],[1.0,0.0]],[[1.0,0.0],[-1.0,0.0]]]"));
  EXPECT_THROW(io::matrix_from_json(json::parse("[[[1,0],[1,0]]]")), ParseError);
}

TEST(Fixtures, Measure) {
  const auto f = io::fixture_from_json(
      json::parse(R"({"dim": 2, "atoms": [{"w": [1, 0], "x": [0, 0]}, {"w": [0, 2], "x": [1, -1]}]})"));
  const auto* m = std::get_if<PointMassMeasure>(&f);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->atoms().size(), 2u);
  EXPECT_EQ(dual_norm(*m), 3.0);
  const auto back = io::measure_from_json(io::to_json(*m));
  EXPECT_EQ(dual_norm(back), 3.0);
  EXPECT_THROW(io::measure_from_json(json::parse(R"({"dim": 2})")), ParseError);
  EXPECT_THROW(io::measure_from_json(json::parse(R"({"dim": 1, "atoms": [{"w": [1, 0], "x": [0, 0]}]})")),
               DomainError);
}

TEST(Fixtures, Malformed) {
  EXPECT_THROW(io::fixture_from_json(json::parse("[1, 2]")), ParseError);
  EXPECT_THROW(io::fixture_from_json(json::parse("[[1, 2, 3]]")), ParseError);
  EXPECT_THROW(io::fixture_from_json(json::parse("\"x\"")), ParseError);
  EXPECT_THROW(io::complex_from_json(json::parse("[1, \"a\"]")), ParseError);
}

TEST(Fixtures, ReadFile) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "harmonic_io_good.json";
  const auto bad = dir / "harmonic_io_bad.json";
  std::ofstream(good) << "[[1, 2]]";
  std::ofstream(bad) << "[[1, 2]";
  EXPECT_EQ(io::read_json_file(good.string()), json::parse("[[1, 2]]"));
  EXPECT_THROW(io::read_json_file(bad.string()), ParseError);
  EXPECT_THROW(io::read_json_file((dir / "harmonic_io_missing.json").string()), Error);
}
