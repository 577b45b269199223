#include <gtest/gtest.h>

#include <random>

#include "harmonic/interpolation.hpp"
#include "oracles.hpp"

#ifdef HARMONIC_HAVE_EIGEN
#include <Eigen/SVD>
#endif

using namespace harmonic;

namespace {

const Exponent kOne = Exponent::one(), kTwo = Exponent::two(), kInf = Exponent::infinity();

LinearMap hadamard() { return LinearMap(2, {1.0, 1.0, 1.0, -1.0}); }

LinearMap random_map(std::mt19937_64& rng, std::size_t m) { return LinearMap(m, oracle::random_vector(rng, m * m)); }

const std::vector<double> kInterior = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// ||T||_{p->q} by brute force over a dense set of unit-p tuples for m = 2:
// moduli on a grid, second phase on a grid, first phase fixed to 0.
double brute_norm_2x2(const LinearMap& T, double p, double q, int steps = 400) {
  double best = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double s = static_cast<double>(i) / steps;
    const double r1 = std::pow(std::max(0.0, 1.0 - std::pow(s, p)), 1.0 / p);
    for (int k = 0; k < steps; ++k) {
      const complex v1 = std::polar(r1, 2.0 * std::numbers::pi * k / steps);
      const std::vector<oracle::cd> u{T(0, 0) * s + T(0, 1) * v1, T(1, 0) * s + T(1, 1) * v1};
      best = std::max(best, oracle::pnorm(u, q == INFINITY ? 0.0 : q));
    }
  }
  return best;
}

}  // namespace

TEST(IntermediateExponent, Examples) {
  EXPECT_EQ(intermediate_exponent(kOne, kTwo, 0.0), kOne);
  EXPECT_EQ(intermediate_exponent(kOne, kTwo, 1.0), kTwo);
  EXPECT_NEAR(intermediate_exponent(kOne, kTwo, 0.5).p(), 4.0 / 3.0, 1e-15);
  const auto p3 = Exponent::from_p(3.0);
  for (double t : kInterior) EXPECT_NEAR(intermediate_exponent(p3, p3, t).recip(), p3.recip(), 1e-16);
  EXPECT_THROW(intermediate_exponent(kOne, kTwo, 1.5), DomainError);
  EXPECT_THROW(intermediate_exponent(kOne, kTwo, -0.1), DomainError);
}

TEST(RieszThorinBound, Examples) {
  EXPECT_EQ(riesz_thorin_bound({kOne, kTwo, kInf, kTwo, 1.0, 1.0, 0.3}), 1.0);
  EXPECT_NEAR(riesz_thorin_bound({kOne, kTwo, kInf, kTwo, 1.0, 2.0, 0.5}), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(riesz_thorin_bound({kOne, kTwo, kInf, kTwo, 0.0, 3.0, 0.5}), 0.0);
}

TEST(OpNormExact, Examples) {
  const auto H = hadamard();
  EXPECT_EQ(op_norm_exact(H, kOne, kInf), 1.0);
  EXPECT_NEAR(op_norm_exact(H, kTwo, kTwo), std::sqrt(2.0), 1e-12);
  const auto I = LinearMap::identity(5);
  EXPECT_EQ(op_norm_exact(I, kOne, kOne), 1.0);
  EXPECT_NEAR(op_norm_exact(I, kTwo, kTwo), 1.0, 1e-12);
  EXPECT_EQ(op_norm_exact(I, kInf, kInf), 1.0);
  EXPECT_EQ(op_norm_exact(LinearMap(3, std::vector<complex>(9, 0.0)), kTwo, kTwo), 0.0);
  EXPECT_THROW(op_norm_exact(H, Exponent::from_p(1.5), Exponent::from_p(3.0)), DomainError);
}

TEST(OpNormExact, ClosedFormsAgainstBruteForce) {
  std::mt19937_64 rng(30);
  for (int t = 0; t < 3; ++t) {
    const auto T = random_map(rng, 2);
    EXPECT_NEAR(op_norm_exact(T, kOne, Exponent::from_p(3.0)), brute_norm_2x2(T, 1.0, 3.0), 1e-3);
    EXPECT_NEAR(op_norm_exact(T, Exponent::from_p(1.5), kInf), brute_norm_2x2(T, 1.5, INFINITY), 1e-3);
    EXPECT_NEAR(op_norm_exact(T, kTwo, kTwo), brute_norm_2x2(T, 2.0, 2.0), 1e-3);
  }
}

#ifdef HARMONIC_HAVE_EIGEN
TEST(OpNormExact, SpectralNormMatchesSvd) {
  std::mt19937_64 rng(31);
  for (std::size_t m : {1u, 2u, 3u, 4u, 8u}) {
    for (int t = 0; t < 10; ++t) {
      const auto T = random_map(rng, m);
      Eigen::MatrixXcd A(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) A(i, j) = T(i, j);
      const double sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(A).singularValues()(0);
      EXPECT_NEAR(op_norm_exact(T, kTwo, kTwo), sv, 1e-9 * sv);
    }
  }
}
#endif

TEST(OpNormExact, RepeatedTopSingularValue) {
  // rotation scaled by 3: both singular values equal
  const double c = std::cos(0.7), s = std::sin(0.7);
  const LinearMap R(2, {3 * c, -3 * s, 3 * s, 3 * c});
  EXPECT_NEAR(op_norm_exact(R, kTwo, kTwo), 3.0, 1e-9);
}

TEST(OpNormLower, Examples) {
  const auto I = LinearMap::identity(4);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto e = Exponent::from_p(p);
    EXPECT_NEAR(op_norm_lower(I, e, e, 3, 1), 1.0, 1e-9);
  }
  EXPECT_NEAR(op_norm_lower(I, kInf, kInf, 3, 1), 1.0, 1e-9);
  EXPECT_NEAR(op_norm_lower(hadamard(), kTwo, kTwo, 100, 7), std::sqrt(2.0), 1e-6);
  EXPECT_EQ(op_norm_lower(LinearMap(3, std::vector<complex>(9, 0.0)), kTwo, kTwo, 5, 1), 0.0);
  EXPECT_THROW(op_norm_lower(I, kTwo, kTwo, 0, 1), DomainError);
}

TEST(OpNormLower, NeverAboveExactAndTightForSmallMaps) {
  std::mt19937_64 rng(32);
  const std::vector<std::pair<Exponent, Exponent>> pairs = {
      {kOne, kInf}, {kTwo, kTwo}, {kOne, kTwo}, {kTwo, kInf}, {Exponent::from_p(1.5), kInf}, {kOne, Exponent::from_p(3.0)}};
  for (std::size_t m = 1; m <= 3; ++m)
    for (int t = 0; t < 10; ++t) {
      const auto T = random_map(rng, m);
      for (auto [p, q] : pairs) {
        const double exact = op_norm_exact(T, p, q);
        const double lower = op_norm_lower(T, p, q, 10, 5);
        EXPECT_LE(lower, exact * (1 + 1e-12));
        EXPECT_NEAR(lower, exact, 1e-6 * exact);
      }
    }
}

TEST(OpNormLower, Deterministic) {
  std::mt19937_64 rng(33);
  const auto T = random_map(rng, 4);
  const auto p = Exponent::from_p(1.3), q = Exponent::from_p(2.7);
  EXPECT_EQ(op_norm_lower(T, p, q, 8, 99), op_norm_lower(T, p, q, 8, 99));
}

TEST(ThorinCoefficientsTest, ClosedForm) {
  const auto c = thorin_coefficients(kOne, kTwo, 0.5);
  EXPECT_NEAR(c.a0, -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.a1, 1.0 / 3.0, 1e-15);
  const auto flat = thorin_coefficients(kTwo, kTwo, 0.3);
  EXPECT_EQ(flat.a0, 0.0);
  EXPECT_EQ(flat.a1, 0.0);
}

TEST(ThorinFamily, Examples) {
  std::mt19937_64 rng(34);
  auto v = oracle::random_vector(rng, 5);
  const auto p43 = intermediate_exponent(kOne, kTwo, 0.5);
  const double n = vec_norm(v, p43);
  for (auto& z : v) z /= n;

  const auto at_t = thorin_family(v, kOne, kTwo, 0.5, {0.5, 0.0});
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_LE(std::abs(at_t[j] - v[j]), 1e-15);

  for (double y : {-3.0, 0.0, 1.7}) {
    const auto a = thorin_family(v, kOne, kTwo, 0.5, {0.0, y});
    double s = 0.0;
    for (auto z : v) s += std::pow(std::abs(z), 4.0 / 3.0);
    EXPECT_NEAR(vec_norm(a, kOne), s, 1e-12);
    EXPECT_NEAR(vec_norm(a, kOne), 1.0, 1e-12);
  }

  const auto p3 = Exponent::from_p(3.0);
  const auto flat = thorin_family(v, p3, p3, 0.4, {0.8, 2.0});
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_LE(std::abs(flat[j] - v[j]), 1e-15);

  EXPECT_THROW(thorin_family(v, kOne, kTwo, 0.5, {1.2, 0.0}), DomainError);
  EXPECT_THROW(thorin_family(v, kOne, kTwo, 0.0, {0.5, 0.0}), DomainError);
  EXPECT_THROW(thorin_family(v, kOne, kTwo, 1.0, {0.5, 0.0}), DomainError);
}

TEST(ThorinFamily, NormInvarianceWithZeros) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) {
    auto v = oracle::random_vector(rng, 4);
    v[t % 4] = 0.0;
    const double tt = 0.1 + 0.8 * (t % 9) / 8.0;
    for (auto [p0, p1] : {std::pair{kOne, kTwo}, std::pair{kInf, kTwo}, std::pair{Exponent::from_p(1.2), Exponent::from_p(5.0)}}) {
      const auto pt = intermediate_exponent(p0, p1, tt);
      auto w = v;
      const double n = vec_norm(w, pt);
      for (auto& z : w) z /= n;
      for (int ix = 0; ix <= 4; ++ix)
        for (int iy = 0; iy < 16; ++iy) {
          const complex z{ix / 4.0, -4.0 + 8.0 * iy / 15.0};
          const auto px = intermediate_exponent(p0, p1, z.real());
          EXPECT_NEAR(vec_norm(thorin_family(w, p0, p1, tt, z), px), 1.0, 1e-9);
        }
    }
  }
}

TEST(RieszThorinVerify, HadamardMap) {
  const auto rep = riesz_thorin_verify(hadamard(), kOne, kInf, kTwo, kTwo, kInterior, 20, 3);
  EXPECT_EQ(rep.L0, 1.0);
  EXPECT_NEAR(rep.L1, std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(rep.ok);
  for (const auto& pt : rep.points) {
    EXPECT_NEAR(pt.bound, std::pow(2.0, pt.t / 2.0), 1e-12);
    EXPECT_LE(pt.lower, pt.bound * (1 + 1e-6));
  }
}

TEST(RieszThorinVerify, IdentityIsTight) {
  const auto rep = riesz_thorin_verify(LinearMap::identity(3), kOne, kInf, kTwo, kTwo, kInterior, 5, 1);
  EXPECT_TRUE(rep.ok);
  for (const auto& pt : rep.points) {
    EXPECT_NEAR(pt.bound, 1.0, 1e-12);
    EXPECT_NEAR(pt.lower, 1.0, 1e-9);
  }
}

TEST(RieszThorinVerify, RandomMaps) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(100 + seed);
    const auto rep = riesz_thorin_verify(random_map(rng, 4), kOne, kInf, kTwo, kTwo, kInterior, 10, seed);
    EXPECT_TRUE(rep.ok) << seed;
    EXPECT_LE(rep.worst_ratio, 1 + 1e-6);
  }
}

TEST(RieszThorinVerify, UnsupportedEndpoints) {
  EXPECT_THROW(riesz_thorin_verify(hadamard(), Exponent::from_p(1.5), Exponent::from_p(3.0), kTwo, kTwo, kInterior, 2, 1),
               DomainError);
}

TEST(StripMax, Examples) {
  const ExpSum c(1.0, {{complex(2.0, -1.0), 0}});
  for (double x : {0.0, 0.4, 1.0}) EXPECT_NEAR(strip_max(c, x, 64), std::sqrt(5.0), 1e-14);

  for (double a : {-2.0, -1.0, 1.0, 2.0}) {
    const ExpSum e(std::abs(a), {{1.0, a > 0 ? 1 : -1}});
    for (double x : {0.0, 0.3, 1.0}) EXPECT_NEAR(strip_max(e, x, 64), std::exp(a * x), 1e-13 * std::exp(a * x));
  }

  const double w = 1.5;
  const ExpSum f(w, {{1.0, 0}, {1.0, 1}});
  for (double x : {0.0, 0.5, 1.0}) EXPECT_NEAR(strip_max(f, x, 4096), 1.0 + std::exp(w * x), 1e-12);
  EXPECT_THROW(strip_max(f, 0.5, 1), DomainError);
  EXPECT_THROW(strip_max(f, 1.5, 10), DomainError);
}

TEST(ThreeLines, Examples) {
  for (double a : {-2.0, -1.0, 1.0, 2.0}) {
    const auto rep = three_lines_check(ExpSum(std::abs(a), {{1.0, a > 0 ? 1 : -1}}), kInterior, 64);
    EXPECT_TRUE(rep.ok);
    for (const auto& pt : rep.points) EXPECT_NEAR(pt.ratio(), 1.0, 1e-9);
  }
  const auto rc = three_lines_check(ExpSum(1.0, {{3.0, 0}}), kInterior, 16);
  for (const auto& pt : rc.points) EXPECT_NEAR(pt.ratio(), 1.0, 1e-15);
  EXPECT_THROW(three_lines_check(ExpSum(1.0, {{1.0, 0}}), std::vector<double>{1.2}, 16), DomainError);
}

TEST(ThreeLines, RandomExpSums) {
  std::mt19937_64 rng(36);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    std::vector<ExpSum::Term> terms;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) terms.push_back({complex(u(rng), u(rng)), static_cast<std::int64_t>(rng() % 9) - 4});
    const auto rep = three_lines_check(ExpSum(0.5 + u(rng) * 0.4, terms), kInterior, 4096);
    EXPECT_TRUE(rep.ok);
    EXPECT_LE(rep.worst_ratio, 1 + 1e-6);
  }
}

TEST(ThorinPipeline, RandomMaps) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    const double tt = kInterior[t % kInterior.size()];
    const auto T = random_map(rng, 3);
    auto v = oracle::random_vector(rng, 3), w = oracle::random_vector(rng, 3);
    const auto pt = intermediate_exponent(kOne, kTwo, tt);
    const auto qdt = conjugate_exponent(intermediate_exponent(kInf, kTwo, tt));
    const double nv = vec_norm(v, pt), nw = vec_norm(w, qdt);
    for (auto& z : v) z /= nv;
    for (auto& z : w) z /= nw;
    const auto rep = thorin_pipeline_check(T, v, w, kOne, kInf, kTwo, kTwo, tt, 20.0, 801);
    EXPECT_TRUE(rep.ok) << t;
    EXPECT_LE(rep.Ft, rep.boundary_max * (1 + 1e-6));
    EXPECT_LE(rep.norm_deviation, 1e-9);
  }
}

TEST(LinearMapTest, ApplyAndAdjoint) {
  const LinearMap T(2, {complex(1, 1), 2.0, 0.0, complex(0, -1)});
  const std::vector<complex> v{1.0, complex(0, 1)};
  const auto u = T.apply(v);
  EXPECT_EQ(u[0], complex(1, 1) + complex(0, 2));
  EXPECT_EQ(u[1], complex(1, 0));
  const auto a = T.apply_adjoint(v);
  EXPECT_EQ(a[0], complex(1, -1));
  EXPECT_EQ(a[1], complex(2, 0) + complex(0, 1) * complex(0, 1));
  EXPECT_THROW(T.apply(std::vector<complex>{1.0}), DomainError);
  EXPECT_THROW(LinearMap(2, {1.0, 2.0, 3.0}), DomainError);
}
