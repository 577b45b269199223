#include <gtest/gtest.h>

#include <random>

#include "harmonic/conv_operator.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

const Exponent kOne = Exponent::one(), kTwo = Exponent::two(), kInf = Exponent::infinity();
const GroupSpec kZ43({4, 3});

GroupFunction random_function(const GroupSpec& g, std::mt19937_64& rng) {
  return GroupFunction(g, oracle::random_vector(rng, g.size()));
}

double max_diff(std::span<const complex> a, std::span<const complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<Exponent> grid() {
  return {kOne, Exponent::from_p(4.0 / 3.0), kTwo, Exponent::from_p(4.0), kInf, Exponent::from_p(1.1),
          Exponent::from_p(3.0)};
}

}  // namespace

TEST(ConvApply, Examples) {
  std::mt19937_64 rng(40);
  const auto f = random_function(kZ43, rng);
  EXPECT_LE(max_diff(conv_apply(ConvKernel(delta0(kZ43)), f).values(), f.values()), 1e-14);

  complex mean = 0;
  for (auto z : f.values()) mean += z;
  mean /= 12.0;
  const auto avg = conv_apply(ConvKernel(constant(kZ43, 1.0)), f);
  for (std::size_t x = 0; x < 12; ++x) EXPECT_LE(std::abs(avg[x] - mean), 1e-14);

  const ConvKernel k(random_function(kZ43, rng));
  for (std::size_t a = 0; a < 12; ++a) {
    const auto chi = character(kZ43, element_at<dual_tag>(kZ43, a));
    const auto out = conv_apply(k, chi);
    for (std::size_t x = 0; x < 12; ++x) EXPECT_LE(std::abs(out[x] - k.transform()[a] * chi[x]), 1e-12);
  }
}

TEST(ConvKernelTest, CachesMatchRecomputation) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    const auto b = random_function(kZ43, rng);
    const ConvKernel k(b);
    EXPECT_NEAR(k.l1_norm(), group_norm(b, kOne), 1e-12 * k.l1_norm());
    EXPECT_LE(max_diff(k.transform().values(), fourier_naive(b).values()), 1e-12);
    EXPECT_NEAR(k.transform_sup(), dual_pnorm(fourier_naive(b), kInf), 1e-12 * k.transform_sup());
  }
}

TEST(BoundP, Examples) {
  std::mt19937_64 rng(42);
  const ConvKernel k(random_function(kZ43, rng));
  EXPECT_NEAR(bound_p(k, kOne), k.l1_norm(), 1e-15);
  EXPECT_NEAR(bound_p(k, kInf), k.l1_norm(), 1e-15);
  EXPECT_NEAR(bound_p(k, kTwo), k.transform_sup(), 1e-15);
  EXPECT_NEAR(bound_p(k, Exponent::from_p(4.0)), bound_p(k, Exponent::from_p(4.0 / 3.0)), 1e-14);
  EXPECT_NEAR(bound_p(k, Exponent::from_p(4.0 / 3.0)), std::sqrt(k.l1_norm() * k.transform_sup()), 1e-14);
}

TEST(BoundP, NeverViolated) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 50; ++t) {
    const ConvKernel k(random_function(kZ43, rng));
    for (int s = 0; s < 5; ++s) {
      auto f = random_function(kZ43, rng);
      if (s == 0) f = character(kZ43, element_at<dual_tag>(kZ43, rng() % 12));
      const auto out = conv_apply(k, f);
      for (auto p : grid()) EXPECT_LE(group_norm(out, p), bound_p(k, p) * group_norm(f, p) * (1 + 1e-9));
    }
  }
}

TEST(BoundP, BelowTrivialL1Bound) {
  std::mt19937_64 rng(44);
  const ConvKernel k(random_function(kZ43, rng));
  for (auto p : grid()) EXPECT_LE(bound_p(k, p), k.l1_norm() * (1 + 1e-12));
}

TEST(Reflect, Examples) {
  const GroupSpec z4({4});
  const auto r = reflect(ConvKernel(GroupFunction(z4, {0.0, 1.0, 0.0, 0.0})));
  EXPECT_EQ(r.kernel()[3], complex(1.0));
  EXPECT_EQ(r.kernel()[1], complex(0.0));
  const auto d = reflect(ConvKernel(delta0(kZ43)));
  EXPECT_LE(max_diff(d.kernel().values(), delta0(kZ43).values()), 0.0);
  const GroupFunction sym(z4, {1.0, 2.0, 3.0, 2.0});
  EXPECT_LE(max_diff(reflect(ConvKernel(sym)).kernel().values(), sym.values()), 0.0);
}

TEST(Duality, Examples) {
  std::mt19937_64 rng(45);
  const ConvKernel k(random_function(kZ43, rng));
  const auto d = duality_pairing_check(k, delta0(kZ43), delta0(kZ43));
  EXPECT_TRUE(d.ok);
  EXPECT_LE(std::abs(d.lhs - k.kernel()[0]), 1e-12);
  EXPECT_LE(std::abs(d.rhs - k.kernel()[0]), 1e-12);

  const ConvKernel id(delta0(kZ43));
  const auto f1 = random_function(kZ43, rng), f2 = random_function(kZ43, rng);
  const auto e = duality_pairing_check(id, f1, f2);
  EXPECT_TRUE(e.ok);
  complex direct = 0;
  for (std::size_t x = 0; x < 12; ++x) direct += f1[x] * f2[x];
  EXPECT_LE(std::abs(e.lhs - direct / 12.0), 1e-14);
}

TEST(Duality, RandomTriples) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 50; ++t) {
    const ConvKernel k(random_function(kZ43, rng));
    const auto f1 = random_function(kZ43, rng), f2 = random_function(kZ43, rng);
    const auto d = duality_pairing_check(k, f1, f2);
    EXPECT_TRUE(d.ok);
    EXPECT_LE(d.pairing_error, 1e-9 * d.pairing_scale + 1e-12);
    // reflected operator has the same norm at the conjugate exponent
    const auto kr = reflect(k);
    for (auto p : grid()) {
      EXPECT_NEAR(group_norm(conv_apply(k, f1), p), group_norm(conv_apply(kr, reflect(f1)), p),
                  1e-12 * group_norm(conv_apply(k, f1), p));
      EXPECT_NEAR(bound_p(k, p), bound_p(kr, conjugate_exponent(p)), 1e-12 * bound_p(k, p));
    }
  }
}

TEST(Duality, OwnerMismatch) {
  const ConvKernel k(delta0(kZ43));
  EXPECT_THROW(duality_pairing_check(k, delta0(GroupSpec({12})), delta0(kZ43)), OwnerMismatch);
  EXPECT_THROW(conv_apply(k, delta0(GroupSpec({3, 4}))), OwnerMismatch);
}

TEST(Sharpness, Examples) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 50; ++t) {
    const ConvKernel k(random_function(kZ43, rng));
    const auto s1 = sharpness_witness(k, kOne);
    EXPECT_NEAR(s1.ratio, k.l1_norm(), 1e-9 * k.l1_norm());
    const auto s2 = sharpness_witness(k, kTwo);
    EXPECT_NEAR(s2.ratio, k.transform_sup(), 1e-9 * k.transform_sup());
    EXPECT_TRUE(is_character(s2.f, 1e-12));
  }

  // F(b) = (1, 0, ..., 0): b = constant 1, the unit character is the witness
  const auto s = sharpness_witness(ConvKernel(constant(kZ43, 1.0)), kTwo);
  EXPECT_NEAR(s.ratio, 1.0, 1e-12);
  EXPECT_LE(max_diff(s.f.values(), constant(kZ43, 1.0).values()), 1e-15);

  const auto id = sharpness_witness(ConvKernel(delta0(kZ43)), kTwo);
  EXPECT_NEAR(id.ratio, 1.0, 1e-12);
  EXPECT_LE(max_diff(id.f.values(), constant(kZ43, 1.0).values()), 1e-15);  // first maximizer is a = 0

  EXPECT_THROW(sharpness_witness(ConvKernel(delta0(kZ43)), Exponent::from_p(3.0)), DomainError);
}
