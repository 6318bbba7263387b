#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/oracle.hpp"
#include "sigmahull/random.hpp"

using namespace th;

namespace {

TEST(Semilinear, ApplyExamples) {
  auto f = gf(3);
  const auto v = vec({1, 2, 0});
  EXPECT_EQ(sigma_apply(euclid(f, 3), v), v);
  EXPECT_EQ(sigma_apply(SemilinearIsometry(mono(f, {2, 0, 1}, {2, 1, 2}), 1), vec({0, 0, 0})), vec({0, 0, 0}));
  // diag(1,2) times the transposition, s = 1 (= e over GF(3)).
  const SemilinearIsometry sigma(mono(f, {1, 0}, {1, 2}), 1);
  EXPECT_EQ(sigma_apply(sigma, vec({1, 2})), vec({1, 1}));
  EXPECT_THROW(sigma_apply(sigma, v), Error);
}

TEST(Semilinear, ApplyGalois) {
  auto f = gf(4);
  // pi_1 squares each coordinate; with M = I only the Frobenius acts.
  const auto sigma = SemilinearIsometry::galois(f, 2, 1);
  EXPECT_EQ(sigma_apply(sigma, vec({2, 3})), vec({3, 2}));
  EXPECT_THROW(SemilinearIsometry::galois(f, 2, 3), Error);
}

TEST(Semilinear, InnerProduct) {
  auto f = gf(3);
  const auto e = euclid(f, 3);
  EXPECT_EQ(sigma_inner(vec({0, 0, 0}), vec({1, 2, 1}), e), Element{0});
  EXPECT_EQ(sigma_inner(vec({1, 1, 1}), vec({1, 1, 1}), e), Element{0});
  EXPECT_EQ(sigma_inner(vec({1, 1, 1}), vec({1, 1, 2}), e), Element{1});
}

TEST(Semilinear, DualExamples) {
  auto f = gf(3);
  EXPECT_TRUE(codes_equal(sigma_dual(rep3(), euclid(f, 3)), rep3_dual()));
  EXPECT_TRUE(sigma_dual(LinearCode::full_space(f, 3), euclid(f, 3)).is_zero());
  const auto c = code(gf(5), 2, 4, {1, 2, 3, 4, 0, 1, 1, 1});
  EXPECT_TRUE(codes_equal(sigma_dual(c, euclid(gf(5), 4)), LinearCode::from_generator(c.parity_check())));
}

TEST(Semilinear, RelativeHullExamples) {
  auto f = gf(3);
  const auto e = euclid(f, 3);
  EXPECT_EQ(relative_hull_dim(rep3(), rep3(), e), 1u);
  EXPECT_EQ(relative_hull_dim(rep3_dual(), rep3_dual(), e), sigma_hull_dim(rep3_dual(), e));
  EXPECT_EQ(relative_hull_dim(rep3_dual(), LinearCode::full_space(f, 3), e), 0u);
  EXPECT_EQ(bidual_relative_dim(LinearCode::full_space(f, 3), rep3(), e), 2u);
  EXPECT_THROW(relative_hull_dim(rep3(), LinearCode::full_space(f, 4), euclid(f, 4)), Error);
}

TEST(Semilinear, BidualGf4) {
  auto f = gf(4);
  gen::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto c1 = gen::code(f, 4, 2, rng);
    const auto c2 = gen::code(f, 4, 2, rng);
    const SemilinearIsometry sigma(gen::monomial(f, 4, rng), 1);
    EXPECT_EQ(bidual_relative_dim(c1, c2, sigma), oracle::bidual_relative_dim(c1, c2, sigma));
  }
}

TEST(Semilinear, HullExamples) {
  auto f = gf(3);
  const auto full = sigma_hull(LinearCode::full_space(f, 3), euclid(f, 3));
  EXPECT_EQ(full.dim, 0u);
  EXPECT_EQ(full.basis.rows(), 0u);
  const auto rep = sigma_hull(rep3(), euclid(f, 3));
  EXPECT_EQ(rep.dim, 1u);
  EXPECT_EQ(rep.basis, mat(f, 1, 3, {1, 1, 1}));
}

TEST(Semilinear, RankFormsAgree) {
  gen::Rng rng(9);
  for (std::uint64_t q : {3, 4, 8, 9}) {
    auto f = gf(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 2 + t % 4;
      const auto c1 = gen::code_in_range(f, n, 1, n, rng);
      const auto c2 = gen::code_in_range(f, n, 1, n, rng);
      const auto sigma = gen::sigma(f, n, rng);
      const auto r = relative_hull_forms(c1, c2, sigma);
      EXPECT_EQ(r.via_parity, r.via_generator);
      const auto b = bidual_relative_forms(c1, c2, sigma);
      EXPECT_EQ(b.via_parity, b.via_generator);
      const auto h = hull_forms(c1, sigma);
      EXPECT_EQ(h.via_parity, h.via_generator);
      // The sigma dual is the Euclidean dual of the image code.
      EXPECT_TRUE(codes_equal(sigma_dual(c1, sigma), sigma_dual(sigma_image_code(c1, sigma), euclid(f, n))));
    }
  }
}

TEST(Semilinear, RequireCompatible) {
  auto f = gf(3);
  try {
    require_compatible(rep3(), euclid(f, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Incompatible);
  }
  EXPECT_THROW(require_compatible(rep3(), euclid(gf(5), 3)), Error);
}

}  // namespace
