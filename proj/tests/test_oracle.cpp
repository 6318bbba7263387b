#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/oracle.hpp"

using namespace th;

namespace {

TEST(Oracle, Enumerate) {
  auto f2 = gf(2);
  const auto words = oracle::enumerate_codewords(code(f2, 1, 2, {1, 1}));
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], vec({0, 0}));
  EXPECT_EQ(words[1], vec({1, 1}));
  EXPECT_EQ(oracle::enumerate_codewords(rep3()).size(), 3u);
  const auto zero = oracle::enumerate_codewords(LinearCode::zero_space(gf(3), 4));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], vec({0, 0, 0, 0}));
  EXPECT_THROW(oracle::enumerate_codewords(LinearCode::full_space(gf(3), 5), 100), Error);
}

TEST(Oracle, HullExamples) {
  auto f = gf(3);
  EXPECT_EQ(oracle::sigma_hull_dim(LinearCode::full_space(f, 3), euclid(f, 3)), 0u);
  EXPECT_EQ(oracle::sigma_hull_dim(rep3(), euclid(f, 3)), 1u);
  EXPECT_EQ(oracle::relative_dim(rep3_dual(), LinearCode::full_space(f, 3), euclid(f, 3)), 0u);
  EXPECT_EQ(oracle::relative_dim(rep3(), rep3(), euclid(f, 3)), 1u);
}

TEST(Oracle, DualAndSubset) {
  auto f = gf(3);
  EXPECT_TRUE(oracle::equal(oracle::sigma_dual(rep3(), euclid(f, 3)), rep3_dual()));
  EXPECT_TRUE(oracle::subset(rep3(), rep3_dual()));
  EXPECT_FALSE(oracle::subset(rep3_dual(), rep3()));
  EXPECT_TRUE(oracle::in_sigma_dual(vec({1, 2, 0}), rep3(), euclid(f, 3)));
  EXPECT_FALSE(oracle::in_sigma_dual(vec({1, 0, 0}), rep3(), euclid(f, 3)));
}

TEST(Oracle, LogQ) {
  EXPECT_EQ(oracle::log_q_exact(1, 3), 0u);
  EXPECT_EQ(oracle::log_q_exact(81, 3), 4u);
  EXPECT_THROW(oracle::log_q_exact(10, 3), Error);
}

}  // namespace
