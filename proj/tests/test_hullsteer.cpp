#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/hullsteer.hpp"
#include "sigmahull/oracle.hpp"
#include "sigmahull/random.hpp"

using namespace th;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(Steer, ConjugateMonomial) {
  auto f = gf(9);
  gen::Rng rng(2);
  const auto m = gen::monomial(f, 4, rng);
  EXPECT_TRUE(conjugate_monomial(m, MonomialMatrix::identity(f, 4), 1).is_identity());
  const auto mp = gen::monomial(f, 4, rng);
  EXPECT_EQ(conjugate_monomial(m, mp, 2), m * mp * m.inverse());
  for (std::uint32_t s : {1u, 2u}) {
    const auto c = conjugate_monomial(m, mp, s);
    EXPECT_EQ(c.frobenius(s) * m, m * mp);
  }
  EXPECT_EQ(code_of([&] { conjugate_monomial(m, MonomialMatrix::identity(f, 3), 1); }), ErrorCode::Incompatible);
  EXPECT_EQ(code_of([&] { conjugate_monomial(m, mp, 3); }), ErrorCode::InvalidExponent);
}

TEST(Steer, CandidateCount) {
  EXPECT_EQ(monomial_count(3, 3), 48u);
  EXPECT_TRUE(exhaustive_by_default(3, 3));
  EXPECT_FALSE(exhaustive_by_default(9, 6));
  MonomialCandidates all(gf(3), 3, true, 0);
  std::size_t count = 0;
  ASSERT_TRUE(all.next()->is_identity());
  for (count = 1; all.next(); ++count) {
  }
  EXPECT_GE(count, 48u);
}

TEST(Steer, RelativeTopIsIdentity) {
  auto f = gf(3);
  const auto r = steer_relative_hull(rep3(), rep3(), euclid(f, 3), 1);
  EXPECT_TRUE(r.witness.is_identity());
  EXPECT_EQ(r.trials, 1u);
}

TEST(Steer, RelativeRepToZero) {
  auto f = gf(3);
  const auto r = steer_relative_hull(rep3(), rep3(), euclid(f, 3), 0);
  EXPECT_EQ(relative_hull_dim(rep3(), r.code, euclid(f, 3)), 0u);
  EXPECT_TRUE(codes_equal(r.code, apply_monomial(rep3(), r.witness)));
  EXPECT_EQ(oracle::relative_dim(rep3(), r.code, euclid(f, 3)), 0u);
}

TEST(Steer, SelfRepHasNoHullZeroEquivalent) {
  auto f = gf(3);
  // Every monomial image of (1,1,1) has weight 3, and a^2 = 1 for all nonzero a in GF(3).
  EXPECT_EQ(reachable_self_hull_dims(rep3(), euclid(f, 3)), (std::set<std::size_t>{1}));
  EXPECT_EQ(code_of([&] { steer_self_hull(rep3(), euclid(f, 3), 0); }), ErrorCode::SearchExhausted);
  EXPECT_TRUE(steer_self_hull(rep3(), euclid(f, 3), 1).witness.is_identity());
}

TEST(Steer, Errors) {
  auto f2 = gf(2);
  const auto c = code(f2, 1, 2, {1, 1});
  EXPECT_EQ(code_of([&] { steer_relative_hull(c, c, euclid(f2, 2), 0); }), ErrorCode::FieldTooSmall);
  EXPECT_EQ(code_of([&] { steer_self_hull(c, euclid(f2, 2), 0); }), ErrorCode::FieldTooSmall);
  auto f = gf(3);
  EXPECT_EQ(code_of([&] { steer_relative_hull(rep3(), rep3(), euclid(f, 3), 2); }), ErrorCode::TargetOutOfRange);
  EXPECT_EQ(code_of([&] { reachable_relative_dims(LinearCode::full_space(gf(9), 7), LinearCode::full_space(gf(9), 7),
                                                  euclid(gf(9), 7)); }),
            ErrorCode::TooLarge);
}

TEST(Steer, SeededSearchIsDeterministic) {
  auto f = gf(5);
  gen::Rng rng(4);
  const auto c1 = gen::code(f, 5, 3, rng);
  const auto c2 = gen::code(f, 5, 3, rng);
  const auto sigma = gen::sigma(f, 5, rng);
  const std::size_t top = relative_hull_dim(c1, c2, sigma);
  SearchOptions opt;
  opt.mode = SearchMode::Sampled;
  opt.seed = 17;
  for (std::size_t h = (c1.k() > c2.k() ? c1.k() - c2.k() : 0); h <= top; ++h) {
    const auto a = steer_relative_hull(c1, c2, sigma, h, opt);
    const auto b = steer_relative_hull(c1, c2, sigma, h, opt);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.trials, b.trials);
    EXPECT_EQ(relative_hull_dim(c1, a.code, sigma), h);
  }
}

TEST(Steer, ReachableRelativeRangeSmall) {
  gen::Rng rng(8);
  for (std::uint64_t q : {3, 4}) {
    auto f = gf(q);
    for (int t = 0; t < 10; ++t) {
      const auto c1 = gen::code_in_range(f, 3, 1, 3, rng);
      const auto c2 = gen::code_in_range(f, 3, 1, 3, rng);
      const auto sigma = gen::sigma(f, 3, rng);
      const auto reach = reachable_relative_dims(c1, c2, sigma);
      const std::size_t lo = c1.k() > c2.k() ? c1.k() - c2.k() : 0;
      for (std::size_t h = lo; h <= relative_hull_dim(c1, c2, sigma); ++h) EXPECT_TRUE(reach.count(h)) << h;
    }
  }
}

}  // namespace
