#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/mpcode.hpp"
#include "sigmahull/oracle.hpp"
#include "sigmahull/random.hpp"

using namespace th;

namespace {

Matrix a_example() { return mat(gf(3), 2, 2, {1, 1, 1, 2}); }

MpSigma euclid_mp(std::size_t k, std::size_t n) {
  auto f = gf(3);
  return MpSigma{MonomialMatrix::identity(f, k), MonomialMatrix::identity(f, n), 1};
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(MatrixProduct, Generator) {
  auto f = gf(3);
  const MatrixProductSpec single(mat(f, 1, 1, {1}), {rep3_dual()});
  EXPECT_EQ(mp_generator(single), rep3_dual().generator());

  const MatrixProductSpec direct(Matrix::identity(f, 2), {rep3(), rep3_dual()});
  EXPECT_EQ(mp_generator(direct), mat(f, 3, 6, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 1, 2}));

  const MatrixProductSpec spec(a_example(), {rep3(), rep3_dual()});
  const auto c = mp_code(spec);
  EXPECT_EQ(c.n(), 6u);
  EXPECT_EQ(c.k(), 3u);
  EXPECT_TRUE(codes_equal(c, code(f, 3, 6, {1, 1, 1, 1, 1, 1, 1, 0, 2, 2, 0, 1, 0, 1, 2, 0, 2, 1})));
}

TEST(MatrixProduct, RejectsDegenerateA) {
  auto f = gf(3);
  EXPECT_EQ(code_of([&] { MatrixProductSpec(mat(f, 2, 2, {1, 1, 2, 2}), {rep3(), rep3()}); }),
            ErrorCode::DegenerateDefiningMatrix);
  EXPECT_EQ(code_of([&] { MatrixProductSpec(a_example(), {rep3()}); }), ErrorCode::Incompatible);
}

TEST(MatrixProduct, RhoMonomialCheck) {
  auto f = gf(3);
  const auto w = rho_monomial_check(a_example(), MonomialMatrix::identity(f, 2), 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rho, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(w->alphas, (std::vector<Element>{Element{2}, Element{2}}));

  const auto id = rho_monomial_check(Matrix::identity(gf(5), 3), MonomialMatrix::identity(gf(5), 3), 1);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->alphas, (std::vector<Element>(3, Element{1})));

  auto f2 = gf(2);
  EXPECT_FALSE(rho_monomial_check(mat(f2, 2, 2, {1, 1, 0, 1}), MonomialMatrix::identity(f2, 2), 1));
  EXPECT_EQ(code_of([&] { rho_monomial_check(mat(f, 1, 2, {1, 1}), MonomialMatrix::identity(f, 1), 1); }),
            ErrorCode::NotSquare);
}

TEST(MatrixProduct, HullExamples) {
  auto f = gf(3);
  const MatrixProductSpec spec(a_example(), {rep3(), rep3_dual()});
  EXPECT_EQ(mp_hull_terms(spec, euclid_mp(2, 3)), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(mp_hull_dim(spec, euclid_mp(2, 3)), 2u);
  EXPECT_EQ(oracle::sigma_hull_dim(mp_code(spec), euclid_mp(2, 3).assembled()), 2u);

  const auto full = LinearCode::full_space(f, 3);
  EXPECT_EQ(mp_hull_dim(MatrixProductSpec(a_example(), {full, full}), euclid_mp(2, 3)), 0u);

  auto f2 = gf(2);
  const MatrixProductSpec bad(mat(f2, 2, 2, {1, 1, 0, 1}), {code(f2, 1, 2, {1, 1}), code(f2, 1, 2, {1, 1})});
  const MpSigma e2{MonomialMatrix::identity(f2, 2), MonomialMatrix::identity(f2, 2), 1};
  EXPECT_EQ(code_of([&] { mp_hull_dim(bad, e2); }), ErrorCode::PreconditionFailed);
}

TEST(MatrixProduct, Containment) {
  auto f = gf(3);
  const auto full = LinearCode::full_space(f, 3);
  EXPECT_TRUE(is_sigma_dual_containing(MatrixProductSpec(a_example(), {full, full}), euclid_mp(2, 3)));
  EXPECT_FALSE(is_sigma_dual_containing(MatrixProductSpec(a_example(), {rep3(), rep3()}), euclid_mp(2, 3)));
  EXPECT_TRUE(is_sigma_dual_containing(MatrixProductSpec(a_example(), {rep3_dual(), rep3_dual()}), euclid_mp(2, 3)));
  EXPECT_TRUE(is_sigma_self_orthogonal(MatrixProductSpec(a_example(), {rep3(), rep3()}), euclid_mp(2, 3)));
  EXPECT_FALSE(is_sigma_self_orthogonal(MatrixProductSpec(a_example(), {full, full}), euclid_mp(2, 3)));
}

TEST(MatrixProduct, SigmaDual) {
  auto f = gf(3);
  const MatrixProductSpec direct(Matrix::identity(f, 2), {rep3(), rep3_dual()});
  const auto d = mp_sigma_dual(direct, euclid_mp(2, 3));
  EXPECT_TRUE(codes_equal(d.constituents()[0], rep3_dual()));
  EXPECT_TRUE(codes_equal(d.constituents()[1], rep3()));

  const MatrixProductSpec one(mat(f, 1, 1, {1}), {rep3()});
  EXPECT_TRUE(codes_equal(mp_code(mp_sigma_dual(one, euclid_mp(1, 3))), rep3_dual()));

  const MatrixProductSpec spec(a_example(), {rep3(), rep3()});
  const auto dual = mp_code(mp_sigma_dual(spec, euclid_mp(2, 3)));
  EXPECT_TRUE(codes_equal(dual, sigma_dual(mp_code(spec), euclid_mp(2, 3).assembled())));
  EXPECT_TRUE(oracle::equal(dual, oracle::sigma_dual(mp_code(spec), euclid_mp(2, 3).assembled())));
}

TEST(MatrixProduct, RowSpanDistances) {
  auto f = gf(3);
  EXPECT_EQ(row_span_distances(Matrix::identity(f, 3)), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(row_span_distances(a_example()), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(row_span_distances(mat(f, 1, 4, {1, 1, 1, 1})), (std::vector<std::size_t>{4}));
  EXPECT_FALSE(is_nonsingular_by_columns(Matrix::identity(f, 2)));
  EXPECT_TRUE(is_nonsingular_by_columns(a_example()));
}

TEST(MatrixProduct, RandomBatteryAgainstOracle) {
  gen::Rng rng(3);
  for (std::uint64_t q : {3, 4, 5}) {
    for (int t = 0; t < 8; ++t) {
      auto inst = gen::mp_instance(gf(q), 2, 2 + t % 2, rng);
      ASSERT_TRUE(inst);
      const auto assembled = mp_code(inst->spec);
      const auto sigma = inst->sigma.assembled();
      EXPECT_EQ(mp_hull_dim(inst->spec, inst->sigma), oracle::sigma_hull_dim(assembled, sigma));
      const auto dual = oracle::sigma_dual(assembled, sigma);
      EXPECT_EQ(is_sigma_dual_containing(inst->spec, inst->sigma), oracle::subset(dual, assembled));
      EXPECT_EQ(is_sigma_self_orthogonal(inst->spec, inst->sigma), oracle::subset(assembled, dual));
      EXPECT_TRUE(oracle::equal(mp_code(mp_sigma_dual(inst->spec, inst->sigma)), dual));
    }
  }
}

}  // namespace
