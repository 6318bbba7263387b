#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sigmahull/eaqecc.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/mpcode.hpp"
#include "sigmahull/random.hpp"
#include "sigmahull/serialize.hpp"

using namespace th;
using sigmahull::io::Json;

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

TEST(Serialize, CodeRoundTrip) {
  gen::Rng rng(1);
  for (std::uint64_t q : {2, 4, 9, 25}) {
    const auto c = gen::code(gf(q), 5, 3, rng);
    const Json j = io::code_to_json(c);
    const auto back = io::code_from_json(io::parse_json(j.dump()));
    EXPECT_EQ(back.generator(), c.generator());
    EXPECT_EQ(io::code_to_json(back).dump(), j.dump());
  }
}

TEST(Serialize, CodeWithoutModulus) {
  const auto c = io::code_from_json(
      io::parse_json(R"({"field":{"p":2,"e":2},"generator":{"rows":1,"cols":2,"entries":[1,2]}})"));
  EXPECT_EQ(c.field()->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Serialize, CodeErrors) {
  EXPECT_EQ(code_of([] { io::parse_json("{bad"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              io::code_from_json(io::parse_json(R"({"field":{"p":3,"e":1},"generator":{"rows":1,"cols":3,"entries":[1,1]}})"));
            }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              io::code_from_json(io::parse_json(R"({"field":{"p":3,"e":1},"generator":{"rows":1,"cols":3,"entries":[1,1,3]}})"));
            }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              io::code_from_json(io::parse_json(R"({"field":{"p":6,"e":1},"generator":{"rows":1,"cols":1,"entries":[1]}})"));
            }),
            ErrorCode::InvalidField);
  EXPECT_EQ(code_of([] {
              io::code_from_json(io::parse_json(R"({"field":{"p":3,"e":1},"generator":{"rows":1,"cols":3,"entries":[0,0,0]}})"));
            }),
            ErrorCode::ZeroCode);
  EXPECT_EQ(code_of([] { io::read_json_file("/nonexistent/code.json"); }), ErrorCode::Io);
}

TEST(Serialize, SigmaRoundTrip) {
  gen::Rng rng(2);
  auto f = gf(9);
  for (int t = 0; t < 10; ++t) {
    const auto sigma = gen::sigma(f, 4, rng);
    const auto back = io::sigma_from_json(io::parse_json(io::sigma_to_json(sigma).dump()), f);
    EXPECT_EQ(back, sigma);
  }
  const auto e = io::sigma_from_json(io::parse_json(R"({"perm":[1,2,3],"diag":[1,1,1]})"), f);
  EXPECT_EQ(e.s(), 2u);
  EXPECT_EQ(code_of([&] { io::sigma_from_json(io::parse_json(R"({"perm":[1,2],"diag":[1,1],"s":3})"), f); }),
            ErrorCode::InvalidExponent);
  EXPECT_EQ(code_of([&] { io::sigma_from_json(io::parse_json(R"({"perm":[1,1],"diag":[1,1]})"), f); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { io::sigma_from_json(io::parse_json(R"({"perm":[1,2],"diag":[1,0]})"), f); }),
            ErrorCode::Parse);
}

TEST(Serialize, MatrixProductRoundTrip) {
  gen::Rng rng(3);
  auto inst = gen::mp_instance(gf(4), 2, 3, rng);
  ASSERT_TRUE(inst);
  const Json j = io::mp_to_json(inst->spec, inst->sigma);
  const auto back = io::mp_from_json(io::parse_json(j.dump()), {});
  ASSERT_TRUE(back.sigma);
  EXPECT_EQ(io::mp_to_json(back.spec, back.sigma).dump(), j.dump());
  EXPECT_EQ(back.sigma->s, inst->sigma.s);
}

TEST(Serialize, EaqeccRoundTrip) {
  auto f = gf(3);
  auto [a, b] = eaqecc_from_hull(LinearCode::full_space(f, 3), SemilinearIsometry::euclidean(f, 3));
  a.bound = 5;
  for (const auto& r : {a, b}) {
    const auto back = io::eaqecc_from_json(io::parse_json(io::eaqecc_to_json(r).dump()));
    EXPECT_EQ(io::eaqecc_to_json(back).dump(), io::eaqecc_to_json(r).dump());
  }
  EXPECT_TRUE(io::eaqecc_to_json(b)["d"].is_null());
  EXPECT_EQ(io::eaqecc_table_to_csv({a, b}),
            "q,n,k,d,d_flag,c,h,provenance,status\n"
            "3,3,3,1,exact,0,0,hull:1,certified\n"
            "3,3,0,,unavailable,3,0,hull:2,certified\n");
  EaqeccParams odd = a;
  odd.status = kUnrealized;
  odd.provenance = "x,y";
  EXPECT_NE(io::eaqecc_table_to_csv({odd}).find("\"x,y\",unrealized (search)"), std::string::npos);
}

}  // namespace
