#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "sigmahull/sigmahull.h"

namespace {

using Json = nlohmann::json;

const char* kRep = R"({"field":{"p":3,"e":1},"generator":{"rows":1,"cols":3,"entries":[1,1,1]}})";
const char* kRepDual = R"({"field":{"p":3,"e":1},"generator":{"rows":2,"cols":3,"entries":[1,2,0,0,1,2]}})";
const char* kMp = R"({"A":{"rows":2,"cols":2,"entries":[1,1,1,2]},
  "constituents":[
    {"field":{"p":3,"e":1},"generator":{"rows":1,"cols":3,"entries":[1,1,1]}},
    {"field":{"p":3,"e":1},"generator":{"rows":2,"cols":3,"entries":[1,2,0,0,1,2]}}],
  "sigma":{"tau_hat":{"perm":[1,2],"diag":[1,1]},"tau_tilde":{"perm":[1,2,3],"diag":[1,1,1]}}})";

std::string take(char* s) {
  std::string out = s ? s : "";
  sh_string_free(s);
  return out;
}

struct Fixture : ::testing::Test {
  sh_code* rep = nullptr;
  sh_sigma* euclid = nullptr;
  void SetUp() override {
    ASSERT_EQ(sh_code_from_json(kRep, &rep), SH_OK);
    ASSERT_EQ(sh_sigma_from_json(nullptr, rep, &euclid), SH_OK);
  }
  void TearDown() override {
    sh_sigma_free(euclid);
    sh_code_free(rep);
  }
};

TEST_F(Fixture, Info) {
  uint32_t q = 0;
  size_t n = 0, k = 0, d = 0;
  EXPECT_EQ(sh_code_info(rep, &q, &n, &k), SH_OK);
  EXPECT_EQ(q, 3u);
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(k, 1u);
  EXPECT_EQ(sh_code_min_distance(rep, &d), SH_OK);
  EXPECT_EQ(d, 3u);
}

TEST_F(Fixture, Hull) {
  size_t dim = 0;
  char* basis = nullptr;
  ASSERT_EQ(sh_sigma_hull(rep, euclid, &dim, &basis), SH_OK);
  EXPECT_EQ(dim, 1u);
  EXPECT_EQ(Json::parse(take(basis))["entries"], Json::parse("[1,1,1]"));

  sh_code* dual = nullptr;
  ASSERT_EQ(sh_sigma_dual(rep, euclid, &dual), SH_OK);
  size_t k = 0;
  sh_code_info(dual, nullptr, nullptr, &k);
  EXPECT_EQ(k, 2u);
  // rep ∩ (rep^⊥)^⊥ = rep
  EXPECT_EQ(sh_relative_hull_dim(rep, dual, euclid, &dim), SH_OK);
  EXPECT_EQ(dim, 1u);
  sh_code_free(dual);
}

TEST_F(Fixture, Errors) {
  sh_code* bad = nullptr;
  EXPECT_EQ(sh_code_from_json("{bad", &bad), SH_ERR_PARSE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::string(sh_last_error()), "");
  EXPECT_EQ(sh_code_load("/nonexistent.json", &bad), SH_ERR_IO);
  EXPECT_EQ(sh_code_from_json(nullptr, &bad), SH_ERR_INVALID_ARGUMENT);

  sh_sigma* s = nullptr;
  EXPECT_EQ(sh_sigma_from_json(R"({"perm":[1,2],"diag":[1,1]})", rep, &s), SH_ERR_INCOMPATIBLE);
  EXPECT_EQ(sh_sigma_from_json(R"({"perm":[1,2,3],"diag":[1,1,1],"s":2})", rep, &s), SH_ERR_INVALID_EXPONENT);

  char* out = nullptr;
  EXPECT_EQ(sh_steer(rep, nullptr, euclid, 5, 0, 0, SH_SEARCH_AUTO, &out), SH_ERR_TARGET_OUT_OF_RANGE);
  EXPECT_EQ(sh_steer(rep, nullptr, euclid, 0, 0, 0, SH_SEARCH_AUTO, &out), SH_ERR_SEARCH_EXHAUSTED);
  EXPECT_EQ(sh_verify("nope", 1, 1, 4, nullptr, 0, nullptr, nullptr, nullptr), SH_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(sh_status_name(SH_ERR_FIELD_TOO_SMALL), "FieldTooSmall");

  size_t dim = 0;
  EXPECT_EQ(sh_sigma_hull(rep, euclid, &dim, nullptr), SH_OK);
  EXPECT_STREQ(sh_last_error(), "");
}

TEST_F(Fixture, SigmaRoundTrip) {
  char* j = nullptr;
  ASSERT_EQ(sh_sigma_to_json(euclid, &j), SH_OK);
  const std::string text = take(j);
  EXPECT_EQ(text, R"({"perm":[1,2,3],"diag":[1,1,1],"s":1})");
  sh_sigma* again = nullptr;
  ASSERT_EQ(sh_sigma_from_json(text.c_str(), rep, &again), SH_OK);
  sh_sigma_free(again);
}

TEST_F(Fixture, Steer) {
  sh_code* dual = nullptr;
  ASSERT_EQ(sh_code_from_json(kRepDual, &dual), SH_OK);
  char* out = nullptr;
  ASSERT_EQ(sh_steer(rep, rep, euclid, 0, 0, 0, SH_SEARCH_AUTO, &out), SH_OK);
  const Json r = Json::parse(take(out));
  EXPECT_TRUE(r.contains("witness"));
  EXPECT_TRUE(r["witness"].contains("perm"));
  EXPECT_GE(r["trials"].get<int>(), 1);
  sh_code_free(dual);
}

TEST_F(Fixture, EaqeccTables) {
  char* out = nullptr;
  ASSERT_EQ(sh_eaqecc_hull(rep, euclid, SH_FORMAT_CSV, &out), SH_OK);
  EXPECT_EQ(take(out),
            "q,n,k,d,d_flag,c,h,provenance,status\n"
            "3,3,0,3,exact,1,1,hull:1,certified\n"
            "3,3,1,2,exact,0,1,hull:2,certified\n");
  ASSERT_EQ(sh_eaqecc_pair(rep, rep, SH_FORMAT_JSON, &out), SH_OK);
  const Json pair = Json::parse(take(out));
  ASSERT_EQ(pair.size(), 1u);
  EXPECT_EQ(pair[0]["c"], 1);
  EXPECT_EQ(pair[0]["k"], 0);
  ASSERT_EQ(sh_eaqecc_family(rep, euclid, 0, 0, SH_FORMAT_JSON, &out), SH_OK);
  EXPECT_EQ(Json::parse(take(out)).size(), 4u);
  ASSERT_EQ(sh_eaqecc_mds(rep, euclid, 0, 0, SH_FORMAT_CSV, &out), SH_OK);
  take(out);

  sh_code* binary = nullptr;
  ASSERT_EQ(sh_code_from_json(R"({"field":{"p":2,"e":1},"generator":{"rows":1,"cols":2,"entries":[1,1]}})", &binary),
            SH_OK);
  sh_sigma* e2 = nullptr;
  ASSERT_EQ(sh_sigma_from_json(nullptr, binary, &e2), SH_OK);
  EXPECT_EQ(sh_eaqecc_family(binary, e2, 0, 0, SH_FORMAT_CSV, &out), SH_ERR_FIELD_TOO_SMALL);
  sh_sigma_free(e2);
  sh_code_free(binary);
}

TEST(CApi, MatrixProduct) {
  sh_mpspec* spec = nullptr;
  ASSERT_EQ(sh_mpspec_from_json(kMp, nullptr, &spec), SH_OK);
  size_t dim = 0;
  char* detail = nullptr;
  ASSERT_EQ(sh_mp_hull(spec, &dim, &detail), SH_OK);
  EXPECT_EQ(dim, 2u);
  const Json d = Json::parse(take(detail));
  EXPECT_EQ(d["rho"], Json::parse("[1,2]"));
  EXPECT_EQ(d["alphas"], Json::parse("[2,2]"));
  EXPECT_EQ(d["terms"], Json::parse("[1,1]"));

  int flag = -1;
  ASSERT_EQ(sh_mp_check_dual_containing(spec, &flag), SH_OK);
  EXPECT_EQ(flag, 0);
  ASSERT_EQ(sh_mp_check_self_orthogonal(spec, &flag), SH_OK);
  EXPECT_EQ(flag, 0);

  sh_code* c = nullptr;
  ASSERT_EQ(sh_mp_build(spec, &c), SH_OK);
  size_t n = 0, k = 0;
  sh_code_info(c, nullptr, &n, &k);
  EXPECT_EQ(n, 6u);
  EXPECT_EQ(k, 3u);
  sh_code_free(c);

  char* dual = nullptr;
  ASSERT_EQ(sh_mp_sigma_dual(spec, &dual), SH_OK);
  const std::string dual_text = take(dual);
  sh_mpspec* back = nullptr;
  ASSERT_EQ(sh_mpspec_from_json(dual_text.c_str(), nullptr, &back), SH_OK);
  sh_mpspec_free(back);

  char* table = nullptr;
  ASSERT_EQ(sh_eaqecc_mp(spec, 0, 0, SH_FORMAT_JSON, &table), SH_OK);
  EXPECT_EQ(Json::parse(take(table)).size(), 6u);
  sh_mpspec_free(spec);
}

TEST(CApi, Verify) {
  char* text = nullptr;
  char* json = nullptr;
  uint64_t failures = 99;
  const uint32_t fields[] = {3, 4};
  ASSERT_EQ(sh_verify("cor32", 5, 20, 4, fields, 2, &text, &json, &failures), SH_OK);
  EXPECT_EQ(failures, 0u);
  EXPECT_NE(take(text).find("20/20 pass"), std::string::npos);
  EXPECT_EQ(Json::parse(take(json))["passed"], 20);

  ASSERT_EQ(sh_verify("lemma31", 5, 0, 4, nullptr, 0, &text, nullptr, &failures), SH_OK);
  EXPECT_NE(take(text).find("0/0 pass"), std::string::npos);
}

}  // namespace
