// sigmahull command-line tool. Talks to the library only through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sigmahull/sigmahull.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCounterexample = 1, kParse = 2, kIncompatible = 3, kHypothesis = 4, kLimit = 5, kInternal = 6 };

int exit_code(sh_status st) {
  switch (st) {
    case SH_OK: return kOk;
    case SH_ERR_FORMULA_MISMATCH: return kCounterexample;
    case SH_ERR_PARSE:
    case SH_ERR_IO:
    case SH_ERR_INVALID_ARGUMENT:
    case SH_ERR_INVALID_FIELD:
    case SH_ERR_INVALID_EXPONENT:
    case SH_ERR_NOT_MONOMIAL:
      return kParse;
    case SH_ERR_FIELD_MISMATCH:
    case SH_ERR_INCOMPATIBLE:
    case SH_ERR_NOT_SQUARE:
      return kIncompatible;
    case SH_ERR_FIELD_TOO_SMALL:
    case SH_ERR_NOT_MDS:
    case SH_ERR_PRECONDITION_FAILED:
    case SH_ERR_TARGET_OUT_OF_RANGE:
    case SH_ERR_DEGENERATE_DEFINING_MATRIX:
    case SH_ERR_ZERO_CODE:
      return kHypothesis;
    case SH_ERR_TOO_LARGE:
    case SH_ERR_SEARCH_EXHAUSTED:
      return kLimit;
    default:
      return kInternal;
  }
}

struct Failure {
  sh_status status;
};

void check(sh_status st) {
  if (st != SH_OK) throw Failure{st};
}

struct Deleter {
  void operator()(sh_code* p) const { sh_code_free(p); }
  void operator()(sh_sigma* p) const { sh_sigma_free(p); }
  void operator()(sh_mpspec* p) const { sh_mpspec_free(p); }
  void operator()(char* p) const { sh_string_free(p); }
};
using CodePtr = std::unique_ptr<sh_code, Deleter>;
using SigmaPtr = std::unique_ptr<sh_sigma, Deleter>;
using SpecPtr = std::unique_ptr<sh_mpspec, Deleter>;
using StrPtr = std::unique_ptr<char, Deleter>;

CodePtr load_code(const std::string& path) {
  sh_code* c = nullptr;
  check(sh_code_load(path.c_str(), &c));
  return CodePtr(c);
}

SigmaPtr load_sigma(const std::string& path, const sh_code* code) {
  sh_sigma* s = nullptr;
  check(sh_sigma_load(path.empty() ? nullptr : path.c_str(), code, &s));
  return SigmaPtr(s);
}

SpecPtr load_spec(const std::string& path) {
  sh_mpspec* s = nullptr;
  check(sh_mpspec_load(path.c_str(), &s));
  return SpecPtr(s);
}

std::string take(char* s) {
  StrPtr owned(s);
  return s ? std::string(s) : std::string();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{SH_ERR_IO};
  }
}

// Minimum distance, or "unavailable" for the zero code and codes past the budget.
std::string distance_text(const sh_code* code) {
  size_t d = 0;
  const sh_status st = sh_code_min_distance(code, &d);
  if (st == SH_OK) return std::to_string(d);
  if (st != SH_ERR_ZERO_CODE && st != SH_ERR_TOO_LARGE) check(st);
  return "unavailable";
}

std::string code_label(const sh_code* code) {
  uint32_t q = 0;
  size_t n = 0, k = 0;
  check(sh_code_info(code, &q, &n, &k));
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + distance_text(code) + "]_" + std::to_string(q);
}

void print_rows(const Json& m) {
  const size_t rows = m.at("rows"), cols = m.at("cols");
  const auto& e = m.at("entries");
  for (size_t r = 0; r < rows; ++r) {
    std::cout << "  ";
    for (size_t c = 0; c < cols; ++c) std::cout << (c ? " " : "") << e[r * cols + c].get<uint64_t>();
    std::cout << "\n";
  }
}

std::string join(const Json& arr) {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : " ") + v.dump();
  return out;
}

struct Args {
  std::string code, code2, sigma, spec, output, from, format = "csv", suite, certificate;
  size_t target_h = 0, max_n = 6;
  uint64_t budget = 0, seed = 0, trials = 100;
  bool exhaustive = false, sampled = false, json = false;
  std::vector<uint32_t> fields;
};

int cmd_hull(const Args& a) {
  auto code = load_code(a.code);
  auto sigma = load_sigma(a.sigma, code.get());
  size_t dim = 0;
  char* basis = nullptr;
  check(sh_sigma_hull(code.get(), sigma.get(), &dim, &basis));
  const Json b = Json::parse(take(basis));
  uint32_t q = 0;
  size_t n = 0, k = 0;
  check(sh_code_info(code.get(), &q, &n, &k));
  const std::string d = distance_text(code.get());
  char* sj = nullptr;
  check(sh_sigma_to_json(sigma.get(), &sj));
  std::cout << "code: [" << n << "," << k << "," << d << "]_" << q << "\n";
  std::cout << "n: " << n << "\nk: " << k << "\nd: " << d << "\n";
  std::cout << "sigma: " << take(sj) << "\n";
  std::cout << "hull_dim: " << dim << "\n";
  std::cout << "hull_basis:\n";
  print_rows(b);
  return kOk;
}

int cmd_dual(const Args& a) {
  auto code = load_code(a.code);
  auto sigma = load_sigma(a.sigma, code.get());
  sh_code* dual = nullptr;
  check(sh_sigma_dual(code.get(), sigma.get(), &dual));
  CodePtr owned(dual);
  char* out = nullptr;
  check(sh_code_to_json(dual, &out));
  emit(Json::parse(take(out)).dump(2) + "\n", a.output);
  if (!a.output.empty()) std::cout << "dual: " << code_label(dual) << "\n";
  return kOk;
}

int cmd_mp_build(const Args& a) {
  auto spec = load_spec(a.spec);
  sh_code* code = nullptr;
  check(sh_mp_build(spec.get(), &code));
  CodePtr owned(code);
  char* out = nullptr;
  check(sh_code_to_json(code, &out));
  emit(Json::parse(take(out)).dump(2) + "\n", a.output);
  if (!a.output.empty()) std::cout << "code: " << code_label(code) << "\n";
  return kOk;
}

int cmd_mp_hull(const Args& a) {
  auto spec = load_spec(a.spec);
  size_t dim = 0;
  char* detail = nullptr;
  check(sh_mp_hull(spec.get(), &dim, &detail));
  const Json d = Json::parse(take(detail));
  std::cout << "rho: " << join(d.at("rho")) << "\n";
  std::cout << "alphas: " << join(d.at("alphas")) << "\n";
  std::cout << "terms: " << join(d.at("terms")) << "\n";
  std::cout << "hull_dim: " << dim << "\n";
  return kOk;
}

int cmd_check(const Args& a, bool dual_containing) {
  auto spec = load_spec(a.spec);
  int result = 0;
  if (dual_containing) {
    check(sh_mp_check_dual_containing(spec.get(), &result));
    std::cout << "dual_containing: " << (result ? "true" : "false") << "\n";
  } else {
    check(sh_mp_check_self_orthogonal(spec.get(), &result));
    std::cout << "self_orthogonal: " << (result ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_steer(const Args& a) {
  auto c1 = load_code(a.code);
  CodePtr c2 = a.code2.empty() ? CodePtr() : load_code(a.code2);
  auto sigma = load_sigma(a.sigma, c1.get());
  const sh_search_mode mode = a.exhaustive ? SH_SEARCH_EXHAUSTIVE : a.sampled ? SH_SEARCH_SAMPLED : SH_SEARCH_AUTO;
  char* out = nullptr;
  check(sh_steer(c1.get(), c2.get(), sigma.get(), a.target_h, a.budget, a.seed, mode, &out));
  const Json r = Json::parse(take(out));
  std::cout << "target_h: " << a.target_h << "\n";
  std::cout << "trials: " << r.at("trials").get<uint64_t>() << "\n";
  std::cout << "witness: " << r.at("witness").dump() << "\n";
  if (!a.output.empty()) emit(r.at("code").dump(2) + "\n", a.output);
  return kOk;
}

int cmd_eaqecc(const Args& a) {
  const sh_format fmt = a.format == "json" ? SH_FORMAT_JSON : SH_FORMAT_CSV;
  char* out = nullptr;
  if (a.from == "mp") {
    if (a.spec.empty()) {
      std::cerr << "error: --from mp needs --spec\n";
      return kParse;
    }
    auto spec = load_spec(a.spec);
    check(sh_eaqecc_mp(spec.get(), a.budget, a.seed, fmt, &out));
  } else {
    if (a.code.empty()) {
      std::cerr << "error: --from " << a.from << " needs --code\n";
      return kParse;
    }
    auto code = load_code(a.code);
    if (a.from == "pair") {
      if (a.code2.empty()) {
        std::cerr << "error: --from pair needs --code2\n";
        return kParse;
      }
      auto code2 = load_code(a.code2);
      check(sh_eaqecc_pair(code.get(), code2.get(), fmt, &out));
    } else {
      auto sigma = load_sigma(a.sigma, code.get());
      if (a.from == "hull") check(sh_eaqecc_hull(code.get(), sigma.get(), fmt, &out));
      if (a.from == "family") check(sh_eaqecc_family(code.get(), sigma.get(), a.budget, a.seed, fmt, &out));
      if (a.from == "mds") check(sh_eaqecc_mds(code.get(), sigma.get(), a.budget, a.seed, fmt, &out));
    }
  }
  emit(take(out), a.output);
  return kOk;
}

int cmd_verify(const Args& a) {
  char* text = nullptr;
  char* json = nullptr;
  uint64_t failures = 0;
  check(sh_verify(a.suite.c_str(), a.seed, a.trials, a.max_n, a.fields.empty() ? nullptr : a.fields.data(),
                  a.fields.size(), &text, &json, &failures));
  const std::string report_text = take(text);
  const std::string report_json = take(json);
  std::cout << (a.json ? report_json : report_text);
  if (failures == 0) return kOk;
  const std::string path = a.certificate.empty() ? "sigmahull-" + a.suite + "-certificate.json" : a.certificate;
  emit(report_json, path);
  std::cerr << "counterexample certificate written to " << path << "\n";
  return kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma hulls of linear and matrix-product codes"};
  app.require_subcommand(1);
  Args a;

  auto code_opt = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--code", a.code, "code file (JSON)")->check(CLI::ExistingFile);
    if (required) o->required();
  };
  auto sigma_opt = [&](CLI::App* c) {
    c->add_option("--sigma", a.sigma, "sigma file (JSON); Euclidean when omitted")->check(CLI::ExistingFile);
  };
  auto spec_opt = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--spec", a.spec, "matrix-product spec file (JSON)")->check(CLI::ExistingFile);
    if (required) o->required();
  };
  auto output_opt = [&](CLI::App* c) { c->add_option("-o,--output", a.output, "write the result here"); };
  auto search_opts = [&](CLI::App* c) {
    c->add_option("--budget", a.budget, "search budget (0 = default)");
    c->add_option("--seed", a.seed, "search seed");
  };

  auto* hull = app.add_subcommand("hull", "sigma hull of a code");
  code_opt(hull, true);
  sigma_opt(hull);

  auto* dual = app.add_subcommand("dual", "sigma dual of a code");
  code_opt(dual, true);
  sigma_opt(dual);
  output_opt(dual);

  auto* mp_build = app.add_subcommand("mp-build", "assemble a matrix-product code");
  spec_opt(mp_build, true);
  output_opt(mp_build);

  auto* mp_hull = app.add_subcommand("mp-hull", "hull dimension of a matrix-product code");
  spec_opt(mp_hull, true);

  auto* check_dc = app.add_subcommand("check-dc", "is the matrix-product code sigma dual-containing");
  spec_opt(check_dc, true);

  auto* check_so = app.add_subcommand("check-so", "is the matrix-product code sigma self-orthogonal");
  spec_opt(check_so, true);

  auto* steer = app.add_subcommand("steer", "find an equivalent code with a prescribed hull dimension");
  code_opt(steer, true);
  steer->add_option("--code2", a.code2, "second code; steers the relative hull")->check(CLI::ExistingFile);
  sigma_opt(steer);
  steer->add_option("--target-h", a.target_h, "target dimension")->required();
  search_opts(steer);
  auto* ex = steer->add_flag("--exhaustive", a.exhaustive, "enumerate every monomial matrix");
  steer->add_flag("--sampled", a.sampled, "draw random monomial matrices")->excludes(ex);
  output_opt(steer);

  auto* eaqecc = app.add_subcommand("eaqecc", "EAQECC parameter table");
  eaqecc->add_option("--from", a.from, "construction")
      ->required()
      ->check(CLI::IsMember({"pair", "hull", "family", "mds", "mp"}));
  code_opt(eaqecc, false);
  eaqecc->add_option("--code2", a.code2, "second code for --from pair")->check(CLI::ExistingFile);
  sigma_opt(eaqecc);
  spec_opt(eaqecc, false);
  eaqecc->add_option("--out", a.format, "table format")->check(CLI::IsMember({"csv", "json"}));
  output_opt(eaqecc);
  search_opts(eaqecc);

  auto* verify = app.add_subcommand("verify", "check an identity against the brute-force oracle");
  verify->add_option("--suite", a.suite, "suite name")->required();
  verify->add_option("--seed", a.seed, "campaign seed")->default_val(1);
  verify->add_option("--trials", a.trials, "number of instances")->default_val(100);
  verify->add_option("--max-n", a.max_n, "largest code length")->default_val(6);
  verify->add_option("--fields", a.fields, "field orders, e.g. 3,4,5")->delimiter(',');
  verify->add_option("--certificate", a.certificate, "counterexample file");
  verify->add_flag("--json", a.json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*hull) return cmd_hull(a);
    if (*dual) return cmd_dual(a);
    if (*mp_build) return cmd_mp_build(a);
    if (*mp_hull) return cmd_mp_hull(a);
    if (*check_dc) return cmd_check(a, true);
    if (*check_so) return cmd_check(a, false);
    if (*steer) return cmd_steer(a);
    if (*eaqecc) return cmd_eaqecc(a);
    if (*verify) return cmd_verify(a);
  } catch (const Failure& f) {
    const char* msg = sh_last_error();
    std::cerr << "error: " << sh_status_name(f.status);
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
