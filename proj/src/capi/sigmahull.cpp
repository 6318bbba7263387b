#include "sigmahull/sigmahull.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <string>

#include "sigmahull/eaqecc.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/hullsteer.hpp"
#include "sigmahull/mpcode.hpp"
#include "sigmahull/semilinear.hpp"
#include "sigmahull/serialize.hpp"
#include "sigmahull/verify.hpp"

struct sh_code {
  sigmahull::LinearCode code;
};

struct sh_sigma {
  sigmahull::SemilinearIsometry sigma;
};

struct sh_mpspec {
  sigmahull::MatrixProductSpec spec;
  std::optional<sigmahull::MpSigma> sigma;
};

namespace {

using namespace sigmahull;
using io::Json;

thread_local std::string g_last_error;

sh_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return SH_ERR_PARSE;
    case ErrorCode::Io: return SH_ERR_IO;
    case ErrorCode::InvalidArgument: return SH_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidField: return SH_ERR_INVALID_FIELD;
    case ErrorCode::InvalidExponent: return SH_ERR_INVALID_EXPONENT;
    case ErrorCode::FieldMismatch: return SH_ERR_FIELD_MISMATCH;
    case ErrorCode::Incompatible: return SH_ERR_INCOMPATIBLE;
    case ErrorCode::NotSquare: return SH_ERR_NOT_SQUARE;
    case ErrorCode::NotMonomial: return SH_ERR_NOT_MONOMIAL;
    case ErrorCode::DivisionByZero: return SH_ERR_DIVISION_BY_ZERO;
    case ErrorCode::ZeroCode: return SH_ERR_ZERO_CODE;
    case ErrorCode::TooLarge: return SH_ERR_TOO_LARGE;
    case ErrorCode::PreconditionFailed: return SH_ERR_PRECONDITION_FAILED;
    case ErrorCode::DegenerateDefiningMatrix: return SH_ERR_DEGENERATE_DEFINING_MATRIX;
    case ErrorCode::FieldTooSmall: return SH_ERR_FIELD_TOO_SMALL;
    case ErrorCode::TargetOutOfRange: return SH_ERR_TARGET_OUT_OF_RANGE;
    case ErrorCode::SearchExhausted: return SH_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::NotMds: return SH_ERR_NOT_MDS;
    case ErrorCode::FormulaMismatch: return SH_ERR_FORMULA_MISMATCH;
  }
  return SH_ERR_INTERNAL;
}

template <typename F>
sh_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SH_OK;
  } catch (const Error& e) {
    g_last_error = e.detail();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return SH_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  require(out, "output");
  *out = dup_string(s);
}

std::string render(const std::vector<EaqeccParams>& rows, sh_format format) {
  if (format == SH_FORMAT_CSV) return io::eaqecc_table_to_csv(rows);
  if (format == SH_FORMAT_JSON) return io::eaqecc_table_to_json(rows).dump(2) + "\n";
  fail(ErrorCode::InvalidArgument, "unknown table format");
}

EaqeccOptions eaqecc_options(uint64_t budget, uint64_t seed) {
  EaqeccOptions o;
  if (budget != 0) o.search.budget = budget;
  o.search.seed = seed;
  return o;
}

const MpSigma& mp_sigma(const sh_mpspec* spec) {
  if (!spec->sigma) fail(ErrorCode::Parse, "MP spec has no \"sigma\" entry");
  return *spec->sigma;
}

}  // namespace

extern "C" {

const char* sh_status_name(sh_status status) {
  switch (status) {
    case SH_OK: return "ok";
    case SH_ERR_PARSE: return "Parse";
    case SH_ERR_IO: return "Io";
    case SH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SH_ERR_INVALID_FIELD: return "InvalidField";
    case SH_ERR_INVALID_EXPONENT: return "InvalidExponent";
    case SH_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case SH_ERR_INCOMPATIBLE: return "Incompatible";
    case SH_ERR_NOT_SQUARE: return "NotSquare";
    case SH_ERR_NOT_MONOMIAL: return "NotMonomial";
    case SH_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case SH_ERR_ZERO_CODE: return "ZeroCode";
    case SH_ERR_TOO_LARGE: return "TooLarge";
    case SH_ERR_PRECONDITION_FAILED: return "PreconditionFailed";
    case SH_ERR_DEGENERATE_DEFINING_MATRIX: return "DegenerateDefiningMatrix";
    case SH_ERR_FIELD_TOO_SMALL: return "FieldTooSmall";
    case SH_ERR_TARGET_OUT_OF_RANGE: return "TargetOutOfRange";
    case SH_ERR_SEARCH_EXHAUSTED: return "SearchExhausted";
    case SH_ERR_NOT_MDS: return "NotMds";
    case SH_ERR_FORMULA_MISMATCH: return "FormulaMismatch";
    case SH_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sh_last_error(void) { return g_last_error.c_str(); }

void sh_string_free(char* s) { std::free(s); }

sh_status sh_code_from_json(const char* json, sh_code** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sh_code{io::code_from_json(io::parse_json(json))};
  });
}

sh_status sh_code_load(const char* path, sh_code** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sh_code{io::code_from_json(io::read_json_file(path))};
  });
}

void sh_code_free(sh_code* code) { delete code; }

sh_status sh_code_to_json(const sh_code* code, char** out) {
  return guarded([&] {
    require(code, "code");
    put(out, io::code_to_json(code->code).dump());
  });
}

sh_status sh_code_info(const sh_code* code, uint32_t* q, size_t* n, size_t* k) {
  return guarded([&] {
    require(code, "code");
    if (q) *q = code->code.q();
    if (n) *n = code->code.n();
    if (k) *k = code->code.k();
  });
}

sh_status sh_code_min_distance(const sh_code* code, size_t* d) {
  return guarded([&] {
    require(code, "code");
    require(d, "d");
    *d = min_distance(code->code);
  });
}

sh_status sh_sigma_from_json(const char* json, const sh_code* code, sh_sigma** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    const LinearCode& c = code->code;
    if (json == nullptr) {
      *out = new sh_sigma{SemilinearIsometry::euclidean(c.field(), c.n())};
      return;
    }
    SemilinearIsometry sigma = io::sigma_from_json(io::parse_json(json), c.field());
    require_compatible(c, sigma);
    *out = new sh_sigma{std::move(sigma)};
  });
}

sh_status sh_sigma_load(const char* path, const sh_code* code, sh_sigma** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "out");
    const LinearCode& c = code->code;
    if (path == nullptr) {
      *out = new sh_sigma{SemilinearIsometry::euclidean(c.field(), c.n())};
      return;
    }
    SemilinearIsometry sigma = io::sigma_from_json(io::read_json_file(path), c.field());
    require_compatible(c, sigma);
    *out = new sh_sigma{std::move(sigma)};
  });
}

void sh_sigma_free(sh_sigma* sigma) { delete sigma; }

sh_status sh_sigma_to_json(const sh_sigma* sigma, char** out) {
  return guarded([&] {
    require(sigma, "sigma");
    put(out, io::sigma_to_json(sigma->sigma).dump());
  });
}

sh_status sh_sigma_hull(const sh_code* code, const sh_sigma* sigma, size_t* dim, char** basis_json) {
  return guarded([&] {
    require(code, "code");
    require(sigma, "sigma");
    require(dim, "dim");
    const HullResult hull = sigmahull::sigma_hull(code->code, sigma->sigma);
    *dim = hull.dim;
    if (basis_json) *basis_json = dup_string(io::matrix_to_json(hull.basis).dump());
  });
}

sh_status sh_sigma_dual(const sh_code* code, const sh_sigma* sigma, sh_code** out) {
  return guarded([&] {
    require(code, "code");
    require(sigma, "sigma");
    require(out, "out");
    *out = new sh_code{sigmahull::sigma_dual(code->code, sigma->sigma)};
  });
}

sh_status sh_relative_hull_dim(const sh_code* c1, const sh_code* c2, const sh_sigma* sigma, size_t* dim) {
  return guarded([&] {
    require(c1, "c1");
    require(c2, "c2");
    require(sigma, "sigma");
    require(dim, "dim");
    *dim = relative_hull_dim(c1->code, c2->code, sigma->sigma);
  });
}

sh_status sh_mpspec_from_json(const char* json, const char* base_dir, sh_mpspec** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto file = io::mp_from_json(io::parse_json(json), base_dir ? std::filesystem::path(base_dir) : std::filesystem::path());
    *out = new sh_mpspec{std::move(file.spec), std::move(file.sigma)};
  });
}

sh_status sh_mpspec_load(const char* path, sh_mpspec** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const std::filesystem::path p(path);
    auto file = io::mp_from_json(io::read_json_file(p), p.parent_path());
    *out = new sh_mpspec{std::move(file.spec), std::move(file.sigma)};
  });
}

void sh_mpspec_free(sh_mpspec* spec) { delete spec; }

sh_status sh_mp_build(const sh_mpspec* spec, sh_code** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new sh_code{mp_code(spec->spec)};
  });
}

sh_status sh_mp_hull(const sh_mpspec* spec, size_t* dim, char** detail_json) {
  return guarded([&] {
    require(spec, "spec");
    require(dim, "dim");
    const MpSigma& ms = mp_sigma(spec);
    const RhoMonomialWitness w = require_rho_monomial(spec->spec, ms);
    const auto terms = mp_hull_terms(spec->spec, ms);
    std::size_t total = 0;
    for (auto t : terms) total += t;
    *dim = total;
    if (detail_json) {
      Json rho = Json::array();
      Json alphas = Json::array();
      for (auto r : w.rho) rho.push_back(r + 1);
      for (auto a : w.alphas) alphas.push_back(a.idx);
      *detail_json = dup_string(Json{{"rho", rho}, {"alphas", alphas}, {"terms", terms}}.dump());
    }
  });
}

sh_status sh_mp_check_dual_containing(const sh_mpspec* spec, int* result) {
  return guarded([&] {
    require(spec, "spec");
    require(result, "result");
    *result = is_sigma_dual_containing(spec->spec, mp_sigma(spec)) ? 1 : 0;
  });
}

sh_status sh_mp_check_self_orthogonal(const sh_mpspec* spec, int* result) {
  return guarded([&] {
    require(spec, "spec");
    require(result, "result");
    *result = is_sigma_self_orthogonal(spec->spec, mp_sigma(spec)) ? 1 : 0;
  });
}

sh_status sh_mp_sigma_dual(const sh_mpspec* spec, char** out) {
  return guarded([&] {
    require(spec, "spec");
    const MpSigma& ms = mp_sigma(spec);
    put(out, io::mp_to_json(mp_sigma_dual(spec->spec, ms), ms).dump());
  });
}

sh_status sh_steer(const sh_code* c1, const sh_code* c2, const sh_sigma* sigma, size_t target, uint64_t budget,
                   uint64_t seed, sh_search_mode mode, char** result_json) {
  return guarded([&] {
    require(c1, "c1");
    require(sigma, "sigma");
    require(result_json, "result_json");
    SearchOptions options;
    if (budget != 0) options.budget = budget;
    options.seed = seed;
    switch (mode) {
      case SH_SEARCH_AUTO: options.mode = SearchMode::Auto; break;
      case SH_SEARCH_EXHAUSTIVE: options.mode = SearchMode::Exhaustive; break;
      case SH_SEARCH_SAMPLED: options.mode = SearchMode::Sampled; break;
      default: fail(ErrorCode::InvalidArgument, "unknown search mode");
    }
    const SteerResult r = c2 == nullptr ? steer_self_hull(c1->code, sigma->sigma, target, options)
                                        : steer_relative_hull(c1->code, c2->code, sigma->sigma, target, options);
    *result_json = dup_string(
        Json{{"code", io::code_to_json(r.code)}, {"witness", io::monomial_to_json(r.witness)}, {"trials", r.trials}}.dump());
  });
}

sh_status sh_eaqecc_pair(const sh_code* c1, const sh_code* c2, sh_format format, char** out) {
  return guarded([&] {
    require(c1, "c1");
    require(c2, "c2");
    put(out, render({eaqecc_from_pair(c1->code, c2->code)}, format));
  });
}

sh_status sh_eaqecc_hull(const sh_code* code, const sh_sigma* sigma, sh_format format, char** out) {
  return guarded([&] {
    require(code, "code");
    require(sigma, "sigma");
    auto [first, second] = eaqecc_from_hull(code->code, sigma->sigma);
    std::vector<EaqeccParams> rows{first, second};
    sort_records(rows);
    put(out, render(rows, format));
  });
}

sh_status sh_eaqecc_family(const sh_code* code, const sh_sigma* sigma, uint64_t budget, uint64_t seed, sh_format format,
                           char** out) {
  return guarded([&] {
    require(code, "code");
    require(sigma, "sigma");
    auto rows = eaqecc_family(code->code, sigma->sigma, eaqecc_options(budget, seed));
    sort_records(rows);
    put(out, render(rows, format));
  });
}

sh_status sh_eaqecc_mds(const sh_code* code, const sh_sigma* sigma, uint64_t budget, uint64_t seed, sh_format format,
                        char** out) {
  return guarded([&] {
    require(code, "code");
    require(sigma, "sigma");
    auto rows = eaqecc_family_mds(code->code, sigma->sigma, eaqecc_options(budget, seed));
    sort_records(rows);
    put(out, render(rows, format));
  });
}

sh_status sh_eaqecc_mp(const sh_mpspec* spec, uint64_t budget, uint64_t seed, sh_format format, char** out) {
  return guarded([&] {
    require(spec, "spec");
    auto rows = eaqecc_from_mp(spec->spec, mp_sigma(spec), eaqecc_options(budget, seed));
    sort_records(rows);
    put(out, render(rows, format));
  });
}

sh_status sh_verify(const char* suite, uint64_t seed, uint64_t trials, size_t max_n, const uint32_t* fields,
                    size_t field_count, char** report_text, char** report_json, uint64_t* failures) {
  return guarded([&] {
    require(suite, "suite");
    verify::Options options;
    options.seed = seed;
    options.trials = trials;
    options.max_n = max_n;
    if (fields != nullptr) options.fields.assign(fields, fields + field_count);
    const verify::Report report = verify::run(suite, options);
    if (failures) *failures = report.failures.size();
    if (report_text) *report_text = dup_string(report.to_text());
    if (report_json) *report_json = dup_string(report.to_json().dump(2) + "\n");
  });
}

}  // extern "C"
