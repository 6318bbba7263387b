#include "sigmahull/serialize.hpp"

#include <fstream>
#include <sstream>

#include "sigmahull/error.hpp"

namespace sigmahull::io {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::Parse, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t to_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    fail(ErrorCode::Parse, std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> to_uint_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(to_uint(v, what));
  return out;
}

Element element_of(const FieldPtr& field, std::uint64_t idx) {
  if (idx >= field->q())
    fail(ErrorCode::Parse, "element index " + std::to_string(idx) + " outside " + field->name());
  return Element{static_cast<std::uint32_t>(idx)};
}

// Re-raises library errors from validating constructors as parse errors only
// when they stem from malformed content.
template <typename F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

DistanceFlag flag_from_name(const std::string& name) {
  if (name == "exact") return DistanceFlag::Exact;
  if (name == "lower_bound") return DistanceFlag::LowerBound;
  if (name == "unavailable") return DistanceFlag::Unavailable;
  fail(ErrorCode::Parse, "unknown distance flag \"" + name + "\"");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const Error& e) {
    fail(ErrorCode::Parse, path.string() + ": " + e.detail());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorCode::Io, "write failed for " + path.string());
}

Json field_to_json(const Field& field) {
  return Json{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  return parse_guard([&] {
    const auto p = to_uint(member(j, "p"), "p");
    const auto e = to_uint(member(j, "e"), "e");
    if (p > UINT32_MAX || e > UINT32_MAX) fail(ErrorCode::InvalidField, "field parameters too large");
    if (auto it = j.find("modulus"); it != j.end()) {
      std::vector<std::uint32_t> modulus;
      for (auto c : to_uint_array(*it, "modulus")) modulus.push_back(static_cast<std::uint32_t>(c));
      return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), std::move(modulus));
    }
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  });
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(x.idx);
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j, const FieldPtr& field) {
  return parse_guard([&] {
    const auto rows = to_uint(member(j, "rows"), "rows");
    const auto cols = to_uint(member(j, "cols"), "cols");
    const auto raw = to_uint_array(member(j, "entries"), "entries");
    if (rows > 0 && cols > UINT32_MAX / rows) fail(ErrorCode::Parse, "matrix too large");
    if (raw.size() != rows * cols)
      fail(ErrorCode::Parse, "matrix has " + std::to_string(raw.size()) + " entries, expected " +
                                 std::to_string(rows * cols));
    std::vector<Element> entries;
    entries.reserve(raw.size());
    for (auto v : raw) entries.push_back(element_of(field, v));
    return Matrix(field, rows, cols, std::move(entries));
  });
}

Json code_to_json(const LinearCode& code) {
  return Json{{"field", field_to_json(*code.field())}, {"generator", matrix_to_json(code.generator())}};
}

LinearCode code_from_json(const Json& j, bool allow_zero) {
  const FieldPtr field = field_from_json(member(j, "field"));
  const Matrix g = matrix_from_json(member(j, "generator"), field);
  if (g.cols() == 0) fail(ErrorCode::Parse, "code length must be positive");
  return allow_zero ? LinearCode::from_generator_allow_zero(g) : LinearCode::from_generator(g);
}

Json monomial_to_json(const MonomialMatrix& m) {
  Json perm = Json::array();
  Json diag = Json::array();
  for (auto t : m.perm()) perm.push_back(t + 1);
  for (auto d : m.diag()) diag.push_back(d.idx);
  return Json{{"perm", std::move(perm)}, {"diag", std::move(diag)}};
}

MonomialMatrix monomial_from_json(const Json& j, const FieldPtr& field) {
  return parse_guard([&] {
    const auto raw_perm = to_uint_array(member(j, "perm"), "perm");
    const auto raw_diag = to_uint_array(member(j, "diag"), "diag");
    if (raw_perm.size() != raw_diag.size()) fail(ErrorCode::Parse, "perm and diag lengths differ");
    std::vector<std::size_t> perm;
    for (auto t : raw_perm) {
      if (t < 1 || t > raw_perm.size()) fail(ErrorCode::Parse, "perm entries must be 1-based images in 1..n");
      perm.push_back(t - 1);
    }
    std::vector<Element> diag;
    for (auto d : raw_diag) diag.push_back(element_of(field, d));
    try {
      return MonomialMatrix(field, std::move(perm), std::move(diag));
    } catch (const Error& e) {
      fail(ErrorCode::Parse, e.detail());
    }
  });
}

Json sigma_to_json(const SemilinearIsometry& sigma) {
  Json j = monomial_to_json(sigma.mono());
  j["s"] = sigma.s();
  return j;
}

SemilinearIsometry sigma_from_json(const Json& j, const FieldPtr& field) {
  MonomialMatrix m = monomial_from_json(j, field);
  std::uint64_t s = field->e();
  if (auto it = j.find("s"); it != j.end()) s = parse_guard([&] { return to_uint(*it, "s"); });
  if (s < 1 || s > field->e())
    fail(ErrorCode::InvalidExponent, "s = " + std::to_string(s) + " outside 1.." + std::to_string(field->e()));
  return SemilinearIsometry(std::move(m), static_cast<std::uint32_t>(s));
}

MpFile mp_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& list = member(j, "constituents");
  if (!list.is_array() || list.empty()) fail(ErrorCode::Parse, "constituents must be a nonempty array");
  std::vector<LinearCode> codes;
  for (const auto& entry : list) {
    if (entry.is_string()) {
      std::filesystem::path path = entry.get<std::string>();
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      codes.push_back(code_from_json(read_json_file(path), true));
    } else {
      codes.push_back(code_from_json(entry, true));
    }
  }
  FieldPtr field = codes.front().field();
  if (auto it = j.find("field"); it != j.end()) field = field_from_json(*it);
  for (const auto& c : codes) require_same_field(c.field(), field);

  MatrixProductSpec spec(matrix_from_json(member(j, "A"), field), std::move(codes));
  std::optional<MpSigma> sigma;
  if (auto it = j.find("sigma"); it != j.end()) {
    const Json& sj = *it;
    std::uint64_t s = field->e();
    if (auto st = sj.find("s"); st != sj.end()) s = parse_guard([&] { return to_uint(*st, "s"); });
    if (s < 1 || s > field->e())
      fail(ErrorCode::InvalidExponent, "s = " + std::to_string(s) + " outside 1.." + std::to_string(field->e()));
    sigma = MpSigma{monomial_from_json(member(sj, "tau_hat"), field), monomial_from_json(member(sj, "tau_tilde"), field),
                    static_cast<std::uint32_t>(s)};
  }
  return {std::move(spec), std::move(sigma)};
}

Json mp_sigma_to_json(const MpSigma& ms) {
  return Json{{"tau_hat", monomial_to_json(ms.tau_hat)}, {"tau_tilde", monomial_to_json(ms.tau_tilde)}, {"s", ms.s}};
}

Json mp_to_json(const MatrixProductSpec& spec, const std::optional<MpSigma>& sigma) {
  Json codes = Json::array();
  for (const auto& c : spec.constituents()) codes.push_back(code_to_json(c));
  Json j{{"field", field_to_json(*spec.field())}, {"A", matrix_to_json(spec.defining_matrix())}, {"constituents", codes}};
  if (sigma) j["sigma"] = mp_sigma_to_json(*sigma);
  return j;
}

Json eaqecc_to_json(const EaqeccParams& r) {
  Json j{{"q", r.q},
         {"n", r.n},
         {"k", r.k},
         {"d", r.d.flag == DistanceFlag::Unavailable ? Json(nullptr) : Json(r.d.value)},
         {"d_flag", distance_flag_name(r.d.flag)},
         {"c", r.c},
         {"h", r.h ? Json(*r.h) : Json(nullptr)},
         {"provenance", r.provenance},
         {"status", r.status}};
  if (r.bound) j["bound"] = *r.bound;
  return j;
}

EaqeccParams eaqecc_from_json(const Json& j) {
  return parse_guard([&] {
    EaqeccParams r;
    r.q = static_cast<std::uint32_t>(to_uint(member(j, "q"), "q"));
    r.n = to_uint(member(j, "n"), "n");
    r.k = to_uint(member(j, "k"), "k");
    r.d.flag = flag_from_name(member(j, "d_flag").get<std::string>());
    if (const Json& d = member(j, "d"); !d.is_null()) r.d.value = to_uint(d, "d");
    r.c = to_uint(member(j, "c"), "c");
    if (const Json& h = member(j, "h"); !h.is_null()) r.h = to_uint(h, "h");
    r.provenance = member(j, "provenance").get<std::string>();
    r.status = member(j, "status").get<std::string>();
    if (auto it = j.find("bound"); it != j.end()) r.bound = to_uint(*it, "bound");
    return r;
  });
}

Json eaqecc_table_to_json(const std::vector<EaqeccParams>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(eaqecc_to_json(r));
  return out;
}

std::string eaqecc_table_to_csv(const std::vector<EaqeccParams>& rows) {
  std::string out = "q,n,k,d,d_flag,c,h,provenance,status\n";
  for (const auto& r : rows) {
    out += std::to_string(r.q) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + ",";
    out += (r.d.flag == DistanceFlag::Unavailable ? "" : std::to_string(r.d.value)) + ",";
    out += distance_flag_name(r.d.flag) + "," + std::to_string(r.c) + ",";
    out += (r.h ? std::to_string(*r.h) : "") + ",";
    out += csv_field(r.provenance) + "," + csv_field(r.status) + "\n";
  }
  return out;
}

}  // namespace sigmahull::io
