#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmahull/code.hpp"
#include "sigmahull/eaqecc.hpp"
#include "sigmahull/monomial.hpp"
#include "sigmahull/mpcode.hpp"

// JSON file formats. Every reader throws Error(Parse) on malformed input and
// Error(Io) when a file cannot be read.
namespace sigmahull::io {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"p", "e", "modulus"}; modulus is optional on input.
Json field_to_json(const Field& field);
FieldPtr field_from_json(const Json& j);

/// {"rows", "cols", "entries"} with row-major element indices.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldPtr& field);

/// {"field", "generator"}.
Json code_to_json(const LinearCode& code);
/// Zero codes raise ZeroCode unless allow_zero (matrix-product constituents).
LinearCode code_from_json(const Json& j, bool allow_zero = false);

/// {"perm": 1-based images, "diag": element indices}.
Json monomial_to_json(const MonomialMatrix& m);
MonomialMatrix monomial_from_json(const Json& j, const FieldPtr& field);

/// Monomial fields plus "s". A missing "s" means s = e.
Json sigma_to_json(const SemilinearIsometry& sigma);
SemilinearIsometry sigma_from_json(const Json& j, const FieldPtr& field);

struct MpFile {
  MatrixProductSpec spec;
  std::optional<MpSigma> sigma;
};

/// {"A", "constituents", "sigma"?}. Constituents are inline code objects or
/// paths resolved against base_dir. An optional "field" fixes the field;
/// otherwise the first constituent's field is used.
MpFile mp_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json mp_to_json(const MatrixProductSpec& spec, const std::optional<MpSigma>& sigma = std::nullopt);
Json mp_sigma_to_json(const MpSigma& ms);

Json eaqecc_to_json(const EaqeccParams& r);
EaqeccParams eaqecc_from_json(const Json& j);
Json eaqecc_table_to_json(const std::vector<EaqeccParams>& rows);
/// Header q,n,k,d,d_flag,c,h,provenance,status.
std::string eaqecc_table_to_csv(const std::vector<EaqeccParams>& rows);

}  // namespace sigmahull::io
