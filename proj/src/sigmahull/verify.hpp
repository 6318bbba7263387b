#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigmahull/serialize.hpp"

// Verification campaigns: each suite checks one identity of the library
// against the brute-force oracle on seeded random instances.
namespace sigmahull::verify {

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::size_t max_n = 6;
  /// Field orders to draw from; empty means the suite's default list.
  std::vector<std::uint32_t> fields;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  /// Instances abandoned because an enumeration exceeded its budget.
  std::uint64_t skipped = 0;
  std::vector<io::Json> failures;  // counterexample certificates
  std::vector<std::string> notes;
  /// Named tallies behind the notes (for example "oracle_dc_true").
  std::map<std::string, std::uint64_t> counters;

  bool ok() const { return failures.empty(); }
  std::string to_text() const;
  io::Json to_json() const;
};

const std::vector<std::string>& suite_names();
std::vector<std::uint32_t> default_fields(const std::string& suite);

/// Throws Error(InvalidArgument) for an unknown suite name.
Report run(const std::string& suite, const Options& options);

/// Per-instance generator seeded from (seed, suite, index). The
/// matrix-product suites share the stream "mp", so one seed gives them the
/// same battery.
std::uint64_t instance_seed(std::uint64_t seed, const std::string& suite, std::uint64_t index);

}  // namespace sigmahull::verify
