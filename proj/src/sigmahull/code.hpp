#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmahull/budget.hpp"
#include "sigmahull/matrix.hpp"
#include "sigmahull/monomial.hpp"

namespace sigmahull {

/// An [n,k]_q linear code held by its RREF generator matrix. The parity-check
/// matrix is computed on first use and shared between copies.
class LinearCode {
 public:
  /// Row-reduces g; throws ZeroCode when g has rank 0.
  static LinearCode from_generator(const Matrix& g);
  /// Like from_generator but admits the [n,0] code, which only appears as the
  /// output of duals and oracles.
  static LinearCode from_generator_allow_zero(const Matrix& g);
  static LinearCode full_space(FieldPtr field, std::size_t n);
  static LinearCode zero_space(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return generator_.field(); }
  std::uint32_t q() const { return field()->q(); }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  bool is_zero() const { return k() == 0; }

  const Matrix& generator() const { return generator_; }
  const Matrix& parity_check() const;

  /// "[n,k]_q"
  std::string params() const;

 private:
  explicit LinearCode(Matrix rref_generator);

  struct ParityCache {
    std::once_flag once;
    std::optional<Matrix> h;
  };

  Matrix generator_;
  std::shared_ptr<ParityCache> cache_;
};

/// Walks all q^k codewords in lexicographic message order (first message
/// symbol most significant). The first codeword is zero.
class CodewordEnumerator {
 public:
  /// Throws TooLarge when q^k exceeds budget.
  CodewordEnumerator(const LinearCode& code, std::uint64_t budget);

  bool next();
  std::span<const Element> current() const { return word_; }
  std::span<const std::uint32_t> message() const { return message_; }
  std::uint64_t count() const { return total_; }

 private:
  const Field* field_;
  Matrix generator_;
  std::vector<std::uint32_t> message_;
  Vector word_;
  std::uint64_t total_;
  bool started_ = false;
};

/// Minimum Hamming weight over nonzero codewords. Throws ZeroCode for k = 0
/// and TooLarge when q^k exceeds the budget (default 2^24).
std::size_t min_distance(const LinearCode& code);
std::size_t min_distance(const LinearCode& code, std::uint64_t budget);
bool is_mds(const LinearCode& code);
/// A[w] = number of codewords of weight w.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               std::uint64_t budget = kDistanceBudget);

void require_compatible(const LinearCode& a, const LinearCode& b);

/// dim(C1 ∩ C2) by k2 - rank(H1 G2^T); the alternate k1 - rank(G1 H2^T) is
/// evaluated too and must agree.
std::size_t intersect_dim(const LinearCode& c1, const LinearCode& c2);
bool codes_equal(const LinearCode& c1, const LinearCode& c2);
bool contains(const LinearCode& outer, const LinearCode& inner);

/// The code generated by G * M.
LinearCode apply_monomial(const LinearCode& code, const MonomialMatrix& m);

}  // namespace sigmahull
