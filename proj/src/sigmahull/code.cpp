#include "sigmahull/code.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "sigmahull/error.hpp"

namespace sigmahull {

LinearCode::LinearCode(Matrix rref_generator)
    : generator_(std::move(rref_generator)), cache_(std::make_shared<ParityCache>()) {}

LinearCode LinearCode::from_generator(const Matrix& g) {
  if (g.rows() == 0 || g.cols() == 0) fail(ErrorCode::ZeroCode, "empty generator matrix");
  auto code = from_generator_allow_zero(g);
  if (code.is_zero()) fail(ErrorCode::ZeroCode, "generator matrix has rank 0");
  return code;
}

LinearCode LinearCode::from_generator_allow_zero(const Matrix& g) {
  if (g.cols() == 0) fail(ErrorCode::InvalidArgument, "code length must be positive");
  return LinearCode(row_space_basis(g));
}

LinearCode LinearCode::full_space(FieldPtr field, std::size_t n) {
  return LinearCode(Matrix::identity(std::move(field), n));
}

LinearCode LinearCode::zero_space(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n)); }

const Matrix& LinearCode::parity_check() const {
  std::call_once(cache_->once, [this] { cache_->h.emplace(kernel_basis(generator_)); });
  return *cache_->h;
}

std::string LinearCode::params() const {
  return "[" + std::to_string(n()) + "," + std::to_string(k()) + "]_" + std::to_string(q());
}

CodewordEnumerator::CodewordEnumerator(const LinearCode& code, std::uint64_t budget)
    : field_(code.field().get()),
      generator_(code.generator()),
      message_(code.k(), 0),
      word_(code.n(), kZero),
      total_(saturating_pow(code.q(), code.k())) {
  if (total_ > budget)
    fail(ErrorCode::TooLarge, code.params() + " has " + std::to_string(code.q()) + "^" + std::to_string(code.k()) +
                                  " codewords, budget is " + std::to_string(budget));
}

bool CodewordEnumerator::next() {
  if (!started_) {
    started_ = true;
    return true;
  }
  const std::uint32_t q = field_->q();
  for (std::size_t i = message_.size(); i-- > 0;) {
    const Element before{message_[i]};
    const bool wraps = message_[i] + 1 == q;
    const Element after{wraps ? 0u : message_[i] + 1};
    message_[i] = after.idx;
    const Element delta = field_->sub(after, before);
    auto row = generator_.row(i);
    for (std::size_t j = 0; j < word_.size(); ++j)
      if (!row[j].is_zero()) word_[j] = field_->add(word_[j], field_->mul(delta, row[j]));
    if (!wraps) return true;
  }
  return false;
}

std::size_t min_distance(const LinearCode& code) {
  return min_distance(code, enumeration_budget(kDistanceBudget));
}

std::size_t min_distance(const LinearCode& code, std::uint64_t budget) {
  if (code.is_zero()) fail(ErrorCode::ZeroCode, "minimum distance of the zero code is undefined");
  CodewordEnumerator it(code, budget);
  it.next();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Rows of an RREF generator are codewords; seed with their weights.
  for (std::size_t r = 0; r < code.k(); ++r) best = std::min(best, hamming_weight(code.generator().row(r)));
  while (it.next()) {
    best = std::min(best, hamming_weight(it.current()));
    if (best == 1) break;
  }
  return best;
}

bool is_mds(const LinearCode& code) { return min_distance(code) == code.n() - code.k() + 1; }

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t budget) {
  std::vector<std::uint64_t> dist(code.n() + 1, 0);
  CodewordEnumerator it(code, budget);
  while (it.next()) ++dist[hamming_weight(it.current())];
  return dist;
}

void require_compatible(const LinearCode& a, const LinearCode& b) {
  if (!same_field(a.field(), b.field()))
    fail(ErrorCode::Incompatible, "codes over different fields: " + a.field()->name() + " vs " + b.field()->name());
  if (a.n() != b.n())
    fail(ErrorCode::Incompatible, "code lengths differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

std::size_t intersect_dim(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  const std::size_t via_h1 = c2.k() - rank(c1.parity_check() * c2.generator().transpose());
  const std::size_t via_h2 = c1.k() - rank(c1.generator() * c2.parity_check().transpose());
  if (via_h1 != via_h2)
    fail(ErrorCode::FormulaMismatch, "intersection rank forms disagree: " + std::to_string(via_h1) + " vs " +
                                         std::to_string(via_h2));
  return via_h1;
}

bool codes_equal(const LinearCode& c1, const LinearCode& c2) {
  if (!same_field(c1.field(), c2.field()) || c1.n() != c2.n() || c1.k() != c2.k()) return false;
  return intersect_dim(c1, c2) == c1.k();
}

bool contains(const LinearCode& outer, const LinearCode& inner) { return intersect_dim(outer, inner) == inner.k(); }

LinearCode apply_monomial(const LinearCode& code, const MonomialMatrix& m) {
  if (!same_field(code.field(), m.field())) fail(ErrorCode::Incompatible, "monomial matrix over a different field");
  if (m.size() != code.n()) fail(ErrorCode::Incompatible, "monomial size does not match code length");
  const Matrix& g = code.generator();
  Matrix out(g.field(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    auto image = m.apply(g.row(r));
    std::copy(image.begin(), image.end(), out.row(r).begin());
  }
  return LinearCode::from_generator_allow_zero(out);
}

}  // namespace sigmahull
