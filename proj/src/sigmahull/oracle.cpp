#include "sigmahull/oracle.hpp"

#include <functional>
#include <string>

#include "sigmahull/error.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull::oracle {
namespace {

// Euclidean annihilator rows; x lies in the code iff every row is orthogonal to x.
class MembershipTest {
 public:
  explicit MembershipTest(const LinearCode& code) : field_(code.field().get()), annihilator_(kernel_basis(code.generator())) {}

  bool operator()(std::span<const Element> x) const {
    for (std::size_t r = 0; r < annihilator_.rows(); ++r)
      if (!dot(*field_, annihilator_.row(r), x).is_zero()) return false;
    return true;
  }

 private:
  const Field* field_;
  Matrix annihilator_;
};

std::uint64_t count_members(const LinearCode& space, const std::function<bool(std::span<const Element>)>& member,
                            std::uint64_t budget) {
  CodewordEnumerator it(space, budget);
  std::uint64_t count = 0;
  while (it.next())
    if (member(it.current())) ++count;
  return count;
}

}  // namespace

std::uint64_t default_budget() { return enumeration_budget(kOracleBudget); }

std::vector<Vector> enumerate_codewords(const LinearCode& code) { return enumerate_codewords(code, default_budget()); }

std::vector<Vector> enumerate_codewords(const LinearCode& code, std::uint64_t budget) {
  CodewordEnumerator it(code, budget);
  std::vector<Vector> out;
  out.reserve(it.count());
  while (it.next()) out.emplace_back(it.current().begin(), it.current().end());
  return out;
}

Matrix sigma_dual_basis(const LinearCode& code, const SemilinearIsometry& sigma) {
  require_compatible(code, sigma);
  const Matrix& g = code.generator();
  Matrix images(g.field(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Vector img = sigma_apply(sigma, g.row(r));
    for (std::size_t c = 0; c < img.size(); ++c) images(r, c) = img[c];
  }
  return kernel_basis(images);
}

LinearCode sigma_dual(const LinearCode& code, const SemilinearIsometry& sigma) {
  return LinearCode::from_generator_allow_zero(sigma_dual_basis(code, sigma));
}

bool in_sigma_dual(std::span<const Element> x, const LinearCode& code, const SemilinearIsometry& sigma) {
  const Matrix& g = code.generator();
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (!sigma_inner(x, g.row(r), sigma).is_zero()) return false;
  return true;
}

std::size_t log_q_exact(std::uint64_t count, std::uint64_t q) {
  std::size_t dim = 0;
  std::uint64_t c = count;
  while (c > 1 && c % q == 0) {
    c /= q;
    ++dim;
  }
  if (c != 1)
    fail(ErrorCode::FormulaMismatch, "intersection size " + std::to_string(count) + " is not a power of " + std::to_string(q));
  return dim;
}

std::size_t sigma_hull_dim(const LinearCode& code, const SemilinearIsometry& sigma) {
  return relative_dim(code, code, sigma);
}

std::size_t relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  const std::uint64_t budget = default_budget();
  std::uint64_t count = 0;
  if (c1.k() <= c1.n() - c2.k()) {
    count = count_members(c1, [&](std::span<const Element> x) { return in_sigma_dual(x, c2, sigma); }, budget);
  } else {
    const MembershipTest in_c1(c1);
    count = count_members(oracle::sigma_dual(c2, sigma), in_c1, budget);
  }
  return log_q_exact(count, c1.q());
}

std::size_t bidual_relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  const std::uint64_t budget = default_budget();
  const LinearCode d1 = oracle::sigma_dual(c1, sigma);
  const LinearCode x = oracle::sigma_dual(d1, sigma);
  const LinearCode y = oracle::sigma_dual(c2, sigma);
  std::uint64_t count = 0;
  if (x.k() <= y.k()) {
    count = count_members(x, [&](std::span<const Element> v) { return in_sigma_dual(v, c2, sigma); }, budget);
  } else {
    count = count_members(y, [&](std::span<const Element> v) { return in_sigma_dual(v, d1, sigma); }, budget);
  }
  return log_q_exact(count, c1.q());
}

std::size_t intersection_dim(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  const bool first_smaller = c1.k() <= c2.k();
  const LinearCode& walk = first_smaller ? c1 : c2;
  const MembershipTest member(first_smaller ? c2 : c1);
  return log_q_exact(count_members(walk, member, default_budget()), c1.q());
}

bool subset(const LinearCode& inner, const LinearCode& outer) {
  require_compatible(inner, outer);
  if (inner.k() > outer.k()) return false;
  const std::uint64_t q = inner.q();
  // Walk inner, or walk the annihilator of outer when that is smaller: inner is
  // inside outer iff every vector killing outer also kills each row of inner.
  if (saturating_pow(q, inner.k()) <= saturating_pow(q, outer.n() - outer.k())) {
    const MembershipTest member(outer);
    CodewordEnumerator it(inner, default_budget());
    while (it.next())
      if (!member(it.current())) return false;
    return true;
  }
  const LinearCode annihilator = LinearCode::from_generator_allow_zero(kernel_basis(outer.generator()));
  const Matrix& g = inner.generator();
  CodewordEnumerator it(annihilator, default_budget());
  while (it.next())
    for (std::size_t r = 0; r < g.rows(); ++r)
      if (!dot(*inner.field(), it.current(), g.row(r)).is_zero()) return false;
  return true;
}

bool equal(const LinearCode& a, const LinearCode& b) {
  if (!same_field(a.field(), b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
  return subset(a, b);
}

}  // namespace sigmahull::oracle
