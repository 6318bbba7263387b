#include "sigmahull/random.hpp"

#include <algorithm>
#include <numeric>

#include "sigmahull/error.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull::gen {

Element element(const Field& field, Rng& rng) {
  return Element{std::uniform_int_distribution<std::uint32_t>(0, field.q() - 1)(rng)};
}

Element nonzero_element(const Field& field, Rng& rng) {
  return Element{std::uniform_int_distribution<std::uint32_t>(1, field.q() - 1)(rng)};
}

Matrix matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(*field, rng);
  return m;
}

Matrix invertible(const FieldPtr& field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

LinearCode code(const FieldPtr& field, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) fail(ErrorCode::InvalidArgument, "k > n");
  if (k == 0) return LinearCode::zero_space(field, n);
  for (;;) {
    Matrix g = matrix(field, k, n, rng);
    if (rank(g) == k) return LinearCode::from_generator(g);
  }
}

LinearCode code_in_range(const FieldPtr& field, std::size_t n, std::size_t lo, std::size_t hi, Rng& rng) {
  return code(field, n, std::uniform_int_distribution<std::size_t>(lo, hi)(rng), rng);
}

Matrix rebased_generator(const LinearCode& c, Rng& rng) {
  if (c.is_zero()) return c.generator();
  return invertible(c.field(), c.k(), rng) * c.generator();
}

namespace {

// A random vector of the row space of basis (zero when basis is empty).
Vector combination(const Matrix& basis, Rng& rng) {
  Vector v(basis.cols(), kZero);
  const Field& f = basis.F();
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    const Element c = element(f, rng);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, basis(r, j)));
  }
  return v;
}

// Rows sigma(g) of the given vectors.
Matrix images(const FieldPtr& field, std::size_t n, const std::vector<Vector>& rows, const SemilinearIsometry& sigma) {
  std::vector<Vector> out;
  for (const auto& g : rows) out.push_back(sigma_apply(sigma, g));
  return Matrix::from_rows(field, n, out);
}

}  // namespace

LinearCode code_with_hull(const FieldPtr& field, std::size_t n, std::size_t k, std::size_t h,
                          const SemilinearIsometry& sigma, Rng& rng) {
  if (k > n) fail(ErrorCode::InvalidArgument, "k > n");
  const std::uint32_t e = field->e();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < std::min(h, k); ++i) {
    // v . sigma(g) = 0 for every g so far.
    const LinearCode left = LinearCode::from_generator_allow_zero(kernel_basis(images(field, n, rows, sigma)));
    // g . sigma(v) = (g M^T) . pi_s(v) = 0, i.e. pi_s(v) in ker(G M^T).
    Matrix w(field, rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Vector gm = vec_mat(rows[r], sigma.mono().dense().transpose());
      std::copy(gm.begin(), gm.end(), w.row(r).begin());
    }
    Matrix u = kernel_basis(w);
    if (sigma.s() != e) u = mat_frobenius(u, e - sigma.s());
    const LinearCode space = code_intersection(left, LinearCode::from_generator_allow_zero(u));
    bool grown = false;
    for (int tries = 0; tries < 200 && !grown; ++tries) {
      Vector v = combination(space.generator(), rng);
      if (!sigma_inner(v, v, sigma).is_zero()) continue;
      std::vector<Vector> next = rows;
      next.push_back(v);
      if (rank(Matrix::from_rows(field, n, next)) != next.size()) continue;
      rows = std::move(next);
      grown = true;
    }
    if (!grown) break;
  }
  // Remaining rows c satisfy c . sigma(s) = 0 for the self-orthogonal part s,
  // keeping it inside C^{⊥σ}.
  const Matrix room = kernel_basis(images(field, n, rows, sigma));
  const std::size_t target = std::min(k, room.rows());
  for (int tries = 0; rows.size() < target && tries < 1000; ++tries) {
    std::vector<Vector> next = rows;
    next.push_back(combination(room, rng));
    if (rank(Matrix::from_rows(field, n, next)) == next.size()) rows = std::move(next);
  }
  if (rows.empty()) return LinearCode::zero_space(field, n);
  return LinearCode::from_generator(Matrix::from_rows(field, n, rows));
}

MonomialMatrix monomial(const FieldPtr& field, std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Element> diag(n);
  for (auto& d : diag) d = nonzero_element(*field, rng);
  return MonomialMatrix(field, std::move(perm), std::move(diag));
}

SemilinearIsometry sigma(const FieldPtr& field, std::size_t n, Rng& rng) {
  MonomialMatrix m = monomial(field, n, rng);
  const auto s = std::uniform_int_distribution<std::uint32_t>(1, field->e())(rng);
  return SemilinearIsometry(std::move(m), s);
}

std::optional<MpInstance> mp_instance(const FieldPtr& field, std::size_t k, std::size_t n, Rng& rng,
                                      std::size_t max_tries, std::size_t per_hat) {
  const auto s = std::uniform_int_distribution<std::uint32_t>(1, field->e())(rng);
  MonomialMatrix hat = monomial(field, k, rng);
  for (std::size_t tries = 0; tries < max_tries; ++tries) {
    if (tries > 0 && tries % per_hat == 0) hat = monomial(field, k, rng);
    Matrix a = matrix(field, k, k, rng);
    if (rank(a) != k || !rho_monomial_check(a, hat, s)) continue;
    std::vector<LinearCode> constituents;
    for (std::size_t i = 0; i < k; ++i) constituents.push_back(code_in_range(field, n, 0, n, rng));
    return MpInstance{MatrixProductSpec(std::move(a), std::move(constituents)), MpSigma{hat, monomial(field, n, rng), s}};
  }
  return std::nullopt;
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b);
  return LinearCode::from_generator_allow_zero(vstack(a.generator(), b.generator()));
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  require_compatible(a, b);
  if (a.is_zero()) return a;
  // m G_a lies in b iff m G_a H_b^T = 0.
  const Matrix m = kernel_basis((a.generator() * b.parity_check().transpose()).transpose());
  return LinearCode::from_generator_allow_zero(m * a.generator());
}

namespace {

template <typename Step>
MpInstance repair(MpInstance inst, Step step) {
  const RhoMonomialWitness w = require_rho_monomial(inst.spec, inst.sigma);
  const SemilinearIsometry tilde = inst.sigma.constituent();
  std::vector<LinearCode> codes = inst.spec.constituents();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      LinearCode next = step(codes[i], sigma_dual(codes[w.rho[i]], tilde));
      if (next.k() != codes[i].k()) changed = true;
      codes[i] = std::move(next);
    }
  }
  return MpInstance{MatrixProductSpec(inst.spec.defining_matrix(), std::move(codes)), std::move(inst.sigma)};
}

}  // namespace

MpInstance make_dual_containing(MpInstance inst) { return repair(std::move(inst), code_sum); }

MpInstance make_self_orthogonal(MpInstance inst) { return repair(std::move(inst), code_intersection); }

}  // namespace sigmahull::gen
