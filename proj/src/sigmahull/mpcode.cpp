#include "sigmahull/mpcode.hpp"

#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "sigmahull/error.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull {

MatrixProductSpec::MatrixProductSpec(Matrix a, std::vector<LinearCode> constituents)
    : a_(std::move(a)), constituents_(std::move(constituents)) {
  if (a_.rows() == 0) fail(ErrorCode::DegenerateDefiningMatrix, "defining matrix has no rows");
  if (a_.rows() > a_.cols()) fail(ErrorCode::DegenerateDefiningMatrix, "defining matrix needs k <= t");
  if (constituents_.size() != a_.rows())
    fail(ErrorCode::Incompatible, "defining matrix has " + std::to_string(a_.rows()) + " rows but " +
                                      std::to_string(constituents_.size()) + " constituent codes were given");
  for (const auto& c : constituents_) {
    if (!same_field(c.field(), a_.field())) fail(ErrorCode::Incompatible, "constituent over a different field");
    if (c.n() != constituents_.front().n()) fail(ErrorCode::Incompatible, "constituent lengths differ");
  }
  if (rank(a_) != a_.rows()) fail(ErrorCode::DegenerateDefiningMatrix, "defining matrix does not have full row rank");
}

std::size_t MatrixProductSpec::dimension() const {
  std::size_t sum = 0;
  for (const auto& c : constituents_) sum += c.k();
  return sum;
}

Matrix mp_generator(const MatrixProductSpec& spec) {
  const Matrix& a = spec.defining_matrix();
  Matrix g(spec.field(), 0, spec.length());
  for (std::size_t i = 0; i < spec.k(); ++i)
    g = vstack(g, kronecker(a.select_rows(i, 1), spec.constituents()[i].generator()));
  return g;
}

LinearCode mp_code(const MatrixProductSpec& spec) {
  return LinearCode::from_generator_allow_zero(mp_generator(spec));
}

MonomialMatrix RhoMonomialWitness::as_monomial(const FieldPtr& field) const {
  std::vector<Element> diag(rho.size());
  for (std::size_t j = 0; j < rho.size(); ++j) diag[rho[j]] = alphas[j];
  return MonomialMatrix(field, rho, std::move(diag));
}

std::optional<RhoMonomialWitness> rho_monomial_check(const Matrix& a, const MonomialMatrix& tau_hat, std::uint32_t s) {
  if (a.rows() != a.cols()) fail(ErrorCode::NotSquare, "defining matrix must be square");
  if (tau_hat.size() != a.rows()) fail(ErrorCode::Incompatible, "M_hat size does not match defining matrix");
  require_same_field(a.field(), tau_hat.field());
  const Matrix b = right_multiply(mat_frobenius(a, s), tau_hat) * a.transpose();
  try {
    const MonomialMatrix mono = MonomialMatrix::from_dense(b);
    RhoMonomialWitness w;
    w.rho = mono.perm();
    for (std::size_t j = 0; j < b.cols(); ++j) w.alphas.push_back(b(w.rho[j], j));
    return w;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotMonomial) return std::nullopt;
    throw;
  }
}

SemilinearIsometry MpSigma::assembled() const { return SemilinearIsometry(kronecker(tau_hat, tau_tilde), s); }

SemilinearIsometry MpSigma::constituent() const { return SemilinearIsometry(tau_tilde, s); }

RhoMonomialWitness require_rho_monomial(const MatrixProductSpec& spec, const MpSigma& ms) {
  if (!spec.square()) fail(ErrorCode::NotSquare, "hull and dual results need a square defining matrix");
  if (ms.tau_tilde.size() != spec.n())
    fail(ErrorCode::Incompatible, "M_tilde size does not match constituent length");
  auto w = rho_monomial_check(spec.defining_matrix(), ms.tau_hat, ms.s);
  if (!w) fail(ErrorCode::PreconditionFailed, "pi_s(A) M_hat A^T is not monomial");
  return *w;
}

std::vector<std::size_t> mp_hull_terms(const MatrixProductSpec& spec, const MpSigma& ms) {
  const auto w = require_rho_monomial(spec, ms);
  const SemilinearIsometry tilde = ms.constituent();
  std::vector<std::size_t> terms;
  for (std::size_t i = 0; i < spec.k(); ++i)
    terms.push_back(relative_hull_dim(spec.constituents()[i], spec.constituents()[w.rho[i]], tilde));
  return terms;
}

std::size_t mp_hull_dim(const MatrixProductSpec& spec, const MpSigma& ms) {
  const auto terms = mp_hull_terms(spec, ms);
  return std::accumulate(terms.begin(), terms.end(), std::size_t{0});
}

bool is_sigma_dual_containing(const MatrixProductSpec& spec, const MpSigma& ms) {
  const auto w = require_rho_monomial(spec, ms);
  const auto terms = mp_hull_terms(spec, ms);
  for (std::size_t i = 0; i < spec.k(); ++i)
    if (terms[i] != spec.n() - spec.constituents()[w.rho[i]].k()) return false;
  return true;
}

bool is_sigma_self_orthogonal(const MatrixProductSpec& spec, const MpSigma& ms) {
  const auto terms = mp_hull_terms(spec, ms);
  for (std::size_t i = 0; i < spec.k(); ++i)
    if (terms[i] != spec.constituents()[i].k()) return false;
  return true;
}

MatrixProductSpec mp_sigma_dual(const MatrixProductSpec& spec, const MpSigma& ms) {
  const auto w = require_rho_monomial(spec, ms);
  const SemilinearIsometry tilde = ms.constituent();
  std::vector<LinearCode> duals;
  for (std::size_t i = 0; i < spec.k(); ++i) duals.push_back(sigma_dual(spec.constituents()[w.rho[i]], tilde));
  return MatrixProductSpec(spec.defining_matrix(), std::move(duals));
}

std::vector<std::size_t> row_span_distances(const Matrix& a) {
  if (a.rows() == 0 || rank(a) != a.rows())
    fail(ErrorCode::DegenerateDefiningMatrix, "defining matrix does not have full row rank");
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= a.rows(); ++i) out.push_back(min_distance(LinearCode::from_generator(a.select_rows(0, i))));
  return out;
}

bool is_nonsingular_by_columns(const Matrix& a) {
  const std::size_t t = a.cols();
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    std::vector<std::size_t> cols(i);
    // Enumerate i-subsets of columns in lexicographic order.
    std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t depth, std::size_t start) -> bool {
      if (depth == i) {
        Matrix minor(a.field(), i, i);
        for (std::size_t r = 0; r < i; ++r)
          for (std::size_t c = 0; c < i; ++c) minor(r, c) = a(r, cols[c]);
        return rank(minor) == i;
      }
      for (std::size_t c = start; c + (i - depth) <= t; ++c) {
        cols[depth] = c;
        if (!visit(depth + 1, c + 1)) return false;
      }
      return true;
    };
    if (!visit(0, 0)) return false;
  }
  return true;
}

}  // namespace sigmahull
