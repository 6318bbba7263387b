#include "sigmahull/semilinear.hpp"

#include <algorithm>
#include <string>

#include "sigmahull/error.hpp"

namespace sigmahull {
namespace {

std::size_t checked(const RankForms& forms, const char* what) {
  if (forms.via_parity != forms.via_generator)
    fail(ErrorCode::FormulaMismatch, std::string(what) + ": parity form gives " + std::to_string(forms.via_parity) +
                                         ", generator form gives " + std::to_string(forms.via_generator));
  return forms.via_parity;
}

}  // namespace

void require_compatible(const LinearCode& code, const SemilinearIsometry& sigma) {
  if (!same_field(code.field(), sigma.field()))
    fail(ErrorCode::Incompatible, "isometry over " + sigma.field()->name() + ", code over " + code.field()->name());
  if (sigma.n() != code.n())
    fail(ErrorCode::Incompatible,
         "isometry acts on length " + std::to_string(sigma.n()) + ", code has length " + std::to_string(code.n()));
}

Matrix right_multiply(const Matrix& x, const MonomialMatrix& m) {
  Matrix out(x.field(), x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto image = m.apply(x.row(r));
    std::copy(image.begin(), image.end(), out.row(r).begin());
  }
  return out;
}

Vector sigma_apply(const SemilinearIsometry& sigma, std::span<const Element> v) {
  if (v.size() != sigma.n())
    fail(ErrorCode::Incompatible, "vector of length " + std::to_string(v.size()) + " for isometry of length " +
                                      std::to_string(sigma.n()));
  const Field& f = *sigma.field();
  Vector twisted(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) twisted[i] = f.frobenius(v[i], sigma.s());
  return sigma.mono().apply(twisted);
}

Element sigma_inner(std::span<const Element> a, std::span<const Element> b, const SemilinearIsometry& sigma) {
  if (a.size() != sigma.n()) fail(ErrorCode::Incompatible, "inner product operand length mismatch");
  return dot(*sigma.field(), a, sigma_apply(sigma, b));
}

Matrix sigma_image(const Matrix& g, const SemilinearIsometry& sigma) {
  return right_multiply(mat_frobenius(g, sigma.s()), sigma.mono());
}

LinearCode sigma_image_code(const LinearCode& code, const SemilinearIsometry& sigma) {
  require_compatible(code, sigma);
  return LinearCode::from_generator_allow_zero(sigma_image(code.generator(), sigma));
}

LinearCode sigma_dual(const LinearCode& code, const SemilinearIsometry& sigma) {
  require_compatible(code, sigma);
  const MonomialMatrix inv_t = sigma.mono().inverse().transpose();
  return LinearCode::from_generator_allow_zero(right_multiply(mat_frobenius(code.parity_check(), sigma.s()), inv_t));
}

RankForms relative_hull_forms(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  const std::uint32_t s = sigma.s();
  const MonomialMatrix& m = sigma.mono();
  const std::size_t n = c1.n();
  const Matrix left = right_multiply(c1.parity_check(), m.inverse());
  const std::size_t via_parity = n - c2.k() - rank(left * mat_frobenius(c2.parity_check(), s).transpose());
  const Matrix twisted = right_multiply(mat_frobenius(c2.generator(), s), m);
  const std::size_t via_generator = c1.k() - rank(twisted * c1.generator().transpose());
  return {via_parity, via_generator};
}

RankForms bidual_relative_forms(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  const std::uint32_t s = sigma.s();
  const MonomialMatrix& m = sigma.mono();
  const std::size_t n = c1.n();
  const Matrix left = right_multiply(c2.parity_check(), m.inverse());
  const std::size_t via_parity = n - c2.k() - rank(left * mat_frobenius(c1.parity_check(), s).transpose());
  const Matrix twisted = right_multiply(mat_frobenius(c1.generator(), s), m);
  const std::size_t via_generator = c1.k() - rank(twisted * c2.generator().transpose());
  return {via_parity, via_generator};
}

RankForms hull_forms(const LinearCode& code, const SemilinearIsometry& sigma) {
  return relative_hull_forms(code, code, sigma);
}

std::size_t relative_hull_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  return checked(relative_hull_forms(c1, c2, sigma), "relative hull");
}

std::size_t bidual_relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma) {
  return checked(bidual_relative_forms(c1, c2, sigma), "bidual relative hull");
}

std::size_t sigma_hull_dim(const LinearCode& code, const SemilinearIsometry& sigma) {
  return checked(hull_forms(code, sigma), "sigma hull");
}

HullResult sigma_hull(const LinearCode& code, const SemilinearIsometry& sigma) {
  const std::size_t dim = sigma_hull_dim(code, sigma);
  const LinearCode dual = sigma_dual(code, sigma);
  const Matrix& g = code.generator();
  // w [G; D] = 0  <=>  (w_G) G = -(w_D) D, so w_G G lies in both row spaces.
  const Matrix relations = kernel_basis(vstack(g, dual.generator()).transpose());
  Matrix combos(g.field(), relations.rows(), g.rows());
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t c = 0; c < g.rows(); ++c) combos(r, c) = relations(r, c);
  Matrix basis = row_space_basis(combos * g);
  if (basis.rows() != dim)
    fail(ErrorCode::FormulaMismatch, "hull basis has " + std::to_string(basis.rows()) + " rows, rank formula gives " +
                                         std::to_string(dim));
  return {dim, std::move(basis)};
}

}  // namespace sigmahull
