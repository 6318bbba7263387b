#pragma once

#include <initializer_list>
#include <vector>

#include "sigmahull/code.hpp"
#include "sigmahull/field.hpp"
#include "sigmahull/matrix.hpp"
#include "sigmahull/monomial.hpp"
#include "sigmahull/semilinear.hpp"

namespace th {

using namespace sigmahull;

inline FieldPtr gf(std::uint64_t q) { return Field::of_order(q); }

inline Matrix mat(const FieldPtr& f, std::size_t rows, std::size_t cols, std::initializer_list<std::uint32_t> xs) {
  std::vector<Element> e;
  for (auto x : xs) e.push_back(Element{x});
  return Matrix(f, rows, cols, std::move(e));
}

inline Vector vec(std::initializer_list<std::uint32_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Element{x});
  return v;
}

inline LinearCode code(const FieldPtr& f, std::size_t rows, std::size_t cols, std::initializer_list<std::uint32_t> xs) {
  return LinearCode::from_generator(mat(f, rows, cols, xs));
}

// Repetition [3,1] over GF(3) and its Euclidean dual.
inline LinearCode rep3() { return code(gf(3), 1, 3, {1, 1, 1}); }
inline LinearCode rep3_dual() { return code(gf(3), 2, 3, {1, 2, 0, 0, 1, 2}); }

inline MonomialMatrix mono(const FieldPtr& f, std::vector<std::size_t> perm, std::initializer_list<std::uint32_t> diag) {
  std::vector<Element> d;
  for (auto x : diag) d.push_back(Element{x});
  return MonomialMatrix(f, std::move(perm), std::move(d));
}

inline SemilinearIsometry euclid(const FieldPtr& f, std::size_t n) { return SemilinearIsometry::euclidean(f, n); }

}  // namespace th
