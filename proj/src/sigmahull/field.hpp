#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sigmahull {

/// An element of GF(p^e), stored as its base-p index sum(c_i * p^i).
/// Meaningful only together with the Field it came from.
struct Element {
  std::uint32_t idx = 0;

  constexpr bool is_zero() const { return idx == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

/// GF(p^e) defined by a monic irreducible modulus of degree e.
///
/// Fields are immutable once built and shared through FieldPtr. For
/// q <= 2^16 multiplication goes through log/antilog tables; larger fields
/// fall back to polynomial arithmetic modulo the modulus.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 20;
  static constexpr std::uint64_t kTableLimit = 1u << 16;

  /// Builds GF(p^e) with the given little-endian monic modulus (e+1 coefficients).
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e,
                                           std::vector<std::uint32_t> modulus);
  /// Builds GF(p^e) with the default modulus; instances are cached per (p, e).
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e);
  /// GF(q) for a prime power q with the default modulus.
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Element a) const { return a.idx < q_; }
  Element element(std::uint64_t idx) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t exponent) const;
  /// a^(p^s), 1 <= s <= e.
  Element frobenius(Element a, std::uint32_t s) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// A generator of the multiplicative group.
  Element primitive() const { return primitive_; }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  Element poly_mul(Element a, Element b) const;
  Element pow_slow(Element a, std::uint64_t exponent) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> powers_of_p_;
  Element primitive_{};

  bool tabled_ = false;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> add_;  // q*q when q <= 256, else empty
  std::vector<std::uint32_t> neg_;
  std::vector<std::vector<std::uint32_t>> frob_;  // frob_[s-1][a] when tabled
};

using FieldPtr = std::shared_ptr<const Field>;

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t n);
/// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly);
/// Smallest monic irreducible of degree e, ordered by its base-p integer value.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e);

/// Field element bound to its field; arithmetic checks that both operands
/// share a field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Element value);

  const FieldPtr& field() const { return field_; }
  Element value() const { return value_; }

  FieldElement frobenius(std::uint32_t s) const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Element value_;
};

}  // namespace sigmahull
