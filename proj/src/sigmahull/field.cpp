#include "sigmahull/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "sigmahull/error.hpp"

namespace sigmahull {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero after trimming.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint32_t> factor_distinct_primes(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic_poly) {
  Poly f(monic_poly.begin(), monic_poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor polynomial of degree d in 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  Poly f(e + 1, 0);
  f[e] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(p, f)) return f;
  }
  fail(ErrorCode::InvalidField, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorCode::InvalidField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::InvalidField, "field order exceeds 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != e + 1 || modulus_.back() != 1)
    fail(ErrorCode::InvalidField, "modulus must be monic of degree e");
  for (auto c : modulus_)
    if (c >= p) fail(ErrorCode::InvalidField, "modulus coefficient out of range");
  if (!is_irreducible(p, modulus_)) fail(ErrorCode::InvalidField, "modulus is reducible");

  powers_of_p_.resize(e + 1);
  powers_of_p_[0] = 1;
  for (std::uint32_t i = 1; i <= e; ++i) powers_of_p_[i] = powers_of_p_[i - 1] * p;

  build_tables();
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
  return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
  }
  if (!is_prime(p)) fail(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorCode::InvalidField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::InvalidField, "field order exceeds 2^20");
  }
  auto field = make(p, e, default_modulus(p, e));
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{p, e}, std::move(field)).first->second;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return make(p, e);
  }
  fail(ErrorCode::InvalidField, std::to_string(q) + " is not a prime power");
}

Element Field::element(std::uint64_t idx) const {
  if (idx >= q_) fail(ErrorCode::InvalidArgument, "element index " + std::to_string(idx) + " outside GF(" + std::to_string(q_) + ")");
  return Element{static_cast<std::uint32_t>(idx)};
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
  std::vector<std::uint32_t> c(e_);
  std::uint32_t v = a.idx;
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (i < e_) v = v * p_ + coeffs[i] % p_;
  }
  return Element{v};
}

Element Field::add(Element a, Element b) const {
  if (!add_.empty()) return Element{add_[a.idx * q_ + b.idx]};
  if (p_ == 2) return Element{a.idx ^ b.idx};
  std::uint32_t out = 0, x = a.idx, y = b.idx;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * powers_of_p_[i];
    x /= p_;
    y /= p_;
  }
  return Element{out};
}

Element Field::neg(Element a) const {
  if (!neg_.empty()) return Element{neg_[a.idx]};
  if (p_ == 2) return a;
  std::uint32_t out = 0, x = a.idx;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * powers_of_p_[i];
    x /= p_;
  }
  return Element{out};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::poly_mul(Element a, Element b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  Poly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
  }
  auto r = poly_rem(std::move(prod), modulus_, p_);
  return from_coefficients(r);
}

Element Field::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return kZero;
  if (tabled_) return Element{exp_[log_[a.idx] + log_[b.idx]]};
  return poly_mul(a, b);
}

Element Field::inv(Element a) const {
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  if (tabled_) return Element{exp_[(q_ - 1 - log_[a.idx]) % (q_ - 1)]};
  return pow_slow(a, q_ - 2);
}

Element Field::div(Element a, Element b) const {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in " + name());
  return mul(a, inv(b));
}

Element Field::pow_slow(Element a, std::uint64_t exponent) const {
  Element result = kOne, base = a;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
  }
  return result;
}

Element Field::pow(Element a, std::uint64_t exponent) const {
  Element result = kOne, base = a;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Element Field::frobenius(Element a, std::uint32_t s) const {
  if (s < 1 || s > e_)
    fail(ErrorCode::InvalidExponent, "Frobenius exponent " + std::to_string(s) + " outside 1.." + std::to_string(e_));
  if (s == e_) return a;
  if (!frob_.empty()) return Element{frob_[s - 1][a.idx]};
  return pow(a, powers_of_p_[s]);
}

void Field::build_tables() {
  if (q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t out = 0, x = a, y = b;
        for (std::uint32_t i = 0; i < e_; ++i) {
          out += ((x % p_ + y % p_) % p_) * powers_of_p_[i];
          x /= p_;
          y /= p_;
        }
        add_[a * q_ + b] = out;
        if (out == 0) neg_[a] = b;
      }
    }
  }

  if (q_ == 2) {
    primitive_ = kOne;
  } else if (q_ <= kTableLimit) {
    // Candidate g is primitive iff its powers cycle through all q-1 units.
    std::vector<std::uint32_t> seq;
    for (std::uint32_t g = 2; g < q_; ++g) {
      seq.assign(1, 1);
      Element x{g};
      while (x != kOne) {
        seq.push_back(x.idx);
        x = poly_mul(x, Element{g});
      }
      if (seq.size() == q_ - 1) {
        primitive_ = Element{g};
        break;
      }
    }
  } else {
    const auto primes = factor_distinct_primes(q_ - 1);
    for (std::uint32_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : primes) {
        if (pow_slow(Element{g}, (q_ - 1) / r) == kOne) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = Element{g};
        break;
      }
    }
  }

  if (q_ <= kTableLimit) {
    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
    Element x = kOne;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x.idx;
      exp_[i + q_ - 1] = x.idx;
      log_[x.idx] = i;
      x = poly_mul(x, primitive_);
    }
    tabled_ = true;

    if (e_ > 1) {
      frob_.assign(e_ - 1, std::vector<std::uint32_t>(q_));
      for (std::uint32_t s = 1; s < e_; ++s)
        for (std::uint32_t a = 0; a < q_; ++a) frob_[s - 1][a] = pow(Element{a}, powers_of_p_[s]).idx;
    }
  }
}

std::string Field::name() const {
  std::string out = "GF(" + std::to_string(q_) + ")";
  if (e_ > 1) {
    out += " mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(modulus_[i]);
    }
    out += "]";
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b))
    fail(ErrorCode::FieldMismatch, (a ? a->name() : "?") + " vs " + (b ? b->name() : "?"));
}

FieldElement::FieldElement(FieldPtr field, Element value) : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_)) fail(ErrorCode::InvalidArgument, "element outside field");
}

FieldElement FieldElement::frobenius(std::uint32_t s) const { return {field_, field_->frobenius(value_, s)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

}  // namespace sigmahull
