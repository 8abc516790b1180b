#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mixmul {

/// Field elements are stored as GMP rationals. Over a prime field they are
/// kept as integers in the symmetric range (-p/2, p/2].
using Scalar = mpq_class;

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws DomainError unless p is a prime >= 2.
  static Field prime(std::int64_t p);

  Kind kind() const { return kind_; }
  /// 0 for the rationals.
  std::int64_t characteristic() const { return p_; }

  /// Canonical representative of q in this field. Throws DomainError when q
  /// has a denominator divisible by p.
  Scalar normalize(const Scalar& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  /// Throws DomainError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// "QQ" or "Fp(p)"; the same spelling the instance format accepts.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;
};

/// Default characteristic for the prime-field mode.
inline constexpr std::int64_t kDefaultPrime = 32003;

}  // namespace mixmul
