#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mixmul {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// True iff the supports are disjoint.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// `other / *this`; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  struct Hash {
    std::size_t operator()(const Monomial& m) const;
  };

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Monomial orders. elimination(k): the first k variables form a block that is
/// compared first (degree, then reverse-lex), ties broken by grevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::elimination, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Throws AmbientMismatch when the exponent vectors differ in length.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// compare() without the length check; for hot loops.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace mixmul
