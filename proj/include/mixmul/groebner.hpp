#pragma once

#include <span>
#include <vector>

#include "mixmul/polynomial.hpp"

namespace mixmul {

/// A reduced Gröbner basis: monic, auto-reduced, sorted by descending
/// leading monomial. Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRingPtr ring, MonomialOrder order, std::vector<Polynomial> generators,
                std::vector<Polynomial> source);

  const PolyRingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& source() const { return source_; }
  std::size_t size() const { return generators_.size(); }

  bool is_zero_ideal() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_[0].is_constant(); }
  bool is_monomial() const;

  /// Remainder of p on division by the basis. Throws AmbientMismatch when p
  /// lives in another ring or uses another order.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  std::vector<Monomial> leading_monomials() const;

  /// Same ideal: identical reduced bases.
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  PolyRingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> source_;
};

/// Reduced Gröbner basis of the ideal generated by `gens` in the free ring.
/// Normal selection strategy with Buchberger's coprime and chain criteria
/// (Gebauer–Möller installation). Zero generators are ignored.
GroebnerBasis buchberger(const PolyRingPtr& ring, std::span<const Polynomial> gens, const MonomialOrder& order);

/// Reduced basis of (basis) + (extra); pairs inside `basis` are not revisited.
GroebnerBasis buchberger_extend(const GroebnerBasis& basis, std::span<const Polynomial> extra);

/// Generators of (gens) ∩ k[x_{drop+1}, ..., x_n], computed with the
/// elimination(drop) order; returned in the same ring under that order.
/// Throws DomainError when `drop` exceeds the variable count.
std::vector<Polynomial> eliminate(const PolyRingPtr& ring, std::span<const Polynomial> gens, std::size_t drop);

}  // namespace mixmul
