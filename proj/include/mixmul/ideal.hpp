#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "mixmul/groebner.hpp"
#include "mixmul/ring.hpp"

namespace mixmul {

/// A homogeneous ideal U of A = k[x]/H, presented by generators in k[x].
/// All decisions go through the reduced grevlex basis of U + H, computed
/// lazily once and shared between copies.
class Ideal {
 public:
  /// Throws AmbientMismatch for generators of another free ring and
  /// DomainError for non-homogeneous generators. Zero polynomials are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// m = (x1, ..., xn).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced grevlex Gröbner basis of U + H.
  const GroebnerBasis& basis() const;
  /// Basis elements that do not vanish in A; a generating set of U.
  const std::vector<Polynomial>& reduced_generators() const;

  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const { return reduced_generators().empty(); }
  /// Membership in A.
  bool contains(const Polynomial& p) const;
  /// Maximal generator degree; -1 for the zero ideal.
  int max_degree() const;

  /// The same generators read in another presentation of the same free ring
  /// (e.g. a quotient of ring()).
  Ideal in_ring(RingPtr other) const;

  /// "(x, y^2)"; "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
    std::vector<Polynomial> reduced;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& u, const Ideal& v);
/// Generated by pairwise products of generators.
Ideal ideal_product(const Ideal& u, const Ideal& v);
/// Product of a list; the unit ideal of `ring` for an empty list.
Ideal ideal_product(const RingPtr& ring, std::span<const Ideal> factors);
/// u^0 = (1).
Ideal ideal_power(const Ideal& u, std::size_t n);
/// Via a tag variable t: t*U + (1-t)*V, eliminating t.
Ideal ideal_intersect(const Ideal& u, const Ideal& v);
/// u : v = {a : a*v ⊆ u}. Throws DomainError when v is zero.
Ideal ideal_colon(const Ideal& u, const Ideal& v);
/// u : f for a single element.
Ideal ideal_colon(const Ideal& u, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  /// Number of colon steps taken before the chain became stationary.
  std::size_t steps;
};

/// u : v^∞ by iterated colon. Throws DomainError when v is zero.
Saturation ideal_saturate(const Ideal& u, const Ideal& v);

bool ideal_equal(const Ideal& u, const Ideal& v);
/// u ⊇ v.
bool ideal_contains(const Ideal& u, const Ideal& v);

/// A/U presented as k[x]/(H ∪ gens(U)). A unit U yields the zero ring, which
/// callers detect with RingPresentation::is_zero_ring().
RingPtr quotient_ring(const RingPtr& ring, const Ideal& u);

/// (x) for a single polynomial.
inline Ideal principal(const RingPtr& ring, const Polynomial& x) { return Ideal(ring, {x}); }

}  // namespace mixmul
