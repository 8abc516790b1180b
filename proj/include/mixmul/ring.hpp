#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mixmul/groebner.hpp"
#include "mixmul/polynomial.hpp"

namespace mixmul {

/// A = k[x1..xn]/H for a list H of homogeneous relations, thought of as
/// localized at m = (x1..xn). Immutable; the relation basis is computed once
/// on first use (thread-safe).
class RingPresentation {
 public:
  /// Throws DomainError when a relation is zero, not homogeneous or of degree 0
  /// (unless `allow_unit` is set, which only quotient_ring uses).
  RingPresentation(PolyRingPtr base, std::vector<Polynomial> relations, bool allow_unit = false);

  static std::shared_ptr<const RingPresentation> make(PolyRingPtr base, std::vector<Polynomial> relations = {}) {
    return std::make_shared<const RingPresentation>(std::move(base), std::move(relations));
  }

  const PolyRingPtr& base() const { return base_; }
  const Field& field() const { return base_->field(); }
  std::size_t nvars() const { return base_->nvars(); }
  const std::vector<Polynomial>& relations() const { return relations_; }

  /// Reduced grevlex basis of H.
  const GroebnerBasis& relation_basis() const;
  /// True when H = (1), i.e. A is the zero ring.
  bool is_zero_ring() const { return relation_basis().is_unit(); }

  /// Normal form modulo H; zero iff p vanishes in A.
  Polynomial reduce(const Polynomial& p) const;

  /// e.g. "QQ[x,y] / (x*y, y^2)".
  std::string to_string() const;

  /// Same free ring and identical relation lists.
  friend bool operator==(const RingPresentation& a, const RingPresentation& b);

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };

  PolyRingPtr base_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<Cache> cache_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Same presented ring (pointer identity or structural equality).
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace mixmul
