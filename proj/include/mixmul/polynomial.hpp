#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mixmul/field.hpp"
#include "mixmul/monomial.hpp"

namespace mixmul {

/// The free polynomial ring k[x1..xn]: a field and distinct variable names.
class PolyRing {
 public:
  /// Throws DomainError on duplicate or empty variable names.
  PolyRing(Field field, std::vector<std::string> variables);

  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> variables) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(variables));
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  /// Index of `name`, or nvars() if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// True when both handles denote the same free ring.
bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Immutable multivariate polynomial. Terms are nonzero and sorted strictly
/// descending under the polynomial's monomial order.
class Polynomial {
 public:
  /// The zero polynomial of `ring` (grevlex).
  explicit Polynomial(PolyRingPtr ring, MonomialOrder order = MonomialOrder::grevlex());

  /// Normalizes coefficients, merges like terms, drops zeros and sorts.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(PolyRingPtr ring, const Scalar& c, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(PolyRingPtr ring, std::size_t index, MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c = 1,
                             MonomialOrder order = MonomialOrder::grevlex());

  const PolyRingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Require !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  /// Maximal total degree; -1 for zero.
  int degree() const;

  /// Drops the leading term.
  Polynomial tail() const;
  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  /// c * m * this.
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  /// this - c*m*other, in one merge pass.
  Polynomial sub_mul_term(const Polynomial& other, const Monomial& m, const Scalar& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Canonical text in the polynomial grammar, e.g. "x^2 - 2*x*y".
  std::string to_string() const;

  /// Structural equality (ring, order and terms).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  struct Hash {
    std::size_t operator()(const Polynomial& p) const;
  };

 private:
  Polynomial(PolyRingPtr ring, MonomialOrder order, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), order_(order), terms_(std::move(sorted_terms)) {}

  void check_compatible(const Polynomial& other) const;

  PolyRingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Exact arithmetic in the free ring. Throws AmbientMismatch on mixed rings.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Exact quotient a / b. Throws DomainError when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Re-expresses `p` in `target`, matching variables by name. Variables of p's
/// ring that are absent from `target` must not occur in p.
Polynomial embed(const Polynomial& p, const PolyRingPtr& target, MonomialOrder order = MonomialOrder::grevlex());

/// All monomials of total degree `degree` in `nvars` variables, descending in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

}  // namespace mixmul
