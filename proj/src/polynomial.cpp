#include "mixmul/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mixmul/errors.hpp"

namespace mixmul {

PolyRing::PolyRing(Field field, std::vector<std::string> variables)
    : field_(std::move(field)), variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

std::size_t PolyRing::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  return static_cast<std::size_t>(it - variables_.begin());
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) { return a == b || *a == *b; }

Polynomial::Polynomial(PolyRingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  const Field& field = ring->field();
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->nvars()) throw AmbientMismatch("monomial length does not match ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::vector<Term> cleaned;
  cleaned.reserve(out.size());
  for (auto& t : out) {
    t.coeff = field.normalize(t.coeff);
    if (t.coeff != 0) cleaned.push_back(std::move(t));
  }
  return Polynomial(std::move(ring), order, std::move(cleaned));
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c, MonomialOrder order) {
  const std::size_t n = ring->nvars();
  return from_terms(std::move(ring), {Term{Monomial(n), c}}, order);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index, MonomialOrder order) {
  if (index >= ring->nvars()) throw DomainError("variable index out of range");
  const std::size_t n = ring->nvars();
  return from_terms(std::move(ring), {Term{Monomial::variable(n, index), Scalar(1)}}, order);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c, MonomialOrder order) {
  return from_terms(std::move(ring), {Term{m, c}}, order);
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, order_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.monomial, b.monomial) > 0;
  });
  return Polynomial(ring_, order, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& field = ring_->field();
  Scalar cc = field.normalize(c);
  if (cc == 0) return Polynomial(ring_, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{t.monomial, field.mul(t.coeff, cc)});
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  const Field& field = ring_->field();
  Scalar cc = field.normalize(c);
  if (cc == 0) return Polynomial(ring_, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of the terms.
  for (const auto& t : terms_) terms.push_back(Term{t.monomial * m, field.mul(t.coeff, cc)});
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::sub_mul_term(const Polynomial& other, const Monomial& m, const Scalar& c) const {
  check_compatible(other);
  const Field& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial mb = b->monomial * m;
    if (a == terms_.end()) {
      out.push_back(Term{std::move(mb), field.neg(field.mul(b->coeff, c))});
      ++b;
      continue;
    }
    auto cmp = order_.compare_unchecked(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(mb), field.neg(field.mul(b->coeff, c))});
      ++b;
    } else {
      Scalar v = field.sub(a->coeff, field.mul(b->coeff, c));
      if (v != 0) out.push_back(Term{a->monomial, std::move(v)});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, order_, std::move(out));
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw AmbientMismatch("polynomials belong to different rings");
  if (!(order_ == other.order_)) throw AmbientMismatch("polynomials use different monomial orders");
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul_term(b, Monomial(a.ring_->nvars()), Scalar(-1));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul_term(b, Monomial(a.ring_->nvars()), Scalar(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.ring_, std::move(terms), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || !(a.order_ == b.order_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::size_t Polynomial::Hash::operator()(const Polynomial& p) const {
  std::size_t h = p.terms_.size();
  Monomial::Hash mh;
  for (const auto& t : p.terms_) {
    h ^= mh(t.monomial) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(t.coeff.get_str()) + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || t.monomial.is_one()) factors.push_back(c.get_str());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      std::string f = ring_->variables()[i];
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out << '*';
      out << factors[k];
    }
  }
  return out.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return a;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Field& field = a.ring()->field();
  Polynomial rest = a;
  std::vector<Term> quotient;
  const Scalar lc_inv = field.inv(b.leading_coeff());
  while (!rest.is_zero()) {
    if (!b.leading_monomial().divides(rest.leading_monomial())) {
      throw DomainError(b.to_string() + " does not divide " + a.to_string());
    }
    Monomial m = b.leading_monomial().quotient_of(rest.leading_monomial());
    Scalar c = field.mul(rest.leading_coeff(), lc_inv);
    rest = rest.sub_mul_term(b, m, c);
    quotient.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient), a.order());
}

Polynomial embed(const Polynomial& p, const PolyRingPtr& target, MonomialOrder order) {
  if (!(p.ring()->field() == target->field())) throw AmbientMismatch("cannot embed across fields");
  std::vector<std::size_t> map(p.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = target->index_of(p.ring()->variables()[i]);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == target->nvars()) {
        throw AmbientMismatch("variable '" + p.ring()->variables()[i] + "' missing in target ring");
      }
      e[map[i]] = t.monomial[i];
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms), order);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare_unchecked(a, b) > 0; });
  return out;
}

}  // namespace mixmul
