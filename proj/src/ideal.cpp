#include "mixmul/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "mixmul/errors.hpp"

namespace mixmul {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

void check_same(const Ideal& u, const Ideal& v) {
  if (!same_ring(u.ring(), v.ring())) throw AmbientMismatch("ideals live in different rings");
}

// Lifted generators to an ideal of A, dropping those that vanish in A.
Ideal from_lift(const RingPtr& ring, const std::vector<Polynomial>& lifted) {
  std::vector<Polynomial> gens;
  gens.reserve(lifted.size());
  for (const auto& g : lifted) {
    Polynomial r = ring->reduce(g);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> minimal_monomials(const PolyRingPtr& base, std::vector<Monomial> monos) {
  std::vector<Polynomial> gens;
  gens.reserve(monos.size());
  for (auto& m : monos) gens.push_back(Polynomial::monomial(base, m));
  return buchberger(base, gens, kGrevlex).generators();
}

bool all_monomial(const std::vector<Polynomial>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

PolyRingPtr tag_ring(const PolyRingPtr& base) {
  std::string tag = "_t";
  while (base->index_of(tag) != base->nvars()) tag = "_" + tag;
  std::vector<std::string> names{tag};
  names.insert(names.end(), base->variables().begin(), base->variables().end());
  return PolyRing::make(base->field(), std::move(names));
}

// Reduced grevlex basis of (a) ∩ (b) in the free ring.
std::vector<Polynomial> intersect_free(const PolyRingPtr& base, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return {};
  if (all_monomial(a) && all_monomial(b)) {
    std::vector<Monomial> lcms;
    lcms.reserve(a.size() * b.size());
    for (const auto& f : a) {
      for (const auto& g : b) lcms.push_back(f.leading_monomial().lcm(g.leading_monomial()));
    }
    return minimal_monomials(base, std::move(lcms));
  }
  const PolyRingPtr tagged = tag_ring(base);
  const auto order = MonomialOrder::elimination(1);
  const Polynomial t = Polynomial::variable(tagged, 0, order);
  const Polynomial one_minus_t = Polynomial::constant(tagged, 1, order) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.size() + b.size());
  for (const auto& f : a) gens.push_back(t * embed(f, tagged, order));
  for (const auto& g : b) gens.push_back(one_minus_t * embed(g, tagged, order));
  std::vector<Polynomial> out;
  for (const auto& p : eliminate(tagged, gens, 1)) out.push_back(embed(p, base, kGrevlex));
  std::sort(out.begin(), out.end(), [](const Polynomial& x, const Polynomial& y) {
    return kGrevlex.compare_unchecked(x.leading_monomial(), y.leading_monomial()) > 0;
  });
  return out;
}

// Lift of U : f, given the reduced basis of U + H.
std::vector<Polynomial> colon_free(const GroebnerBasis& lifted, const Polynomial& f) {
  const PolyRingPtr& base = lifted.ring();
  if (lifted.contains(f)) return {Polynomial::constant(base, 1)};
  const auto& gens = lifted.generators();
  if (f.is_monomial() && all_monomial(gens)) {
    std::vector<Monomial> quotients;
    quotients.reserve(gens.size());
    for (const auto& g : gens) {
      const Monomial& m = g.leading_monomial();
      quotients.push_back(m.gcd(f.leading_monomial()).quotient_of(m));
    }
    return minimal_monomials(base, std::move(quotients));
  }
  std::vector<Polynomial> out;
  for (const auto& g : intersect_free(base, gens, {f})) out.push_back(divide_exact(g, f));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  generators_.reserve(generators.size());
  for (auto& g : generators) {
    if (!same_ring(ring_->base(), g.ring())) throw AmbientMismatch("generator belongs to a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DomainError("generator " + g.to_string() + " is not homogeneous");
    generators_.push_back(g.with_order(kGrevlex));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring->base(), 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring->base(), i));
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = std::make_unique<GroebnerBasis>(buchberger_extend(ring_->relation_basis(), generators_));
    const GroebnerBasis& h = ring_->relation_basis();
    for (const auto& g : cache_->basis->generators()) {
      if (!h.contains(g)) cache_->reduced.push_back(g);
    }
  });
  return *cache_->basis;
}

const std::vector<Polynomial>& Ideal::reduced_generators() const {
  basis();
  return cache_->reduced;
}

bool Ideal::contains(const Polynomial& p) const {
  if (!same_ring(ring_->base(), p.ring())) throw AmbientMismatch("element belongs to a different ring");
  return basis().contains(p.with_order(kGrevlex));
}

int Ideal::max_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

Ideal Ideal::in_ring(RingPtr other) const {
  if (!same_ring(ring_->base(), other->base())) throw AmbientMismatch("cannot move an ideal to another free ring");
  return Ideal(std::move(other), generators_);
}

std::string Ideal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + ")";
}

Ideal ideal_sum(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  std::vector<Polynomial> gens = u.generators();
  gens.insert(gens.end(), v.generators().begin(), v.generators().end());
  return Ideal(u.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  const auto& a = u.reduced_generators();
  const auto& b = v.reduced_generators();
  std::unordered_set<Polynomial, Polynomial::Hash> seen;
  std::vector<Polynomial> gens;
  for (const auto& f : a) {
    for (const auto& g : b) {
      Polynomial p = (f * g).monic();
      if (seen.insert(p).second) gens.push_back(std::move(p));
    }
  }
  if (gens.size() > 1 && all_monomial(gens)) {
    std::vector<Monomial> monos;
    monos.reserve(gens.size());
    for (const auto& p : gens) monos.push_back(p.leading_monomial());
    gens = minimal_monomials(u.ring()->base(), std::move(monos));
  }
  return Ideal(u.ring(), std::move(gens));
}

Ideal ideal_product(const RingPtr& ring, std::span<const Ideal> factors) {
  Ideal acc = Ideal::unit(ring);
  for (const auto& f : factors) acc = ideal_product(acc, f);
  return acc;
}

Ideal ideal_power(const Ideal& u, std::size_t n) {
  Ideal acc = Ideal::unit(u.ring());
  for (std::size_t k = 0; k < n; ++k) acc = ideal_product(acc, u);
  return acc;
}

Ideal ideal_intersect(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  const PolyRingPtr& base = u.ring()->base();
  return from_lift(u.ring(), intersect_free(base, u.basis().generators(), v.basis().generators()));
}

Ideal ideal_colon(const Ideal& u, const Polynomial& f) {
  if (!same_ring(u.ring()->base(), f.ring())) throw AmbientMismatch("element belongs to a different ring");
  Polynomial g = u.ring()->reduce(f);
  if (g.is_zero()) return Ideal::unit(u.ring());
  return from_lift(u.ring(), colon_free(u.basis(), g));
}

Ideal ideal_colon(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  const auto& gens = v.reduced_generators();
  if (gens.empty()) throw DomainError("colon by the zero ideal");
  const PolyRingPtr& base = u.ring()->base();
  std::vector<Polynomial> acc;
  bool first = true;
  for (const auto& g : gens) {
    std::vector<Polynomial> part = colon_free(u.basis(), g);
    // Both sides contain H; the intersection is again a lift.
    acc = first ? std::move(part) : intersect_free(base, acc, part);
    first = false;
  }
  return from_lift(u.ring(), acc);
}

Saturation ideal_saturate(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  if (v.is_zero()) throw DomainError("saturation by the zero ideal");
  Ideal current = u;
  std::size_t steps = 0;
  for (;;) {
    Ideal next = ideal_colon(current, v);
    if (ideal_equal(next, current)) return Saturation{current, steps};
    current = std::move(next);
    ++steps;
  }
}

bool ideal_equal(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  return u.basis() == v.basis();
}

bool ideal_contains(const Ideal& u, const Ideal& v) {
  check_same(u, v);
  for (const auto& g : v.reduced_generators()) {
    if (!u.basis().contains(g)) return false;
  }
  return true;
}

RingPtr quotient_ring(const RingPtr& ring, const Ideal& u) {
  if (!same_ring(ring, u.ring())) throw AmbientMismatch("ideal does not belong to the ring being divided");
  std::vector<Polynomial> rels = ring->relations();
  rels.insert(rels.end(), u.generators().begin(), u.generators().end());
  return std::make_shared<const RingPresentation>(ring->base(), std::move(rels), true);
}

}  // namespace mixmul
