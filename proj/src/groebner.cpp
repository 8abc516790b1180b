#include "mixmul/groebner.hpp"

#include <algorithm>
#include <limits>

#include "mixmul/errors.hpp"

namespace mixmul {

GroebnerBasis::GroebnerBasis(PolyRingPtr ring, MonomialOrder order, std::vector<Polynomial> generators,
                             std::vector<Polynomial> source)
    : ring_(std::move(ring)), order_(order), generators_(std::move(generators)), source_(std::move(source)) {}

bool GroebnerBasis::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.generators_ == b.generators_;
}

namespace {

// Full reduction of p by the polynomials selected in `basis` (null entries skipped).
Polynomial reduce_by(Polynomial p, const std::vector<const Polynomial*>& basis) {
  const Field& field = p.ring()->field();
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const Polynomial* g : basis) {
      if (g != nullptr && g->leading_monomial().divides(lm)) {
        divisor = g;
        break;
      }
    }
    if (divisor != nullptr) {
      Monomial m = divisor->leading_monomial().quotient_of(lm);
      Scalar c = field.div(p.leading_coeff(), divisor->leading_coeff());
      p = p.sub_mul_term(*divisor, m, c);
    } else {
      remainder.push_back(p.leading_term());
      p = p.tail();
    }
  }
  if (remainder.empty()) return p;
  return Polynomial::from_terms(p.ring(), std::move(remainder), p.order());
}

struct Pair {
  std::size_t i;
  std::size_t j;  // npos for an input generator waiting to be inserted
  Monomial lcm;
};

constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();

class Engine {
 public:
  Engine(PolyRingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

  void seed_basis(const std::vector<Polynomial>& basis) {
    for (const auto& g : basis) {
      polys_.push_back(g);
      active_.push_back(true);
    }
  }

  void queue_inputs(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      inputs_.push_back(g.with_order(order_));
      pairs_.push_back(Pair{inputs_.size() - 1, kInput, inputs_.back().leading_monomial()});
    }
  }

  std::vector<Polynomial> run() {
    while (!pairs_.empty() && !unit_) {
      const std::size_t k = select();
      Pair p = std::move(pairs_[k]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial h = p.j == kInput ? inputs_[p.i] : spoly(p);
      h = reduce_by(std::move(h), active_view());
      if (h.is_zero()) continue;
      insert(h.monic());
    }
    return finish();
  }

 private:
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto c = order_.compare_unchecked(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    Monomial mf = f.leading_monomial().quotient_of(p.lcm);
    Monomial mg = g.leading_monomial().quotient_of(p.lcm);
    // Both are monic.
    return f.mul_term(mf, 1).sub_mul_term(g, mg, 1);
  }

  std::vector<const Polynomial*> active_view() const {
    std::vector<const Polynomial*> v;
    v.reserve(polys_.size());
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) v.push_back(&polys_[k]);
    }
    return v;
  }

  // Gebauer–Möller update for a new, fully reduced, monic h.
  void insert(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      polys_.push_back(std::move(h));
      active_.push_back(true);
      return;
    }
    const std::size_t hi = polys_.size();
    const Monomial& H = h.leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back(Pair{k, hi, polys_[k].leading_monomial().lcm(H)});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      bool coprime = polys_[pa.i].leading_monomial().coprime(H);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (b == a) continue;
          const auto& pb = candidates[b];
          if (!pb.lcm.divides(pa.lcm)) continue;
          // Strict divisibility always eliminates; ties keep the first kept
          // pair (or a coprime one, which covers the same S-polynomial).
          if (!(pb.lcm == pa.lcm)) {
            dominated = true;
          } else if (b < a) {
            dominated = true;
          } else if (polys_[pb.i].leading_monomial().coprime(H)) {
            dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(pa);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.j != kInput && H.divides(p.lcm)) {
        Monomial li = polys_[p.i].leading_monomial().lcm(H);
        Monomial lj = polys_[p.j].leading_monomial().lcm(H);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (auto& p : kept) {
      if (!polys_[p.i].leading_monomial().coprime(H)) pairs_.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && H.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::vector<Polynomial> finish() const {
    if (unit_) return {Polynomial::constant(ring_, 1, order_)};
    std::vector<const Polynomial*> basis = active_view();
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Polynomial*> others = basis;
      others[k] = nullptr;
      out.push_back(reduce_by(*basis[k], others).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare_unchecked(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
  }

  PolyRingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Polynomial> inputs_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

// Minimal generators of a monomial ideal, monic, sorted descending.
std::vector<Polynomial> minimal_monomial_basis(const PolyRingPtr& ring, std::vector<Monomial> monos,
                                               const MonomialOrder& order) {
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare_unchecked(a, b) < 0;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> minimal;
  for (const auto& m : monos) {
    bool divisible = false;
    for (const auto& g : minimal) {
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare_unchecked(a, b) > 0; });
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& m : minimal) out.push_back(Polynomial::monomial(ring, m, 1, order));
  return out;
}

void check_ring(const PolyRingPtr& ring, std::span<const Polynomial> gens) {
  for (const auto& g : gens) {
    if (!same_ring(ring, g.ring())) throw AmbientMismatch("generator belongs to a different ring");
  }
}

}  // namespace

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!same_ring(ring_, p.ring())) throw AmbientMismatch("normal form across rings");
  if (!(order_ == p.order())) throw AmbientMismatch("normal form with a different monomial order");
  std::vector<const Polynomial*> basis;
  basis.reserve(generators_.size());
  for (const auto& g : generators_) basis.push_back(&g);
  return reduce_by(p, basis);
}

GroebnerBasis buchberger(const PolyRingPtr& ring, std::span<const Polynomial> gens, const MonomialOrder& order) {
  check_ring(ring, gens);
  std::vector<Polynomial> source(gens.begin(), gens.end());
  bool monomial = true;
  std::vector<Monomial> monos;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) {
      monomial = false;
      break;
    }
    monos.push_back(g.leading_monomial());
  }
  if (monomial) {
    return GroebnerBasis(ring, order, minimal_monomial_basis(ring, std::move(monos), order), std::move(source));
  }
  Engine engine(ring, order);
  engine.queue_inputs(gens);
  return GroebnerBasis(ring, order, engine.run(), std::move(source));
}

GroebnerBasis buchberger_extend(const GroebnerBasis& basis, std::span<const Polynomial> extra) {
  check_ring(basis.ring(), extra);
  std::vector<Polynomial> source = basis.source();
  source.insert(source.end(), extra.begin(), extra.end());
  if (basis.is_unit()) return GroebnerBasis(basis.ring(), basis.order(), basis.generators(), std::move(source));

  bool monomial = basis.is_monomial();
  for (const auto& g : extra) monomial = monomial && (g.is_zero() || g.is_monomial());
  if (monomial) {
    std::vector<Monomial> monos = basis.leading_monomials();
    for (const auto& g : extra) {
      if (!g.is_zero()) monos.push_back(g.leading_monomial());
    }
    return GroebnerBasis(basis.ring(), basis.order(), minimal_monomial_basis(basis.ring(), std::move(monos), basis.order()),
                         std::move(source));
  }
  Engine engine(basis.ring(), basis.order());
  engine.seed_basis(basis.generators());
  engine.queue_inputs(extra);
  return GroebnerBasis(basis.ring(), basis.order(), engine.run(), std::move(source));
}

std::vector<Polynomial> eliminate(const PolyRingPtr& ring, std::span<const Polynomial> gens, std::size_t drop) {
  if (drop > ring->nvars()) throw DomainError("cannot eliminate more variables than the ring has");
  const auto order = MonomialOrder::elimination(drop);
  std::vector<Polynomial> converted;
  converted.reserve(gens.size());
  for (const auto& g : gens) converted.push_back(g.with_order(order));
  GroebnerBasis gb = buchberger(ring, converted, order);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    const Monomial& lm = g.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < drop; ++i) free = free && lm[i] == 0;
    if (free) out.push_back(g);
  }
  return out;
}

}  // namespace mixmul
