#include "mixmul/ring.hpp"

#include "mixmul/errors.hpp"

namespace mixmul {

RingPresentation::RingPresentation(PolyRingPtr base, std::vector<Polynomial> relations, bool allow_unit)
    : base_(std::move(base)), cache_(std::make_shared<Cache>()) {
  for (auto& r : relations) {
    if (!same_ring(base_, r.ring())) throw AmbientMismatch("relation belongs to a different ring");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw DomainError("relation " + r.to_string() + " is not homogeneous");
    if (r.degree() == 0 && !allow_unit) throw DomainError("relation " + r.to_string() + " has degree 0");
    relations_.push_back(r.with_order(MonomialOrder::grevlex()));
  }
}

const GroebnerBasis& RingPresentation::relation_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = std::make_unique<GroebnerBasis>(buchberger(base_, relations_, MonomialOrder::grevlex()));
  });
  return *cache_->basis;
}

Polynomial RingPresentation::reduce(const Polynomial& p) const {
  return relation_basis().normal_form(p.with_order(MonomialOrder::grevlex()));
}

std::string RingPresentation::to_string() const {
  std::string s = base_->field().to_string() + "[";
  for (std::size_t i = 0; i < base_->nvars(); ++i) {
    if (i) s += ",";
    s += base_->variables()[i];
  }
  s += "]";
  if (!relations_.empty()) {
    s += " / (";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ")";
  }
  return s;
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
  return same_ring(a.base_, b.base_) && a.relations_ == b.relations_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace mixmul
