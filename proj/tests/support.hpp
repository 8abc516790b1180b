#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "mixmul/ideal.hpp"
#include "mixmul/parser.hpp"

namespace support {

using namespace mixmul;

inline RingPtr ring_of(std::vector<std::string> vars, std::vector<std::string> relations = {},
                       Field field = Field::rationals()) {
  auto base = PolyRing::make(field, std::move(vars));
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, base));
  return RingPresentation::make(base, std::move(rels));
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring->base()); }

inline Ideal ideal_of(const RingPtr& ring, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(ring, g));
  return Ideal(ring, std::move(ps));
}

inline std::string basis_string(const Ideal& u) {
  std::string s;
  for (const auto& g : u.reduced_generators()) s += (s.empty() ? "" : ", ") + g.to_string();
  return "(" + s + ")";
}

}  // namespace support
