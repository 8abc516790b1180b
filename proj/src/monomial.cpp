#include "mixmul/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "mixmul/errors.hpp"

namespace mixmul {

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::Hash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Reverse-lex tie break on [lo, hi): the monomial with the smaller exponent in
// the last differing variable is the larger one.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::uint32_t partial_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  std::uint32_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw AmbientMismatch("monomials of different length compared");
  if (kind_ == Kind::elimination && block_ > a.size()) throw DomainError("elimination block exceeds variable count");
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, a.size());
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::elimination: {
      const std::uint32_t da = partial_degree(a, 0, block_);
      const std::uint32_t db = partial_degree(b, 0, block_);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, block_); c != 0) return c;
      const std::uint32_t ra = a.degree() - da;
      const std::uint32_t rb = b.degree() - db;
      if (ra != rb) return ra <=> rb;
      return revlex(a, b, block_, a.size());
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace mixmul
