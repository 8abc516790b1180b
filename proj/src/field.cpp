#include "mixmul/field.hpp"

#include "mixmul/errors.hpp"

namespace mixmul {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Scalar Field::normalize(const Scalar& q) const {
  Scalar c = q;
  c.canonicalize();
  if (kind_ == Kind::rationals) return c;
  const mpz_class p(static_cast<long>(p_));
  mpz_class den = c.get_den() % p;
  if (den == 0) throw DomainError("coefficient " + c.get_str() + " is not representable in " + to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (c.get_num() * inv) % p;
  if (r < 0) r += p;
  if (2 * r > p) r -= p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw DomainError("division by zero in " + to_string());
  return normalize(1 / a);
}

std::string Field::to_string() const {
  if (kind_ == Kind::rationals) return "QQ";
  return "Fp(" + std::to_string(p_) + ")";
}

}  // namespace mixmul
