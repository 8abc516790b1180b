#include <doctest.h>

#include <random>

#include "mixmul/errors.hpp"
#include "mixmul/parser.hpp"
#include "mixmul/polynomial.hpp"

using namespace mixmul;

namespace doctest {
template <>
struct StringMaker<Polynomial> {
  static String convert(const Polynomial& p) { return p.to_string().c_str(); }
};
}  // namespace doctest

namespace {

PolyRingPtr qq(std::vector<std::string> vars) { return PolyRing::make(Field::rationals(), std::move(vars)); }

std::vector<Monomial> all_monomials(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Independent textbook definitions, used as oracles.
int sign_of_first_nonzero(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to, bool reverse) {
  if (!reverse) {
    for (std::size_t i = from; i < to; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
  } else {
    for (std::size_t i = to; i-- > from;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

int block_degree_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  return da == db ? 0 : (da > db ? 1 : -1);
}

int oracle(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  switch (order.kind()) {
    case MonomialOrder::Kind::lex:
      return sign_of_first_nonzero(a, b, 0, n, false);
    case MonomialOrder::Kind::grevlex:
      if (int c = block_degree_cmp(a, b, 0, n)) return c;
      return sign_of_first_nonzero(a, b, 0, n, true);
    case MonomialOrder::Kind::elimination: {
      const std::size_t k = order.block();
      if (int c = block_degree_cmp(a, b, 0, k)) return c;
      if (int c = sign_of_first_nonzero(a, b, 0, k, true)) return c;
      if (int c = block_degree_cmp(a, b, k, n)) return c;
      return sign_of_first_nonzero(a, b, k, n, true);
    }
  }
  return 0;
}

int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

Polynomial random_poly(const PolyRingPtr& r, std::mt19937_64& rng) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng() % 5);
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint32_t> e(r->nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
    Scalar c(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3 + 1));
    terms.push_back({Monomial(e), c});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("parse canonical forms") {
  auto r = qq({"x", "y"});
  auto p = parse_polynomial("x^2 - 2*x*y", r);
  REQUIRE(p.size() == 2);
  CHECK(p.terms()[0].monomial == Monomial{2, 0});
  CHECK(p.terms()[0].coeff == 1);
  CHECK(p.terms()[1].monomial == Monomial{1, 1});
  CHECK(p.terms()[1].coeff == -2);
  CHECK(p.to_string() == "x^2 - 2*x*y");

  CHECK(parse_polynomial("0", r).is_zero());
  auto twice = parse_polynomial("x + x", r);
  REQUIRE(twice.size() == 1);
  CHECK(twice.leading_coeff() == 2);
  CHECK(twice.to_string() == "2*x");
  CHECK(parse_polynomial("(x+y)^2 - x*x", r).to_string() == "2*x*y + y^2");
  CHECK(parse_polynomial("x/2 - -y", r).to_string() == "1/2*x + y");
}

TEST_CASE("parse errors carry positions") {
  auto r = qq({"x", "y"});
  CHECK_THROWS_AS(parse_polynomial("2x", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + z", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / 0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^y", r), ParseError);
  try {
    parse_polynomial("x + z", r);
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  auto f7 = PolyRing::make(Field::prime(7), {"x"});
  CHECK_THROWS_AS(parse_polynomial("x/7", f7), ParseError);
  CHECK(parse_polynomial("x/2", f7).to_string() == "-3*x");
}

TEST_CASE("parse after print is the identity") {
  auto r = qq({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(r, rng);
    CHECK(parse_polynomial(p.to_string(), r) == p);
  }
}

TEST_CASE("arithmetic examples") {
  auto r = qq({"x", "y"});
  auto p = [&](const char* s) { return parse_polynomial(s, r); };
  CHECK(p("x+y") * p("x-y") == p("x^2-y^2"));
  CHECK(p("x*y+3") + Polynomial(r) == p("x*y+3"));
  auto f2 = PolyRing::make(Field::prime(2), {"x", "y"});
  auto s = parse_polynomial("x+y", f2);
  CHECK((s * s) == parse_polynomial("x^2+y^2", f2));
  CHECK(poly_arith(p("x"), p("y"), ArithOp::sub) == p("x-y"));
  CHECK(divide_exact(p("x^2-y^2"), p("x-y")) == p("x+y"));
  CHECK_THROWS_AS(divide_exact(p("x^2+y^2"), p("x-y")), DomainError);
  CHECK_THROWS_AS(p("x") + parse_polynomial("x", qq({"x", "z"})), AmbientMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = qq({"x", "y", "z"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("grevlex on degree two in three variables") {
  // Frozen from the brute-force enumeration: x^2 > xy > y^2 > xz > yz > z^2.
  const auto order = MonomialOrder::grevlex();
  const std::vector<Monomial> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  auto got = monomials_of_degree(3, 2);
  CHECK(got == expected);
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) CHECK(order.compare(expected[i], expected[i + 1]) > 0);
  CHECK(order.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(MonomialOrder::lex().compare(Monomial{1, 0}, Monomial{0, 2}) > 0);
  CHECK(order.compare(Monomial{1, 1}, Monomial{1, 1}) == 0);
  CHECK_THROWS_AS(order.compare(Monomial{1, 1}, Monomial{1}), AmbientMismatch);
}

TEST_CASE("monomial orders agree with their definitions and are admissible") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex()};
    for (std::size_t k = 1; k < n; ++k) orders.push_back(MonomialOrder::elimination(k));
    const auto monos = all_monomials(n, 4);
    const Monomial one(n);
    for (const auto& order : orders) {
      for (const auto& a : monos) {
        CHECK(order.compare(one, a) <= 0);
        for (const auto& b : monos) {
          const int ab = as_int(order.compare(a, b));
          CHECK(ab == oracle(order, a, b));
          CHECK(ab == -as_int(order.compare(b, a)));
          if (ab < 0) {
            for (std::size_t i = 0; i < n; ++i) CHECK(order.compare(a * Monomial::variable(n, i), b * Monomial::variable(n, i)) < 0);
          }
        }
      }
      // Transitivity on a sorted sample: the order is total and the sort is consistent.
      auto sorted = monos;
      std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
      for (std::size_t i = 0; i + 2 < sorted.size(); ++i) CHECK(order.compare(sorted[i], sorted[i + 2]) < 0);
    }
  }
}

TEST_CASE("fields") {
  CHECK_THROWS_AS(Field::prime(1), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  auto f = Field::prime(7);
  CHECK(f.normalize(Scalar(10)) == 3);
  CHECK(f.normalize(Scalar(4)) == -3);
  CHECK(f.mul(f.inv(Scalar(3)), Scalar(3)) == 1);
  CHECK(Field::prime(kDefaultPrime).to_string() == "Fp(32003)");
  CHECK_THROWS_AS(PolyRing(Field::rationals(), {"x", "x"}), DomainError);
}
