#include <doctest.h>

#include "corpus.hpp"
#include "mixmul/errors.hpp"
#include "mixmul/theorems.hpp"

using namespace mixmul;
using support::ideal_of;
using support::poly;
using support::ring_of;

namespace {

using Sizes = std::vector<std::size_t>;

const Quantity& quantity(const std::vector<Quantity>& qs, const std::string& name) {
  for (const auto& q : qs) {
    if (q.name == name) return q;
  }
  FAIL("missing quantity " << name);
  throw std::logic_error("unreachable");
}

std::int64_t integer(const std::vector<Quantity>& qs, const std::string& name) {
  return std::get<std::int64_t>(quantity(qs, name).value);
}

std::string text(const std::vector<Quantity>& qs, const std::string& name) {
  return std::get<std::string>(quantity(qs, name).value);
}

}  // namespace

TEST_CASE("proposition 6 examples") {
  TheoremOptions opts;
  auto r = ring_of({"x", "y"});
  std::vector<Ideal> m{Ideal::maximal(r)};
  auto generic = check_prop6(r, m, 1, opts);
  CHECK(generic.verdict == Verdict::confirmed);
  REQUIRE(generic.elements.size() == 1);
  CHECK(generic.elements[0].superficial.verified());
  CHECK(std::get<bool>(quantity(generic.computed, "colon identity k=4").value));
  CHECK(std::get<bool>(quantity(generic.computed, "(0:x) ∩ I^7 = 0").value));

  auto a = ring_of({"x", "y"}, {"x*y"});
  std::vector<Ideal> ma{Ideal::maximal(a)};
  auto rejected = check_prop6(a, ma, 1, opts, poly(a, "y"));
  CHECK(rejected.verdict == Verdict::inconclusive);
  auto sampled = check_prop6(a, ma, 1, opts);
  CHECK(sampled.verdict == Verdict::confirmed);

  std::vector<Ideal> two{ideal_of(r, {"x"}), ideal_of(r, {"y"})};
  CHECK(check_prop6(r, two, 1, opts, poly(r, "x")).verdict == Verdict::confirmed);
}

TEST_CASE("theorem 3 examples") {
  TheoremOptions opts;
  auto r = ring_of({"x", "y"});
  auto m = Ideal::maximal(r);
  std::vector<Ideal> same{m};
  auto plane = check_theorem3(r, m, same, Sizes{0, 1}, opts);
  CHECK(plane.verdict == Verdict::confirmed);
  CHECK(integer(plane.computed, "e(0,1)") == 1);
  REQUIRE(plane.readings.size() == 2);
  for (const auto& rr : plane.readings) {
    CHECK(rr.verdict == Verdict::confirmed);
    CHECK(integer(rr.computed, "e(J, Ā) [include-J]") == 1);
    CHECK(integer(rr.computed, "e(J, Ā) [exclude-J]") == 1);
  }

  // The reading of I decides nothing here: neither admits an FC-element.
  std::vector<Ideal> xs{ideal_of(r, {"x"})};
  auto ambiguous = check_theorem3(r, m, xs, Sizes{0, 1}, opts);
  CHECK(ambiguous.verdict == Verdict::inconclusive);
  CHECK(exit_code(ambiguous.verdict) == 2);
  CHECK(integer(ambiguous.computed, "e(0,1)") == 0);
  REQUIRE(ambiguous.readings.size() == 2);
  CHECK(ambiguous.readings[0].reading == ProductReading::whole_tuple);
  CHECK(ambiguous.readings[1].reading == ProductReading::exclude_first);
  for (const auto& rr : ambiguous.readings) CHECK(rr.verdict == Verdict::confirmed_negatively);

  auto s = ring_of({"x", "y", "z"});
  auto ms = Ideal::maximal(s);
  std::vector<Ideal> space{ms};
  auto three = check_theorem3(s, ms, space, Sizes{1, 1}, opts);
  CHECK(three.verdict == Verdict::confirmed);
  CHECK(integer(three.computed, "e(1,1)") == 1);

  CHECK_THROWS_AS(check_theorem3(r, m, same, Sizes{1, 1}, opts), DomainError);
  CHECK_THROWS_AS(check_theorem3(r, m, same, Sizes{1}, opts), DomainError);
}

TEST_CASE("theorem 5 examples") {
  TheoremOptions opts;
  auto r = ring_of({"x", "y"});
  auto m = Ideal::maximal(r);
  std::vector<Ideal> same{m};
  auto plane = check_theorem5(r, m, same, Sizes{0, 1}, opts);
  CHECK(plane.verdict == Verdict::confirmed);
  CHECK(text(plane.computed, "dim A/Q:I^∞") == "1");
  CHECK(integer(plane.computed, "e(J, A/Q:I^∞)") == 1);

  // Q = (c x) and (x):(x)^∞ = (1): e = 0 and the dimension is EMPTY.
  std::vector<Ideal> xs{ideal_of(r, {"x"})};
  auto ambiguous = check_theorem5(r, m, xs, Sizes{0, 1}, opts);
  CHECK(ambiguous.verdict == Verdict::confirmed);
  CHECK(text(ambiguous.computed, "dim A/Q:I^∞") == "EMPTY");

  auto empty = check_theorem5(r, m, same, Sizes{1, 0}, opts);
  CHECK(empty.verdict == Verdict::confirmed);
  CHECK(text(empty.computed, "Q") == "(0)");
  CHECK(text(empty.computed, "dim A/Q:I^∞") == "2");
  CHECK(integer(empty.computed, "e(J, A/Q:I^∞)") == 1);
}

TEST_CASE("remark 7 examples") {
  TheoremOptions opts;
  auto r = ring_of({"x", "y"});
  auto m = Ideal::maximal(r);
  std::vector<Ideal> same{m};
  auto one = check_remark7(r, m, same, Sizes{1}, opts);
  CHECK(one.verdict == Verdict::confirmed);
  CHECK(text(one.computed, "dim A/Q:I^∞") == "1");

  auto s = ring_of({"x", "y", "z"});
  auto ms = Ideal::maximal(s);
  std::vector<Ideal> space{ms};
  auto two = check_remark7(s, ms, space, Sizes{1, 1}, opts);
  CHECK(two.verdict == Verdict::confirmed);
  CHECK(text(two.computed, "dim A/Q:I^∞") == "1");

  auto none = check_remark7(r, m, same, Sizes{}, opts);
  CHECK(none.verdict == Verdict::confirmed);
  CHECK(text(none.computed, "dim A/Q:I^∞") == "2");

  TheoremOptions with_fc = opts;
  with_fc.test_fc_equality = true;
  CHECK(check_remark7(r, m, same, Sizes{1}, with_fc).verdict == Verdict::confirmed);
}

TEST_CASE("remark 2 examples") {
  TheoremOptions opts;
  auto r = ring_of({"x", "y"});
  auto m = Ideal::maximal(r);
  std::vector<Ideal> same{m};
  auto plane = check_remark2_invariance(r, m, same, poly(r, "x"), 1, opts);
  CHECK(plane.verdict == Verdict::confirmed);
  CHECK(integer(plane.computed, "points [J]") == 16);
  CHECK(integer(plane.computed, "mismatches [m]") == 0);

  auto b = ring_of({"x", "y"}, {"x*y", "y^2"});
  std::vector<Ideal> xb{ideal_of(b, {"x"})};
  auto torsion = check_remark2_invariance(b, Ideal::maximal(b), xb, poly(b, "x"), 1, opts);
  CHECK(torsion.verdict == Verdict::confirmed);

  auto a = ring_of({"x", "y"}, {"x*y"});
  std::vector<Ideal> ma{Ideal::maximal(a)};
  CHECK_THROWS_AS(check_remark2_invariance(a, Ideal::maximal(a), ma, poly(a, "y"), 1, opts), DomainError);

  // Near the origin the torsion of x still shows: at n = 1, (y) meets m.
  TheoremOptions low = opts;
  low.window = {1, 0};
  auto early = check_remark2_invariance(b, Ideal::maximal(b), std::vector<Ideal>{Ideal::maximal(b)}, poly(b, "x"), 1, low);
  CHECK(early.verdict == Verdict::counterexample);
}

TEST_CASE("reports are reproducible") {
  TheoremOptions opts;
  opts.seed = 17;
  auto s = ring_of({"x", "y", "z"}, {"x*z - y^2"});
  auto m = Ideal::maximal(s);
  std::vector<Ideal> ideals{ideal_of(s, {"x", "y"})};
  auto first = check_theorem5(s, m, ideals, Sizes{0, 1}, opts);
  auto second = check_theorem5(s, m, ideals, Sizes{0, 1}, opts);
  CHECK(first.verdict == second.verdict);
  CHECK(first.sequences[0].certificate.elements() == second.sequences[0].certificate.elements());
  CHECK(text(first.computed, "Q") == text(second.computed, "Q"));
}
