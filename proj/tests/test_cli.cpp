#include <doctest.h>

#include <sstream>

#include "mixmul/cli.hpp"
#include "mixmul/errors.hpp"

using namespace mixmul;
using namespace mixmul::cli;

namespace {

const char* kPlane = R"(# the plane with J = I1 = m
ring A = QQ[x, y];
ideal J  = x, y;
ideal I1 = x, y;
task check-thm5 k=(0,1) seed=3;
)";

// Line and column of the ParseError thrown for `text`.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no ParseError for " << text);
  return {0, 0};
}

std::string error_of(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance files parse") {
  auto spec = parse_instance_text(kPlane);
  CHECK(spec.ring_name == "A");
  REQUIRE(spec.j());
  CHECK(spec.is().size() == 1);
  REQUIRE(spec.task);
  CHECK(spec.task->command == "check-thm5");
  CHECK(*spec.task->k == std::vector<std::size_t>{0, 1});
  CHECK(*spec.task->seed == 3);

  auto quotient = parse_instance_text("ring B = Fp(101)[x,y,z] / (x*z - y^2); ideal J = x,y,z; ideal I1 = x; ideal I2 = y, z;");
  CHECK(quotient.ring->field().characteristic() == 101);
  CHECK(quotient.is().size() == 2);
  CHECK(!quotient.task);

  auto swapped = parse_instance_text(kPlane, Field::prime(7));
  CHECK(swapped.ring->field().characteristic() == 7);
  CHECK(parse_field("Fp(32003)").characteristic() == 32003);
  CHECK_THROWS_AS(parse_field("RR"), Error);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_at("ring A = QQ[x,y];\nideal J = x, y;\nideal I1 = x+1;") == std::pair<std::size_t, std::size_t>{3, 12});
  CHECK(error_of("ring A = QQ[x,y];\nideal J = x, y;\nideal I1 = x+1;").find("not homogeneous") != std::string::npos);
  CHECK(error_at("ring A = QQ[x,y];\nideal J = x, y\n") == std::pair<std::size_t, std::size_t>{2, 15});
  CHECK(error_of("ring A = QQ[x,y];\nideal J = x, y;\nideal I1 = 0;").find("nilpotent") != std::string::npos);
  CHECK(error_of("ring A = QQ[x,y];\nideal J = x;\nideal I1 = x;").find("m-primary") != std::string::npos);
  CHECK(error_of("ring A = QQ[x,y];\nideal J = x, y;\nideal I2 = x;").find("I1") != std::string::npos);
  CHECK(error_of("ring A = RR[x,y];").find("unknown field") != std::string::npos);
  CHECK(error_of("ring A = QQ[x,y];\nideal J = x, y;\nideal I1 = x;\ntask check-thm3 k=(0,1;") != "");
  CHECK_THROWS_AS(parse_instance("/nonexistent/instance.mm"), ParseError);
}

TEST_CASE("commands and exit codes") {
  std::ostringstream out;
  auto plane = parse_instance_text(kPlane);
  RunFlags flags;
  auto mixed = run("mixed", plane, flags, out);
  CHECK(mixed.exit_code == 0);
  CHECK(mixed.report["command"] == "mixed");

  auto thm5 = run("check-thm5", plane, flags, out);
  CHECK(thm5.exit_code == 0);
  CHECK(thm5.report["verdict"] == "confirmed");

  auto ambiguous = parse_instance_text("ring A = QQ[x,y]; ideal J = x, y; ideal I1 = x;");
  RunFlags k01;
  k01.k = std::vector<std::size_t>{0, 1};
  auto thm3 = run("check-thm3", ambiguous, k01, out);
  CHECK(thm3.exit_code == 2);
  REQUIRE(thm3.report["readings"].size() == 2);
  CHECK(thm3.report["verdict"] == "inconclusive");

  CHECK_THROWS_AS(run("check-thm3", ambiguous, flags, out), Error);
  CHECK_THROWS_AS(run("frobnicate", plane, flags, out), Error);

  RunFlags not_fc;
  not_fc.element = "x";
  not_fc.index = 2;
  not_fc.with_j = true;
  CHECK(run("check-fc", ambiguous, not_fc, out).exit_code == 1);
  CHECK(out.str().find("verdict") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  auto spec = parse_instance_text(kPlane);
  RunFlags flags;
  std::ostringstream a;
  std::ostringstream b;
  const auto first = run("check-thm5", spec, flags, a).report.dump(2);
  const auto second = run("check-thm5", spec, flags, b).report.dump(2);
  CHECK(first == second);
  CHECK(a.str() == b.str());
  flags.jobs = 4;
  std::ostringstream c;
  CHECK(run("check-thm5", spec, flags, c).report.dump(2) == first);
}
