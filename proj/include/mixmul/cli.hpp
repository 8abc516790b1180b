#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixmul/theorems.hpp"

namespace mixmul::cli {

/// Parameters of a `task` line; every one may be overridden by a flag.
struct TaskSpec {
  std::string command;
  std::optional<std::vector<std::size_t>> k;
  std::optional<std::vector<std::size_t>> eps;
  std::optional<ExponentWindow> window;
  std::optional<std::size_t> tries;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> index;
  std::optional<std::string> element;
};

struct InstanceSpec {
  std::string ring_name;
  RingPtr ring;
  /// In file order.
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::optional<TaskSpec> task;

  std::optional<Ideal> j() const;
  /// I1, ..., Is.
  std::vector<Ideal> is() const;
};

/// Grammar, one statement per ';', '#' starts a comment:
///   ring  A = QQ[x,y,z] / (x*y, y^2);     # or Fp(32003)[x,y]; quotient optional
///   ideal J  = x, y, z;
///   ideal I1 = x^2, x*y;
///   task  mixed k=(1,0,1) window=(4,3) tries=50 seed=0;
/// Ideal names are J and I1, I2, ... numbered without gaps. J must be
/// m-primary and I1⋯Is non-nilpotent. `field` replaces the field of the ring
/// line. Throws ParseError with line and column.
InstanceSpec parse_instance_text(std::string_view text, const std::optional<Field>& field = std::nullopt);
/// Reads the file; a missing file is a ParseError at line 0.
InstanceSpec parse_instance(const std::string& path, const std::optional<Field>& field = std::nullopt);

/// "QQ" or "Fp(p)".
Field parse_field(std::string_view text);

struct RunFlags {
  std::optional<std::vector<std::size_t>> k;
  std::optional<std::vector<std::size_t>> eps;
  std::optional<std::string> element;
  std::optional<std::size_t> index;
  bool with_j = false;
  std::optional<std::size_t> window_base;
  std::optional<std::size_t> window_width;
  std::optional<std::size_t> tries;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
};

inline constexpr const char* kCommands[] = {"mixed",           "samuel",     "check-fc",       "check-superficial",
                                            "check-thm3",      "check-thm5", "check-remark7", "check-remark2"};

/// Runs a command and writes the human-readable table to `out`. Exit codes:
/// 0 confirmed or computed, 1 counterexample (or a refuted check),
/// 2 inconclusive. Input errors propagate as mixmul::Error.
RunResult run(const std::string& command, const InstanceSpec& spec, const RunFlags& flags, std::ostream& out);

}  // namespace mixmul::cli
