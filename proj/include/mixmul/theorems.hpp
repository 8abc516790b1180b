#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mixmul/bhattacharya.hpp"
#include "mixmul/sequences.hpp"

namespace mixmul {

enum class TheoremId { prop6, thm3, thm5, remark7, remark2 };

/// confirmed_negatively: e = 0 and no sequence was found. Absence under
/// sampling is evidence, not proof, so it never counts as confirmed.
enum class Verdict { confirmed, confirmed_negatively, counterexample, inconclusive };

std::string to_string(TheoremId id);
std::string to_string(Verdict verdict);

/// A named exact quantity; integers stay integers, dimensions print EMPTY.
struct Quantity {
  std::string name;
  std::variant<std::int64_t, bool, std::string> value;
};

struct LabeledSequence {
  std::string label;
  SequenceCertificate certificate;
};

/// The verdict under one product reading, with the quantities behind it.
struct ReadingReport {
  ProductReading reading;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
  std::vector<Quantity> computed;
};

struct TheoremInstance {
  RingPtr ring;
  std::optional<Ideal> j;
  std::vector<Ideal> ideals;
  /// k-vector (k0, ..., ks) or ε-vector, depending on the theorem.
  std::vector<std::size_t> vector;
  std::string vector_name;
  std::optional<Polynomial> element;
  ExponentWindow window;
  std::size_t tries = 0;
  std::uint64_t seed = 0;
};

struct TheoremReport {
  TheoremId id = TheoremId::prop6;
  TheoremInstance instance;
  std::vector<Quantity> computed;
  /// Filled by checkers that evaluate both readings of the product I.
  std::vector<ReadingReport> readings;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  std::vector<ElementCertificate> elements;
  std::vector<LabeledSequence> sequences;

  void add(std::string name, std::variant<std::int64_t, bool, std::string> value) {
    computed.push_back({std::move(name), std::move(value)});
  }
};

struct TheoremOptions {
  ExponentWindow window;
  std::size_t tries = 50;
  std::uint64_t seed = 0;
  CheckOptions check;
  GridOptions grid;
  /// Remark 7 only: also compare "dim = q - m" with the sequence being FC.
  bool test_fc_equality = false;
};

/// An ε-superficial x (sampled, or `element` when given) must be weak-(FC).
/// The derived identities for k = 2, 3, 4 and (0:x) ∩ I^(B+w) = 0 are
/// reported alongside. A given element that is not superficial gives
/// inconclusive, never counterexample.
TheoremReport check_prop6(const RingPtr& ring, std::span<const Ideal> tuple, std::size_t eps,
                          const TheoremOptions& options, const std::optional<Polynomial>& element = std::nullopt);

/// k = (k0, ..., ks) with k0 + ... + ks = q - 1. FC-sequences are searched
/// for the tuple (J, I1, ..., Is) under both readings; the overall verdict is
/// confirmed only when both readings confirm and counterexample only when
/// both refute.
TheoremReport check_theorem3(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                             std::span<const std::size_t> k, const TheoremOptions& options);

/// Q generated by a superficial sequence for (J, I1, ..., Is) with k_i
/// elements of I_i; dim A/Q:I^∞ with I = I1⋯Is decides the verdict.
TheoremReport check_theorem5(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                             std::span<const std::size_t> k, const TheoremOptions& options);

/// ε-vector of indices into (I1, ..., Is), nondecreasing; dim A/Q:I^∞ <= q - m.
TheoremReport check_remark7(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                            std::span<const std::size_t> eps, const TheoremOptions& options);

/// For x ∈ U_i with 0:x ⊆ 0:I^∞ and every window point (n0, n1, ..., ns),
/// ℓ(x𝔍^n0 P / x𝔍^(n0+1) P) = ℓ(𝔍^n0 P / 𝔍^(n0+1) P), P = U1^n1⋯Ui^(ni-1)⋯Us^ns,
/// for 𝔍 = J and 𝔍 = m. Throws DomainError when FC2 fails.
TheoremReport check_remark2_invariance(const RingPtr& ring, const Ideal& j, std::span<const Ideal> tuple,
                                       const Polynomial& x, std::size_t i, const TheoremOptions& options);

/// Exit code of a verdict: 0 confirmed, 1 counterexample, 2 otherwise.
int exit_code(Verdict verdict);

}  // namespace mixmul
