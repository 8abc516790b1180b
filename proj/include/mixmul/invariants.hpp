#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mixmul/ideal.hpp"

namespace mixmul {

/// Krull dimension, with EMPTY (the zero ring) below every integer.
class DimValue {
 public:
  static DimValue empty() { return DimValue(); }
  explicit DimValue(int value) : value_(value) {}

  bool is_empty() const { return value_ == kEmpty; }
  /// Requires !is_empty().
  int value() const { return value_; }
  std::string to_string() const { return is_empty() ? "EMPTY" : std::to_string(value_); }

  friend auto operator<=>(const DimValue&, const DimValue&) = default;
  friend bool operator==(const DimValue&, const DimValue&) = default;

 private:
  static constexpr int kEmpty = std::numeric_limits<int>::min();
  DimValue() : value_(kEmpty) {}
  int value_;
};

/// Length of a module; INFINITE when the module is not of finite length.
class LengthValue {
 public:
  static LengthValue infinite() { return LengthValue(-1); }
  static LengthValue finite(std::int64_t v) { return LengthValue(v); }

  bool is_finite() const { return value_ >= 0; }
  /// Requires is_finite().
  std::int64_t value() const { return value_; }
  std::string to_string() const { return is_finite() ? std::to_string(value_) : "INFINITE"; }

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  explicit LengthValue(std::int64_t v) : value_(v) {}
  std::int64_t value_;
};

/// N(t) with HS_{R/M}(t) = N(t) / (1-t)^nvars.
struct HilbertNumerator {
  std::vector<std::int64_t> coeffs;  // coeffs[k] multiplies t^k
  std::size_t nvars = 0;

  /// Coefficient list without trailing zeros.
  void trim();
  std::int64_t at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
  /// Value of the Hilbert function in degree d.
  std::int64_t hilbert_function(std::size_t degree) const;
  /// nvars minus the multiplicity of t = 1 as a root of N.
  int dimension() const;

  friend bool operator==(const HilbertNumerator& a, const HilbertNumerator& b) {
    return a.nvars == b.nvars && a.coeffs == b.coeffs;
  }
};

/// Numerator of the Hilbert series of k[x1..xn]/(monomials). Pivot recursion
/// HS(M) = HS(M + (p)) + t^deg(p) HS(M : p) down to pairwise-coprime generators.
HilbertNumerator hilbert_numerator(std::span<const Monomial> monomials, std::size_t nvars);
/// Numerator for a monomial ideal M of a ring with monomial relations.
/// Throws DomainError when a generator or relation is not a monomial.
HilbertNumerator hilbert_numerator(const Ideal& monomial_ideal);
/// Numerator for A/U for any homogeneous U, via the initial ideal of H + U.
HilbertNumerator quotient_hilbert_numerator(const Ideal& u);

/// dim A/U through the initial ideal: the largest set of variables containing
/// no leading-monomial support. EMPTY for the unit ideal.
DimValue krull_dimension(const RingPtr& ring, const Ideal& u);

/// Length of U/V as an A-module. Requires V ⊆ U (DomainError otherwise).
LengthValue length_quotient(const Ideal& u, const Ideal& v);
/// ℓ(U/V) from the numerators of A/U and A/V, for V ⊆ U known by construction:
/// (N_V - N_U) / (1-t)^n at t = 1, INFINITE when the division is not exact.
LengthValue length_from_numerators(const HilbertNumerator& outer, const HilbertNumerator& inner);

struct SamuelWindow {
  std::size_t base = 4;
  std::size_t width = 8;
  std::size_t escalated_base = 16;
};

/// e(J, ring): the dim(ring)-th difference of n ↦ ℓ(ring/J^{n+1}), required to
/// be constant on the whole window. Throws DomainError when J is not
/// m-primary or the ring is zero, and Inconclusive when neither window
/// stabilizes.
std::int64_t samuel_multiplicity(const Ideal& j, const RingPtr& ring, const SamuelWindow& window = {});

}  // namespace mixmul
