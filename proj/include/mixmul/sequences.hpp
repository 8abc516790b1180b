#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixmul/invariants.hpp"

namespace mixmul {

/// The cube Π [base, base + width] standing in for "all large exponents".
struct ExponentWindow {
  std::size_t base = 4;
  std::size_t width = 3;
};

/// How a "for all large n" identity of ideals is decided at a window point.
///   hilbert_series: both sides are nested, so equality is equality of Hilbert series.
///   ideal_calculus: intersect/colon and compare reduced bases.
enum class Method { hilbert_series, ideal_calculus };

/// Which product plays I in FC2/FC3 for a tuple (U1, ..., Ur):
/// the whole tuple, or the tuple without its first member.
enum class ProductReading { whole_tuple, exclude_first };

std::string to_string(ProductReading reading);

struct CheckOptions {
  Method method = Method::hilbert_series;
  unsigned jobs = 1;
};

enum class WindowStatus { skipped, verified_on_window, failed };

struct WindowCheck {
  WindowStatus status = WindowStatus::skipped;
  /// First failing exponent vector in lexicographic order.
  std::vector<std::size_t> witness;
  std::size_t points = 0;

  bool verified() const { return status == WindowStatus::verified_on_window; }
};

enum class DimStatus { skipped, holds, fails };

struct DimCheck {
  DimStatus status = DimStatus::skipped;
  /// dim A/[(x):I^∞]
  DimValue left = DimValue::empty();
  /// dim A/0:I^∞ - 1
  DimValue right = DimValue::empty();
};

/// Verdicts for one element x ∈ U_index of a tuple. Positions are 1-based.
struct ElementCertificate {
  Polynomial element;
  std::vector<Ideal> tuple;
  std::size_t index = 0;
  ExponentWindow window;
  ProductReading reading = ProductReading::whole_tuple;
  WindowCheck fc1;
  std::optional<bool> fc2;
  DimCheck fc3;
  WindowCheck superficial;

  bool weak_fc() const { return fc1.verified() && fc2.value_or(false); }
  bool fc() const { return weak_fc() && fc3.status == DimStatus::holds; }
};

/// (x) ∩ U1^n1⋯Ui^ni⋯Ur^nr = x U1^n1⋯Ui^(ni-1)⋯Ur^nr on the window.
/// Throws DomainError when x is zero, x ∉ U_i, or the window base is 0.
WindowCheck check_fc1(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i, const ExponentWindow& window,
                      const CheckOptions& options = {});
/// 0:x ⊆ 0:I^∞. Throws DomainError when I is nilpotent or x is zero.
bool check_fc2(const Polynomial& x, std::span<const Ideal> tuple, ProductReading reading = ProductReading::whole_tuple);
/// dim A/[(x):I^∞] = dim A/0:I^∞ - 1, with EMPTY on the left always failing.
DimCheck check_fc3(const Polynomial& x, std::span<const Ideal> tuple,
                   ProductReading reading = ProductReading::whole_tuple);

/// ε-superficiality through the colon identity with ε in the leading role:
/// (Uε^(nε+2) Π_{j≠ε} Uj^(nj+1) : x) ∩ Π Uj^nj = Uε^(nε+1) Π_{j≠ε} Uj^(nj+1).
WindowCheck check_superficial(const Polynomial& x, std::span<const Ideal> tuple, std::size_t eps,
                              const ExponentWindow& window, const CheckOptions& options = {});
/// The k-step form of the same identity, for k >= 2:
/// (Uε^(nε+k) R : x) ∩ Uε^nε R = Uε^(nε+k-1) R with R = Π_{j≠ε} Uj^(nj+1).
WindowCheck check_superficial_power(const Polynomial& x, std::span<const Ideal> tuple, std::size_t eps,
                                    std::size_t k, const ExponentWindow& window, const CheckOptions& options = {});
/// (0:x) ∩ I^n = 0 for I the product of the whole tuple.
bool check_kernel_vanishes(const Polynomial& x, std::span<const Ideal> tuple, std::size_t n,
                           const CheckOptions& options = {});

ElementCertificate is_weak_fc(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i,
                              const ExponentWindow& window, ProductReading reading = ProductReading::whole_tuple,
                              const CheckOptions& options = {});
ElementCertificate is_fc(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i,
                         const ExponentWindow& window, ProductReading reading = ProductReading::whole_tuple,
                         const CheckOptions& options = {});

/// Σ g_i r_i over the generators of u, each r_i a form of degree D - deg g_i with
/// coefficients uniform in {-10, ..., 10}, D the largest generator degree.
/// Deterministic in `seed`. Throws DomainError for the zero ideal.
Polynomial sample_element(const Ideal& u, std::uint64_t seed);

/// Seed of the `attempt`-th candidate at sequence step `step`.
std::uint64_t candidate_seed(std::uint64_t seed, std::size_t step, std::size_t attempt);

enum class SearchMode { fc, weak_fc, superficial };

std::string to_string(SearchMode mode);

struct SearchOptions {
  SearchMode mode = SearchMode::superficial;
  ExponentWindow window;
  std::size_t tries = 50;
  std::uint64_t seed = 0;
  ProductReading reading = ProductReading::whole_tuple;
  CheckOptions check;
};

struct SequenceStep {
  /// The ring the element was checked in: A/(x_1, ..., x_{j-1}).
  RingPtr ring;
  ElementCertificate certificate;
  /// 1-based number of the successful candidate.
  std::size_t attempt = 0;
};

struct SequenceCertificate {
  bool found = false;
  std::vector<SequenceStep> steps;
  /// Multiplicity of each tuple position in the index list.
  std::vector<std::size_t> composition;
  std::vector<std::size_t> epsilon_indices;
  /// Why the search stopped, when not found.
  std::string reason;

  std::vector<Polynomial> elements() const;
};

/// Greedy search: at step j sample up to `tries` candidates from the image of
/// U_{ε_j} in the current quotient, keep the first that passes the mode's checks
/// and pass to the quotient by it. Indices must be nondecreasing and in range.
SequenceCertificate find_sequence(const RingPtr& ring, std::span<const Ideal> tuple,
                                  std::span<const std::size_t> epsilon_indices, const SearchOptions& options);

}  // namespace mixmul
