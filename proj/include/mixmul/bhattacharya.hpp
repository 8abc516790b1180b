#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mixmul/invariants.hpp"

namespace mixmul {

/// Values of (n0, n1, ..., ns) ↦ ℓ(J^n0 I1^n1⋯Is^ns / J^(n0+1) I1^n1⋯Is^ns) on the
/// cube Π [base_i, base_i + width].
class BhattacharyaGrid {
 public:
  BhattacharyaGrid(std::vector<std::size_t> base, std::size_t width, std::vector<std::int64_t> values);

  const std::vector<std::size_t>& base() const { return base_; }
  std::size_t width() const { return width_; }
  /// s + 1.
  std::size_t rank() const { return base_.size(); }
  /// Value at absolute exponents n (each within its axis range).
  std::int64_t at(std::span<const std::size_t> n) const;
  /// Row-major, axis 0 slowest; offsets from base.
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  std::vector<std::size_t> base_;
  std::size_t width_;
  std::vector<std::int64_t> values_;
};

/// q = dim A/0:I^∞ for I = I1⋯Is. Throws DomainError when I is nilpotent.
DimValue filter_dimension(const RingPtr& ring, std::span<const Ideal> ideals);

/// Throws DomainError unless J is m-primary, I is non-nilpotent and every
/// ideal lives in `ring`.
void check_grid_input(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals);

/// Exact table of lengths; `jobs` threads share the grid points.
BhattacharyaGrid evaluate_grid(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                               std::vector<std::size_t> base, std::size_t width, unsigned jobs = 1);

/// Δ^order applied to the grid (forward differences, order[i] times along axis i),
/// as a table over the points where it is defined.
struct DifferenceTable {
  std::vector<std::size_t> extents;
  std::vector<std::int64_t> values;

  bool is_constant() const;
  bool is_zero() const;
};
DifferenceTable difference(const BhattacharyaGrid& grid, std::span<const std::size_t> order);

/// True iff every total-order-q difference vanishes on the grid and some
/// order-(q-1) difference does not. For q = 0 the grid itself must vanish.
/// Throws DomainError when width < q + 1.
bool certify_degree(const BhattacharyaGrid& grid, DimValue q);

struct MixedMultiplicityEntry {
  std::vector<std::size_t> key;  // (k0, k1, ..., ks), sum q - 1
  std::int64_t value;
};

struct MixedMultiplicityTable {
  DimValue q;
  /// Keys in descending lexicographic order.
  std::vector<MixedMultiplicityEntry> entries;
  std::vector<std::size_t> base;
  std::size_t width = 0;

  /// Throws DomainError for a key not in the table.
  std::int64_t at(std::span<const std::size_t> key) const;
};

struct GridOptions {
  std::size_t base = 4;
  /// Doubling stops past this base.
  std::size_t max_base = 16;
  /// 0 selects q + 2.
  std::size_t width = 0;
  unsigned jobs = 1;
};

/// All (k0, ..., ks) with k0 + ... + ks = total, descending lexicographically.
std::vector<std::vector<std::size_t>> compositions(std::size_t parts, std::size_t total);

/// e(J^[k0+1], I1^[k1], ..., Is^[ks]) for every key of total degree q - 1, each
/// read off as Δ^k of the grid and required constant on the whole grid. Escalates
/// the base by doubling; throws Inconclusive when no base up to max_base works.
MixedMultiplicityTable mixed_multiplicities(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                                            const GridOptions& options = {});

}  // namespace mixmul
