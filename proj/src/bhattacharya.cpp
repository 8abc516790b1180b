#include "mixmul/bhattacharya.hpp"

#include <algorithm>
#include <sstream>

#include "mixmul/errors.hpp"
#include "parallel.hpp"

namespace mixmul {

namespace {

std::size_t cube_size(std::size_t axes, std::size_t extent) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < axes; ++i) n *= extent;
  return n;
}

// Offsets of flat index `flat` in a row-major table with the given extents.
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const std::size_t> extents) {
  std::vector<std::size_t> out(extents.size());
  for (std::size_t i = extents.size(); i-- > 0;) {
    out[i] = flat % extents[i];
    flat /= extents[i];
  }
  return out;
}

std::string key_string(std::span<const std::size_t> key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
  return s + ")";
}

}  // namespace

BhattacharyaGrid::BhattacharyaGrid(std::vector<std::size_t> base, std::size_t width, std::vector<std::int64_t> values)
    : base_(std::move(base)), width_(width), values_(std::move(values)) {
  if (values_.size() != cube_size(base_.size(), width_ + 1)) throw DomainError("grid table has the wrong size");
}

std::int64_t BhattacharyaGrid::at(std::span<const std::size_t> n) const {
  if (n.size() != base_.size()) throw DomainError("grid point has the wrong number of coordinates");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < base_[i] || n[i] > base_[i] + width_) throw DomainError("grid point outside the window");
    flat = flat * (width_ + 1) + (n[i] - base_[i]);
  }
  return values_[flat];
}

DimValue filter_dimension(const RingPtr& ring, std::span<const Ideal> ideals) {
  const Ideal product = ideal_product(ring, ideals);
  if (product.is_zero()) throw DomainError("I = " + product.to_string() + " is nilpotent");
  const Saturation torsion = ideal_saturate(Ideal::zero(ring), product);
  if (torsion.ideal.is_unit()) throw DomainError("I is nilpotent (0:I^∞ = (1))");
  return krull_dimension(ring, torsion.ideal);
}

void check_grid_input(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals) {
  if (!same_ring(ring, j.ring())) throw AmbientMismatch("J does not belong to the ring");
  for (const auto& u : ideals) {
    if (!same_ring(ring, u.ring())) throw AmbientMismatch("ideal " + u.to_string() + " does not belong to the ring");
  }
  if (ring->is_zero_ring()) throw DomainError("the ring is zero");
  if (krull_dimension(ring, j) != DimValue(0)) throw DomainError("J = " + j.to_string() + " is not m-primary");
  filter_dimension(ring, ideals);
}

BhattacharyaGrid evaluate_grid(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                               std::vector<std::size_t> base, std::size_t width, unsigned jobs) {
  check_grid_input(ring, j, ideals);
  if (base.size() != ideals.size() + 1) throw DomainError("grid base needs one coordinate per ideal and one for J");
  const std::size_t s = ideals.size();
  const std::size_t extent = width + 1;

  // Powers are shared read-only between workers.
  std::vector<std::vector<Ideal>> powers(s);
  for (std::size_t i = 0; i < s; ++i) {
    Ideal p = ideal_power(ideals[i], base[i + 1]);
    for (std::size_t k = 0; k < extent; ++k) {
      p.basis();
      powers[i].push_back(p);
      p = ideal_product(p, ideals[i]);
    }
  }
  const Ideal j_base = ideal_power(j, base[0]);
  j_base.basis();

  std::vector<std::int64_t> values(cube_size(s + 1, extent));
  const std::vector<std::size_t> extents(s, extent);
  const std::size_t tuples = cube_size(s, extent);
  detail::parallel_for(tuples, jobs, [&](std::size_t t) {
    const auto offsets = unflatten(t, extents);
    Ideal u = j_base;
    for (std::size_t i = 0; i < s; ++i) u = ideal_product(u, powers[i][offsets[i]]);
    // One extra J-step so that consecutive numerators give every n0 on the axis.
    HilbertNumerator outer = quotient_hilbert_numerator(u);
    for (std::size_t k = 0; k < extent; ++k) {
      u = ideal_product(u, j);
      HilbertNumerator inner = quotient_hilbert_numerator(u);
      const LengthValue len = length_from_numerators(outer, inner);
      if (!len.is_finite()) throw Error("internal error: infinite Bhattacharya length");
      values[k * tuples + t] = len.value();
      outer = std::move(inner);
    }
  });
  return BhattacharyaGrid(std::move(base), width, std::move(values));
}

bool DifferenceTable::is_constant() const {
  return std::all_of(values.begin(), values.end(), [&](std::int64_t v) { return v == values.front(); });
}

bool DifferenceTable::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

DifferenceTable difference(const BhattacharyaGrid& grid, std::span<const std::size_t> order) {
  if (order.size() != grid.rank()) throw DomainError("difference order has the wrong number of coordinates");
  DifferenceTable table{std::vector<std::size_t>(grid.rank(), grid.width() + 1), grid.values()};
  for (std::size_t axis = 0; axis < order.size(); ++axis) {
    for (std::size_t step = 0; step < order[axis]; ++step) {
      if (table.extents[axis] < 2) throw DomainError("grid too narrow for difference order " + key_string(order));
      // stride of the axis in the current table
      std::size_t inner = 1;
      for (std::size_t k = axis + 1; k < table.extents.size(); ++k) inner *= table.extents[k];
      const std::size_t len = table.extents[axis];
      const std::size_t outer = table.values.size() / (inner * len);
      std::vector<std::int64_t> next;
      next.reserve(outer * (len - 1) * inner);
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t p = 0; p + 1 < len; ++p) {
          for (std::size_t i = 0; i < inner; ++i) {
            next.push_back(table.values[(o * len + p + 1) * inner + i] - table.values[(o * len + p) * inner + i]);
          }
        }
      }
      table.values = std::move(next);
      --table.extents[axis];
    }
  }
  return table;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t parts, std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  for (std::size_t first = total + 1; first-- > 0;) {
    for (auto& rest : compositions(parts - 1, total - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

bool certify_degree(const BhattacharyaGrid& grid, DimValue q) {
  if (q.is_empty()) throw DomainError("degree certification needs a dimension, not EMPTY");
  const auto order = static_cast<std::size_t>(q.value());
  if (grid.width() < order + 1) throw DomainError("grid width " + std::to_string(grid.width()) + " is below q + 1");
  if (order == 0) return std::all_of(grid.values().begin(), grid.values().end(), [](std::int64_t v) { return v == 0; });
  for (const auto& k : compositions(grid.rank(), order)) {
    if (!difference(grid, k).is_zero()) return false;
  }
  const auto lower = compositions(grid.rank(), order - 1);
  return std::any_of(lower.begin(), lower.end(), [&](const auto& k) { return !difference(grid, k).is_zero(); });
}

std::int64_t MixedMultiplicityTable::at(std::span<const std::size_t> key) const {
  for (const auto& e : entries) {
    if (std::equal(e.key.begin(), e.key.end(), key.begin(), key.end())) return e.value;
  }
  throw DomainError("no mixed multiplicity with key " + key_string(key));
}

MixedMultiplicityTable mixed_multiplicities(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                                            const GridOptions& options) {
  check_grid_input(ring, j, ideals);
  const DimValue q = filter_dimension(ring, ideals);
  const std::size_t rank = ideals.size() + 1;
  const std::size_t width = options.width ? options.width : static_cast<std::size_t>(q.value()) + 2;

  std::ostringstream failures;
  for (std::size_t base = options.base; base <= options.max_base; base *= 2) {
    const BhattacharyaGrid grid =
        evaluate_grid(ring, j, ideals, std::vector<std::size_t>(rank, base), width, options.jobs);
    MixedMultiplicityTable table{q, {}, grid.base(), width};
    bool stable = certify_degree(grid, q);
    if (!stable) failures << " base " << base << ": degree not certified;";
    if (stable && q.value() > 0) {
      for (auto& key : compositions(rank, static_cast<std::size_t>(q.value()) - 1)) {
        const DifferenceTable d = difference(grid, key);
        if (!d.is_constant() || d.values.front() < 0) {
          failures << " base " << base << ": Δ^" << key_string(key) << " not constant;";
          stable = false;
          break;
        }
        table.entries.push_back({std::move(key), d.values.front()});
      }
    }
    if (stable) return table;
    if (base == 0) break;
  }
  throw Inconclusive("mixed multiplicities did not stabilize:" + failures.str());
}

}  // namespace mixmul
