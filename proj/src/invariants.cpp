#include "mixmul/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mixmul/errors.hpp"

namespace mixmul {

namespace {

using Coeffs = std::vector<std::int64_t>;

void add_into(Coeffs& acc, const Coeffs& other, std::size_t shift) {
  if (acc.size() < other.size() + shift) acc.resize(other.size() + shift, 0);
  for (std::size_t k = 0; k < other.size(); ++k) acc[k + shift] += other[k];
}

Coeffs times_one_minus_tpow(const Coeffs& p, std::size_t d) {
  Coeffs out = p;
  out.resize(p.size() + d, 0);
  for (std::size_t k = 0; k < p.size(); ++k) out[k + d] -= p[k];
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Monomial> out;
  for (const auto& m : monos) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); })) out.push_back(m);
  }
  return out;
}

std::size_t support_size(const Monomial& m) {
  return static_cast<std::size_t>(std::count_if(m.exponents().begin(), m.exponents().end(), [](auto e) { return e > 0; }));
}

class HilbertRecursion {
 public:
  Coeffs numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    std::vector<std::vector<std::uint32_t>> key;
    key.reserve(gens.size());
    for (const auto& g : gens) key.push_back(g.exponents());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Coeffs result = compute(gens);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  Coeffs compute(const std::vector<Monomial>& gens) {
    const std::size_t n = gens.front().size();
    // Occurrence count per variable; a variable shared by two generators
    // makes the ideal non-coprime.
    std::vector<std::size_t> count(n, 0);
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < n; ++i) count[i] += g[i] > 0 ? 1 : 0;
    }
    std::size_t pivot_var = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (count[i] >= 2 && (pivot_var == n || count[i] > count[pivot_var])) pivot_var = i;
    }
    if (pivot_var == n) {
      Coeffs acc{1};
      for (const auto& g : gens) acc = times_one_minus_tpow(acc, g.degree());
      return acc;
    }
    std::uint32_t e = 0;
    for (const auto& g : gens) {
      if (g[pivot_var] > 0 && support_size(g) >= 2 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
    }
    const Monomial pivot = Monomial::variable(n, pivot_var, e);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(g.gcd(pivot).quotient_of(g));

    Coeffs acc = numerator(std::move(with_pivot));
    add_into(acc, numerator(std::move(colon)), e);
    return acc;
  }

  std::map<std::vector<std::vector<std::uint32_t>>, Coeffs> memo_;
};

// Divides by (1 - t); false when t = 1 is not a root.
bool divide_one_minus_t(Coeffs& p) {
  std::int64_t sum = 0;
  for (auto c : p) sum += c;
  if (sum != 0) return false;
  Coeffs q(p.empty() ? 0 : p.size() - 1, 0);
  std::int64_t running = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    running += p[k];
    q[k] = running;
  }
  p = std::move(q);
  return true;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void HilbertNumerator::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::int64_t HilbertNumerator::hilbert_function(std::size_t degree) const {
  // Coefficient of t^degree in N(t) * sum_k C(k + n - 1, n - 1) t^k.
  std::int64_t total = 0;
  for (std::size_t k = 0; k < coeffs.size() && k <= degree; ++k) {
    const auto rest = static_cast<std::int64_t>(degree - k);
    const std::int64_t series = nvars == 0 ? (rest == 0 ? 1 : 0)
                                           : binomial(rest + static_cast<std::int64_t>(nvars) - 1,
                                                      static_cast<std::int64_t>(nvars) - 1);
    total += coeffs[k] * series;
  }
  return total;
}

int HilbertNumerator::dimension() const {
  Coeffs p = coeffs;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return -1;
  int order = 0;
  while (divide_one_minus_t(p)) ++order;
  return static_cast<int>(nvars) - order;
}

HilbertNumerator hilbert_numerator(std::span<const Monomial> monomials, std::size_t nvars) {
  for (const auto& m : monomials) {
    if (m.size() != nvars) throw AmbientMismatch("monomial length does not match variable count");
  }
  HilbertRecursion rec;
  HilbertNumerator out{rec.numerator(std::vector<Monomial>(monomials.begin(), monomials.end())), nvars};
  out.trim();
  return out;
}

HilbertNumerator hilbert_numerator(const Ideal& monomial_ideal) {
  const auto& ring = monomial_ideal.ring();
  std::vector<Monomial> monos;
  for (const auto& r : ring->relations()) {
    if (!r.is_monomial()) throw DomainError("relation " + r.to_string() + " is not a monomial");
    monos.push_back(r.leading_monomial());
  }
  for (const auto& g : monomial_ideal.generators()) {
    if (!g.is_monomial()) throw DomainError("generator " + g.to_string() + " is not a monomial");
    monos.push_back(g.leading_monomial());
  }
  return hilbert_numerator(monos, ring->nvars());
}

HilbertNumerator quotient_hilbert_numerator(const Ideal& u) {
  const auto lms = u.basis().leading_monomials();
  return hilbert_numerator(lms, u.ring()->nvars());
}

DimValue krull_dimension(const RingPtr& ring, const Ideal& u) {
  if (!same_ring(ring, u.ring())) throw AmbientMismatch("ideal does not belong to the ring");
  const GroebnerBasis& gb = u.basis();
  if (gb.is_unit()) return DimValue::empty();
  const std::size_t n = ring->nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) mask |= std::uint64_t{1} << i;
    }
    supports.push_back(mask);
  }
  if (n > 24) throw DomainError("too many variables for the independent-set scan");
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint64_t m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return DimValue(best);
}

LengthValue length_quotient(const Ideal& u, const Ideal& v) {
  if (!same_ring(u.ring(), v.ring())) throw AmbientMismatch("ideals live in different rings");
  if (!ideal_contains(u, v)) throw DomainError("length_quotient requires V ⊆ U");
  return length_from_numerators(quotient_hilbert_numerator(u), quotient_hilbert_numerator(v));
}

LengthValue length_from_numerators(const HilbertNumerator& outer, const HilbertNumerator& inner) {
  if (outer.nvars != inner.nvars) throw AmbientMismatch("numerators over different variable counts");
  Coeffs diff = inner.coeffs;
  diff.resize(std::max(outer.coeffs.size(), inner.coeffs.size()), 0);
  for (std::size_t k = 0; k < outer.coeffs.size(); ++k) diff[k] -= outer.coeffs[k];
  for (std::size_t k = 0; k < outer.nvars; ++k) {
    if (!divide_one_minus_t(diff)) return LengthValue::infinite();
  }
  std::int64_t total = 0;
  for (auto c : diff) total += c;
  return LengthValue::finite(total);
}

namespace {

std::vector<std::int64_t> forward_differences(std::vector<std::int64_t> values, int order) {
  for (int k = 0; k < order; ++k) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    if (!values.empty()) values.pop_back();
  }
  return values;
}

}  // namespace

std::int64_t samuel_multiplicity(const Ideal& j, const RingPtr& ring, const SamuelWindow& window) {
  if (!same_ring(ring, j.ring())) throw AmbientMismatch("ideal does not belong to the ring");
  if (ring->is_zero_ring()) throw DomainError("Samuel multiplicity of the zero ring");
  const DimValue dim_quotient = krull_dimension(ring, j);
  if (dim_quotient != DimValue(0)) throw DomainError("ideal " + j.to_string() + " is not m-primary");
  const DimValue dim = krull_dimension(ring, Ideal::zero(ring));
  const Ideal unit = Ideal::unit(ring);
  if (dim == DimValue(0)) return length_quotient(unit, Ideal::zero(ring)).value();

  std::ostringstream partial;
  for (std::size_t base : {window.base, window.escalated_base}) {
    std::vector<std::int64_t> values;
    Ideal power = ideal_power(j, base + 1);
    for (std::size_t n = base; n <= base + window.width; ++n) {
      if (n > base) power = ideal_product(power, j);
      values.push_back(length_quotient(unit, power).value());
    }
    auto diffs = forward_differences(values, dim.value());
    const bool constant =
        diffs.size() >= 3 && std::all_of(diffs.begin(), diffs.end(), [&](std::int64_t d) { return d == diffs.front(); });
    if (constant) return diffs.front();
    partial << " base " << base << ":";
    for (auto v : values) partial << ' ' << v;
    if (window.escalated_base <= window.base) break;
  }
  throw Inconclusive("Samuel function of " + j.to_string() + " did not stabilize; lengths" + partial.str());
}

}  // namespace mixmul
