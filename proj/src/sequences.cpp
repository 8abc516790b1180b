#include "mixmul/sequences.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <random>

#include "mixmul/errors.hpp"
#include "parallel.hpp"

namespace mixmul {

namespace {

using Exponents = std::vector<std::size_t>;

const RingPtr& tuple_ring(std::span<const Ideal> tuple) {
  if (tuple.empty()) throw DomainError("the tuple of ideals is empty");
  for (const auto& u : tuple.subspan(1)) {
    if (!same_ring(tuple.front().ring(), u.ring())) throw AmbientMismatch("ideals of the tuple live in different rings");
  }
  return tuple.front().ring();
}

// x must be a nonzero homogeneous element of A lying in U_position.
void check_element(const Polynomial& x, std::span<const Ideal> tuple, std::size_t position) {
  const RingPtr& ring = tuple_ring(tuple);
  if (position < 1 || position > tuple.size()) {
    throw DomainError("position " + std::to_string(position) + " is outside the tuple of size " +
                      std::to_string(tuple.size()));
  }
  if (!x.is_homogeneous()) throw DomainError("element " + x.to_string() + " is not homogeneous");
  if (ring->reduce(x).is_zero()) throw DomainError("element " + x.to_string() + " is zero in the ring");
  if (!tuple[position - 1].contains(x)) {
    throw DomainError("element " + x.to_string() + " is not in " + tuple[position - 1].to_string());
  }
}

Ideal reading_product(std::span<const Ideal> tuple, ProductReading reading) {
  const RingPtr& ring = tuple_ring(tuple);
  return reading == ProductReading::whole_tuple ? ideal_product(ring, tuple) : ideal_product(ring, tuple.subspan(1));
}

// 0:I^∞, refusing nilpotent I.
Ideal torsion(const Ideal& product) {
  if (product.is_zero()) throw DomainError("I = " + product.to_string() + " is nilpotent");
  Ideal t = ideal_saturate(Ideal::zero(product.ring()), product).ideal;
  if (t.is_unit()) throw DomainError("I = " + product.to_string() + " is nilpotent (0:I^∞ = (1))");
  return t;
}

HilbertNumerator shifted(HilbertNumerator n, std::size_t by) {
  n.trim();
  if (!n.coeffs.empty()) n.coeffs.insert(n.coeffs.begin(), by, 0);
  return n;
}

HilbertNumerator combine(const HilbertNumerator& a, const HilbertNumerator& b, const HilbertNumerator& c) {
  // a + b - c
  HilbertNumerator out{std::vector<std::int64_t>(std::max({a.coeffs.size(), b.coeffs.size(), c.coeffs.size()}), 0),
                       a.nvars};
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = a.at(k) + b.at(k) - c.at(k);
  out.trim();
  return out;
}

HilbertNumerator numerator_of(const Ideal& u) {
  HilbertNumerator n = quotient_hilbert_numerator(u);
  n.trim();
  return n;
}

// Products U1^e1⋯Ur^er, shared between window points and threads.
class ProductCache {
 public:
  explicit ProductCache(std::span<const Ideal> tuple) : tuple_(tuple.begin(), tuple.end()) {}

  Ideal get(const Exponents& e) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = products_.find(e); it != products_.end()) return it->second;
    }
    std::vector<Ideal> factors;
    for (std::size_t i = 0; i < e.size(); ++i) factors.push_back(power(i, e[i]));
    Ideal product = ideal_product(tuple_.front().ring(), factors);
    product.basis();
    std::lock_guard lock(mutex_);
    return products_.emplace(e, std::move(product)).first->second;
  }

 private:
  Ideal power(std::size_t i, std::size_t n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = powers_.find({i, n}); it != powers_.end()) return it->second;
    }
    Ideal p = ideal_power(tuple_[i], n);
    std::lock_guard lock(mutex_);
    return powers_.emplace(std::make_pair(i, n), std::move(p)).first->second;
  }

  std::vector<Ideal> tuple_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, Ideal> powers_;
  std::map<Exponents, Ideal> products_;
};

// Runs `holds` on every point of the window cube in lexicographic order and
// reports the first point where it fails.
WindowCheck scan_window(std::size_t axes, const ExponentWindow& window, unsigned jobs,
                        const std::function<bool(const Exponents&)>& holds) {
  if (window.base < 1) throw DomainError("window base must be at least 1");
  const std::size_t extent = window.width + 1;
  std::size_t points = 1;
  for (std::size_t i = 0; i < axes; ++i) points *= extent;
  auto point = [&](std::size_t flat) {
    Exponents n(axes);
    for (std::size_t i = axes; i-- > 0;) {
      n[i] = window.base + flat % extent;
      flat /= extent;
    }
    return n;
  };
  std::atomic<std::size_t> first_failure{points};
  detail::parallel_for(points, jobs, [&](std::size_t flat) {
    if (flat > first_failure.load()) return;
    if (holds(point(flat))) return;
    std::size_t seen = first_failure.load();
    while (flat < seen && !first_failure.compare_exchange_weak(seen, flat)) {
    }
  });
  WindowCheck out;
  out.points = points;
  if (first_failure.load() == points) {
    out.status = WindowStatus::verified_on_window;
  } else {
    out.status = WindowStatus::failed;
    out.witness = point(first_failure.load());
  }
  return out;
}

// (L : x) ∩ N = R' for R' ⊆ N and x R' ⊆ L. By series: multiplication by x
// from N/R' into A/L is injective, i.e. t^deg(x) HS(N/R') = HS((xN + L)/L).
bool colon_identity(const Polynomial& x, const Ideal& l, const Ideal& n, const Ideal& r, Method method) {
  const Ideal px = principal(l.ring(), x);
  if (method == Method::ideal_calculus) return ideal_equal(ideal_intersect(ideal_colon(l, x), n), r);
  const HilbertNumerator lhs = shifted(combine(numerator_of(r), HilbertNumerator{{}, l.ring()->nvars()}, numerator_of(n)),
                                       static_cast<std::size_t>(x.degree()));
  const HilbertNumerator rhs =
      combine(numerator_of(l), HilbertNumerator{{}, l.ring()->nvars()}, numerator_of(ideal_sum(ideal_product(px, n), l)));
  return lhs == rhs;
}

Exponents plus(Exponents n, std::size_t i, std::ptrdiff_t by) {
  n[i] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(n[i]) + by);
  return n;
}

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string to_string(ProductReading reading) {
  return reading == ProductReading::whole_tuple ? "include-J" : "exclude-J";
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::fc:
      return "fc";
    case SearchMode::weak_fc:
      return "weak-fc";
    case SearchMode::superficial:
      break;
  }
  return "superficial";
}

WindowCheck check_fc1(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i, const ExponentWindow& window,
                      const CheckOptions& options) {
  check_element(x, tuple, i);
  const RingPtr& ring = tuple_ring(tuple);
  const Ideal px = principal(ring, x);
  const HilbertNumerator nx = numerator_of(px);
  ProductCache cache(tuple);
  return scan_window(tuple.size(), window, options.jobs, [&](const Exponents& n) {
    const Ideal p = cache.get(n);
    const Ideal rhs = ideal_product(px, cache.get(plus(n, i - 1, -1)));
    if (options.method == Method::ideal_calculus) return ideal_equal(ideal_intersect(px, p), rhs);
    // HS(A/((x) ∩ P)) = HS(A/(x)) + HS(A/P) - HS(A/((x) + P))
    return combine(nx, numerator_of(p), numerator_of(ideal_sum(px, p))) == numerator_of(rhs);
  });
}

bool check_fc2(const Polynomial& x, std::span<const Ideal> tuple, ProductReading reading) {
  const RingPtr& ring = tuple_ring(tuple);
  if (ring->reduce(x).is_zero()) throw DomainError("element " + x.to_string() + " is zero in the ring");
  const Ideal t = torsion(reading_product(tuple, reading));
  return ideal_contains(t, ideal_colon(Ideal::zero(ring), x));
}

DimCheck check_fc3(const Polynomial& x, std::span<const Ideal> tuple, ProductReading reading) {
  const RingPtr& ring = tuple_ring(tuple);
  if (ring->reduce(x).is_zero()) throw DomainError("element " + x.to_string() + " is zero in the ring");
  const Ideal product = reading_product(tuple, reading);
  const Ideal t = torsion(product);
  DimCheck out;
  out.left = krull_dimension(ring, ideal_saturate(principal(ring, x), product).ideal);
  out.right = DimValue(krull_dimension(ring, t).value() - 1);
  out.status = !out.left.is_empty() && out.left == out.right ? DimStatus::holds : DimStatus::fails;
  return out;
}

WindowCheck check_superficial(const Polynomial& x, std::span<const Ideal> tuple, std::size_t eps,
                              const ExponentWindow& window, const CheckOptions& options) {
  check_element(x, tuple, eps);
  ProductCache cache(tuple);
  return scan_window(tuple.size(), window, options.jobs, [&](const Exponents& n) {
    Exponents up = n;
    for (auto& e : up) ++e;
    return colon_identity(x, cache.get(plus(up, eps - 1, 1)), cache.get(n), cache.get(up), options.method);
  });
}

WindowCheck check_superficial_power(const Polynomial& x, std::span<const Ideal> tuple, std::size_t eps, std::size_t k,
                                    const ExponentWindow& window, const CheckOptions& options) {
  if (k < 2) throw DomainError("the k-step identity needs k >= 2");
  check_element(x, tuple, eps);
  ProductCache cache(tuple);
  const auto step = static_cast<std::ptrdiff_t>(k);
  return scan_window(tuple.size(), window, options.jobs, [&](const Exponents& n) {
    Exponents base = n;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (j != eps - 1) ++base[j];
    }
    return colon_identity(x, cache.get(plus(base, eps - 1, step)), cache.get(base),
                          cache.get(plus(base, eps - 1, step - 1)), options.method);
  });
}

bool check_kernel_vanishes(const Polynomial& x, std::span<const Ideal> tuple, std::size_t n,
                           const CheckOptions& options) {
  const RingPtr& ring = tuple_ring(tuple);
  if (ring->reduce(x).is_zero()) throw DomainError("element " + x.to_string() + " is zero in the ring");
  const Ideal power = ideal_power(ideal_product(ring, tuple), n);
  if (options.method == Method::ideal_calculus) {
    return ideal_intersect(ideal_colon(Ideal::zero(ring), x), power).is_zero();
  }
  // x injective on I^n: t^deg(x) HS(I^n) = HS(x I^n).
  const Ideal zero = Ideal::zero(ring);
  const HilbertNumerator empty{{}, ring->nvars()};
  const HilbertNumerator whole = numerator_of(zero);
  return shifted(combine(whole, empty, numerator_of(power)), static_cast<std::size_t>(x.degree())) ==
         combine(whole, empty, numerator_of(ideal_product(principal(ring, x), power)));
}

ElementCertificate is_weak_fc(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i,
                              const ExponentWindow& window, ProductReading reading, const CheckOptions& options) {
  ElementCertificate cert{x, {tuple.begin(), tuple.end()}, i, window, reading, {}, {}, {}, {}};
  cert.fc1 = check_fc1(x, tuple, i, window, options);
  cert.fc2 = check_fc2(x, tuple, reading);
  return cert;
}

ElementCertificate is_fc(const Polynomial& x, std::span<const Ideal> tuple, std::size_t i,
                         const ExponentWindow& window, ProductReading reading, const CheckOptions& options) {
  ElementCertificate cert = is_weak_fc(x, tuple, i, window, reading, options);
  cert.fc3 = check_fc3(x, tuple, reading);
  return cert;
}

Polynomial sample_element(const Ideal& u, std::uint64_t seed) {
  const RingPtr& ring = u.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : u.generators()) {
    if (!ring->reduce(g).is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw DomainError("cannot sample from the zero ideal");
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());

  std::mt19937_64 rng(seed);
  const PolyRingPtr& base = ring->base();
  Polynomial out(base);
  for (const auto& g : gens) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(ring->nvars(), static_cast<std::uint32_t>(top - g.degree()))) {
      const auto c = static_cast<long>(rng() % 21) - 10;
      terms.push_back({m, Scalar(c)});
    }
    out = out + g * Polynomial::from_terms(base, std::move(terms));
  }
  return out;
}

std::uint64_t candidate_seed(std::uint64_t seed, std::size_t step, std::size_t attempt) {
  return splitmix(splitmix(splitmix(seed) ^ step) ^ attempt);
}

std::vector<Polynomial> SequenceCertificate::elements() const {
  std::vector<Polynomial> out;
  for (const auto& s : steps) out.push_back(s.certificate.element);
  return out;
}

SequenceCertificate find_sequence(const RingPtr& ring, std::span<const Ideal> tuple,
                                  std::span<const std::size_t> epsilon_indices, const SearchOptions& options) {
  if (!tuple.empty() && !same_ring(ring, tuple_ring(tuple))) throw AmbientMismatch("tuple does not belong to the ring");
  for (std::size_t j = 0; j < epsilon_indices.size(); ++j) {
    const std::size_t e = epsilon_indices[j];
    if (e < 1 || e > tuple.size()) throw DomainError("index " + std::to_string(e) + " is outside the tuple");
    if (j > 0 && e < epsilon_indices[j - 1]) throw DomainError("indices must be nondecreasing");
  }
  SequenceCertificate out;
  out.epsilon_indices.assign(epsilon_indices.begin(), epsilon_indices.end());
  out.composition.assign(tuple.size(), 0);
  for (auto e : epsilon_indices) ++out.composition[e - 1];

  RingPtr current = ring;
  for (std::size_t step = 0; step < epsilon_indices.size(); ++step) {
    const std::size_t eps = epsilon_indices[step];
    const std::string where = "step " + std::to_string(step + 1) + ": ";
    std::vector<Ideal> images;
    for (const auto& u : tuple) images.push_back(u.in_ring(current));
    if (current->is_zero_ring() || images[eps - 1].is_zero()) {
      out.reason = where + "the image of " + tuple[eps - 1].to_string() + " is zero";
      return out;
    }
    if (options.mode != SearchMode::superficial) {
      try {
        torsion(reading_product(images, options.reading));
      } catch (const DomainError& e) {
        out.reason = where + e.what();
        return out;
      }
    }
    bool found = false;
    for (std::size_t attempt = 1; attempt <= options.tries && !found; ++attempt) {
      const Polynomial x = sample_element(images[eps - 1], candidate_seed(options.seed, step, attempt));
      if (current->reduce(x).is_zero()) continue;
      ElementCertificate cert{x, images, eps, options.window, options.reading, {}, {}, {}, {}};
      bool ok = false;
      switch (options.mode) {
        case SearchMode::superficial:
          cert.superficial = check_superficial(x, images, eps, options.window, options.check);
          ok = cert.superficial.verified();
          break;
        case SearchMode::weak_fc:
          cert = is_weak_fc(x, images, eps, options.window, options.reading, options.check);
          ok = cert.weak_fc();
          break;
        case SearchMode::fc:
          cert = is_fc(x, images, eps, options.window, options.reading, options.check);
          ok = cert.fc();
          break;
      }
      if (!ok) continue;
      out.steps.push_back({current, std::move(cert), attempt});
      current = quotient_ring(current, principal(current, x));
      found = true;
    }
    if (!found) {
      out.reason = where + "no " + to_string(options.mode) + " element among " + std::to_string(options.tries) +
                   " candidates from " + tuple[eps - 1].to_string();
      return out;
    }
  }
  out.found = true;
  return out;
}

}  // namespace mixmul
