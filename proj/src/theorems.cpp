#include "mixmul/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "mixmul/errors.hpp"

namespace mixmul {

namespace {

constexpr ProductReading kReadings[] = {ProductReading::whole_tuple, ProductReading::exclude_first};

std::vector<Ideal> with_j(const Ideal& j, std::span<const Ideal> ideals) {
  std::vector<Ideal> tuple{j};
  tuple.insert(tuple.end(), ideals.begin(), ideals.end());
  return tuple;
}

// k_i copies of the tuple position of I_i, which is i + 1 with J first.
std::vector<std::size_t> positions_from_k(std::span<const std::size_t> k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < k.size(); ++i) out.insert(out.end(), k[i], i + 1);
  return out;
}

std::string vector_string(std::span<const std::size_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void check_k(std::span<const std::size_t> k, std::size_t s, DimValue q) {
  if (k.size() != s + 1) throw DomainError("k-vector " + vector_string(k) + " needs " + std::to_string(s + 1) + " entries");
  const auto total = std::accumulate(k.begin(), k.end(), std::size_t{0});
  if (static_cast<int>(total) != q.value() - 1) {
    throw DomainError("k-vector " + vector_string(k) + " must sum to q - 1 = " + std::to_string(q.value() - 1));
  }
}

Ideal sequence_ideal(const RingPtr& ring, const SequenceCertificate& seq) { return Ideal(ring, seq.elements()); }

// e(J, A/sat), or nullopt with the reason when A/sat is zero or J is not
// primary to its maximal ideal there.
std::optional<std::int64_t> samuel_on_quotient(const Ideal& j, const Ideal& sat, std::string& why) {
  const RingPtr quotient = quotient_ring(j.ring(), sat);
  if (quotient->is_zero_ring()) {
    why = "the quotient is the zero ring";
    return std::nullopt;
  }
  try {
    return samuel_multiplicity(j.in_ring(quotient), quotient);
  } catch (const DomainError& e) {
    why = e.what();
    return std::nullopt;
  }
}

TheoremInstance instance_of(const RingPtr& ring, std::optional<Ideal> j, std::span<const Ideal> ideals,
                            std::span<const std::size_t> vector, std::string vector_name,
                            const TheoremOptions& options) {
  return {ring,           std::move(j),    {ideals.begin(), ideals.end()}, {vector.begin(), vector.end()},
          std::move(vector_name), std::nullopt, options.window, options.tries, options.seed};
}

SearchOptions search_options(SearchMode mode, ProductReading reading, const TheoremOptions& options) {
  return {mode, options.window, options.tries, options.seed, reading, options.check};
}

// q, the table and e at k; false (with the report made inconclusive) when
// the grid does not stabilize.
bool mixed_value(TheoremReport& report, const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                 std::span<const std::size_t> k, const TheoremOptions& options, std::int64_t& e, DimValue& q) {
  check_grid_input(ring, j, ideals);
  q = filter_dimension(ring, ideals);
  check_k(k, ideals.size(), q);
  report.add("q", static_cast<std::int64_t>(q.value()));
  try {
    const MixedMultiplicityTable table = mixed_multiplicities(ring, j, ideals, options.grid);
    e = table.at(k);
    report.add("grid base", static_cast<std::int64_t>(table.base.front()));
    report.add("grid width", static_cast<std::int64_t>(table.width));
    report.add("e" + vector_string(k), e);
    return true;
  } catch (const Inconclusive& err) {
    report.verdict = Verdict::inconclusive;
    report.reason = err.what();
    return false;
  }
}

Verdict combine_readings(const std::vector<ReadingReport>& readings) {
  const auto all = [&](Verdict v) {
    return std::all_of(readings.begin(), readings.end(), [&](const ReadingReport& r) { return r.verdict == v; });
  };
  if (all(Verdict::confirmed)) return Verdict::confirmed;
  if (all(Verdict::counterexample)) return Verdict::counterexample;
  return Verdict::inconclusive;
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::prop6:
      return "prop6";
    case TheoremId::thm3:
      return "thm3";
    case TheoremId::thm5:
      return "thm5";
    case TheoremId::remark7:
      return "remark7";
    case TheoremId::remark2:
      break;
  }
  return "remark2";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::confirmed_negatively:
      return "confirmed-negatively";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::confirmed:
      return 0;
    case Verdict::counterexample:
      return 1;
    default:
      return 2;
  }
}

TheoremReport check_prop6(const RingPtr& ring, std::span<const Ideal> tuple, std::size_t eps,
                          const TheoremOptions& options, const std::optional<Polynomial>& element) {
  TheoremReport report;
  report.id = TheoremId::prop6;
  const std::size_t eps_vector[] = {eps};
  report.instance = instance_of(ring, std::nullopt, tuple, eps_vector, "eps", options);
  report.instance.element = element;
  filter_dimension(ring, tuple);

  Polynomial x(ring->base());
  WindowCheck superficial;
  if (element) {
    x = *element;
    superficial = check_superficial(x, tuple, eps, options.window, options.check);
    if (!superficial.verified()) {
      report.verdict = Verdict::inconclusive;
      report.reason = "the given element is not superficial on the window";
      ElementCertificate cert{x, {tuple.begin(), tuple.end()}, eps, options.window, ProductReading::whole_tuple,
                              {}, {}, {}, superficial};
      report.elements.push_back(std::move(cert));
      return report;
    }
  } else {
    const auto seq = find_sequence(ring, tuple, eps_vector,
                                   search_options(SearchMode::superficial, ProductReading::whole_tuple, options));
    report.sequences.push_back({"superficial element", seq});
    if (!seq.found) {
      report.verdict = Verdict::inconclusive;
      report.reason = seq.reason;
      return report;
    }
    x = seq.elements().front();
    superficial = seq.steps.front().certificate.superficial;
  }

  ElementCertificate cert = is_weak_fc(x, tuple, eps, options.window, ProductReading::whole_tuple, options.check);
  cert.superficial = superficial;
  report.add("element", x.to_string());
  report.add("fc1", cert.fc1.verified());
  report.add("fc2", cert.fc2.value_or(false));
  for (std::size_t k = 2; k <= 4; ++k) {
    report.add("colon identity k=" + std::to_string(k),
               check_superficial_power(x, tuple, eps, k, options.window, options.check).verified());
  }
  const std::size_t n = options.window.base + options.window.width;
  report.add("(0:x) ∩ I^" + std::to_string(n) + " = 0", check_kernel_vanishes(x, tuple, n, options.check));
  report.verdict = cert.weak_fc() ? Verdict::confirmed : Verdict::counterexample;
  if (!cert.weak_fc()) report.reason = "a superficial element is not weak-(FC) on the window";
  report.elements.push_back(std::move(cert));
  return report;
}

TheoremReport check_theorem3(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                             std::span<const std::size_t> k, const TheoremOptions& options) {
  TheoremReport report;
  report.id = TheoremId::thm3;
  report.instance = instance_of(ring, j, ideals, k, "k", options);
  std::int64_t e = 0;
  DimValue q = DimValue::empty();
  if (!mixed_value(report, ring, j, ideals, k, options, e, q)) return report;

  const auto tuple = with_j(j, ideals);
  const auto positions = positions_from_k(k);
  const Ideal i_product = ideal_product(ring, ideals);
  const Ideal ji_product = ideal_product(j, i_product);

  for (const auto reading : kReadings) {
    ReadingReport rr{reading, Verdict::inconclusive, {}, {}};
    auto seq = find_sequence(ring, tuple, positions, search_options(SearchMode::fc, reading, options));
    rr.computed.push_back({"FC-sequence found", seq.found});
    if (seq.found) rr.computed.push_back({"Q", sequence_ideal(ring, seq).to_string()});
    if (e != 0 && !seq.found) {
      rr.note = "e != 0 but no FC-sequence was found: " + seq.reason;
    } else if (e != 0) {
      const Ideal q_ideal = sequence_ideal(ring, seq);
      bool equal = false;
      for (const auto sat_reading : kReadings) {
        const Ideal& by = sat_reading == ProductReading::whole_tuple ? ji_product : i_product;
        const Ideal sat = ideal_saturate(q_ideal, by).ideal;
        std::string why;
        const auto value = samuel_on_quotient(j, sat, why);
        const std::string label = "e(J, Ā) [" + to_string(sat_reading) + "]";
        rr.computed.push_back({label, value ? std::variant<std::int64_t, bool, std::string>(*value)
                                            : std::variant<std::int64_t, bool, std::string>("undefined: " + why)});
        equal = equal || (value && *value == e);
      }
      rr.verdict = equal ? Verdict::confirmed : Verdict::counterexample;
      rr.note = equal ? "e = e(J, Ā)" : "e differs from e(J, Ā) under both saturations";
    } else if (seq.found) {
      rr.verdict = Verdict::counterexample;
      rr.note = "e = 0 but an FC-sequence exists";
    } else {
      rr.verdict = Verdict::confirmed_negatively;
      rr.note = "e = 0 and no FC-sequence was found (" + seq.reason + ")";
    }
    report.sequences.push_back({"FC-sequence [" + to_string(reading) + "]", std::move(seq)});
    report.readings.push_back(std::move(rr));
  }
  report.verdict = combine_readings(report.readings);
  if (report.verdict == Verdict::inconclusive) {
    report.reason = "the readings of I do not both confirm or both refute";
  }
  return report;
}

TheoremReport check_theorem5(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                             std::span<const std::size_t> k, const TheoremOptions& options) {
  TheoremReport report;
  report.id = TheoremId::thm5;
  report.instance = instance_of(ring, j, ideals, k, "k", options);
  std::int64_t e = 0;
  DimValue q = DimValue::empty();
  if (!mixed_value(report, ring, j, ideals, k, options, e, q)) return report;

  const auto tuple = with_j(j, ideals);
  auto seq = find_sequence(ring, tuple, positions_from_k(k),
                           search_options(SearchMode::superficial, ProductReading::whole_tuple, options));
  const bool found = seq.found;
  const Ideal q_ideal = sequence_ideal(ring, seq);
  report.sequences.push_back({"superficial sequence", std::move(seq)});
  if (!found) {
    report.verdict = Verdict::inconclusive;
    report.reason = report.sequences.back().certificate.reason;
    return report;
  }
  report.add("Q", q_ideal.to_string());

  const Ideal i_product = ideal_product(ring, ideals);
  const Ideal sat = ideal_saturate(q_ideal, i_product).ideal;
  const DimValue dim = krull_dimension(ring, sat);
  report.add("dim A/Q:I^∞", dim.to_string());
  const Ideal sat_with_j = ideal_saturate(q_ideal, ideal_product(j, i_product)).ideal;
  if (!ideal_equal(sat, sat_with_j)) report.add("dim A/Q:(JI)^∞", krull_dimension(ring, sat_with_j).to_string());

  const bool nonzero = e != 0;
  const bool top = !dim.is_empty() && dim.value() == static_cast<int>(k[0]) + 1;
  if (nonzero != top) {
    report.verdict = Verdict::counterexample;
    report.reason = nonzero ? "e != 0 but dim A/Q:I^∞ != k0 + 1" : "e = 0 but dim A/Q:I^∞ = k0 + 1";
    return report;
  }
  if (!nonzero) {
    report.verdict = Verdict::confirmed;
    report.reason = "e = 0 and dim A/Q:I^∞ != k0 + 1";
    return report;
  }
  std::string why;
  const auto samuel = samuel_on_quotient(j, sat, why);
  if (samuel) {
    report.add("e(J, A/Q:I^∞)", *samuel);
  } else {
    report.add("e(J, A/Q:I^∞)", "undefined: " + why);
  }
  report.verdict = samuel && *samuel == e ? Verdict::confirmed : Verdict::counterexample;
  if (report.verdict == Verdict::counterexample) report.reason = "e != e(J, A/Q:I^∞)";
  return report;
}

TheoremReport check_remark7(const RingPtr& ring, const Ideal& j, std::span<const Ideal> ideals,
                            std::span<const std::size_t> eps, const TheoremOptions& options) {
  TheoremReport report;
  report.id = TheoremId::remark7;
  report.instance = instance_of(ring, j, ideals, eps, "eps", options);
  check_grid_input(ring, j, ideals);
  const DimValue q = filter_dimension(ring, ideals);
  report.add("q", static_cast<std::int64_t>(q.value()));

  std::vector<std::size_t> positions;
  for (auto i : eps) {
    if (i < 1 || i > ideals.size()) throw DomainError("index " + std::to_string(i) + " is outside (I1, ..., Is)");
    positions.push_back(i + 1);
  }
  const auto tuple = with_j(j, ideals);
  auto seq = find_sequence(ring, tuple, positions,
                           search_options(SearchMode::superficial, ProductReading::whole_tuple, options));
  if (!seq.found) {
    report.verdict = Verdict::inconclusive;
    report.reason = seq.reason;
    report.sequences.push_back({"superficial sequence", std::move(seq)});
    return report;
  }
  const Ideal q_ideal = sequence_ideal(ring, seq);
  const Ideal sat = ideal_saturate(q_ideal, ideal_product(ring, ideals)).ideal;
  const DimValue dim = krull_dimension(ring, sat);
  const int bound = q.value() - static_cast<int>(eps.size());
  report.add("Q", q_ideal.to_string());
  report.add("dim A/Q:I^∞", dim.to_string());
  report.add("q - m", static_cast<std::int64_t>(bound));
  const bool below = dim.is_empty() || dim.value() <= bound;
  report.verdict = below ? Verdict::confirmed : Verdict::counterexample;
  if (!below) report.reason = "dim A/Q:I^∞ exceeds q - m";

  if (below && options.test_fc_equality) {
    const bool equality = !dim.is_empty() && dim.value() == bound;
    bool any_reading = false;
    for (const auto reading : kReadings) {
      bool all_fc = true;
      for (const auto& step : seq.steps) {
        const auto& c = step.certificate;
        all_fc = all_fc && is_fc(c.element, c.tuple, c.index, options.window, reading, options.check).fc();
      }
      report.add("FC-sequence [" + to_string(reading) + "]", all_fc);
      any_reading = any_reading || all_fc == equality;
    }
    if (!any_reading) {
      report.verdict = Verdict::counterexample;
      report.reason = "equality in the bound does not match the sequence being FC under either reading";
    }
  }
  report.sequences.push_back({"superficial sequence", std::move(seq)});
  return report;
}

TheoremReport check_remark2_invariance(const RingPtr& ring, const Ideal& j, std::span<const Ideal> tuple,
                                       const Polynomial& x, std::size_t i, const TheoremOptions& options) {
  TheoremReport report;
  report.id = TheoremId::remark2;
  const std::size_t index[] = {i};
  report.instance = instance_of(ring, j, tuple, index, "i", options);
  report.instance.element = x;
  if (i < 1 || i > tuple.size()) throw DomainError("index " + std::to_string(i) + " is outside the tuple");
  if (!tuple[i - 1].contains(x)) throw DomainError("element " + x.to_string() + " is not in " + tuple[i - 1].to_string());
  if (krull_dimension(ring, j) != DimValue(0)) throw DomainError("J = " + j.to_string() + " is not m-primary");
  if (!check_fc2(x, tuple)) throw DomainError("element " + x.to_string() + " is not filter-regular (0:x ⊄ 0:I^∞)");
  if (options.window.base < 1) throw DomainError("window base must be at least 1");
  report.add("element", x.to_string());

  const Ideal px = principal(ring, x);
  const std::size_t axes = tuple.size() + 1;
  const std::size_t extent = options.window.width + 1;
  std::size_t points = 1;
  for (std::size_t a = 0; a < axes; ++a) points *= extent;

  const std::pair<std::string, Ideal> scales[] = {{"J", j}, {"m", Ideal::maximal(ring)}};
  bool all_equal = true;
  for (const auto& [name, scale] : scales) {
    std::size_t mismatches = 0;
    std::string witness;
    for (std::size_t flat = 0; flat < points; ++flat) {
      std::vector<std::size_t> n(axes);
      for (std::size_t a = axes, rest = flat; a-- > 0; rest /= extent) n[a] = options.window.base + rest % extent;
      std::vector<Ideal> factors{ideal_power(scale, n[0])};
      for (std::size_t a = 0; a < tuple.size(); ++a) factors.push_back(ideal_power(tuple[a], n[a + 1] - (a + 1 == i)));
      const Ideal u = ideal_product(ring, factors);
      const Ideal v = ideal_product(u, scale);
      const LengthValue plain = length_from_numerators(quotient_hilbert_numerator(u), quotient_hilbert_numerator(v));
      const LengthValue scaled = length_from_numerators(quotient_hilbert_numerator(ideal_product(px, u)),
                                                        quotient_hilbert_numerator(ideal_product(px, v)));
      if (!(plain == scaled)) {
        if (mismatches++ == 0) {
          witness = vector_string(n) + ": " + scaled.to_string() + " vs " + plain.to_string();
        }
      }
    }
    report.add("points [" + name + "]", static_cast<std::int64_t>(points));
    report.add("mismatches [" + name + "]", static_cast<std::int64_t>(mismatches));
    if (mismatches) report.add("first mismatch [" + name + "]", witness);
    all_equal = all_equal && mismatches == 0;
  }
  report.verdict = all_equal ? Verdict::confirmed : Verdict::counterexample;
  if (!all_equal) report.reason = "lengths differ after multiplication by x";
  return report;
}

}  // namespace mixmul
