// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "mixmul/bhattacharya.hpp"
#include "mixmul/cli.hpp"
#include "mixmul/errors.hpp"
#include "mixmul/theorems.hpp"

using namespace mixmul;
using corpus::TupleCase;
using corpus::tuple_case;

namespace {

using Sizes = std::vector<std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Quantity* find(const std::vector<Quantity>& qs, const std::string& prefix) {
  for (const auto& q : qs) {
    if (q.name.rfind(prefix, 0) == 0) return &q;
  }
  return nullptr;
}

bool flag(const std::vector<Quantity>& qs, const std::string& prefix) {
  const auto* q = find(qs, prefix);
  return q && std::holds_alternative<bool>(q->value) && std::get<bool>(q->value);
}

std::vector<Ideal> tail(const TupleCase& c) { return {c.tuple.begin() + 1, c.tuple.end()}; }

// The unit-test corpus plus a few more shapes: a principal I, a double
// plane, and a non-maximal J.
std::vector<TupleCase> theorem_corpus() {
  auto out = corpus::tuple_cases();
  out.push_back(tuple_case("plane, (m, (x))", {"x", "y"}, {}, {{}, {"x"}}));
  out.push_back(tuple_case("double plane, (m, (y, z))", {"x", "y", "z"}, {"x^2"}, {{}, {"y", "z"}}));
  out.push_back(tuple_case("plane, ((x^2, y), m)", {"x", "y"}, {}, {{"x^2", "y"}, {}}));
  return out;
}

std::string sizes(const Sizes& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome lengths() {
  Outcome o;
  const auto cases = corpus::monomial_length_cases(24, 20240601);
  std::size_t finite = 0;
  for (const auto& c : cases) {
    const LengthValue got = length_quotient(c.u, c.v);
    const LengthValue want = c.expected < 0 ? LengthValue::infinite() : LengthValue::finite(c.expected);
    if (!(got == want)) {
      o.pass = false;
      o.detail += " mismatch on " + c.u.to_string() + " / " + c.v.to_string() + ";";
    }
    finite += want.is_finite();
  }
  o.detail = std::to_string(cases.size()) + " monomial cases (" + std::to_string(finite) + " of finite length)" + o.detail;
  return o;
}

Outcome degree_law() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : theorem_corpus()) {
    const auto is = tail(c);
    const DimValue q = filter_dimension(c.ring, is);
    const auto grid = evaluate_grid(c.ring, c.tuple[0], is, Sizes(c.tuple.size(), 4), q.value() + 2);
    if (!certify_degree(grid, q)) {
      o.pass = false;
      o.detail += " " + c.name + " not of degree q-1;";
    }
    ++n;
  }
  o.pass = o.pass && n >= 10;
  o.detail = std::to_string(n) + " instances at width q+2" + o.detail;
  return o;
}

// ℓ(m^a I^b / m^(a+1) I^b) in k[x, y] by counting staircase monomials, and its
// first differences far out.
std::pair<std::int64_t, std::int64_t> hand_table(const std::vector<Monomial>& i) {
  auto product = [](const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    for (const auto& f : a) {
      for (const auto& g : b) out.push_back(f * g);
    }
    return out;
  };
  const std::vector<Monomial> m{Monomial({1, 0}), Monomial({0, 1})};
  auto power = [&](const std::vector<Monomial>& a, std::size_t n) {
    std::vector<Monomial> out{Monomial(2)};
    for (std::size_t k = 0; k < n; ++k) out = product(out, a);
    return out;
  };
  auto value = [&](std::size_t a, std::size_t b) {
    const auto u = product(power(m, a), power(i, b));
    return corpus::staircase_length(u, product(u, m), 2);
  };
  return {value(5, 4) - value(4, 4), value(4, 5) - value(4, 4)};
}

Outcome known_tables() {
  Outcome o;
  auto r = support::ring_of({"x", "y"});
  const auto m = Ideal::maximal(r);
  struct Example {
    std::vector<std::string> gens;
    std::vector<Monomial> monos;
    std::pair<std::int64_t, std::int64_t> expected;
  };
  const std::vector<Example> examples{
      {{"x", "y"}, {Monomial({1, 0}), Monomial({0, 1})}, {1, 1}},
      {{"x"}, {Monomial({1, 0})}, {1, 0}},
      {{"x^2", "x*y", "y^2"}, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}, {1, 2}},
  };
  for (const auto& ex : examples) {
    std::vector<Ideal> is{support::ideal_of(r, ex.gens)};
    const auto table = mixed_multiplicities(r, m, is);
    const std::pair<std::int64_t, std::int64_t> got{table.at(Sizes{1, 0}), table.at(Sizes{0, 1})};
    const auto hand = hand_table(ex.monos);
    const bool ok = got == ex.expected && hand == ex.expected;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : ", ") + is[0].to_string() + " {(1,0):" + std::to_string(got.first) +
                ",(0,1):" + std::to_string(got.second) + "}" + (ok ? "" : " MISMATCH");
  }
  return o;
}

Outcome collapse() {
  Outcome o;
  const std::vector<TupleCase> cases{
      tuple_case("plane", {"x", "y"}, {}, {{}}),
      tuple_case("plane, (x^2, y)", {"x", "y"}, {}, {{"x^2", "y"}}),
      tuple_case("space", {"x", "y", "z"}, {}, {{}}),
      tuple_case("cone", {"x", "y", "z"}, {"x*z - y^2"}, {{}}),
      tuple_case("plane with embedded point", {"x", "y"}, {"x*y", "y^2"}, {{}}),
      tuple_case("two planes", {"x", "y", "z"}, {"x*y"}, {{}}),
      tuple_case("double plane, (x, y^2, z)", {"x", "y", "z"}, {"x^2"}, {{"x", "y^2", "z"}}),
  };
  std::size_t splits = 0;
  for (const auto& c : cases) {
    const Ideal& j = c.tuple[0];
    const RingPtr reduced = quotient_ring(c.ring, ideal_saturate(Ideal::zero(c.ring), j).ideal);
    const std::int64_t samuel = samuel_multiplicity(j.in_ring(reduced), reduced);
    std::vector<Ideal> is{j};
    const auto table = mixed_multiplicities(c.ring, j, is);
    for (const auto& entry : table.entries) {
      ++splits;
      if (entry.value != samuel) {
        o.pass = false;
        o.detail += " " + c.name + " at " + sizes(entry.key) + ";";
      }
    }
  }
  o.detail = std::to_string(cases.size()) + " instances, " + std::to_string(splits) + " splits" + o.detail;
  return o;
}

Outcome proposition6() {
  Outcome o;
  std::size_t elements = 0;
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; elements < 30 && seed < 20; ++seed) {
    for (const auto& c : corpus::tuple_cases()) {
      for (std::size_t eps = 1; eps <= c.tuple.size(); ++eps) {
        TheoremOptions opts;
        opts.seed = seed;
        const auto report = check_prop6(c.ring, c.tuple, eps, opts);
        if (report.elements.empty() || !report.elements[0].superficial.verified()) continue;
        ++elements;
        const bool ok = report.verdict == Verdict::confirmed && flag(report.computed, "colon identity k=2") &&
                        flag(report.computed, "colon identity k=3") && flag(report.computed, "colon identity k=4") &&
                        flag(report.computed, "(0:x)");
        if (!ok) {
          ++failures;
          o.detail += " " + c.name + " eps=" + std::to_string(eps) + " seed=" + std::to_string(seed) + ";";
        }
      }
    }
  }
  o.pass = elements >= 30 && failures == 0;
  o.detail = std::to_string(elements) + " superficial elements, " + std::to_string(failures) + " failures" + o.detail;
  return o;
}

// Every k-vector of every corpus instance.
template <typename F>
void for_each_k(F&& f) {
  for (const auto& c : theorem_corpus()) {
    const auto is = tail(c);
    const DimValue q = filter_dimension(c.ring, is);
    for (const auto& k : compositions(c.tuple.size(), q.value() - 1)) f(c, is, k);
  }
}

Outcome theorem5() {
  Outcome o;
  std::set<std::string> instances;
  std::size_t runs = 0;
  std::size_t counterexamples = 0;
  for_each_k([&](const TupleCase& c, const std::vector<Ideal>& is, const Sizes& k) {
    const auto report = check_theorem5(c.ring, c.tuple[0], is, k, TheoremOptions{});
    if (report.sequences.empty() || !report.sequences[0].certificate.found) return;
    ++runs;
    instances.insert(c.name);
    if (report.verdict != Verdict::confirmed) {
      ++counterexamples;
      o.detail += " " + c.name + " k=" + sizes(k) + ": " + report.reason + ";";
    }
  });
  o.pass = instances.size() >= 8 && counterexamples == 0;
  o.detail = std::to_string(instances.size()) + " instances, " + std::to_string(runs) + " k-vectors with a sequence, " +
             std::to_string(counterexamples) + " counterexamples" + o.detail;
  return o;
}

Outcome theorem3() {
  Outcome o;
  std::size_t compared = 0;
  std::size_t bad = 0;
  std::size_t zero_with_sequence = 0;
  for_each_k([&](const TupleCase& c, const std::vector<Ideal>& is, const Sizes& k) {
    const auto report = check_theorem3(c.ring, c.tuple[0], is, k, TheoremOptions{});
    const auto* e = find(report.computed, "e(");
    if (!e) return;
    if (std::get<std::int64_t>(e->value) == 0) {
      for (const auto& rr : report.readings) zero_with_sequence += flag(rr.computed, "FC-sequence found");
      return;
    }
    for (const auto& rr : report.readings) {
      if (!flag(rr.computed, "FC-sequence found")) continue;
      ++compared;
      if (rr.verdict != Verdict::confirmed) {
        ++bad;
        o.detail += " " + c.name + " k=" + sizes(k) + " [" + to_string(rr.reading) + "];";
      }
    }
  });

  auto spec = cli::parse_instance_text("ring A = QQ[x,y]; ideal J = x, y; ideal I1 = x;");
  cli::RunFlags flags;
  flags.k = Sizes{0, 1};
  std::ostringstream sink;
  const auto ambiguous = cli::run("check-thm3", spec, flags, sink);
  const bool dual = ambiguous.exit_code == 2 && ambiguous.report["readings"].size() == 2 &&
                    ambiguous.report["verdict"] == "inconclusive";
  o.pass = compared > 0 && bad == 0 && dual;
  o.detail = std::to_string(compared) + " readings with a sequence and e != 0, " + std::to_string(bad) +
             " mismatches, " +
             std::to_string(zero_with_sequence) + " with e = 0 and a sequence; ambiguous instance exit " + std::to_string(ambiguous.exit_code) +
             (dual ? " with both readings reported" : " WITHOUT a dual-reading report") + o.detail;
  return o;
}

// Nondecreasing index sequences of length m into 1..s.
void index_sequences(std::size_t s, std::size_t m, Sizes& current, std::vector<Sizes>& out) {
  if (current.size() == m) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = current.empty() ? 1 : current.back(); i <= s; ++i) {
    current.push_back(i);
    index_sequences(s, m, current, out);
    current.pop_back();
  }
}

Outcome remark7() {
  Outcome o;
  std::size_t found = 0;
  for (const auto& c : theorem_corpus()) {
    const auto is = tail(c);
    const int q = filter_dimension(c.ring, is).value();
    for (std::size_t m = 1; m <= static_cast<std::size_t>(std::min(q, 2)); ++m) {
      std::vector<Sizes> all;
      Sizes current;
      index_sequences(is.size(), m, current, all);
      for (const auto& eps : all) {
        const auto report = check_remark7(c.ring, c.tuple[0], is, eps, TheoremOptions{});
        if (report.verdict == Verdict::inconclusive) continue;
        ++found;
        if (report.verdict != Verdict::confirmed) {
          o.pass = false;
          o.detail += " " + c.name + " eps=" + sizes(eps) + ";";
        }
      }
    }
  }
  o.pass = o.pass && found > 0;
  o.detail = std::to_string(found) + " superficial sequences, all with dim A/Q:I^∞ <= q - m" + o.detail;
  if (!o.pass) o.detail = "violations:" + o.detail;
  return o;
}

Outcome remark2() {
  Outcome o;
  std::size_t confirmed = 0;
  bool torsion = false;
  for (const auto& c : theorem_corpus()) {
    const auto is = tail(c);
    std::optional<Polynomial> x;
    for (std::size_t attempt = 1; attempt <= 50 && !x; ++attempt) {
      const auto candidate = sample_element(is[0], candidate_seed(0, 0, attempt));
      if (!c.ring->reduce(candidate).is_zero() && check_fc2(candidate, is)) x = candidate;
    }
    if (!x) continue;
    const auto report = check_remark2_invariance(c.ring, c.tuple[0], is, *x, 1, TheoremOptions{});
    if (report.verdict != Verdict::confirmed) {
      o.pass = false;
      o.detail += " " + c.name + ";";
      continue;
    }
    ++confirmed;
    const Ideal torsion_ideal = ideal_saturate(Ideal::zero(c.ring), ideal_product(c.ring, is)).ideal;
    torsion = torsion || !torsion_ideal.is_zero();
  }
  o.pass = o.pass && confirmed >= 5 && torsion;
  o.detail = std::to_string(confirmed) + " instances on full windows" +
             (torsion ? ", including 0:I^∞ != 0" : ", none with 0:I^∞ != 0") + o.detail;
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> runs{
      {"check-thm3", "ring A = QQ[x,y]; ideal J = x, y; ideal I1 = x; task check-thm3 k=(0,1) seed=5;"},
      {"check-thm5", "ring A = QQ[x,y,z]/(x*z - y^2); ideal J = x, y, z; ideal I1 = x, y; task check-thm5 k=(0,1) seed=5;"},
      {"check-remark2", "ring A = QQ[x,y]/(x*y, y^2); ideal J = x, y; ideal I1 = x; task check-remark2 index=1;"},
  };
  for (const auto& [command, text] : runs) {
    const auto spec = cli::parse_instance_text(text);
    cli::RunFlags serial;
    cli::RunFlags parallel;
    parallel.jobs = 4;
    std::ostringstream a;
    std::ostringstream b;
    std::ostringstream c;
    const auto first = cli::run(command, spec, serial, a).report.dump(2);
    const auto second = cli::run(command, spec, serial, b).report.dump(2);
    const auto third = cli::run(command, spec, parallel, c).report.dump(2);
    if (first != second || first != third || a.str() != b.str()) {
      o.pass = false;
      o.detail += " " + command + " differs;";
    }
  }
  o.detail = std::to_string(runs.size()) + " commands, 3 runs each (one with 4 jobs)" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lengths agree with lattice-point counting", lengths},
      {"degree law", degree_law},
      {"known mixed multiplicity tables", known_tables},
      {"collapse identity", collapse},
      {"superficial elements are weak-(FC)", proposition6},
      {"theorem 5 corpus", theorem5},
      {"theorem 3 corpus", theorem3},
      {"remark 7 bound", remark7},
      {"remark 2 invariance", remark2},
      {"determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ("
              << std::fixed << std::setprecision(1) << seconds << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
