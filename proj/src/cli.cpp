#include "mixmul/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mixmul/errors.hpp"
#include "mixmul/parser.hpp"

namespace mixmul::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Instance files

// A statement of one line with absolute 0-based columns.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no)
      : line_(line), pos_(begin), end_(end), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, line_no_, at + 1); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= end_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < end_ && line_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(line_[start]))) fail("expected a name", start);
    return std::string(line_.substr(start, pos_ - start));
  }
  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number", start);
    try {
      return std::stoull(std::string(line_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("number out of range", start);
    }
  }
  // Up to the matching ')' of an already consumed '('; returns the inner span.
  std::pair<std::size_t, std::size_t> parenthesized() {
    const std::size_t start = pos_;
    int depth = 1;
    for (; pos_ < end_; ++pos_) {
      if (line_[pos_] == '(') ++depth;
      if (line_[pos_] == ')' && --depth == 0) return {start, pos_++};
    }
    fail("unbalanced parentheses", start - 1);
  }
  std::size_t pos() const { return pos_; }
  std::size_t end() const { return end_; }
  void seek(std::size_t p) { pos_ = p; }
  std::string_view line() const { return line_; }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view line_;
  std::size_t pos_;
  std::size_t end_;
  std::size_t line_no_;
};

// Splits [begin, end) at top-level commas.
std::vector<std::pair<std::size_t, std::size_t>> split_commas(std::string_view line, std::size_t begin, std::size_t end) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    if (line[i] == '(') ++depth;
    if (line[i] == ')') --depth;
    if (line[i] == ',' && depth == 0) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  out.emplace_back(start, end);
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<Polynomial> polynomial_list(const Cursor& c, std::size_t begin, std::size_t end, const PolyRingPtr& base) {
  std::vector<Polynomial> out;
  for (const auto& [b, e] : split_commas(c.line(), begin, end)) {
    const auto text = c.line().substr(b, e - b);
    if (blank(text)) c.fail("empty polynomial", b);
    out.push_back(parse_polynomial(text, base, c.line_no(), b));
  }
  return out;
}

std::vector<std::size_t> number_tuple(Cursor& c) {
  c.expect('(');
  std::vector<std::size_t> out;
  if (c.peek(')')) {
    c.expect(')');
    return out;
  }
  while (true) {
    out.push_back(static_cast<std::size_t>(c.number()));
    if (c.peek(')')) break;
    c.expect(',');
  }
  c.expect(')');
  return out;
}

struct Parser {
  std::optional<Field> field_override;
  InstanceSpec spec;
  std::map<std::string, std::size_t> ideal_lines;

  void ring_statement(Cursor& c) {
    if (spec.ring) c.fail("a second ring statement");
    spec.ring_name = c.identifier();
    c.expect('=');
    c.skip_space();
    const std::size_t field_at = c.pos();
    const std::string field_name = c.identifier();
    Field field = Field::rationals();
    if (field_name == "Fp") {
      c.expect('(');
      const auto p = c.number();
      c.expect(')');
      try {
        field = Field::prime(static_cast<std::int64_t>(p));
      } catch (const DomainError& e) {
        c.fail(e.what(), field_at);
      }
    } else if (field_name != "QQ") {
      c.fail("unknown field '" + field_name + "' (expected QQ or Fp(p))", field_at);
    }
    if (field_override) field = *field_override;
    c.expect('[');
    std::vector<std::string> vars;
    while (true) {
      vars.push_back(c.identifier());
      if (c.peek(']')) break;
      c.expect(',');
    }
    c.expect(']');
    PolyRingPtr base;
    try {
      base = PolyRing::make(field, vars);
    } catch (const DomainError& e) {
      c.fail(e.what(), field_at);
    }
    std::vector<Polynomial> relations;
    if (c.peek('/')) {
      c.expect('/');
      c.expect('(');
      const auto [b, e] = c.parenthesized();
      relations = polynomial_list(c, b, e, base);
      for (std::size_t i = 0; i < relations.size(); ++i) {
        if (!relations[i].is_homogeneous()) {
          c.fail("relation " + relations[i].to_string() + " is not homogeneous", split_commas(c.line(), b, e)[i].first);
        }
      }
    }
    if (!c.at_end()) c.fail("unexpected text after the ring");
    try {
      spec.ring = RingPresentation::make(base, std::move(relations));
    } catch (const DomainError& e) {
      c.fail(e.what(), field_at);
    }
    if (spec.ring->is_zero_ring()) c.fail("the ring is zero", field_at);
  }

  void ideal_statement(Cursor& c) {
    if (!spec.ring) c.fail("ideal before the ring statement");
    c.skip_space();
    const std::size_t name_at = c.pos();
    const std::string name = c.identifier();
    const bool numbered = name.size() >= 2 && name[0] == 'I' && name[1] != '0' &&
                          std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(ch); });
    if (name != "J" && !numbered) c.fail("ideal names are J and I1, I2, ...", name_at);
    if (ideal_lines.count(name)) c.fail("ideal " + name + " is defined twice", name_at);
    c.expect('=');
    c.skip_space();
    const auto gens = polynomial_list(c, c.pos(), c.end(), spec.ring->base());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_homogeneous()) {
        c.fail("generator " + gens[i].to_string() + " of " + name + " is not homogeneous",
               split_commas(c.line(), c.pos(), c.end())[i].first);
      }
    }
    spec.ideals.emplace_back(name, Ideal(spec.ring, gens));
    ideal_lines[name] = c.line_no();
  }

  void task_statement(Cursor& c) {
    if (spec.task) c.fail("a second task statement");
    TaskSpec task;
    task.command = c.identifier();
    while (c.peek('-') || !c.at_end()) {
      // command names contain dashes
      if (c.peek('-')) {
        c.expect('-');
        task.command += "-" + c.identifier();
        continue;
      }
      c.skip_space();
      const std::size_t key_at = c.pos();
      const std::string key = c.identifier();
      c.expect('=');
      if (key == "k") {
        task.k = number_tuple(c);
      } else if (key == "eps") {
        task.eps = number_tuple(c);
      } else if (key == "window") {
        const auto w = number_tuple(c);
        if (w.size() != 2) c.fail("window=(base,width) takes two numbers", key_at);
        task.window = ExponentWindow{w[0], w[1]};
      } else if (key == "tries") {
        task.tries = static_cast<std::size_t>(c.number());
      } else if (key == "seed") {
        task.seed = c.number();
      } else if (key == "index") {
        task.index = static_cast<std::size_t>(c.number());
      } else if (key == "element") {
        c.expect('(');
        const auto [b, e] = c.parenthesized();
        const auto text = c.line().substr(b, e - b);
        parse_polynomial(text, spec.ring ? spec.ring->base() : nullptr, c.line_no(), b);
        task.element = std::string(text);
      } else {
        c.fail("unknown task parameter '" + key + "'", key_at);
      }
    }
    if (std::find(std::begin(kCommands), std::end(kCommands), task.command) == std::end(kCommands)) {
      c.fail("unknown command '" + task.command + "'");
    }
    spec.task = std::move(task);
  }

  void statement(std::string_view line, std::size_t begin, std::size_t end, std::size_t line_no) {
    Cursor c(line, begin, end, line_no);
    if (c.at_end()) return;
    const std::size_t at = c.pos();
    const std::string keyword = c.identifier();
    if (keyword == "ring") {
      ring_statement(c);
    } else if (keyword == "ideal") {
      ideal_statement(c);
    } else if (keyword == "task") {
      if (!spec.ring) c.fail("task before the ring statement", at);
      task_statement(c);
    } else {
      c.fail("unknown statement '" + keyword + "'", at);
    }
  }

  void validate() {
    if (!spec.ring) throw ParseError("missing ring statement", 1, 1);
    std::size_t count = 0;
    for (const auto& [name, ideal] : spec.ideals) count += name != "J";
    for (std::size_t i = 1; i <= count; ++i) {
      if (!ideal_lines.count("I" + std::to_string(i))) {
        throw ParseError("ideals I1..I" + std::to_string(count) + " must be numbered without gaps (I" +
                             std::to_string(i) + " missing)",
                         1, 1);
      }
    }
    if (const auto j = spec.j()) {
      if (krull_dimension(spec.ring, *j) != DimValue(0)) {
        throw ParseError("J = " + j->to_string() + " is not m-primary", ideal_lines["J"], 1);
      }
    }
    const auto is = spec.is();
    if (!is.empty()) {
      try {
        filter_dimension(spec.ring, is);
      } catch (const DomainError& e) {
        throw ParseError(std::string("I = I1⋯Is must be non-nilpotent: ") + e.what(), ideal_lines["I1"], 1);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Reports

std::string vector_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string window_status(WindowStatus s) {
  switch (s) {
    case WindowStatus::verified_on_window:
      return "verified-on-window";
    case WindowStatus::failed:
      return "failed";
    case WindowStatus::skipped:
      break;
  }
  return "skipped";
}

std::string dim_status(DimStatus s) {
  switch (s) {
    case DimStatus::holds:
      return "holds";
    case DimStatus::fails:
      return "fails";
    case DimStatus::skipped:
      break;
  }
  return "skipped";
}

Json window_json(const ExponentWindow& w) { return Json{{"base", w.base}, {"width", w.width}}; }

Json window_check_json(const WindowCheck& c) {
  Json j{{"status", window_status(c.status)}, {"points", c.points}};
  if (c.status == WindowStatus::failed) j["witness"] = c.witness;
  return j;
}

Json ideals_json(const std::vector<Ideal>& ideals) {
  Json j = Json::array();
  for (const auto& u : ideals) j.push_back(u.to_string());
  return j;
}

Json element_json(const ElementCertificate& c) {
  Json j{{"element", c.element.to_string()},
         {"tuple", ideals_json(c.tuple)},
         {"index", c.index},
         {"window", window_json(c.window)},
         {"reading", to_string(c.reading)},
         {"fc1", window_check_json(c.fc1)}};
  j["fc2"] = c.fc2 ? Json(*c.fc2) : Json(nullptr);
  j["fc3"] = Json{{"status", dim_status(c.fc3.status)}};
  if (c.fc3.status != DimStatus::skipped) {
    j["fc3"]["dim A/(x):I^inf"] = c.fc3.left.to_string();
    j["fc3"]["dim A/0:I^inf - 1"] = c.fc3.right.to_string();
  }
  j["superficial"] = window_check_json(c.superficial);
  return j;
}

Json sequence_json(const std::string& label, const SequenceCertificate& s) {
  Json j{{"label", label},
         {"found", s.found},
         {"epsilon_indices", s.epsilon_indices},
         {"composition", s.composition}};
  if (!s.found) j["reason"] = s.reason;
  Json steps = Json::array();
  for (const auto& step : s.steps) {
    steps.push_back(Json{{"ring", step.ring->to_string()}, {"attempt", step.attempt}, {"certificate", element_json(step.certificate)}});
  }
  j["steps"] = std::move(steps);
  return j;
}

Json value_json(const std::variant<std::int64_t, bool, std::string>& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string value_text(const std::variant<std::int64_t, bool, std::string>& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

Json quantities_json(const std::vector<Quantity>& qs) {
  Json j = Json::object();
  for (const auto& q : qs) j[q.name] = value_json(q.value);
  return j;
}

// Code points, so that keys like "dim A/Q:I^∞" align.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, display_width(k));
    for (const auto& [k, v] : rows_) out << k << std::string(width + 2 - display_width(k), ' ') << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

// ---------------------------------------------------------------------------
// Commands

struct Context {
  const std::string& command;
  const InstanceSpec& spec;
  const RunFlags& flags;
  ExponentWindow window;
  std::size_t tries;
  std::uint64_t seed;
  Json report;
  Table table;

  Context(const std::string& cmd, const InstanceSpec& s, const RunFlags& f) : command(cmd), spec(s), flags(f) {
    const TaskSpec task = s.task.value_or(TaskSpec{});
    window = task.window.value_or(ExponentWindow{});
    if (f.window_base) window.base = *f.window_base;
    if (f.window_width) window.width = *f.window_width;
    tries = f.tries.value_or(task.tries.value_or(50));
    seed = f.seed.value_or(task.seed.value_or(0));

    report["command"] = cmd;
    Json inst{{"ring", s.ring->to_string()}, {"field", s.ring->field().to_string()}};
    Json ideals = Json::object();
    for (const auto& [name, ideal] : s.ideals) ideals[name] = ideal.to_string();
    inst["ideals"] = std::move(ideals);
    report["instance"] = std::move(inst);
    report["parameters"] = Json{{"window", window_json(window)}, {"tries", tries}, {"seed", seed}};

    table.row("command", cmd);
    table.row("ring", s.ring->to_string());
    for (const auto& [name, ideal] : s.ideals) table.row(name, ideal.to_string());
    table.row("window", "base " + std::to_string(window.base) + ", width " + std::to_string(window.width));
    table.row("tries, seed", std::to_string(tries) + ", " + std::to_string(seed));
  }

  TheoremOptions options() const {
    TheoremOptions o;
    o.window = window;
    o.tries = tries;
    o.seed = seed;
    o.check.jobs = flags.jobs;
    o.grid.jobs = flags.jobs;
    return o;
  }

  Ideal need_j() const {
    const auto j = spec.j();
    if (!j) throw DomainError("the instance has no ideal J");
    return *j;
  }
  std::vector<Ideal> need_is() const {
    auto is = spec.is();
    if (is.empty()) throw DomainError("the instance has no ideals I1, ..., Is");
    return is;
  }
  std::vector<std::size_t> need_vector(const std::optional<std::vector<std::size_t>>& flag,
                                       const std::optional<std::vector<std::size_t>>& task, const std::string& name) {
    const auto v = flag ? flag : task;
    if (!v) throw DomainError(command + " needs --" + name);
    report["parameters"][name] = *v;
    table.row(name, vector_string(*v));
    return *v;
  }
  std::optional<Polynomial> element() {
    const auto text = flags.element ? flags.element : (spec.task ? spec.task->element : std::nullopt);
    if (!text) return std::nullopt;
    Polynomial x = parse_polynomial(*text, spec.ring->base());
    report["parameters"]["element"] = x.to_string();
    return x;
  }
  std::size_t index(std::size_t fallback = 1) {
    const std::size_t i = flags.index.value_or(spec.task && spec.task->index ? *spec.task->index : fallback);
    report["parameters"]["index"] = i;
    return i;
  }
  std::vector<Ideal> tuple() {
    report["parameters"]["with_j"] = flags.with_j;
    if (!flags.with_j) return need_is();
    std::vector<Ideal> t{need_j()};
    for (auto& u : need_is()) t.push_back(u);
    return t;
  }

  int finish(const std::string& verdict, const std::string& reason, int code, std::ostream& out) {
    report["verdict"] = verdict;
    if (!reason.empty()) report["reason"] = reason;
    table.row("verdict", reason.empty() ? verdict : verdict + " (" + reason + ")");
    table.print(out);
    return code;
  }

  int theorem(const TheoremReport& r, std::ostream& out) {
    report["theorem"] = to_string(r.id);
    report["computed"] = quantities_json(r.computed);
    for (const auto& q : r.computed) table.row(q.name, value_text(q.value));
    if (!r.readings.empty()) {
      Json readings = Json::array();
      for (const auto& rr : r.readings) {
        readings.push_back(Json{{"reading", to_string(rr.reading)},
                                {"verdict", to_string(rr.verdict)},
                                {"note", rr.note},
                                {"computed", quantities_json(rr.computed)}});
        table.row("reading " + to_string(rr.reading), to_string(rr.verdict) + ": " + rr.note);
        for (const auto& q : rr.computed) table.row("  " + q.name, value_text(q.value));
      }
      report["readings"] = std::move(readings);
    }
    Json certs{{"elements", Json::array()}, {"sequences", Json::array()}};
    for (const auto& e : r.elements) certs["elements"].push_back(element_json(e));
    for (const auto& s : r.sequences) {
      certs["sequences"].push_back(sequence_json(s.label, s.certificate));
      std::string elems;
      for (const auto& x : s.certificate.elements()) elems += (elems.empty() ? "" : ", ") + x.to_string();
      table.row(s.label, s.certificate.found ? "[" + elems + "]" : "not found: " + s.certificate.reason);
    }
    report["certificates"] = std::move(certs);
    return finish(to_string(r.verdict), r.reason, exit_code(r.verdict), out);
  }
};

int run_mixed(Context& c, std::ostream& out) {
  const Ideal j = c.need_j();
  const auto is = c.need_is();
  GridOptions grid;
  grid.jobs = c.flags.jobs;
  const DimValue q = filter_dimension(c.spec.ring, is);
  c.report["computed"] = Json{{"q", q.value()}};
  c.table.row("q", q.to_string());
  try {
    const auto table = mixed_multiplicities(c.spec.ring, j, is, grid);
    c.report["computed"]["grid"] = Json{{"base", table.base}, {"width", table.width}};
    c.table.row("grid", "base " + std::to_string(table.base.front()) + ", width " + std::to_string(table.width));
    Json entries = Json::array();
    for (const auto& e : table.entries) {
      entries.push_back(Json{{"key", e.key}, {"value", e.value}});
      c.table.row("e" + vector_string(e.key), std::to_string(e.value));
    }
    c.report["computed"]["mixed_multiplicities"] = std::move(entries);
    return c.finish("computed", "", 0, out);
  } catch (const Inconclusive& e) {
    return c.finish("inconclusive", e.what(), 2, out);
  }
}

int run_samuel(Context& c, std::ostream& out) {
  const Ideal j = c.need_j();
  try {
    const auto e = samuel_multiplicity(j, c.spec.ring);
    c.report["computed"] = Json{{"dim A", krull_dimension(c.spec.ring, Ideal::zero(c.spec.ring)).to_string()}, {"e(J, A)", e}};
    c.table.row("e(J, A)", std::to_string(e));
    return c.finish("computed", "", 0, out);
  } catch (const Inconclusive& e) {
    return c.finish("inconclusive", e.what(), 2, out);
  }
}

int run_check_fc(Context& c, std::ostream& out) {
  const auto tuple = c.tuple();
  const std::size_t i = c.index();
  const auto given = c.element();
  const CheckOptions check{Method::hilbert_series, c.flags.jobs};
  Json certs = Json::array();
  std::optional<ElementCertificate> cert;
  if (given) {
    cert = is_fc(*given, tuple, i, c.window, ProductReading::whole_tuple, check);
  } else {
    SearchOptions so{SearchMode::fc, c.window, c.tries, c.seed, ProductReading::whole_tuple, check};
    const std::size_t indices[] = {i};
    const auto seq = find_sequence(c.spec.ring, tuple, indices, so);
    c.report["certificates"] = Json{{"sequences", Json::array({sequence_json("FC-element search", seq)})}};
    if (!seq.found) return c.finish("inconclusive", seq.reason, 2, out);
    cert = seq.steps.front().certificate;
  }
  certs.push_back(element_json(*cert));
  c.table.row("element", cert->element.to_string());
  c.table.row("fc1", window_status(cert->fc1.status));
  c.table.row("fc2", *cert->fc2 ? "true" : "false");
  c.table.row("fc3", dim_status(cert->fc3.status) + " (" + cert->fc3.left.to_string() + " vs " + cert->fc3.right.to_string() + ")");
  bool holds = cert->fc();
  if (c.flags.with_j) {
    // The product I read without J as well.
    auto other = is_fc(cert->element, tuple, i, c.window, ProductReading::exclude_first, check);
    certs.push_back(element_json(other));
    c.table.row("fc [" + to_string(ProductReading::exclude_first) + "]", other.fc() ? "holds" : "fails");
    c.report["readings"] = Json{{to_string(ProductReading::whole_tuple), cert->fc()},
                                {to_string(ProductReading::exclude_first), other.fc()}};
    if (holds != other.fc()) {
      c.report["certificates"]["elements"] = std::move(certs);
      return c.finish("inconclusive", "the readings of I disagree", 2, out);
    }
  }
  c.report["certificates"]["elements"] = std::move(certs);
  return c.finish(holds ? "holds" : "fails", holds ? "" : "not an (FC)-element", holds ? 0 : 1, out);
}

int run_check_superficial(Context& c, std::ostream& out) {
  const auto tuple = c.tuple();
  std::size_t eps = c.index();
  if (const auto v = c.flags.eps ? c.flags.eps : (c.spec.task ? c.spec.task->eps : std::nullopt)) {
    if (v->size() != 1) throw DomainError("check-superficial takes a single --eps index");
    eps = v->front();
    c.report["parameters"]["index"] = eps;
  }
  return c.theorem(check_prop6(c.spec.ring, tuple, eps, c.options(), c.element()), out);
}

int run_check_remark2(Context& c, std::ostream& out) {
  const Ideal j = c.need_j();
  const auto is = c.need_is();
  const std::size_t i = c.index();
  if (i < 1 || i > is.size()) throw DomainError("index " + std::to_string(i) + " is outside (I1, ..., Is)");
  auto x = c.element();
  if (!x) {
    for (std::size_t attempt = 1; attempt <= c.tries && !x; ++attempt) {
      const auto candidate = sample_element(is[i - 1], candidate_seed(c.seed, 0, attempt));
      if (!c.spec.ring->reduce(candidate).is_zero() && check_fc2(candidate, is)) x = candidate;
    }
    if (!x) return c.finish("inconclusive", "no filter-regular element among the candidates", 2, out);
  }
  return c.theorem(check_remark2_invariance(c.spec.ring, j, is, *x, i, c.options()), out);
}

}  // namespace

std::optional<Ideal> InstanceSpec::j() const {
  for (const auto& [name, ideal] : ideals) {
    if (name == "J") return ideal;
  }
  return std::nullopt;
}

std::vector<Ideal> InstanceSpec::is() const {
  std::vector<std::pair<std::size_t, Ideal>> numbered;
  for (const auto& [name, ideal] : ideals) {
    if (name != "J") numbered.emplace_back(std::stoul(name.substr(1)), ideal);
  }
  std::sort(numbered.begin(), numbered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Ideal> out;
  for (auto& [n, ideal] : numbered) out.push_back(std::move(ideal));
  return out;
}

Field parse_field(std::string_view text) {
  if (text == "QQ") return Field::rationals();
  if (text.size() > 4 && text.substr(0, 3) == "Fp(" && text.back() == ')') {
    const std::string digits(text.substr(3, text.size() - 4));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(ch); })) {
      return Field::prime(std::stoll(digits));
    }
  }
  throw DomainError("unknown field '" + std::string(text) + "' (expected QQ or Fp(p))");
}

InstanceSpec parse_instance_text(std::string_view text, const std::optional<Field>& field) {
  Parser parser{field, {}, {}};
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t semi = line.find(';', pos);
      if (semi == std::string_view::npos) {
        if (!blank(line.substr(pos))) {
          throw ParseError("expected ';' at the end of the statement", line_no, line.size() + 1);
        }
        break;
      }
      parser.statement(line, pos, semi, line_no);
      pos = semi + 1;
    }
    if (stop == text.size()) break;
    start = stop + 1;
  }
  parser.validate();
  return std::move(parser.spec);
}

InstanceSpec parse_instance(const std::string& path, const std::optional<Field>& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str(), field);
}

RunResult run(const std::string& command, const InstanceSpec& spec, const RunFlags& flags, std::ostream& out) {
  Context c(command, spec, flags);
  int code = 0;
  if (command == "mixed") {
    code = run_mixed(c, out);
  } else if (command == "samuel") {
    code = run_samuel(c, out);
  } else if (command == "check-fc") {
    code = run_check_fc(c, out);
  } else if (command == "check-superficial") {
    code = run_check_superficial(c, out);
  } else if (command == "check-thm3" || command == "check-thm5") {
    const auto k = c.need_vector(flags.k, spec.task ? spec.task->k : std::nullopt, "k");
    const auto report = command == "check-thm3" ? check_theorem3(spec.ring, c.need_j(), c.need_is(), k, c.options())
                                                : check_theorem5(spec.ring, c.need_j(), c.need_is(), k, c.options());
    code = c.theorem(report, out);
  } else if (command == "check-remark7") {
    const auto eps = c.need_vector(flags.eps, spec.task ? spec.task->eps : std::nullopt, "eps");
    code = c.theorem(check_remark7(spec.ring, c.need_j(), c.need_is(), eps, c.options()), out);
  } else if (command == "check-remark2") {
    code = run_check_remark2(c, out);
  } else {
    throw DomainError("unknown command '" + command + "'");
  }
  return {code, std::move(c.report)};
}

}  // namespace mixmul::cli
