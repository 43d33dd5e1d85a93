#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "symtrap/branching.hpp"
#include "symtrap/characters.hpp"
#include "symtrap/errors.hpp"
#include "symtrap/mapping.hpp"
#include "symtrap/oracle.hpp"
#include "symtrap/oscillator.hpp"
#include "symtrap/snippet.hpp"
#include "table.hpp"

namespace symtrap::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::optional<int> max_lambda;
  std::optional<int> max_energy;
  std::optional<int> search_ceiling;
  std::string pattern;
  std::string stats = "fermi";
  std::string state;
  std::string component;
  std::string format = "text";
  std::string output;
  std::string group = "sn";
  std::string parity = "+";
  std::string irrep;
  std::string regime = "g0";
  std::string lambda_parity = "even";
  bool verify = false;
  int k = 2;
  int nu_r = 0;
  int tau = 0;
};

// ---- small conversions ----

json count_json(const Count& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return count_json(boost::multiprecision::numerator(r));
  return r.str();
}

json parts_json(const Partition& p) { return json(p.part_vector()); }

json label_json(const HypercylindricalLabel& h) { return json::array({h.nu_R, h.nu_rho, h.lambda}); }

std::string sign_text(int pi) { return pi > 0 ? "+" : "-"; }

std::string energy_text(const Energy& e) { return "E = " + e.to_string() + " ħω"; }

std::string statistics_text(const ComponentPattern& p) {
  if (p.distinguishable()) return "distinguishable";
  return p.statistics() == Statistics::Fermi ? "fermi" : "bose";
}

json pattern_json(const ComponentPattern& p) {
  return {{"counts", parts_json(p.counts())}, {"statistics", statistics_text(p)}};
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidInput(std::string("bad ") + what + " '" + text + "'");
  return value;
}

Statistics parse_stats(const std::string& text) {
  if (text == "bose") return Statistics::Bose;
  if (text == "fermi") return Statistics::Fermi;
  throw InvalidInput("statistics must be bose or fermi");
}

int parse_parity(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw InvalidInput("parity must be + or -");
}

Regime parse_regime(const std::string& text) { return text == "ginf" ? Regime::GInfinite : Regime::GZero; }

LambdaParity parse_lambda_parity(const std::string& text) {
  return text == "odd" ? LambdaParity::Odd : LambdaParity::Even;
}

// Either pattern notation ("(22)_F", "2,2", "31F") or a product of subgroup
// irreps ("[1^2]x[1^2]", "2x1"), padded with [1] factors up to N.
ComponentPattern parse_component(const std::string& tag, int n, Statistics fallback) {
  if (tag.find('x') == std::string::npos) {
    ComponentPattern p = ComponentPattern::parse(tag, fallback);
    if (p.n() != n) throw InvalidInput("pattern " + p.to_string() + " does not hold N=" + std::to_string(n) + " particles");
    return p;
  }
  std::vector<int> blocks;
  std::optional<Statistics> stats;
  std::size_t start = 0;
  while (start <= tag.size()) {
    const std::size_t stop = std::min(tag.find('x', start), tag.size());
    const Partition factor = Partition::parse(tag.substr(start, stop - start));
    std::optional<Statistics> kind;
    if (factor.n() > 1 && factor.rows() == 1) kind = Statistics::Bose;
    else if (factor.n() > 1 && factor.rows() == factor.n()) kind = Statistics::Fermi;
    else if (factor.n() > 1) throw InvalidInput("subgroup factor " + factor.to_string() + " is neither a row nor a column");
    if (kind && stats && *kind != *stats) throw InvalidInput("component tag '" + tag + "' mixes bosonic and fermionic factors");
    if (kind) stats = kind;
    blocks.push_back(factor.n());
    start = stop + 1;
  }
  int total = 0;
  for (int b : blocks) total += b;
  if (total > n) throw InvalidInput("component tag '" + tag + "' holds more than N=" + std::to_string(n) + " particles");
  for (; total < n; ++total) blocks.push_back(1);
  return ComponentPattern::from_counts(blocks, stats.value_or(fallback));
}

// "nu_R,nu_rho,lambda,partition"; the partition may itself be a comma list.
StateLabel parse_state(const std::string& text, int tau) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) throw InvalidInput("state must read nu_R,nu_rho,lambda,partition");
    fields.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  StateLabel s;
  s.hyper = {parse_int(fields[0], "nu_R"), parse_int(fields[1], "nu_rho"), parse_int(fields[2], "lambda")};
  if (s.hyper.nu_R < 0 || s.hyper.nu_rho < 0 || s.hyper.lambda < 0)
    throw InvalidInput("quantum numbers must be non-negative");
  s.p = Partition::parse(text.substr(start));
  s.pi = s.hyper.relative_parity();
  s.tau = tau;
  s.regime = Regime::GZero;
  return s;
}

std::vector<ComponentPattern> selected_patterns(const Options& o) {
  if (o.pattern.empty()) return standard_patterns(o.n);
  return {parse_component(o.pattern, o.n, parse_stats(o.stats))};
}

json base(const char* command, int n) { return {{"schema", kSchema}, {"command", command}, {"n", n}}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyFailure(what);
}

void skipped(std::ostream& err, const std::string& why) { err << "verify: skipped, " << why << "\n"; }

void passed(std::ostream& err, const std::string& what) { err << "verify: ok, " << what << "\n"; }

// ---- verification against the explicit representations ----

void verify_shells(int n, int max_x, std::ostream& err) {
  if (n > kMaxOracleShellN) {
    skipped(err, "explicit shell matrices need N <= " + std::to_string(kMaxOracleShellN));
    return;
  }
  const int top = std::min(max_x, kMaxOracleShellX);
  for (int x = 0; x <= top; ++x) {
    const ShellOracle oracle = explicit_shell_rep(n, x);
    verify_group_relations(oracle.rep, 16);
    require(oracle.reduction == shell_reduction(n, x),
            "shell X=" + std::to_string(x) + " reduction disagrees with the explicit representation");
  }
  passed(err, "shells X=0.." + std::to_string(top) + " match explicit permutation matrices");
  if (top < max_x) skipped(err, "shells above X=" + std::to_string(kMaxOracleShellX));
}

void verify_sectors(int n, std::ostream& err) {
  if (n > kMaxOracleSectorN) {
    skipped(err, "explicit sector matrices need N <= " + std::to_string(kMaxOracleSectorN));
    return;
  }
  const SectorOracle oracle = explicit_sector_rep(n);
  for (LambdaParity parity : {LambdaParity::Even, LambdaParity::Odd}) {
    verify_group_relations(oracle.rep(parity), 16);
    require(oracle.rep(parity).traces.values == sector_rep_characters(n, parity).values,
            "sector characters disagree with explicit traces for " + to_string(parity) + " lambda");
    require(oracle.reduction(parity) == snippet_reduction(n, parity),
            "snippet reduction disagrees with the explicit representation for " + to_string(parity) + " lambda");
  }
  passed(err, "sector representation matches explicit signed permutation matrices");
}

// ---- subcommands ----

Report chartable(const Options& o, std::ostream& err) {
  const bool z2 = o.group == "snz2";
  const CharacterTable t = z2 ? character_table_snz2(o.n) : character_table_sn(o.n);
  Report r;
  r.title = std::string("Character table of ") + (z2 ? "S_N x Z_2" : "S_N") + ", N=" + std::to_string(o.n);
  r.header = {"irrep"};
  json classes = json::array();
  for (std::size_t c = 0; c < t.classes().size(); ++c) {
    r.header.push_back(t.classes()[c].to_string());
    classes.push_back({{"cycle", parts_json(t.classes()[c].cycle.cycles)},
                       {"inverted", t.classes()[c].inverted},
                       {"size", count_json(t.class_sizes()[c])}});
  }
  json rows = json::array();
  for (std::size_t i = 0; i < t.irreps().size(); ++i) {
    std::vector<std::string> row{t.irreps()[i].to_string()};
    json values = json::array();
    for (auto v : t.row(i)) {
      row.push_back(std::to_string(v));
      values.push_back(v);
    }
    r.add_row(std::move(row));
    json entry = {{"irrep", parts_json(t.irreps()[i].shape)}};
    if (z2) entry["parity"] = sign_text(t.irreps()[i].parity);
    entry["values"] = values;
    rows.push_back(entry);
  }
  std::string sizes = "class sizes:";
  for (const auto& s : t.class_sizes()) sizes += " " + s.str();
  r.notes.push_back(sizes);

  r.json = base("chartable", o.n);
  r.json["group"] = to_string(t.kind());
  r.json["classes"] = classes;
  if (z2) {
    json sector = json::object();
    for (LambdaParity parity : {LambdaParity::Even, LambdaParity::Odd}) {
      const ClassFunction f = sector_rep_characters(o.n, parity);
      std::vector<std::string> row{to_string(parity) + " lambda"};
      for (auto v : f.values) row.push_back(std::to_string(v));
      r.add_row(std::move(row));
      sector[to_string(parity)] = f.values;
    }
    r.json["sector_characters"] = sector;
  }
  r.json["rows"] = rows;

  if (o.verify) {
    for (std::size_t a = 0; a < t.irreps().size(); ++a)
      for (std::size_t b = a; b < t.irreps().size(); ++b) {
        Count sum = 0;
        for (std::size_t c = 0; c < t.classes().size(); ++c) sum += t.class_sizes()[c] * t.value(a, c) * t.value(b, c);
        require(sum == (a == b ? t.order() : Count(0)),
                "rows " + t.irreps()[a].to_string() + " and " + t.irreps()[b].to_string() + " are not orthonormal");
      }
    passed(err, "row orthogonality");
    if (z2) verify_sectors(o.n, err);
  }
  return r;
}

void irrep_columns(Report& r, json& doc, const MultiplicityVector& m) {
  json irreps = json::array();
  for (const auto& label : m.irreps) {
    r.header.push_back(label.to_string());
    irreps.push_back(parts_json(label.shape));
  }
  doc["irreps"] = irreps;
}

Report reduce_shell(const Options& o, std::ostream& err) {
  const int top = *o.max_energy;
  if (top < 0) throw InvalidInput("--max-energy must be non-negative");
  Report r;
  r.title = "S_N content of the oscillator shells, N=" + std::to_string(o.n);
  r.header = {"X", "E"};
  r.show = {Show::Both, Show::TextOnly};
  r.json = base("reduce-shell", o.n);
  irrep_columns(r, r.json, shell_reduction(o.n, 0));
  r.header.push_back("dim");
  json rows = json::array();
  for (int x = 0; x <= top; ++x) {
    const MultiplicityVector m = shell_reduction(o.n, x);
    const Energy e{2L * x + o.n};
    std::vector<std::string> row{std::to_string(x), energy_text(e)};
    json counts = json::array();
    for (const auto& c : m.counts) {
      row.push_back(c.str());
      counts.push_back(count_json(c));
    }
    row.push_back(m.dimension().str());
    r.add_row(std::move(row));
    rows.push_back({{"X", x}, {"energy", e.to_string()}, {"counts", counts}, {"dimension", count_json(m.dimension())}});
    if (o.verify) require(m.dimension() == shell_dimension(o.n, x), "shell X=" + std::to_string(x) + " has the wrong dimension");
  }
  r.json["rows"] = rows;
  if (o.verify) verify_shells(o.n, top, err);
  return r;
}

Report reduce_lambda(const Options& o, std::ostream& err) {
  const int top = *o.max_lambda;
  if (top < 0) throw InvalidInput("--max-lambda must be non-negative");
  Report r;
  r.title = "S_N content of each lambda subspace, N=" + std::to_string(o.n);
  r.header = {"lambda"};
  r.json = base("reduce-lambda", o.n);
  irrep_columns(r, r.json, lambda_reduction(o.n, 0));
  r.header.push_back("eps");
  r.show.assign(r.header.size(), Show::Both);
  r.show.back() = Show::TextOnly;
  json rows = json::array();
  for (int lambda = 0; lambda <= top; ++lambda) {
    const MultiplicityVector m = lambda_reduction(o.n, lambda);
    std::vector<std::string> row{std::to_string(lambda)};
    json counts = json::array();
    for (const auto& c : m.counts) {
      row.push_back(c.str());
      counts.push_back(count_json(c));
    }
    row.push_back(m.dimension().str());
    r.add_row(std::move(row));
    rows.push_back({{"lambda", lambda}, {"counts", counts}, {"dimension", count_json(m.dimension())}});
    if (o.verify && o.n >= 3)
      require(m.dimension() == hyperangular_dimension(o.n, lambda),
              "lambda=" + std::to_string(lambda) + " has the wrong dimension");
  }
  r.json["rows"] = rows;
  if (o.verify) verify_shells(o.n, top, err);
  return r;
}

Report reduce_snippet(const Options& o, std::ostream& err) {
  const MultiplicityVector even = snippet_reduction(o.n, LambdaParity::Even);
  const MultiplicityVector odd = snippet_reduction(o.n, LambdaParity::Odd);
  Report r;
  r.title = "S_N x Z_2 content of the " + factorial(o.n).str() + " sector states, N=" + std::to_string(o.n);
  r.header = {"irrep", "even", "odd"};
  r.json = base("reduce-snippet", o.n);
  json rows = json::array();
  for (std::size_t i = 0; i < even.size(); ++i) {
    r.add_row({even.irreps[i].to_string(), even.counts[i].str(), odd.counts[i].str()});
    rows.push_back({{"irrep", parts_json(even.irreps[i].shape)},
                    {"parity", sign_text(even.irreps[i].parity)},
                    {"even", count_json(even.counts[i])},
                    {"odd", count_json(odd.counts[i])}});
  }
  r.json["rows"] = rows;
  if (o.verify) {
    require(even.dimension() == factorial(o.n) && odd.dimension() == factorial(o.n), "snippet reduction misses states");
    verify_sectors(o.n, err);
  }
  return r;
}

Report branch(const Options& o, std::ostream& err) {
  const auto patterns = selected_patterns(o);
  const auto irreps = partitions_of(o.n);
  Report r;
  r.title = "Young-subgroup content of S_N irreps, N=" + std::to_string(o.n);
  r.header = {"components", "pattern"};
  r.json = base("branch", o.n);
  irrep_columns(r, r.json, MultiplicityVector::zeros_sn(o.n));
  r.header.push_back("dim");
  r.show.assign(r.header.size(), Show::Both);
  r.show.back() = Show::TextOnly;
  json rows = json::array();
  for (const auto& pattern : patterns) {
    std::vector<std::string> row{std::to_string(pattern.counts().rows()), pattern.to_string()};
    json counts = json::array();
    Count dim = 0;
    for (const auto& p : irreps) {
      const Count m = branch_multiplicity(p, pattern);
      if (o.verify && o.n <= kMaxCharacterN)
        require(m == branch_multiplicity_by_characters(p, pattern),
                "Kostka and character routes disagree for " + p.to_string() + " and " + pattern.to_string());
      dim += m * irrep_dimension(p);
      row.push_back(m.str());
      counts.push_back(count_json(m));
    }
    row.push_back(dim.str());
    r.add_row(std::move(row));
    rows.push_back({{"components", pattern.counts().rows()}, {"pattern", pattern_json(pattern)}, {"counts", counts}});
  }
  r.json["rows"] = rows;
  if (o.verify) {
    if (o.n <= kMaxCharacterN) passed(err, "Young's rule agrees with the character inner product");
    else skipped(err, "character tables stop at N=" + std::to_string(kMaxCharacterN));
  }
  return r;
}

Report degeneracy_table(const Options& o, std::ostream& err) {
  if (o.max_lambda.has_value() == o.max_energy.has_value())
    throw InvalidInput("give exactly one of --max-lambda (per lambda) or --max-energy (whole shells)");
  const bool shells = o.max_energy.has_value();
  const int top = shells ? *o.max_energy : *o.max_lambda;
  if (top < 0) throw InvalidInput("table range must be non-negative");
  const auto patterns = selected_patterns(o);
  Report r;
  r.title = std::string("Symmetrized states per ") + (shells ? "shell X" : "lambda subspace") + ", N=" + std::to_string(o.n);
  r.header = {"pattern"};
  r.json = base("degeneracy-table", o.n);
  json axis = json::array();
  for (int v = 0; v <= top; ++v) {
    r.header.push_back(std::to_string(v));
    axis.push_back(v);
  }
  r.json[shells ? "X" : "lambda"] = axis;
  json rows = json::array();
  for (const auto& pattern : patterns) {
    std::vector<std::string> row{pattern.to_string()};
    json values = json::array();
    for (int v = 0; v <= top; ++v) {
      const Count d = shells ? cumulative_shell_degeneracy(o.n, v, pattern) : component_degeneracy(o.n, v, pattern);
      if (o.verify && pattern.distinguishable()) {
        if (shells) require(d == shell_dimension(o.n, v), "distinguishable count differs from the shell dimension");
        else if (o.n >= 3) require(d == hyperangular_dimension(o.n, v), "distinguishable count differs from eps");
      }
      row.push_back(d.str());
      values.push_back(count_json(d));
    }
    r.add_row(std::move(row));
    rows.push_back({{"pattern", pattern_json(pattern)}, {"values", values}});
  }
  r.json["rows"] = rows;
  if (o.verify) verify_shells(o.n, top, err);
  return r;
}

Report spin_decompose(const Options& o, std::ostream& err) {
  const MultiplicityVector m = spin_decomposition(o.n, o.k);
  Report r;
  r.title = "S_N content of " + std::to_string(o.k) + "-component spin space, N=" + std::to_string(o.n);
  r.header = {"irrep", "multiplicity"};
  r.json = base("spin-decompose", o.n);
  r.json["k"] = o.k;
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    r.add_row({m.irreps[i].to_string(), m.counts[i].str()});
    rows.push_back({{"irrep", parts_json(m.irreps[i].shape)}, {"multiplicity", count_json(m.counts[i])}});
  }
  r.json["rows"] = rows;
  if (o.verify) {
    Count total = 1;
    for (int i = 0; i < o.n; ++i) total *= o.k;
    require(m.dimension() == total, "spin multiplicities do not fill k^N states");
    passed(err, "dimensions sum to k^N");
  }
  return r;
}

GNLabel requested_irrep(const Options& o) {
  if (o.irrep.empty()) throw InvalidInput("--irrep is required");
  return {o.nu_r, parse_parity(o.parity), Partition::parse(o.irrep)};
}

void verify_levels(const Options& o, int max_x, bool sectors_needed, std::ostream& err) {
  verify_shells(o.n, max_x, err);
  if (sectors_needed) verify_sectors(o.n, err);
}

Report spectrum(const Options& o, std::ostream& err) {
  const GNLabel mu = requested_irrep(o);
  const Regime regime = parse_regime(o.regime);
  const int top = *o.max_energy;
  const auto entries = spectrum_by_irrep(o.n, regime, mu, top);
  Report r;
  r.title = "Levels of " + mu.p.to_string() + sign_text(mu.pi) + " with nu_R=" + std::to_string(mu.nu_R) + " at " +
            (regime == Regime::GZero ? "g = 0" : "g -> infinity") + ", N=" + std::to_string(o.n);
  r.header = {"E", "label", "nu_R", "nu_rho", "lambda", "multiplicity", "note", "convention_ordered"};
  r.show = {Show::TextOnly, Show::TextOnly, Show::CsvOnly, Show::CsvOnly, Show::CsvOnly,
            Show::Both,     Show::TextOnly, Show::CsvOnly};
  r.json = base("spectrum", o.n);
  r.json["regime"] = to_string(regime);
  r.json["irrep"] = parts_json(mu.p);
  r.json["parity"] = sign_text(mu.pi);
  r.json["nu_R"] = mu.nu_R;
  json rows = json::array();
  for (const auto& e : entries) {
    r.add_row({energy_text(e.energy), e.label.to_string(), std::to_string(e.label.nu_R),
               std::to_string(e.label.nu_rho), std::to_string(e.label.lambda), e.multiplicity.str(),
               e.convention_ordered ? "convention-ordered" : "", e.convention_ordered ? "1" : "0"});
    rows.push_back({{"energy", e.energy.to_string()},
                    {"label", label_json(e.label)},
                    {"multiplicity", count_json(e.multiplicity)},
                    {"convention_ordered", e.convention_ordered}});
  }
  r.json["rows"] = rows;
  if (o.verify) verify_levels(o, top, regime == Regime::GInfinite, err);
  return r;
}

std::string map_line(const MapResult& m, int n) {
  std::string line = m.source.hyper.to_string() + " " + m.source.p.to_string() + sign_text(m.source.pi) +
                     " tau=" + std::to_string(m.source.tau);
  if (m.source.component) line += " " + m.source.component->subgroup_irrep();
  line += " (" + energy_text(m.source.hyper.energy(n)) + ") -> ";
  line += m.target_label.to_string() + " " + m.p.to_string() + sign_text(m.pi) + " dim=" + m.target_dimension.str() +
          (m.resolved ? " resolved" : " unresolved");
  line += " (" + energy_text(m.target_label.energy(n)) + ", tau=" + std::to_string(m.target_tau) + ")";
  if (m.convention_ordered) line += " convention-ordered";
  return line;
}

Report map(const Options& o, std::ostream& err) {
  std::vector<StateLabel> sources;
  if (!o.state.empty()) {
    StateLabel s = parse_state(o.state, o.tau);
    if (!o.component.empty()) s.component = parse_component(o.component, o.n, parse_stats(o.stats));
    sources.push_back(std::move(s));
  } else if (!o.pattern.empty() || !o.component.empty()) {
    const ComponentPattern pattern =
        parse_component(o.pattern.empty() ? o.component : o.pattern, o.n, parse_stats(o.stats));
    sources = ground_state(o.n, pattern, Regime::GZero);
  } else {
    throw InvalidInput("map needs --state, or --pattern/--component to map the g = 0 ground states");
  }

  Report r;
  r.header = {"nu_R", "nu_rho", "lambda", "irrep", "parity", "tau", "target_nu_R", "target_nu_rho", "target_lambda",
              "target_tau", "dimension", "resolved", "convention_ordered"};
  r.json = base("map", o.n);
  json rows = json::array();
  int max_x = 0;
  for (const auto& s : sources) {
    const MapResult m = adiabatic_map(o.n, s, o.search_ceiling);
    if (o.verify)
      require(m.p == s.p && m.pi == s.pi && m.target_label.nu_R == s.hyper.nu_R,
              "map changed the irrep label of " + s.to_string());
    max_x = std::max(max_x, m.target_label.excitation());
    r.text_lines.push_back(map_line(m, o.n));
    r.add_row({std::to_string(s.hyper.nu_R), std::to_string(s.hyper.nu_rho), std::to_string(s.hyper.lambda),
               s.p.to_string(), sign_text(s.pi), std::to_string(s.tau), std::to_string(m.target_label.nu_R),
               std::to_string(m.target_label.nu_rho), std::to_string(m.target_label.lambda),
               std::to_string(m.target_tau), m.target_dimension.str(), m.resolved ? "1" : "0",
               m.convention_ordered ? "1" : "0"});
    json source = {{"label", label_json(s.hyper)}, {"irrep", parts_json(s.p)}, {"parity", sign_text(s.pi)}, {"tau", s.tau}};
    if (s.component) source["component"] = pattern_json(*s.component);
    source["energy"] = s.hyper.energy(o.n).to_string();
    rows.push_back({{"source", source},
                    {"target",
                     {{"label", label_json(m.target_label)},
                      {"tau", m.target_tau},
                      {"dimension", count_json(m.target_dimension)},
                      {"energy", m.target_label.energy(o.n).to_string()}}},
                    {"resolved", m.resolved},
                    {"convention_ordered", m.convention_ordered}});
  }
  r.json["rows"] = rows;
  if (o.verify) verify_levels(o, max_x, true, err);
  return r;
}

Report sector_basis(const Options& o, std::ostream& err) {
  const GNLabel mu = requested_irrep(o);
  const LambdaParity parity = parse_lambda_parity(o.lambda_parity);
  std::vector<std::string> names;
  std::vector<SectorVector> vectors;
  json vector_json = json::array();
  std::optional<ComponentPattern> pattern;
  if (!o.component.empty()) {
    pattern = parse_component(o.component, o.n, parse_stats(o.stats));
    vectors = component_projection_basis(o.n, parity, mu.p, mu.pi, *pattern);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      names.push_back("v" + std::to_string(i + 1));
      vector_json.push_back(json::object());
    }
  } else {
    for (const auto& b : snippet_projection_basis(o.n, parity, mu.p, mu.pi)) {
      names.push_back("tau" + std::to_string(b.label.tau) + ".j" + std::to_string(b.label.j));
      vectors.push_back(b.vector);
      vector_json.push_back({{"tau", b.label.tau}, {"j", b.label.j}});
    }
  }

  const auto all = sectors(o.n);
  Report r;
  r.title = "Sector amplitudes of " + mu.p.to_string() + sign_text(mu.pi) + (pattern ? " carrying " + pattern->subgroup_irrep() : "") +
            ", " + to_string(parity) + " lambda, N=" + std::to_string(o.n);
  r.header = {"sector"};
  for (const auto& name : names) r.header.push_back(name);
  for (std::size_t q = 0; q < all.size(); ++q) {
    std::vector<std::string> row{all[q].to_string()};
    for (const auto& v : vectors) row.push_back(v.amplitudes[q].str());
    r.add_row(std::move(row));
  }
  std::vector<std::string> norms{"norm2"};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    norms.push_back(vectors[i].squared_norm.str());
    json amplitudes = json::array();
    for (const auto& a : vectors[i].amplitudes) amplitudes.push_back(rational_json(a));
    vector_json[i]["squared_norm"] = rational_json(vectors[i].squared_norm);
    vector_json[i]["amplitudes"] = amplitudes;
  }
  r.add_row(std::move(norms));
  if (vectors.empty()) r.notes.push_back("no such states in this subspace");

  r.json = base("sector-basis", o.n);
  r.json["irrep"] = parts_json(mu.p);
  r.json["parity"] = sign_text(mu.pi);
  r.json["lambda_parity"] = to_string(parity);
  if (pattern) r.json["component"] = pattern_json(*pattern);
  json sector_names = json::array();
  for (const auto& s : all) sector_names.push_back(s.to_string());
  r.json["sectors"] = sector_names;
  r.json["rows"] = vector_json;

  if (o.verify) {
    for (std::size_t a = 0; a < vectors.size(); ++a)
      for (std::size_t b = a + 1; b < vectors.size(); ++b)
        require(vectors[a].dot(vectors[b]) == 0, "basis vectors " + names[a] + " and " + names[b] + " overlap");
    const Count copies = snippet_reduction(o.n, parity).at(mu.p, mu.pi);
    const Count expected = copies * (pattern ? branch_multiplicity(mu.p, *pattern) : irrep_dimension(mu.p));
    require(Count(vectors.size()) == expected, "basis size differs from the character count");
    passed(err, "basis is orthogonal with " + expected.str() + " vectors");
    if (o.n <= kMaxOracleProjectorN) {
      const SectorOracle oracle = explicit_sector_rep(o.n);
      const auto rank = projector_rank(oracle.rep(parity), {mu.p, mu.pi});
      require(Count(rank) == copies * irrep_dimension(mu.p), "explicit projector rank differs");
      passed(err, "explicit projector rank " + std::to_string(rank));
    } else {
      skipped(err, "explicit projectors need N <= " + std::to_string(kMaxOracleProjectorN));
    }
  }
  return r;
}

Report ground_state_report(const Options& o, std::ostream& err) {
  if (o.pattern.empty() && o.component.empty()) throw InvalidInput("ground-state needs --pattern");
  const ComponentPattern pattern =
      parse_component(o.pattern.empty() ? o.component : o.pattern, o.n, parse_stats(o.stats));
  const Regime regime = parse_regime(o.regime);
  const auto states = ground_state(o.n, pattern, regime, o.search_ceiling);
  Report r;
  r.title = "Lowest " + pattern.to_string() + " levels at " + (regime == Regime::GZero ? "g = 0" : "g -> infinity") +
            ", N=" + std::to_string(o.n);
  r.header = {"E", "state", "nu_R", "nu_rho", "lambda", "irrep", "parity", "tau"};
  r.show = {Show::TextOnly, Show::TextOnly, Show::CsvOnly, Show::CsvOnly,
            Show::CsvOnly,  Show::CsvOnly,  Show::CsvOnly, Show::CsvOnly};
  r.json = base("ground-state", o.n);
  r.json["pattern"] = pattern_json(pattern);
  r.json["regime"] = to_string(regime);
  json rows = json::array();
  for (const auto& s : states) {
    r.add_row({energy_text(s.hyper.energy(o.n)), s.to_string(), std::to_string(s.hyper.nu_R),
               std::to_string(s.hyper.nu_rho), std::to_string(s.hyper.lambda), s.p.to_string(), sign_text(s.pi),
               std::to_string(s.tau)});
    rows.push_back({{"energy", s.hyper.energy(o.n).to_string()},
                    {"label", label_json(s.hyper)},
                    {"irrep", parts_json(s.p)},
                    {"parity", sign_text(s.pi)},
                    {"tau", s.tau}});
  }
  r.json["rows"] = rows;
  if (o.verify && !states.empty()) verify_levels(o, states.front().hyper.excitation(), regime == Regime::GInfinite, err);
  return r;
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return Format::Text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symmetry tables for N particles in a one-dimensional harmonic trap", "symtrap"};
  app.require_subcommand(1);
  std::function<Report(const Options&, std::ostream&)> action;

  auto command = [&](const char* name, const char* help, Report (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "particle number N")->required();
    sub->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output", o.output, "write to this file instead of standard output");
    sub->add_flag("--verify", o.verify, "cross-check against explicit matrices where the size guards allow");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto pattern_options = [&](CLI::App* sub) {
    sub->add_option("--pattern", o.pattern, "component occupations, e.g. 2,2 or (22)_F");
    sub->add_option("--stats", o.stats, "statistics inside each component")->check(CLI::IsMember({"bose", "fermi"}));
  };
  auto irrep_options = [&](CLI::App* sub) {
    sub->add_option("--irrep", o.irrep, "S_N irrep, e.g. 21 or [2^2]");
    sub->add_option("--parity", o.parity, "relative parity, + or -");
  };

  command("chartable", "character table of S_N or S_N x Z_2", chartable)
      ->add_option("--group", o.group, "sn or snz2")
      ->check(CLI::IsMember({"sn", "snz2"}));
  command("reduce-shell", "S_N content of the shells X = 0..max", reduce_shell)
      ->add_option("--max-energy", o.max_energy, "highest excitation X above the ground shell")
      ->required();
  command("reduce-lambda", "S_N content of each lambda subspace", reduce_lambda)
      ->add_option("--max-lambda", o.max_lambda, "highest lambda")
      ->required();
  command("reduce-snippet", "S_N x Z_2 content of the hard-core sector states", reduce_snippet);
  pattern_options(command("branch", "Young-subgroup content of each S_N irrep", branch));
  {
    CLI::App* sub = command("degeneracy-table", "symmetrized states per lambda or per shell", degeneracy_table);
    sub->add_option("--max-lambda", o.max_lambda, "tabulate lambda = 0..max");
    sub->add_option("--max-energy", o.max_energy, "tabulate whole shells X = 0..max");
    pattern_options(sub);
  }
  command("spin-decompose", "S_N content of the spin space of k components", spin_decompose)
      ->add_option("--k", o.k, "number of spin components");
  {
    CLI::App* sub = command("spectrum", "levels carrying one G_N irrep", spectrum);
    irrep_options(sub);
    sub->add_option("--nu-r", o.nu_r, "center-of-mass quantum number");
    sub->add_option("--regime", o.regime, "g0 or ginf")->check(CLI::IsMember({"g0", "ginf"}));
    sub->add_option("--max-energy", o.max_energy, "highest excitation X above the ground shell")->required();
  }
  {
    CLI::App* sub = command("map", "follow g = 0 states to g -> infinity", map);
    sub->add_option("--state", o.state, "nu_R,nu_rho,lambda,partition, e.g. 0,0,1,21");
    sub->add_option("--tau", o.tau, "copy index of the source irrep");
    sub->add_option("--component", o.component, "subgroup irrep, e.g. 1x1, [1^2]x[1^2] or (22)_F");
    sub->add_option("--search-ceiling", o.search_ceiling, "search this many hbar*omega above the source");
    pattern_options(sub);
  }
  {
    CLI::App* sub = command("sector-basis", "projected sector-basis vectors at g -> infinity", sector_basis);
    irrep_options(sub);
    sub->add_option("--lambda-parity", o.lambda_parity, "parity of the seed's lambda")
        ->check(CLI::IsMember({"even", "odd"}));
    sub->add_option("--component", o.component, "restrict to one subgroup irrep");
    sub->add_option("--stats", o.stats, "statistics for a bare --component")->check(CLI::IsMember({"bose", "fermi"}));
  }
  {
    CLI::App* sub = command("ground-state", "lowest levels admitting a component pattern", ground_state_report);
    pattern_options(sub);
    sub->add_option("--component", o.component, "subgroup irrep instead of --pattern");
    sub->add_option("--regime", o.regime, "g0 or ginf")->check(CLI::IsMember({"g0", "ginf"}));
    sub->add_option("--search-ceiling", o.search_ceiling, "extra excitations to search");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Report report = action(o, err);
    const Format format = parse_format(o.format);
    if (o.output.empty()) {
      render(report, format, out);
    } else {
      std::ofstream file(o.output);
      if (!file) throw InvalidInput("cannot write " + o.output);
      render(report, format, file);
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchExhausted& e) {
    err << "no result: " << e.what() << "\n";
    return kExitNoResult;
  } catch (const Error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}

}  // namespace symtrap::cli
