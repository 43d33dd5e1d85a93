#include "symtrap/mapping.hpp"

#include "symtrap/errors.hpp"
#include "symtrap/snippet.hpp"

namespace symtrap {

std::string to_string(Regime regime) { return regime == Regime::GZero ? "g0" : "ginf"; }

std::string GNLabel::to_string() const {
  return "{" + std::to_string(nu_R) + "," + (pi > 0 ? "+" : "-") + "," + p.to_string() + "}";
}

std::string StateLabel::to_string() const {
  std::string out = "|" + hyper.to_string() + ";" + p.to_string() + (pi > 0 ? "+" : "-") + "," + std::to_string(tau);
  if (component) out += ";" + component->subgroup_irrep();
  return out + ">";
}

namespace {

void check_mu(int n, const GNLabel& mu) {
  if (mu.p.n() != n) throw InvalidInput("irrep " + mu.p.to_string() + " is not a partition of N=" + std::to_string(n));
  if (mu.pi != 1 && mu.pi != -1) throw InvalidInput("relative parity must be +1 or -1");
  if (mu.nu_R < 0) throw InvalidInput("nu_R must be non-negative");
}

void mark_ties(std::vector<SpectrumEntry>& entries) {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].energy == entries[i + 1].energy)
      entries[i].convention_ordered = entries[i + 1].convention_ordered = true;
}

const Partition& antisymmetric_of(int n) {
  static thread_local std::vector<Partition> cache;
  for (const auto& p : cache)
    if (p.n() == n) return p;
  cache.emplace_back(std::vector<int>(static_cast<std::size_t>(n), 1));
  return cache.back();
}

}  // namespace

std::vector<SpectrumEntry> spectrum_by_irrep(int n, Regime regime, const GNLabel& mu, int max_excitation) {
  check_mu(n, mu);
  if (max_excitation < 0) throw InvalidInput("maximum energy must be non-negative");
  std::vector<SpectrumEntry> out;
  for (int x = mu.nu_R; x <= max_excitation; ++x) {
    for (const auto& label : labels_in_shell(x)) {
      if (label.nu_R != mu.nu_R) continue;
      Count multiplicity = 0;
      if (regime == Regime::GZero) {
        if (label.relative_parity() != mu.pi) continue;
        multiplicity = lambda_reduction(n, label.lambda).at(mu.p);
      } else {
        const Count seeds = lambda_reduction(n, label.lambda).at(antisymmetric_of(n));
        if (seeds == 0) continue;
        multiplicity = seeds * snippet_reduction(n, parity_of_lambda(label.lambda)).at(mu.p, mu.pi);
      }
      if (multiplicity > 0) out.push_back({label.energy(n), label, multiplicity, false});
    }
  }
  mark_ties(out);
  return out;
}

int default_search_ceiling(int n) { return 4 * n; }

MapResult adiabatic_map(int n, const StateLabel& source, std::optional<int> search_ceiling) {
  if (source.regime != Regime::GZero) throw InvalidInput("adiabatic maps start from a g = 0 state");
  if (source.pi != source.hyper.relative_parity())
    throw InvalidInput("a g = 0 state at lambda=" + std::to_string(source.hyper.lambda) + " has relative parity " +
                       (source.hyper.relative_parity() > 0 ? "+" : "-"));
  if (source.tau < 0) throw InvalidInput("tau must be non-negative");
  const GNLabel mu = source.gn_label();
  check_mu(n, mu);
  if (source.component && branch_multiplicity(source.p, *source.component) == 0)
    throw InvalidInput(source.p.to_string() + " contains no " + source.component->subgroup_irrep() + " component");

  const int source_x = source.hyper.excitation();
  const auto below = spectrum_by_irrep(n, Regime::GZero, mu, source_x);
  Count rank = 0;
  bool found = false;
  bool convention = false;
  for (const auto& entry : below) {
    if (entry.label == source.hyper) {
      if (Count(source.tau) >= entry.multiplicity)
        throw InvalidInput("tau=" + std::to_string(source.tau) + " but " + source.p.to_string() + " occurs " +
                           entry.multiplicity.str() + " time(s) at " + source.hyper.to_string());
      rank += source.tau;
      convention = entry.convention_ordered;
      found = true;
      break;
    }
    rank += entry.multiplicity;
  }
  if (!found)
    throw InvalidInput(source.p.to_string() + " does not occur at " + source.hyper.to_string() + " for N=" +
                       std::to_string(n));

  const int ceiling = source_x + search_ceiling.value_or(default_search_ceiling(n));
  const auto images = spectrum_by_irrep(n, Regime::GInfinite, mu, ceiling);
  Count passed = 0;
  for (const auto& entry : images) {
    if (rank < passed + entry.multiplicity) {
      MapResult result;
      result.source = source;
      result.target_label = entry.label;
      result.p = source.p;
      result.pi = source.pi;
      result.target_tau = static_cast<int>(to_int64(rank - passed));
      result.target_dimension = entry.multiplicity;
      result.resolved = entry.multiplicity == 1;
      result.convention_ordered = convention || entry.convention_ordered;
      return result;
    }
    passed += entry.multiplicity;
  }
  throw SearchExhausted("no hard-core level of " + mu.to_string() + " at rank " + rank.str() +
                        " below excitation " + std::to_string(ceiling));
}

std::vector<StateLabel> ground_state(int n, const ComponentPattern& pattern, Regime regime,
                                     std::optional<int> search_ceiling) {
  if (pattern.n() != n) throw InvalidInput("pattern " + pattern.to_string() + " is not for N=" + std::to_string(n));
  if (n < 3) throw InvalidInput("level enumeration needs N >= 3");
  const int ceiling = n * (n - 1) / 2 + search_ceiling.value_or(default_search_ceiling(n));
  for (int x = 0; x <= ceiling; ++x) {
    std::vector<StateLabel> found;
    for (const auto& label : labels_in_shell(x)) {
      if (regime == Regime::GZero) {
        const MultiplicityVector reduction = lambda_reduction(n, label.lambda);
        for (std::size_t i = 0; i < reduction.size(); ++i) {
          if (reduction.counts[i] == 0 || branch_multiplicity(reduction.irreps[i].shape, pattern) == 0) continue;
          for (int tau = 0; tau < to_int64(reduction.counts[i]); ++tau)
            found.push_back({label, reduction.irreps[i].shape, label.relative_parity(), tau, pattern, regime});
        }
      } else {
        const Count seeds = lambda_reduction(n, label.lambda).at(antisymmetric_of(n));
        if (seeds == 0) continue;
        const MultiplicityVector reduction = snippet_reduction(n, parity_of_lambda(label.lambda));
        for (std::size_t i = 0; i < reduction.size(); ++i) {
          if (reduction.counts[i] == 0 || branch_multiplicity(reduction.irreps[i].shape, pattern) == 0) continue;
          const auto copies = to_int64(reduction.counts[i] * seeds);
          for (int tau = 0; tau < copies; ++tau)
            found.push_back({label, reduction.irreps[i].shape, reduction.irreps[i].parity, tau, pattern, regime});
        }
      }
    }
    if (!found.empty()) return found;
  }
  throw SearchExhausted("no level admits " + pattern.to_string() + " below excitation " + std::to_string(ceiling));
}

}  // namespace symtrap
