#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtrap/branching.hpp"
#include "symtrap/count.hpp"
#include "symtrap/oscillator.hpp"
#include "symtrap/partition.hpp"

namespace symtrap {

enum class Regime { GZero, GInfinite };

std::string to_string(Regime regime);

/// Irrep of G_N = S_N x Z_2 x U(1): center-of-mass excitation, relative parity, S_N irrep.
struct GNLabel {
  int nu_R = 0;
  int pi = 1;
  Partition p;

  /// Total parity Pi = pi (-1)^{nu_R}.
  int total_parity() const { return (nu_R % 2 == 0) ? pi : -pi; }
  std::string to_string() const;
  friend bool operator==(const GNLabel&, const GNLabel&) = default;
};

struct StateLabel {
  HypercylindricalLabel hyper;
  Partition p;
  int pi = 1;  // at g = 0 this is always (-1)^lambda
  int tau = 0;
  std::optional<ComponentPattern> component;
  Regime regime = Regime::GZero;

  GNLabel gn_label() const { return {hyper.nu_R, pi, p}; }
  /// "|0,0,2;[2^2]+,0;[1^2]x[1^2]>".
  std::string to_string() const;
};

struct SpectrumEntry {
  Energy energy;
  HypercylindricalLabel label;
  Count multiplicity;
  // Another level of the same irrep has the same energy; their relative
  // order is the (lambda, nu_rho) convention, not physics.
  bool convention_ordered = false;
};

struct MapResult {
  StateLabel source;
  HypercylindricalLabel target_label;
  Partition p;
  int pi = 1;
  int target_tau = 0;  // rank of the image inside the target level
  Count target_dimension;
  bool resolved = false;
  bool convention_ordered = false;
};

/// Levels carrying mu with excitation X <= max_excitation, ascending in energy,
/// ties broken by lambda then nu_rho. Multiplicity counts copies of [p]^pi.
std::vector<SpectrumEntry> spectrum_by_irrep(int n, Regime regime, const GNLabel& mu, int max_excitation);

/// Default headroom, in hbar*omega above the source, for the hard-core image search.
int default_search_ceiling(int n);

/// Image of a g = 0 state under adiabatic tuning to hard-core repulsion:
/// the level of the same G_N irrep at the same cumulative rank. Throws
/// SearchExhausted when no image exists below source energy + ceiling.
MapResult adiabatic_map(int n, const StateLabel& source, std::optional<int> search_ceiling = std::nullopt);

/// Lowest-energy labels that admit the pattern's symmetry, all ties included.
/// Searches excitations up to N(N-1)/2 + `search_ceiling` (default 4N).
std::vector<StateLabel> ground_state(int n, const ComponentPattern& pattern, Regime regime,
                                     std::optional<int> search_ceiling = std::nullopt);

}  // namespace symtrap
