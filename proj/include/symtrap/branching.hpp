#pragma once

#include <string>
#include <string_view>

#include "symtrap/count.hpp"
#include "symtrap/multiplicity.hpp"
#include "symtrap/partition.hpp"

namespace symtrap {

enum class Statistics { Bose, Fermi };

/// Occupation of distinguishable internal components, e.g. (22)_F for two
/// spin-up and two spin-down fermions. Counts are kept in non-increasing
/// order, so (13)_F and (31)_F are the same pattern.
class ComponentPattern {
 public:
  ComponentPattern(Partition counts, Statistics statistics);
  /// Sorts `counts` before use; throws InvalidInput on non-positive entries.
  static ComponentPattern from_counts(std::vector<int> counts, Statistics statistics);

  /// "(22)_F", "(211)_B", "(1111)", or with a suffixed statistics letter
  /// ("22F", "2,2,F"). Without a suffix `fallback` is used.
  static ComponentPattern parse(std::string_view text, Statistics fallback = Statistics::Fermi);

  const Partition& counts() const { return counts_; }
  Statistics statistics() const { return statistics_; }
  int n() const { return counts_.n(); }
  /// All counts equal to one: Bose and Fermi coincide.
  bool distinguishable() const { return counts_.rows() == counts_.n(); }

  /// "(22)_F"; distinguishable patterns print without a subscript.
  std::string to_string() const;
  /// Subgroup irrep the pattern selects, e.g. "[1^2]x[1^2]" or "[3]x[1]".
  std::string subgroup_irrep() const;

  friend bool operator==(const ComponentPattern& a, const ComponentPattern& b);

 private:
  Partition counts_;
  Statistics statistics_;
};

/// Multiplicity of the pattern's Young-subgroup irrep in [p] restricted to
/// S_{N1} x S_{N2} x ...  Production path: Young's rule via Kostka numbers.
/// Debug builds also evaluate the character inner product and throw
/// ConsistencyFailure if the two disagree.
Count branch_multiplicity(const Partition& p, const ComponentPattern& pattern);

/// The same multiplicity from the character inner product over the subgroup.
Count branch_multiplicity_by_characters(const Partition& p, const ComponentPattern& pattern);

/// Multi-component states with the pattern's symmetry in one lambda subspace.
Count component_degeneracy(int n, int lambda, const ComponentPattern& pattern);

/// Multi-component states with the pattern's symmetry in the whole shell X.
Count cumulative_shell_degeneracy(int n, int x, const ComponentPattern& pattern);

/// S_N content of (C^k)^{tensor N}: multiplicity of [p] is the number of
/// semistandard tableaux of shape p with entries 1..k.
MultiplicityVector spin_decomposition(int n, int k);

/// Canonical component patterns of N particles in table order: each
/// partition as Bose, then each as Fermi, then the distinguishable one last.
std::vector<ComponentPattern> standard_patterns(int n);

}  // namespace symtrap
