#pragma once

#include <string>
#include <vector>

#include "symtrap/count.hpp"
#include "symtrap/multiplicity.hpp"

namespace symtrap {

/// Energy in units of hbar*omega, held as twice its value so that the N/2
/// zero-point offset stays integral.
struct Energy {
  long twice = 0;

  /// "k/2" with k = 2E.
  std::string to_string() const { return std::to_string(twice) + "/2"; }
  friend bool operator==(const Energy&, const Energy&) = default;
  friend auto operator<=>(const Energy&, const Energy&) = default;
};

/// Center-of-mass, hyperradial and hyperangular quantum numbers.
struct HypercylindricalLabel {
  int nu_R = 0;
  int nu_rho = 0;
  int lambda = 0;

  /// X = nu_R + 2 nu_rho + lambda, the excitation above the ground shell.
  int excitation() const { return nu_R + 2 * nu_rho + lambda; }
  Energy energy(int n) const { return Energy{2L * excitation() + n}; }
  /// (-1)^lambda.
  int relative_parity() const { return lambda % 2 == 0 ? 1 : -1; }
  /// "nu_R,nu_rho,lambda".
  std::string to_string() const;

  friend bool operator==(const HypercylindricalLabel&, const HypercylindricalLabel&) = default;
  friend auto operator<=>(const HypercylindricalLabel&, const HypercylindricalLabel&) = default;
};

/// d^X_N = (X+N-1)! / (X! (N-1)!).
Count shell_dimension(int n, int x);

/// Dimension of one grand-angular-momentum subspace. Needs N >= 3.
Count hyperangular_dimension(int n, int lambda);

/// S_N reduction of the whole shell X, one Kostka sum per way of spreading X
/// over N single-particle excitations.
MultiplicityVector shell_reduction(int n, int x);

/// S_N reduction of a single lambda subspace, obtained by subtracting every
/// lower-lambda copy inside shell lambda. Memoized on (N, lambda) and safe to
/// call concurrently. Throws AlgorithmViolation if a count goes negative.
MultiplicityVector lambda_reduction(int n, int lambda);

/// Number of ways to write X - lambda as nu_R + 2 nu_rho.
int lambda_copies_in_shell(int x, int lambda);

struct LevelG0 {
  HypercylindricalLabel label;
  MultiplicityVector reduction;
};

/// Every (nu_R, nu_rho, lambda) with X <= max_excitation, ordered by X, then
/// lambda, then nu_rho.
std::vector<LevelG0> enumerate_levels_g0(int n, int max_excitation);

/// All hypercylindrical labels at excitation X, ordered by lambda then nu_rho.
std::vector<HypercylindricalLabel> labels_in_shell(int x);

}  // namespace symtrap
