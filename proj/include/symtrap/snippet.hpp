#pragma once

#include <string>
#include <vector>

#include "symtrap/branching.hpp"
#include "symtrap/characters.hpp"
#include "symtrap/count.hpp"
#include "symtrap/multiplicity.hpp"
#include "symtrap/oscillator.hpp"

namespace symtrap {

// Explicit sector vectors are built for N <= kMaxSectorBasisN.
inline constexpr int kMaxSectorBasisN = 6;

enum class LambdaParity { Even, Odd };

LambdaParity parity_of_lambda(int lambda);
std::string to_string(LambdaParity parity);

/// Sign a sector state picks up under parity inversion: (-1)^lambda times the
/// sign of the order-reversing permutation of N positions.
int inversion_sign(int n, LambdaParity parity);

/// Ordering sector x_{o1} > x_{o2} > ... > x_{oN}; particles are labeled 1..N.
struct Sector {
  std::vector<int> ordering;

  /// Concatenated labels, e.g. "4231".
  std::string to_string() const;
  friend bool operator==(const Sector&, const Sector&) = default;
};

/// All N! sectors in lexicographic order of their orderings.
std::vector<Sector> sectors(int n);

/// Position of `s` in sectors(n).
std::size_t sector_index(const Sector& s);

/// Character of the sector representation of S_N x Z_2, on the classes of
/// character_table_snz2(n). Only the identity and the inversions i*c with c
/// conjugate to the order reversal are non-zero.
ClassFunction sector_rep_characters(int n, LambdaParity parity);

/// Multiplicities of every [p]^pi in the N!-dimensional snippet space.
MultiplicityVector snippet_reduction(int n, LambdaParity parity);

/// Amplitudes over sectors(n). The normalized state is amplitudes / sqrt(squared_norm).
struct SectorVector {
  int n = 0;
  std::vector<Rational> amplitudes;
  Rational squared_norm;

  /// Exact Euclidean inner product of the amplitude lists.
  Rational dot(const SectorVector& other) const;
};

struct SnippetIrrepLabel {
  Partition p;
  int pi = 1;
  int tau = 0;  // copy index, 0-based
  int j = 1;    // standard-tableau index inside the irrep, 1-based
};

struct SnippetBasisVector {
  SnippetIrrepLabel label;
  SectorVector vector;
};

/// Orthogonal basis of the [p]^pi isotypic component of the snippet space:
/// multiplicity x dim[p] vectors, one per (tau, j). Vectors with the same tau
/// span one irreducible copy; j follows standard_tableaux(p). Copies are
/// seeded from sectors in lexicographic order. Empty when [p]^pi is absent.
std::vector<SnippetBasisVector> snippet_projection_basis(int n, LambdaParity parity, const Partition& p, int pi);

/// Orthogonal basis of the vectors inside [p]^pi that carry the pattern's
/// Young-subgroup irrep, with components occupying particles 1..N1, N1+1..N1+N2, ...
std::vector<SectorVector> component_projection_basis(int n, LambdaParity parity, const Partition& p, int pi,
                                                     const ComponentPattern& pattern);

struct LevelGinf {
  HypercylindricalLabel label;
  MultiplicityVector reduction;  // over S_N x Z_2 irreps, already scaled by seed_count
  Count seed_count;              // copies of [1^N] at this lambda
};

/// Hard-core levels up to max_excitation: only labels whose lambda carries an
/// antisymmetric seed appear. Same ordering as enumerate_levels_g0.
std::vector<LevelGinf> enumerate_levels_ginf(int n, int max_excitation);

}  // namespace symtrap
