#pragma once

// Brute-force representations for cross-checking the production paths.
// Nothing here is used by the other modules.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symtrap/characters.hpp"
#include "symtrap/multiplicity.hpp"
#include "symtrap/snippet.hpp"

namespace symtrap {

inline constexpr int kMaxOracleShellN = 5;
inline constexpr int kMaxOracleShellX = 8;
inline constexpr int kMaxOracleSectorN = 6;
inline constexpr int kMaxOracleProjectorN = 5;

/// Signed permutation matrix: column j has a single entry sign[j] in row image[j].
struct SignedPermutation {
  std::vector<std::size_t> image;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t size);
  std::size_t size() const { return image.size(); }
  std::int64_t trace() const;
  bool is_identity() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Matrix product a*b (b acts first).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

struct ExplicitRep {
  GroupKind kind = GroupKind::Sn;
  int n = 0;
  std::vector<std::string> basis;
  // Adjacent transpositions (k k+1) for k = 1..N-1, then parity inversion for S_N x Z_2.
  std::vector<SignedPermutation> generators;
  // Trace per class of the matching character table.
  ClassFunction traces;
  // Matrix of the group element i^inverted * perm, built from the action itself.
  std::function<SignedPermutation(std::span<const int> perm, bool inverted)> element;

  std::size_t dimension() const { return basis.size(); }
};

struct ShellOracle {
  ExplicitRep rep;
  MultiplicityVector reduction;
};

/// S_N permuting the coordinates of every N-tuple of excitations summing to X.
/// Throws DimensionGuardExceeded outside 2 <= N <= 5, 0 <= X <= 8.
ShellOracle explicit_shell_rep(int n, int x);

struct SectorOracle {
  ExplicitRep even;
  ExplicitRep odd;
  MultiplicityVector even_reduction;
  MultiplicityVector odd_reduction;

  const ExplicitRep& rep(LambdaParity parity) const { return parity == LambdaParity::Even ? even : odd; }
  const MultiplicityVector& reduction(LambdaParity parity) const {
    return parity == LambdaParity::Even ? even_reduction : odd_reduction;
  }
};

/// S_N x Z_2 on the N! sector states, one representation per lambda parity.
/// Signs are derived from how the antisymmetric seed transforms.
/// Throws DimensionGuardExceeded outside 2 <= N <= 6.
SectorOracle explicit_sector_rep(int n);

/// Checks the homomorphism property on every generator pair, on `random_words`
/// random generator words and on as many random element pairs, plus i^2 = 1 and
/// i commuting with S_N. Throws ConsistencyFailure on the first violation.
void verify_group_relations(const ExplicitRep& rep, int random_words = 64, unsigned seed = 20240611u);

/// Exact rank of the isotypic projector for `irrep`, by fraction-free elimination
/// on the dense matrix. Throws DimensionGuardExceeded for N > 5.
std::int64_t projector_rank(const ExplicitRep& rep, const IrrepLabel& irrep);

}  // namespace symtrap
