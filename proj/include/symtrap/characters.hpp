#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symtrap/count.hpp"
#include "symtrap/multiplicity.hpp"
#include "symtrap/partition.hpp"

namespace symtrap {

// Character tables are generated for 2 <= N <= kMaxCharacterN.
inline constexpr int kMaxCharacterN = 8;

enum class GroupKind { Sn, SnZ2 };

std::string to_string(GroupKind kind);

/// A conjugacy class of S_N, or of S_N x Z_2 when `inverted` marks the coset i*c.
struct ClassLabel {
  CycleType cycle;
  bool inverted = false;

  /// "[21^2]" or "i[21^2]".
  std::string to_string() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Integer character table. Classes run identity-first ([1^N] ... [N]),
/// followed for S_N x Z_2 by the same list multiplied by parity inversion.
/// Irreps run [N] ... [1^N], followed for S_N x Z_2 by the negative-parity copies.
class CharacterTable {
 public:
  CharacterTable(GroupKind kind, int n, std::vector<ClassLabel> classes,
                 std::vector<IrrepLabel> irreps, std::vector<std::vector<std::int64_t>> values);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<ClassLabel>& classes() const { return classes_; }
  const std::vector<IrrepLabel>& irreps() const { return irreps_; }
  const std::vector<Count>& class_sizes() const { return class_sizes_; }
  const Count& order() const { return order_; }

  std::int64_t value(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }
  std::span<const std::int64_t> row(std::size_t irrep) const { return values_[irrep]; }

  /// Throws InvalidInput for labels not in the table.
  std::size_t class_index(const ClassLabel& label) const;
  std::size_t irrep_index(const IrrepLabel& label) const;

 private:
  GroupKind kind_;
  int n_;
  std::vector<ClassLabel> classes_;
  std::vector<IrrepLabel> irreps_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<Count> class_sizes_;
  Count order_;
};

/// Values of a class function, one per class of the table it will be reduced against.
struct ClassFunction {
  GroupKind kind = GroupKind::Sn;
  int n = 0;
  std::vector<std::int64_t> values;
};

/// chi^shape(c) by the Murnaghan-Nakayama rule. Memoized and thread-safe.
std::int64_t character(const Partition& shape, const CycleType& c);

CharacterTable character_table_sn(int n);
CharacterTable character_table_snz2(int n);

/// Multiplicities a_mu = (1/|G|) sum_c |c| chi^mu(c) f(c).
/// Throws NotRepresentationCharacter when any a_mu is fractional or negative.
MultiplicityVector reduce_class_function(const ClassFunction& f, const CharacterTable& table);

/// Number of semistandard fillings of `shape` whose entries are the multiset `content`.
/// Throws InvalidInput when |content| differs from shape.n().
Count kostka(const Partition& shape, std::span<const int> content);

/// Kostka number K_{shape, weight}: `weight` lists how often each distinct
/// symbol occurs. The order of `weight` does not matter.
Count kostka_weight(const Partition& shape, std::span<const int> weight);

}  // namespace symtrap
