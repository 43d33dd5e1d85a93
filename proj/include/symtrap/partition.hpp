#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symtrap/count.hpp"

namespace symtrap {

// Largest n for which partition-indexed tables are produced.
inline constexpr int kMaxPartitionN = 12;

/// An integer partition of n, read interchangeably as a Young diagram and as
/// the label of an irrep of S_n. Parts are positive and non-increasing.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `parts` is non-empty, positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts `parts` into non-increasing order first; zeros are dropped.
  static Partition canonical(std::vector<int> parts);

  /// Accepts bracket/exponent notation ("[21^2]", "2^21", "31") or a
  /// comma list ("2,1,1"). Throws InvalidInput on anything else.
  static Partition parse(std::string_view text);
  /// Like parse, but the parts may come in any order ("13" is [31]).
  static Partition parse_unordered(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& part_vector() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  /// Exponent notation without brackets, e.g. "21^2", "2^21", "1^4". Parts of
  /// 10 or more switch to a comma list ("10,2", or "11," for a single part).
  std::string compact() const;
  /// Exponent notation in brackets, e.g. "[21^2]".
  std::string to_string() const { return "[" + compact() + "]"; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A partition of n read as the cycle lengths of a conjugacy class of S_n.
struct CycleType {
  Partition cycles;

  int n() const { return cycles.n(); }
  bool is_identity() const { return cycles.rows() == cycles.n(); }
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
std::vector<Partition> partitions_of(int n);

/// Position of `p` in partitions_of(p.n()).
std::size_t partition_index(const Partition& p);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Number of standard Young tableaux of shape p, by the hook-length formula.
Count irrep_dimension(const Partition& p);

/// Number of permutations with the given cycle type: n!/z_c.
Count class_size(const CycleType& c);

/// z_c = prod_k k^{m_k} m_k!, the centralizer order of an element of type c.
Count centralizer_order(const CycleType& c);

/// +1 for even permutations, -1 for odd ones.
int sign(const CycleType& c);

/// Cycle type of a permutation given in one-line notation on {0,...,n-1}.
CycleType cycle_type_of(std::span<const int> permutation);

/// Content (column minus row) of every box, row by row.
std::vector<int> box_contents(const Partition& p);

/// Standard Young tableaux of shape p. Each tableau is given as the row index
/// of entries 1..n. Ordered lexicographically on that row sequence, so the
/// row-superstandard tableau comes first.
std::vector<std::vector<int>> standard_tableaux(const Partition& p);

}  // namespace symtrap
