#pragma once

#include <string>
#include <vector>

#include "symtrap/count.hpp"
#include "symtrap/partition.hpp"

namespace symtrap {

/// Irrep of S_N (parity 0) or of S_N x Z_2 (parity +1 / -1).
struct IrrepLabel {
  Partition shape;
  int parity = 0;

  /// "[21^2]" for S_N, "[21^2]+" / "[21^2]-" for S_N x Z_2.
  std::string to_string() const;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// One reduction result: a count for every irrep of the group, in table order.
struct MultiplicityVector {
  std::vector<IrrepLabel> irreps;
  std::vector<Count> counts;

  /// All-zero vector over the S_N irreps, ordered like partitions_of(n).
  static MultiplicityVector zeros_sn(int n);
  /// All-zero vector over S_N x Z_2 irreps: every [p]+ first, then every [p]-.
  static MultiplicityVector zeros_snz2(int n);

  int n() const { return irreps.empty() ? 0 : irreps.front().shape.n(); }
  std::size_t size() const { return counts.size(); }
  /// Throws InvalidInput if the label is not one of `irreps`.
  const Count& at(const IrrepLabel& label) const;
  Count& at(const IrrepLabel& label);
  const Count& at(const Partition& shape, int parity = 0) const { return at(IrrepLabel{shape, parity}); }

  /// Sum of count times irrep dimension.
  Count dimension() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

}  // namespace symtrap
