#include "symtrap/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "symtrap/detail/memo.hpp"
#include "symtrap/errors.hpp"

namespace symtrap {

std::string IrrepLabel::to_string() const {
  std::string s = shape.to_string();
  if (parity > 0) s += "+";
  if (parity < 0) s += "-";
  return s;
}

MultiplicityVector MultiplicityVector::zeros_sn(int n) {
  MultiplicityVector v;
  for (auto& p : partitions_of(n)) v.irreps.push_back({p, 0});
  v.counts.assign(v.irreps.size(), 0);
  return v;
}

MultiplicityVector MultiplicityVector::zeros_snz2(int n) {
  MultiplicityVector v;
  const auto parts = partitions_of(n);
  for (int parity : {1, -1})
    for (auto& p : parts) v.irreps.push_back({p, parity});
  v.counts.assign(v.irreps.size(), 0);
  return v;
}

const Count& MultiplicityVector::at(const IrrepLabel& label) const {
  auto it = std::find(irreps.begin(), irreps.end(), label);
  if (it == irreps.end()) throw InvalidInput("irrep " + label.to_string() + " is not in this vector");
  return counts[static_cast<std::size_t>(it - irreps.begin())];
}

Count& MultiplicityVector::at(const IrrepLabel& label) {
  return const_cast<Count&>(std::as_const(*this).at(label));
}

Count MultiplicityVector::dimension() const {
  Count total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += counts[i] * irrep_dimension(irreps[i].shape);
  return total;
}

std::string to_string(GroupKind kind) { return kind == GroupKind::Sn ? "sn" : "snz2"; }

std::string ClassLabel::to_string() const { return (inverted ? "i" : "") + cycle.cycles.to_string(); }

CharacterTable::CharacterTable(GroupKind kind, int n, std::vector<ClassLabel> classes,
                               std::vector<IrrepLabel> irreps,
                               std::vector<std::vector<std::int64_t>> values)
    : kind_(kind), n_(n), classes_(std::move(classes)), irreps_(std::move(irreps)),
      values_(std::move(values)) {
  for (const auto& c : classes_) class_sizes_.push_back(class_size(c.cycle));
  order_ = factorial(n_) * (kind_ == GroupKind::SnZ2 ? 2 : 1);
}

std::size_t CharacterTable::class_index(const ClassLabel& label) const {
  auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) throw InvalidInput("class " + label.to_string() + " is not in the table");
  return static_cast<std::size_t>(it - classes_.begin());
}

std::size_t CharacterTable::irrep_index(const IrrepLabel& label) const {
  auto it = std::find(irreps_.begin(), irreps_.end(), label);
  if (it == irreps_.end()) throw InvalidInput("irrep " + label.to_string() + " is not in the table");
  return static_cast<std::size_t>(it - irreps_.begin());
}

namespace {

using ShapeKey = std::vector<int>;

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one
// bead from position b to b-k; its sign is the parity of beads jumped over.
std::int64_t mn_recursive(const std::vector<int>& shape, const std::vector<int>& cycles,
                          std::size_t next, detail::Memo<std::pair<ShapeKey, ShapeKey>, std::int64_t>& memo) {
  if (shape.empty()) return 1;
  std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end());
  const auto key = std::make_pair(shape, rest);
  if (auto hit = memo.find(key)) return *hit;

  const int k = cycles[next];
  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;

  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > to && b < from) ++jumped;
    std::vector<int> moved = beta;
    moved[i] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    const int m = static_cast<int>(moved.size());
    for (int j = 0; j < m; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (m - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn_recursive(smaller, cycles, next + 1, memo);
    total += (jumped % 2 == 0 ? 1 : -1) * sub;
  }
  memo.insert(key, total);
  return total;
}

detail::Memo<std::pair<ShapeKey, ShapeKey>, std::int64_t>& character_memo() {
  static detail::Memo<std::pair<ShapeKey, ShapeKey>, std::int64_t> memo;
  return memo;
}

void check_character_range(int n) {
  if (n < 2 || n > kMaxCharacterN)
    throw InvalidInput("character tables need 2 <= N <= " + std::to_string(kMaxCharacterN) +
                       ", got " + std::to_string(n));
}

std::vector<CycleType> identity_first_classes(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions_of(n)) out.push_back(CycleType{p});
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t character(const Partition& shape, const CycleType& c) {
  if (shape.n() != c.n()) throw InvalidInput("character: shape and class sizes differ");
  return mn_recursive(shape.part_vector(), c.cycles.part_vector(), 0, character_memo());
}

CharacterTable character_table_sn(int n) {
  check_character_range(n);
  const auto classes = identity_first_classes(n);
  std::vector<ClassLabel> class_labels;
  for (const auto& c : classes) class_labels.push_back({c, false});
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<std::int64_t>> values;
  for (const auto& p : partitions_of(n)) {
    irreps.push_back({p, 0});
    auto& row = values.emplace_back();
    for (const auto& c : classes) row.push_back(character(p, c));
  }
  return CharacterTable(GroupKind::Sn, n, std::move(class_labels), std::move(irreps), std::move(values));
}

CharacterTable character_table_snz2(int n) {
  check_character_range(n);
  const auto classes = identity_first_classes(n);
  std::vector<ClassLabel> class_labels;
  for (bool inverted : {false, true})
    for (const auto& c : classes) class_labels.push_back({c, inverted});
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<std::int64_t>> values;
  const auto parts = partitions_of(n);
  for (int parity : {1, -1}) {
    for (const auto& p : parts) {
      irreps.push_back({p, parity});
      auto& row = values.emplace_back();
      for (const auto& label : class_labels)
        row.push_back((label.inverted ? parity : 1) * character(p, label.cycle));
    }
  }
  return CharacterTable(GroupKind::SnZ2, n, std::move(class_labels), std::move(irreps), std::move(values));
}

MultiplicityVector reduce_class_function(const ClassFunction& f, const CharacterTable& table) {
  if (f.kind != table.kind() || f.n != table.n() || f.values.size() != table.classes().size())
    throw InvalidInput("class function is not defined on the classes of this table");
  MultiplicityVector out;
  out.irreps = table.irreps();
  for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
    Count sum = 0;
    for (std::size_t c = 0; c < table.classes().size(); ++c)
      sum += table.class_sizes()[c] * table.value(mu, c) * f.values[c];
    if (sum % table.order() != 0 || sum < 0)
      throw NotRepresentationCharacter("multiplicity of " + table.irreps()[mu].to_string() + " is " +
                                       sum.str() + "/" + table.order().str());
    out.counts.push_back(sum / table.order());
  }
  return out;
}

namespace {

// Strip the largest symbol as a horizontal strip and recurse on the rest.
Count kostka_recursive(const std::vector<int>& shape, std::vector<int> weight,
                       detail::Memo<std::pair<ShapeKey, ShapeKey>, Count>& memo) {
  while (!weight.empty() && weight.back() == 0) weight.pop_back();
  if (weight.empty()) return shape.empty() ? 1 : 0;
  if (shape.empty()) return 0;
  const auto key = std::make_pair(shape, weight);
  if (auto hit = memo.find(key)) return *hit;

  const int strip = weight.back();
  std::vector<int> rest(weight.begin(), weight.end() - 1);
  Count total = 0;
  std::vector<int> inner(shape.size());
  std::function<void(std::size_t, int)> choose = [&](std::size_t row, int remaining) {
    if (row == shape.size()) {
      if (remaining != 0) return;
      std::vector<int> mu;
      for (int v : inner)
        if (v > 0) mu.push_back(v);
      total += kostka_recursive(mu, rest, memo);
      return;
    }
    // A horizontal strip keeps row `row` at least as long as row `row+1` of the outer shape.
    const int lower = row + 1 < shape.size() ? shape[row + 1] : 0;
    for (int v = shape[row]; v >= lower; --v) {
      const int taken = shape[row] - v;
      if (taken > remaining) break;
      inner[row] = v;
      choose(row + 1, remaining - taken);
    }
  };
  choose(0, strip);
  memo.insert(key, total);
  return total;
}

detail::Memo<std::pair<ShapeKey, ShapeKey>, Count>& kostka_memo() {
  static detail::Memo<std::pair<ShapeKey, ShapeKey>, Count> memo;
  return memo;
}

}  // namespace

Count kostka_weight(const Partition& shape, std::span<const int> weight) {
  std::vector<int> w;
  for (int x : weight) {
    if (x < 0) throw InvalidInput("kostka: negative weight");
    if (x > 0) w.push_back(x);
  }
  if (std::accumulate(w.begin(), w.end(), 0) != shape.n())
    throw InvalidInput("kostka: weight total differs from the number of boxes");
  // Kostka numbers are symmetric in the weight; sorting maximizes cache reuse.
  std::sort(w.begin(), w.end(), std::greater<>());
  return kostka_recursive(shape.part_vector(), std::move(w), kostka_memo());
}

Count kostka(const Partition& shape, std::span<const int> content) {
  if (static_cast<int>(content.size()) != shape.n())
    throw InvalidInput("kostka: content has " + std::to_string(content.size()) + " symbols, shape has " +
                       std::to_string(shape.n()) + " boxes");
  std::map<int, int> multiplicity;
  for (int symbol : content) ++multiplicity[symbol];
  std::vector<int> weight;
  for (auto& [symbol, m] : multiplicity) weight.push_back(m);
  return kostka_weight(shape, weight);
}

}  // namespace symtrap
