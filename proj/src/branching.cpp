#include "symtrap/branching.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "symtrap/characters.hpp"
#include "symtrap/errors.hpp"
#include "symtrap/oscillator.hpp"

namespace symtrap {

ComponentPattern::ComponentPattern(Partition counts, Statistics statistics)
    : counts_(std::move(counts)), statistics_(statistics) {
  if (counts_.empty()) throw InvalidInput("component pattern needs at least one component");
}

ComponentPattern ComponentPattern::from_counts(std::vector<int> counts, Statistics statistics) {
  for (int c : counts)
    if (c <= 0) throw InvalidInput("component occupations must be positive");
  return ComponentPattern(Partition::canonical(std::move(counts)), statistics);
}

ComponentPattern ComponentPattern::parse(std::string_view text, Statistics fallback) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  Statistics stats = fallback;
  auto strip_suffix = [&](std::string_view suffix, Statistics value) {
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.resize(s.size() - suffix.size());
      stats = value;
      return true;
    }
    return false;
  };
  strip_suffix("_F", Statistics::Fermi) || strip_suffix("_B", Statistics::Bose) ||
      strip_suffix(",F", Statistics::Fermi) || strip_suffix(",B", Statistics::Bose) ||
      strip_suffix("F", Statistics::Fermi) || strip_suffix("B", Statistics::Bose);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return ComponentPattern(Partition::parse_unordered(s), stats);
}

std::string ComponentPattern::to_string() const {
  std::string digits;
  for (int c : counts_.parts()) {
    if (!digits.empty() && c >= 10) digits += ",";
    digits += std::to_string(c);
  }
  std::string out = "(" + digits + ")";
  if (!distinguishable()) out += statistics_ == Statistics::Fermi ? "_F" : "_B";
  return out;
}

std::string ComponentPattern::subgroup_irrep() const {
  std::string out;
  for (int c : counts_.parts()) {
    if (!out.empty()) out += "x";
    out += (statistics_ == Statistics::Fermi ? Partition(std::vector<int>(static_cast<std::size_t>(c), 1))
                                             : Partition({c}))
               .to_string();
  }
  return out;
}

bool operator==(const ComponentPattern& a, const ComponentPattern& b) {
  if (a.counts_ != b.counts_) return false;
  return a.distinguishable() || a.statistics_ == b.statistics_;
}

namespace {

void check_pattern_size(const Partition& p, const ComponentPattern& pattern) {
  if (p.n() != pattern.n())
    throw InvalidInput("irrep " + p.to_string() + " and pattern " + pattern.to_string() +
                       " have different particle numbers");
}

}  // namespace

Count branch_multiplicity_by_characters(const Partition& p, const ComponentPattern& pattern) {
  check_pattern_size(p, pattern);
  const auto blocks = pattern.counts().part_vector();
  const bool fermi = pattern.statistics() == Statistics::Fermi;

  // Classes of the Young subgroup are tuples of cycle types, one per block.
  Count sum = 0;
  Count subgroup_order = 1;
  for (int b : blocks) subgroup_order *= factorial(b);

  std::vector<int> merged;
  std::function<void(std::size_t, Count)> walk = [&](std::size_t block, Count size) {
    if (block == blocks.size()) {
      const CycleType type{Partition::canonical(merged)};
      const int subgroup_char = fermi ? sign(type) : 1;
      sum += size * character(p, type) * subgroup_char;
      return;
    }
    for (const auto& cycles : partitions_of(blocks[block])) {
      const auto mark = merged.size();
      merged.insert(merged.end(), cycles.parts().begin(), cycles.parts().end());
      walk(block + 1, size * class_size(CycleType{cycles}));
      merged.resize(mark);
    }
  };
  walk(0, 1);
  if (sum % subgroup_order != 0 || sum < 0)
    throw AlgorithmViolation("subgroup inner product is not a non-negative integer");
  return sum / subgroup_order;
}

Count branch_multiplicity(const Partition& p, const ComponentPattern& pattern) {
  check_pattern_size(p, pattern);
  const Partition& shape = pattern.statistics() == Statistics::Fermi ? conjugate(p) : p;
  Count result = kostka_weight(shape, pattern.counts().parts());
#ifndef NDEBUG
  if (p.n() <= kMaxCharacterN && result != branch_multiplicity_by_characters(p, pattern))
    throw ConsistencyFailure("Young's rule and the character inner product disagree for " + p.to_string() +
                             " restricted by " + pattern.to_string());
#endif
  return result;
}

Count component_degeneracy(int n, int lambda, const ComponentPattern& pattern) {
  if (pattern.n() != n) throw InvalidInput("pattern " + pattern.to_string() + " is not for N=" + std::to_string(n));
  const MultiplicityVector reduction = lambda_reduction(n, lambda);
  Count total = 0;
  for (std::size_t i = 0; i < reduction.size(); ++i)
    if (reduction.counts[i] != 0) total += reduction.counts[i] * branch_multiplicity(reduction.irreps[i].shape, pattern);
  return total;
}

Count cumulative_shell_degeneracy(int n, int x, const ComponentPattern& pattern) {
  if (pattern.n() != n) throw InvalidInput("pattern " + pattern.to_string() + " is not for N=" + std::to_string(n));
  const MultiplicityVector reduction = shell_reduction(n, x);
  Count total = 0;
  for (std::size_t i = 0; i < reduction.size(); ++i)
    if (reduction.counts[i] != 0) total += reduction.counts[i] * branch_multiplicity(reduction.irreps[i].shape, pattern);
  return total;
}

MultiplicityVector spin_decomposition(int n, int k) {
  if (n < 2 || n > kMaxPartitionN) throw InvalidInput("spin decomposition needs 2 <= N <= " + std::to_string(kMaxPartitionN));
  if (k < 1) throw InvalidInput("at least one spin component is required");
  MultiplicityVector out = MultiplicityVector::zeros_sn(n);
  // Hook-content formula: prod (k + content) / prod hook.
  for (std::size_t i = 0; i < out.irreps.size(); ++i) {
    const Partition& p = out.irreps[i].shape;
    Count numerator = 1;
    for (int c : box_contents(p)) numerator *= k + c;
    if (numerator <= 0) continue;
    out.counts[i] = numerator * irrep_dimension(p) / factorial(n);
  }
  return out;
}

std::vector<ComponentPattern> standard_patterns(int n) {
  std::vector<ComponentPattern> out;
  const auto parts = partitions_of(n);
  for (Statistics stats : {Statistics::Bose, Statistics::Fermi})
    for (const auto& p : parts)
      if (p.rows() < n) out.emplace_back(p, stats);
  out.emplace_back(parts.back(), Statistics::Bose);
  return out;
}

}  // namespace symtrap
