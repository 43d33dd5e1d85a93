#include "symtrap/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "symtrap/errors.hpp"

namespace symtrap {

Count factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Count result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::int64_t to_int64(const Count& c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
    throw AlgorithmViolation("count " + c.str() + " does not fit in 64 bits");
  return c.convert_to<std::int64_t>();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidInput("partition parts must be non-increasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::canonical(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {

// Parts in the order written. An exponent is one digit, except after a part
// of 1: a run of ones comes last, so "1^12" is twelve ones while "2^21" is
// [2,2,1]. With N <= 12 no other exponent reaches two digits.
std::vector<int> parse_parts(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw InvalidInput("unbalanced brackets in partition '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw InvalidInput("empty partition");

  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw InvalidInput("bad partition part '" + item + "'");
      parts.push_back(std::stoi(item));
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InvalidInput("bad character in partition '" + std::string(text) + "'");
      int part = s[i] - '0';
      int repeat = 1;
      if (i + 1 < s.size() && s[i + 1] == '^') {
        std::size_t j = i + 2;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && (part == 1 || j == i + 2)) ++j;
        if (j == i + 2) throw InvalidInput("missing exponent in partition '" + std::string(text) + "'");
        repeat = std::stoi(s.substr(i + 2, j - i - 2));
        i = j - 1;
      }
      parts.insert(parts.end(), repeat, part);
    }
  }
  for (int p : parts)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  return parts;
}

}  // namespace

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

Partition Partition::parse_unordered(std::string_view text) { return canonical(parse_parts(text)); }

std::string Partition::compact() const {
  const bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p >= 10; });
  std::string out;
  if (wide) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    // "11" already means [1^2]; the comma marks a single part
    if (parts_.size() == 1) out += ',';
    return out;
  }
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw InvalidInput("partitions_of needs n >= 1, got " + std::to_string(n));
  if (n > kMaxPartitionN)
    throw InvalidInput("partitions_of supports n <= " + std::to_string(kMaxPartitionN));
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t partition_index(const Partition& p) {
  const auto all = partitions_of(p.n());
  auto it = std::find(all.begin(), all.end(), p);
  return static_cast<std::size_t>(it - all.begin());
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

Count irrep_dimension(const Partition& p) {
  const Partition t = conjugate(p);
  Count hooks = 1;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p[static_cast<std::size_t>(r)]; ++c)
      hooks *= (p[static_cast<std::size_t>(r)] - c - 1) + (t[static_cast<std::size_t>(c)] - r - 1) + 1;
  return factorial(p.n()) / hooks;
}

Count centralizer_order(const CycleType& c) {
  Count z = 1;
  const auto parts = c.cycles.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int m = 0; m < mult; ++m) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

Count class_size(const CycleType& c) { return factorial(c.n()) / centralizer_order(c); }

int sign(const CycleType& c) { return (c.n() - c.cycles.rows()) % 2 == 0 ? 1 : -1; }

CycleType cycle_type_of(std::span<const int> permutation) {
  const std::size_t n = permutation.size();
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(permutation[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType{Partition::canonical(std::move(lengths))};
}

std::vector<int> box_contents(const Partition& p) {
  std::vector<int> out;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p[static_cast<std::size_t>(r)]; ++c) out.push_back(c - r);
  return out;
}

std::vector<std::vector<int>> standard_tableaux(const Partition& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> filled(static_cast<std::size_t>(p.rows()), 0);
  std::vector<int> rows;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(rows.size()) == p.n()) {
      out.push_back(rows);
      return;
    }
    for (int r = 0; r < p.rows(); ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (filled[ur] >= p[ur]) continue;
      if (r > 0 && filled[ur - 1] <= filled[ur]) continue;
      ++filled[ur];
      rows.push_back(r);
      rec();
      rows.pop_back();
      --filled[ur];
    }
  };
  rec();
  return out;
}

}  // namespace symtrap
