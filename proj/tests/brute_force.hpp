#pragma once

// Slow, obviously-correct reference computations that share no code with the
// library. Only for small sizes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace brute {

using Shape = std::vector<int>;

inline std::vector<std::pair<int, int>> boxes(const Shape& shape) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) out.emplace_back(r, c);
  return out;
}

// Is the filling (row-major over boxes) weakly increasing along rows and
// strictly increasing down columns?
inline bool semistandard(const Shape& shape, const std::vector<int>& filling) {
  std::map<std::pair<int, int>, int> at;
  const auto b = boxes(shape);
  for (std::size_t i = 0; i < b.size(); ++i) at[b[i]] = filling[i];
  for (const auto& [pos, v] : at) {
    auto right = at.find({pos.first, pos.second + 1});
    if (right != at.end() && right->second < v) return false;
    auto below = at.find({pos.first + 1, pos.second});
    if (below != at.end() && below->second <= v) return false;
  }
  return true;
}

// Every arrangement of the multiset `content` over the boxes, counted if semistandard.
inline long kostka(const Shape& shape, std::vector<int> content) {
  std::sort(content.begin(), content.end());
  long count = 0;
  do {
    if (semistandard(shape, content)) ++count;
  } while (std::next_permutation(content.begin(), content.end()));
  return count;
}

inline long standard_tableaux(const Shape& shape) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> content(static_cast<std::size_t>(n));
  std::iota(content.begin(), content.end(), 1);
  return kostka(shape, content);
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline int parity(const std::vector<int>& perm) {
  int s = 1;
  for (int len : cycle_type(perm))
    if (len % 2 == 0) s = -s;
  return s;
}

// Number of permutations of n with each cycle type.
inline std::map<std::vector<int>, long> class_sizes(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::map<std::vector<int>, long> out;
  do {
    ++out[cycle_type(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Frobenius: chi^shape(rho) is the coefficient of x^{shape + delta} in
// a_delta * p_rho, i.e. sum over sigma of sgn(sigma) times the number of ways
// to drop each cycle of rho onto one variable so that variable i receives
// shape_i + delta_i - delta_{sigma(i)}.
inline long character(Shape shape, const std::vector<int>& rho) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  shape.resize(static_cast<std::size_t>(n), 0);
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;

  std::function<long(std::size_t, std::vector<int>&)> place = [&](std::size_t k, std::vector<int>& need) -> long {
    if (k == rho.size()) return std::all_of(need.begin(), need.end(), [](int v) { return v == 0; }) ? 1 : 0;
    long ways = 0;
    for (auto& slot : need) {
      if (slot < rho[k]) continue;
      slot -= rho[k];
      ways += place(k + 1, need);
      slot += rho[k];
    }
    return ways;
  };

  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  long total = 0;
  do {
    std::vector<int> need(static_cast<std::size_t>(n));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      need[u] = shape[u] + delta[u] - delta[static_cast<std::size_t>(sigma[u])];
      if (need[u] < 0) ok = false;
    }
    if (ok) total += parity(sigma) * place(0, need);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

// All N-tuples of non-negative excitations summing to X.
inline long shell_dimension(int n, int x) {
  if (n == 1) return 1;
  long total = 0;
  for (int e = 0; e <= x; ++e) total += shell_dimension(n - 1, x - e);
  return total;
}

// eps_lambda from shell dimensions alone: shell X holds one copy of lambda for
// every split X - lambda = nu_R + 2 nu_rho.
inline std::vector<long> hyperangular_dimensions(int n, int max_lambda) {
  std::vector<long> eps;
  for (int x = 0; x <= max_lambda; ++x) {
    long rest = shell_dimension(n, x);
    for (int lambda = 0; lambda < x; ++lambda) {
      long splits = 0;
      for (int nu_rho = 0; 2 * nu_rho <= x - lambda; ++nu_rho) ++splits;
      rest -= splits * eps[static_cast<std::size_t>(lambda)];
    }
    eps.push_back(rest);
  }
  return eps;
}

// S_N acting on k^N spin configurations fixes k^{#cycles} of them.
inline long spin_permutation_character(int k, const std::vector<int>& cycles) {
  long v = 1;
  for (std::size_t i = 0; i < cycles.size(); ++i) v *= k;
  return v;
}

}  // namespace brute
