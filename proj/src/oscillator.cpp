#include "symtrap/oscillator.hpp"

#include <functional>
#include <map>

#include "symtrap/characters.hpp"
#include "symtrap/detail/memo.hpp"
#include "symtrap/errors.hpp"

namespace symtrap {

std::string HypercylindricalLabel::to_string() const {
  return std::to_string(nu_R) + "," + std::to_string(nu_rho) + "," + std::to_string(lambda);
}

namespace {

void check_shell_args(int n, int x) {
  if (n < 2 || n > kMaxPartitionN)
    throw InvalidInput("particle number must satisfy 2 <= N <= " + std::to_string(kMaxPartitionN));
  if (x < 0) throw InvalidInput("excitation must be non-negative");
}

void check_hyperangular_args(int n, int lambda) {
  if (n < 3) throw InvalidInput("hyperangular quantities are undefined for N < 3");
  if (n > kMaxPartitionN)
    throw InvalidInput("particle number must satisfy N <= " + std::to_string(kMaxPartitionN));
  if (lambda < 0) throw InvalidInput("lambda must be non-negative");
}

}  // namespace

Count shell_dimension(int n, int x) {
  check_shell_args(n, x);
  return factorial(x + n - 1) / (factorial(x) * factorial(n - 1));
}

Count hyperangular_dimension(int n, int lambda) {
  check_hyperangular_args(n, lambda);
  if (n == 3) return lambda == 0 ? 1 : 2;
  return Count(n + 2 * lambda - 3) * factorial(lambda + n - 4) / (factorial(lambda) * factorial(n - 3));
}

MultiplicityVector shell_reduction(int n, int x) {
  check_shell_args(n, x);
  MultiplicityVector out = MultiplicityVector::zeros_sn(n);
  // Partitions of x into at most n parts; zeros pad the remaining particles.
  std::vector<int> excitations;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::map<int, int> multiplicity;
      for (int e : excitations) ++multiplicity[e];
      const int unexcited = n - static_cast<int>(excitations.size());
      if (unexcited > 0) multiplicity[0] += unexcited;
      std::vector<int> weight;
      for (auto& [value, m] : multiplicity) weight.push_back(m);
      for (std::size_t i = 0; i < out.irreps.size(); ++i)
        out.counts[i] += kostka_weight(out.irreps[i].shape, weight);
      return;
    }
    if (static_cast<int>(excitations.size()) == n) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      excitations.push_back(k);
      rec(remaining - k, k);
      excitations.pop_back();
    }
  };
  rec(x, x);
  return out;
}

int lambda_copies_in_shell(int x, int lambda) {
  if (lambda > x || lambda < 0) return 0;
  return (x - lambda) / 2 + 1;
}

MultiplicityVector lambda_reduction(int n, int lambda) {
  check_hyperangular_args(n, lambda);
  static detail::Memo<std::pair<int, int>, MultiplicityVector> memo;
  return memo.get_or_compute({n, lambda}, [&] {
    MultiplicityVector result = shell_reduction(n, lambda);
    for (int lower = 0; lower < lambda; ++lower) {
      const int copies = lambda_copies_in_shell(lambda, lower);
      const MultiplicityVector sub = lambda_reduction(n, lower);
      for (std::size_t i = 0; i < result.counts.size(); ++i) result.counts[i] -= copies * sub.counts[i];
    }
    for (std::size_t i = 0; i < result.counts.size(); ++i)
      if (result.counts[i] < 0)
        throw AlgorithmViolation("lambda reduction for N=" + std::to_string(n) + ", lambda=" +
                                 std::to_string(lambda) + " produced a negative count for " +
                                 result.irreps[i].to_string());
    return result;
  });
}

std::vector<HypercylindricalLabel> labels_in_shell(int x) {
  std::vector<HypercylindricalLabel> out;
  for (int lambda = 0; lambda <= x; ++lambda)
    for (int nu_rho = 0; 2 * nu_rho <= x - lambda; ++nu_rho)
      out.push_back({x - lambda - 2 * nu_rho, nu_rho, lambda});
  return out;
}

std::vector<LevelG0> enumerate_levels_g0(int n, int max_excitation) {
  if (max_excitation < 0) throw InvalidInput("maximum energy must be non-negative");
  std::vector<LevelG0> out;
  for (int x = 0; x <= max_excitation; ++x)
    for (const auto& label : labels_in_shell(x)) out.push_back({label, lambda_reduction(n, label.lambda)});
  return out;
}

}  // namespace symtrap
