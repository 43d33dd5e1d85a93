#include "brute_force.hpp"
#include "doctest.h"
#include "reference_tables.hpp"
#include "symtrap/errors.hpp"
#include "symtrap/oracle.hpp"
#include "symtrap/oscillator.hpp"

using namespace symtrap;

namespace {

std::vector<long> as_longs(const MultiplicityVector& v) {
  std::vector<long> out;
  for (const auto& c : v.counts) out.push_back(static_cast<long>(to_int64(c)));
  return out;
}

void check_lambda_grid(int n, const reference::Grid& g) {
  for (std::size_t lambda = 0; lambda < g.size(); ++lambda) {
    INFO("N=" << n << " lambda=" << lambda);
    CHECK(as_longs(lambda_reduction(n, static_cast<int>(lambda))) == g[lambda]);
  }
}

}  // namespace

TEST_CASE("energy and label basics") {
  const HypercylindricalLabel l{1, 2, 3};
  CHECK(l.excitation() == 8);
  CHECK(l.energy(4).to_string() == "20/2");
  CHECK(l.relative_parity() == -1);
  CHECK(l.to_string() == "1,2,3");
  CHECK(Energy{9}.to_string() == "9/2");
  CHECK(Energy{8}.to_string() == "8/2");
}

TEST_CASE("shell dimensions") {
  CHECK(shell_dimension(3, 2) == 6);
  CHECK(shell_dimension(4, 3) == 20);
  for (int n = 2; n <= 6; ++n)
    for (int x = 0; x <= 8; ++x) CHECK(shell_dimension(n, x) == brute::shell_dimension(n, x));
  CHECK_THROWS_AS(shell_dimension(1, 0), InvalidInput);
  CHECK_THROWS_AS(shell_dimension(3, -1), InvalidInput);
}

TEST_CASE("hyperangular dimensions") {
  CHECK(hyperangular_dimension(3, 5) == 2);
  CHECK(hyperangular_dimension(4, 9) == 19);
  for (int n = 3; n <= 6; ++n) {
    const auto eps = brute::hyperangular_dimensions(n, 12);
    for (int lambda = 0; lambda <= 12; ++lambda) CHECK(hyperangular_dimension(n, lambda) == eps[static_cast<std::size_t>(lambda)]);
  }
  CHECK_THROWS_AS(hyperangular_dimension(2, 0), InvalidInput);
}

TEST_CASE("shell (4,3) reduction") {
  CHECK(as_longs(shell_reduction(4, 3)) == std::vector<long>{3, 4, 1, 1, 0});
  CHECK(shell_reduction(4, 3).dimension() == 20);
}

TEST_CASE("shell reductions agree with the coordinate-permutation oracle") {
  for (int n = 2; n <= kMaxOracleShellN; ++n)
    for (int x = 0; x <= kMaxOracleShellX; ++x) {
      INFO("N=" << n << " X=" << x);
      const auto oracle = explicit_shell_rep(n, x);
      CHECK(shell_reduction(n, x) == oracle.reduction);
      CHECK(Count(oracle.rep.dimension()) == shell_dimension(n, x));
    }
  CHECK_THROWS_AS(explicit_shell_rep(6, 1), DimensionGuardExceeded);
  CHECK_THROWS_AS(explicit_shell_rep(3, 9), DimensionGuardExceeded);
}

TEST_CASE("three particles") {
  check_lambda_grid(3, reference::kN3Lambda);
  // every lambda >= 1 is a planar doublet, so the pattern repeats with period 3
  for (int lambda = 1; lambda <= 15; ++lambda)
    CHECK(lambda_reduction(3, lambda + 3) == lambda_reduction(3, lambda));
}

TEST_CASE("four particles, corrected lambda table") {
  const auto fixed = reference::corrected("n4_lambda", reference::kN4Lambda);
  check_lambda_grid(4, fixed);
  // the printed lambda = 9 row spans more states than the subspace holds
  Count printed = 0;
  const auto ps = partitions_of(4);
  for (std::size_t i = 0; i < ps.size(); ++i) printed += irrep_dimension(ps[i]) * reference::kN4Lambda[9][i];
  CHECK(printed == 22);
  CHECK(hyperangular_dimension(4, 9) == 19);
  CHECK(reference::kN4Lambda[9][3] == 3);
}

TEST_CASE("four particles repeat with period 12") {
  for (int lambda = 0; lambda <= 20; ++lambda) {
    const auto a = as_longs(lambda_reduction(4, lambda + 12));
    const auto b = as_longs(lambda_reduction(4, lambda));
    for (std::size_t i = 0; i < 5; ++i) CHECK(a[i] == b[i] + reference::kN4Period[i]);
  }
}

TEST_CASE("five particles") { check_lambda_grid(5, reference::kN5Lambda); }

TEST_CASE("lambda reductions fill the hyperangular subspace") {
  for (int n = 3; n <= 7; ++n)
    for (int lambda = 0; lambda <= 14; ++lambda)
      CHECK(lambda_reduction(n, lambda).dimension() == hyperangular_dimension(n, lambda));
}

TEST_CASE("levels at g = 0") {
  CHECK(lambda_copies_in_shell(4, 0) == 3);
  CHECK(lambda_copies_in_shell(4, 5) == 0);
  const auto labels = labels_in_shell(3);
  REQUIRE(labels.size() == 6);
  CHECK(labels.front() == HypercylindricalLabel{3, 0, 0});
  CHECK(labels[1] == HypercylindricalLabel{1, 1, 0});
  CHECK(labels.back() == HypercylindricalLabel{0, 0, 3});

  const auto levels = enumerate_levels_g0(4, 4);
  int last_x = 0;
  Count total = 0;
  for (const auto& l : levels) {
    CHECK(l.label.excitation() >= last_x);
    last_x = l.label.excitation();
    total += l.reduction.dimension();
  }
  Count shells = 0;
  for (int x = 0; x <= 4; ++x) shells += shell_dimension(4, x);
  CHECK(total == shells);
}
