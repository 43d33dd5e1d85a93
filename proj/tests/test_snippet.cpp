#include <set>

#include "brute_force.hpp"
#include "doctest.h"
#include "reference_tables.hpp"
#include "symtrap/errors.hpp"
#include "symtrap/snippet.hpp"

using namespace symtrap;

namespace {

void check_sector_grid(int n, const reference::Grid& g) {
  const auto even = snippet_reduction(n, LambdaParity::Even);
  const auto odd = snippet_reduction(n, LambdaParity::Odd);
  REQUIRE(even.size() == g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    INFO(even.irreps[r].to_string());
    CHECK(even.counts[r] == g[r][0]);
    CHECK(odd.counts[r] == g[r][1]);
  }
}

}  // namespace

TEST_CASE("inversion signs") {
  CHECK(inversion_sign(2, LambdaParity::Even) == -1);
  CHECK(inversion_sign(3, LambdaParity::Even) == -1);
  CHECK(inversion_sign(4, LambdaParity::Even) == 1);
  CHECK(inversion_sign(4, LambdaParity::Odd) == -1);
  CHECK(inversion_sign(5, LambdaParity::Odd) == -1);
  CHECK(parity_of_lambda(7) == LambdaParity::Odd);
  CHECK(to_string(LambdaParity::Even) == "even");
}

TEST_CASE("sector enumeration") {
  const auto s = sectors(3);
  REQUIRE(s.size() == 6);
  CHECK(s.front().to_string() == "123");
  CHECK(s.back().to_string() == "321");
  for (int n = 1; n <= 6; ++n) {
    const auto all = sectors(n);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(sector_index(all[i]) == i);
  }
}

TEST_CASE("sector characters vanish off the identity and the reversal coset class") {
  const auto f = sector_rep_characters(4, LambdaParity::Even);
  CHECK(f.values == std::vector<std::int64_t>{24, 0, 0, 0, 0, 0, 0, 8, 0, 0});
  const auto g = sector_rep_characters(4, LambdaParity::Odd);
  CHECK(g.values[7] == -8);
}

TEST_CASE("snippet reductions for three to five particles") {
  check_sector_grid(3, reference::kN3Sectors);
  check_sector_grid(4, reference::kN4Sectors);
  check_sector_grid(5, reference::kN5Sectors);
}

TEST_CASE("snippet reductions fill N! states") {
  for (int n = 2; n <= kMaxCharacterN; ++n)
    for (auto parity : {LambdaParity::Even, LambdaParity::Odd})
      CHECK(snippet_reduction(n, parity).dimension() == factorial(n));
}

TEST_CASE("the antisymmetric state of four particles is the sector sign pattern") {
  const auto basis = snippet_projection_basis(4, LambdaParity::Even, Partition({1, 1, 1, 1}), 1);
  REQUIRE(basis.size() == 1);
  const auto all = sectors(4);
  const auto& v = basis[0].vector;
  CHECK(v.squared_norm == 24);
  for (std::size_t q = 0; q < all.size(); ++q) {
    std::vector<int> perm;
    for (int label : all[q].ordering) perm.push_back(label - 1);
    CHECK(v.amplitudes[q] * v.amplitudes[0] == brute::parity(perm));
  }
  // absent in the odd sector
  CHECK(snippet_projection_basis(4, LambdaParity::Odd, Partition({1, 1, 1, 1}), 1).empty());
}

TEST_CASE("projection bases have the right size and are orthogonal") {
  for (int n = 3; n <= 5; ++n)
    for (auto parity : {LambdaParity::Even, LambdaParity::Odd}) {
      const auto reduction = snippet_reduction(n, parity);
      for (std::size_t i = 0; i < reduction.size(); ++i) {
        const auto& label = reduction.irreps[i];
        const auto basis = snippet_projection_basis(n, parity, label.shape, label.parity);
        INFO("N=" << n << " " << label.to_string() << " " << to_string(parity));
        CHECK(Count(basis.size()) == reduction.counts[i] * irrep_dimension(label.shape));
        for (std::size_t a = 0; a < basis.size(); ++a) {
          CHECK(basis[a].vector.squared_norm == basis[a].vector.dot(basis[a].vector));
          CHECK(basis[a].vector.squared_norm > 0);
          CHECK(basis[a].label.p == label.shape);
          CHECK(basis[a].label.pi == label.parity);
          for (std::size_t b = a + 1; b < basis.size(); ++b) CHECK(basis[a].vector.dot(basis[b].vector) == 0);
        }
      }
    }
}

TEST_CASE("two spin-up and two spin-down fermions in the [2^2]+ sector states") {
  const auto pattern = ComponentPattern::parse("(22)_F");
  const auto vs = component_projection_basis(4, LambdaParity::Even, Partition({2, 2}), 1, pattern);
  REQUIRE(vs.size() == 2);
  std::multiset<Rational> magnitudes0, magnitudes1;
  for (const auto& a : vs[0].amplitudes) magnitudes0.insert(abs(a));
  for (const auto& a : vs[1].amplitudes) magnitudes1.insert(abs(a));
  CHECK(magnitudes0.count(Rational(1)) == 16);
  CHECK(magnitudes0.count(Rational(0)) == 8);
  CHECK(magnitudes1.count(Rational(2)) == 8);
  CHECK(magnitudes1.count(Rational(1)) == 16);
  CHECK(vs[0].dot(vs[1]) == 0);
  CHECK(vs[0].squared_norm == 16);
  CHECK(vs[1].squared_norm == 48);
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(snippet_projection_basis(7, LambdaParity::Even, Partition({7}), 1), InvalidInput);
  CHECK_THROWS_AS(snippet_projection_basis(4, LambdaParity::Even, Partition({3}), 1), InvalidInput);
  CHECK_THROWS_AS(snippet_projection_basis(4, LambdaParity::Even, Partition({4}), 0), InvalidInput);
  CHECK_THROWS_AS(component_projection_basis(4, LambdaParity::Even, Partition({4}), 1, ComponentPattern::parse("(21)_F")),
                  InvalidInput);
}

TEST_CASE("hard-core levels carry only lambdas with an antisymmetric seed") {
  const auto levels = enumerate_levels_ginf(3, 6);
  REQUIRE_FALSE(levels.empty());
  CHECK(levels.front().label == HypercylindricalLabel{0, 0, 3});
  for (const auto& l : levels) {
    CHECK(l.seed_count == lambda_reduction(3, l.label.lambda).at(Partition({1, 1, 1})));
    CHECK(l.seed_count > 0);
    CHECK(l.reduction.dimension() == l.seed_count * factorial(3));
  }
}
