#include "brute_force.hpp"
#include "doctest.h"
#include "symtrap/errors.hpp"
#include "symtrap/partition.hpp"

using namespace symtrap;

namespace {

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("partitions of 4 run from the row to the column") {
  CHECK(names(partitions_of(4)) == std::vector<std::string>{"[4]", "[31]", "[2^2]", "[21^2]", "[1^4]"});
  CHECK(names(partitions_of(1)) == std::vector<std::string>{"[1]"});
  const auto five = partitions_of(5);
  REQUIRE(five.size() == 7);
  CHECK(five.front().to_string() == "[5]");
  CHECK(five.back().to_string() == "[1^5]");
  CHECK(names(five) == std::vector<std::string>{"[5]", "[41]", "[32]", "[31^2]", "[2^21]", "[21^3]", "[1^5]"});
}

TEST_CASE("partition counts follow the partition numbers") {
  const std::vector<std::size_t> p = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 1; n <= kMaxPartitionN; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n - 1)]);
  CHECK_THROWS_AS(partitions_of(0), InvalidInput);
  CHECK_THROWS_AS(partitions_of(kMaxPartitionN + 1), InvalidInput);
}

TEST_CASE("ordering is strictly reverse lexicographic and indices match") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] > ps[i + 1]);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(partition_index(ps[i]) == i);
  }
}

TEST_CASE("parsing accepts bracket, exponent and comma notation") {
  CHECK(Partition::parse("[21^2]") == Partition({2, 1, 1}));
  CHECK(Partition::parse("2^21") == Partition({2, 2, 1}));
  CHECK(Partition::parse("31") == Partition({3, 1}));
  CHECK(Partition::parse("2,1,1") == Partition({2, 1, 1}));
  CHECK(Partition::parse("(1^4)") == Partition({1, 1, 1, 1}));
  CHECK(Partition::parse("10,2") == Partition({10, 2}));
  CHECK(Partition({10, 2}).compact() == "10,2");
  CHECK(Partition({11}).to_string() == "[11,]");
  CHECK(Partition::parse("[11,]") == Partition({11}));
  CHECK(Partition::parse("11") == Partition({1, 1}));
  // exponents are single digits except on the trailing run of ones
  CHECK(Partition::parse("[3^22^2]") == Partition({3, 3, 2, 2}));
  CHECK(Partition::parse("[1^12]") == Partition(std::vector<int>(12, 1)));
  CHECK(Partition::parse("[21^10]").n() == 12);
  CHECK(Partition::parse_unordered("13") == Partition({3, 1}));
  CHECK_THROWS_AS(Partition::parse("[2^]"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse(""), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("1,2"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("2a"), InvalidInput);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidInput);
  CHECK(Partition::canonical({1, 3, 0, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("rendering round-trips through parse") {
  for (int n = 1; n <= kMaxPartitionN; ++n)
    for (const auto& p : partitions_of(n)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("irrep dimensions") {
  CHECK(irrep_dimension(Partition({1, 1, 1, 1})) == 1);
  CHECK(irrep_dimension(Partition({3, 1})) == brute::standard_tableaux({3, 1}));
  CHECK(irrep_dimension(Partition({3, 1})) == 3);
  CHECK(irrep_dimension(Partition({2, 2})) == 2);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) CHECK(irrep_dimension(p) == brute::standard_tableaux(p.part_vector()));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({4})) == Partition({1, 1, 1, 1}));
  CHECK(conjugate(Partition({2, 1, 1})) == Partition({3, 1}));
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("class sizes") {
  CHECK(class_size(CycleType{Partition({1, 1, 1, 1})}) == 1);
  CHECK(class_size(CycleType{Partition({2, 2})}) == 3);
  const auto sizes = brute::class_sizes(4);
  CHECK(class_size(CycleType{Partition({3, 1})}) == sizes.at({3, 1}));
  CHECK(class_size(CycleType{Partition({3, 1})}) == 8);
  for (int n = 1; n <= 7; ++n) {
    const auto counted = brute::class_sizes(n);
    for (const auto& p : partitions_of(n)) {
      CHECK(class_size(CycleType{p}) == counted.at(p.part_vector()));
      CHECK(class_size(CycleType{p}) * centralizer_order(CycleType{p}) == factorial(n));
    }
  }
}

TEST_CASE("sum rules hold for every n up to 8") {
  for (int n = 1; n <= 8; ++n) {
    Count squares = 0;
    Count classes = 0;
    for (const auto& p : partitions_of(n)) {
      squares += irrep_dimension(p) * irrep_dimension(p);
      classes += class_size(CycleType{p});
      CHECK(irrep_dimension(p) == irrep_dimension(conjugate(p)));
    }
    CHECK(squares == factorial(n));
    CHECK(classes == factorial(n));
  }
}

TEST_CASE("cycle types and signs") {
  const std::vector<int> reversal = {3, 2, 1, 0};
  CHECK(cycle_type_of(reversal).cycles == Partition({2, 2}));
  CHECK(sign(CycleType{Partition({2, 2})}) == 1);
  CHECK(sign(CycleType{Partition({2, 1, 1})}) == -1);
  CHECK(CycleType{Partition({1, 1, 1})}.is_identity());
}

TEST_CASE("standard tableaux are listed row-superstandard first") {
  const auto t = standard_tableaux(Partition({2, 1}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == std::vector<int>{0, 0, 1});
  CHECK(t[1] == std::vector<int>{0, 1, 0});
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) CHECK(Count(standard_tableaux(p).size()) == irrep_dimension(p));
}

TEST_CASE("factorials never wrap") {
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK(binomial(30, 15) == 155117520);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(to_int64(factorial(25)), AlgorithmViolation);
}
