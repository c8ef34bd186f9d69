#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dynres/betti.hpp"

using namespace dynres;

TEST_CASE("Component generator degrees of the Koszul table") {
  BettiTable t(Format(1, 3, 3, 1), {1, 1, 1}, {2, 2, 2}, {3});
  REQUIRE(component_generator_degrees(t, 0) == std::vector<long long>{1, 1, 1});
  REQUIRE(component_generator_degrees(t, 1) == std::vector<long long>{0});
}

TEST_CASE("Component generator degrees of the non-perfect example table") {
  BettiTable t(Format(1, 4, 4, 1), {2, 2, 2, 2}, {3, 3, 3, 3}, {4});
  REQUIRE(component_generator_degrees(t, 0) == std::vector<long long>{2, 2, 2, 2});
  REQUIRE(component_generator_degrees(t, 1) == std::vector<long long>{2, 2, 2, 2});
}

TEST_CASE("Component generator degrees of the Pfaffian table") {
  BettiTable t(Format(1, 5, 5, 1), {2, 2, 2, 2, 2}, {3, 3, 3, 3, 3}, {5});
  auto d1 = component_generator_degrees(t, 1);
  REQUIRE(d1.size() == 10);  // dim Lambda^3 C^5
  for (long long d : d1) REQUIRE(d == 1);
}

TEST_CASE("Multiset sizes match component dimensions") {
  BettiTable t(Format(1, 5, 6, 2), {3, 3, 3, 3, 4}, {4, 4, 4, 4, 5, 5}, {6, 7});
  LeviDecomposition dec = z1_decomposition(t.format);
  for (int j = 0; j <= 4; ++j) {
    Int expected = 0;
    for (const auto& c : dec.components)
      if (c.j == j)
        expected += Int(c.multiplicity) * schur_dimension(c.lambda, 2) * schur_dimension(c.mu, 5);
    REQUIRE(Int(component_generator_degrees(t, j).size()) == expected);
  }
}

TEST_CASE("Admissibility: non-Dynkin format is flagged") {
  BettiTable t(Format(1, 6, 8, 3), {2, 2, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3}, {4, 4, 4});
  AdmissibilityReport rep = admissibility_report(t);
  REQUIRE_FALSE(rep.dynkin);
}

TEST_CASE("Admissibility: Koszul table passes all flags") {
  BettiTable t(Format(1, 3, 3, 1), {1, 1, 1}, {2, 2, 2}, {3});
  AdmissibilityReport rep = admissibility_report(t);
  REQUIRE(rep.dynkin);
  REQUIRE(rep.degree_zero_generator);
  REQUIRE(rep.inequality_2min_lt_max);
  REQUIRE(rep.parity_ok);
}

TEST_CASE("Admissibility: the non-perfect table lacks a degree-zero generator") {
  BettiTable t(Format(1, 4, 4, 1), {2, 2, 2, 2}, {3, 3, 3, 3}, {4});
  AdmissibilityReport rep = admissibility_report(t);
  REQUIRE(rep.dynkin);
  REQUIRE_FALSE(rep.degree_zero_generator);
}

TEST_CASE("Admissibility: all-odd s1 with all-even s3 fails parity") {
  BettiTable t(Format(1, 5, 5, 1), {3, 3, 3, 3, 3}, {4, 4, 4, 4, 4}, {8});
  AdmissibilityReport rep = admissibility_report(t);
  REQUIRE(rep.dynkin);
  REQUIRE_FALSE(rep.parity_ok);
  REQUIRE_FALSE(rep.degree_zero_generator);
}

TEST_CASE("Degree-zero generator implies the two coarser flags") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> tw(1, 7);
  int with_zero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Format f = (trial % 2 == 0) ? Format(1, 4, 4, 1) : Format(1, 5, 5, 1);
    std::vector<long long> s1(f.f1), s2(f.f2), s3(f.f3);
    for (auto& v : s1) v = tw(rng);
    for (auto& v : s2) v = tw(rng);
    for (auto& v : s3) v = tw(rng) + 4;
    BettiTable t(f, s1, s2, s3);
    AdmissibilityReport rep = admissibility_report(t);
    if (rep.degree_zero_generator) {
      ++with_zero;
      REQUIRE(rep.inequality_2min_lt_max);
      REQUIRE(rep.parity_ok);
    }
  }
  REQUIRE(with_zero > 10);
}

TEST_CASE("Malformed tables are rejected") {
  REQUIRE_THROWS_AS(BettiTable(Format(1, 3, 3, 1), {1, 1}, {2, 2, 2}, {3}), malformed_format);
  REQUIRE_THROWS_AS(BettiTable(Format(2, 5, 5, 2), {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {3, 3}),
                    unsupported_f0);
}
