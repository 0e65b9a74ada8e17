#include <algorithm>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace invsemi;

TEST_CASE("validating partitions of V") {
  auto const V = example_semilattice();
  CHECK(validate_congruence(V, {0, 1, 2}) == Congruence::equality(3));
  CHECK(validate_congruence(V, {0, 0, 1}).classes()
        == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(validate_congruence(V, {0, 1, 0}).num_classes() == 2);
  // {0},{e,f}: e ~ f would give e = ee ~ ef = 0
  auto const all = oracle::congruences(V.table());
  CHECK(std::find(all.begin(), all.end(), std::vector<std::size_t>{0, 1, 1})
        == all.end());
  try {
    validate_congruence(V, {0, 1, 1});
    FAIL("accepted {0},{e,f}");
  } catch (Error const& e) {
    CHECK(e.kind() == "NotCompatible");
  }
  CHECK_THROWS_AS(validate_congruence(V, {0, 0}), Error);
}

TEST_CASE("idempotent purity") {
  auto const V = example_semilattice();
  CHECK(is_idempotent_pure(V, Congruence::equality(3)));
  CHECK(is_idempotent_pure(V, validate_congruence(V, {0, 0, 1})));
  auto const Z2 = cyclic_group(2);
  CHECK_FALSE(is_idempotent_pure(Z2, Congruence::universal(2)));
}

TEST_CASE("generated congruences") {
  auto const V = example_semilattice();
  CHECK(congruence_generated_by(V, {}) == Congruence::equality(3));
  auto const rho = congruence_generated_by(V, {{0, 1}});
  CHECK(rho.classes() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(congruence_generated_by(cyclic_group(2), {{0, 1}})
        == Congruence::universal(2));
  CHECK_THROWS_AS(congruence_generated_by(V, {{0, 3}}), Error);
  // e ~ f forces e = ee ~ ef = 0
  CHECK(congruence_generated_by(V, {{1, 2}}) == Congruence::universal(3));
}

TEST_CASE("quotients") {
  auto const V   = example_semilattice();
  auto const rho = congruence_generated_by(V, {{0, 1}});
  auto const Q   = quotient(V, rho);
  CHECK(Q.semigroup.size() == 2);
  CHECK(Q.semigroup.names() == std::vector<std::string>{"[e]", "[f]"});
  CHECK(Q.projection == std::vector<std::size_t>{0, 0, 1});
  // [e][f] = [ef] = [0] = [e], so [e] <= [f]
  CHECK(Q.semigroup.product(0, 1) == 0);
  CHECK(Q.semigroup.leq(0, 1));
  CHECK_FALSE(Q.semigroup.leq(1, 0));

  auto const I2 = symmetric_inverse_monoid(2);
  CHECK(quotient(I2, Congruence::equality(7)).semigroup.table() == I2.table());
}

TEST_CASE("enumeration on small instances") {
  auto const c2 = enumerate_congruences(chain(2));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == Congruence::universal(2));
  CHECK(c2[1] == Congruence::equality(2));
  CHECK(enumerate_congruences(chain(2), true).size() == 2);

  auto const z2 = enumerate_congruences(cyclic_group(2));
  CHECK(z2.size() == 2);
  auto const z2_pure = enumerate_congruences(cyclic_group(2), true);
  REQUIRE(z2_pure.size() == 1);
  CHECK(z2_pure[0] == Congruence::equality(2));

  CHECK(enumerate_congruences(example_semilattice()).size() == 4);
  CHECK_THROWS_AS(enumerate_congruences(symmetric_inverse_monoid(3)), Error);
}

TEST_CASE("enumeration matches a brute-force partition search", "[property]") {
  for (auto const& [name, S] : standard_corpus(7)) {
    INFO(name);
    std::vector<std::vector<std::size_t>> got, pure;
    for (auto const& rho : enumerate_congruences(S)) got.push_back(rho.class_ids());
    for (auto const& rho : enumerate_congruences(S, true))
      pure.push_back(rho.class_ids());
    auto const expect = oracle::congruences(S.table());
    CHECK(got == expect);
    std::vector<std::vector<std::size_t>> expect_pure;
    for (auto const& c : expect)
      if (oracle::idempotent_pure(S.table(), c)) expect_pure.push_back(c);
    CHECK(pure == expect_pure);
  }
}

TEST_CASE("idempotent-pure congruences lie inside compatibility and sigma",
          "[property]") {
  for (auto const& [name, S] : standard_corpus()) {
    INFO(name);
    auto const sim = compatibility(S);
    auto const sig = sigma(S).relation();
    for (auto const& rho : enumerate_congruences(S, true)) {
      CHECK(rho.relation().is_subset_of(sim));
      CHECK(sim.is_subset_of(sig));
      // a pure congruence with a group quotient is sigma
      if (quotient(S, rho).semigroup.is_group()) CHECK(rho == sigma(S));
      auto const Q = quotient(S, rho);
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b)
          CHECK(Q.projection[S.product(a, b)]
                == Q.semigroup.product(Q.projection[a], Q.projection[b]));
    }
  }
}

TEST_CASE("generated congruence is the intersection of all containing ones",
          "[property]") {
  std::mt19937_64 rng(testing_support::seed());
  for (int trial = 0; trial < 60; ++trial) {
    auto const g = testing_support::random_inverse_semigroup(rng, 3, 8);
    auto const& S = g.semigroup;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t const k = rng() % 3;
    for (std::size_t i = 0; i < k; ++i)
      pairs.emplace_back(rng() % S.size(), rng() % S.size());
    auto const rho = congruence_generated_by(S, pairs);

    BinaryRelation meet = BinaryRelation::universal(S.size());
    for (auto const& c : oracle::congruences(S.table())) {
      bool contains = true;
      for (auto [a, b] : pairs) contains = contains && c[a] == c[b];
      if (!contains) continue;
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b)
          if (c[a] != c[b]) meet.erase(a, b);
    }
    CHECK(rho.relation() == meet);
  }
}
