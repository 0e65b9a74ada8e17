#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/pbij.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace invsemi;

namespace {
  constexpr auto undef = PartialBijection::undefined;

  PartialBijection pb(std::vector<std::size_t> images) {
    return PartialBijection::from_images(std::move(images));
  }

  oracle::Graph graph(PartialBijection const& f) {
    return oracle::graph(f.images(), undef);
  }

  // V's idempotents in the order 0, e, f.
  Semilattice V_E() {
    return Semilattice::from_semigroup(example_semilattice());
  }
}  // namespace

TEST_CASE("from_images rejects non-injective and out-of-range images") {
  CHECK_THROWS_AS(pb({1, 1}), Error);
  try {
    pb({2, 0, 2});
  } catch (Error const& e) {
    CHECK(e.kind() == "NotInjective");
    CHECK(e.witness() == std::vector<std::size_t>{0, 2});
  }
  try {
    pb({0, 5});
  } catch (Error const& e) {
    CHECK(e.kind() == "BadImage");
  }
}

TEST_CASE("composition applies the right factor first") {
  auto const f = pb({1, undef, undef});
  auto const g = pb({undef, undef, 0});
  CHECK(compose(f, g) == pb({undef, undef, 1}));
  CHECK(compose(PartialBijection::identity(3), f) == f);
  CHECK(compose(f, f.inverse()) == pb({undef, 1, undef}));
  CHECK_THROWS_AS(compose(f, PartialBijection::identity(2)), Error);
}

TEST_CASE("order is inclusion") {
  auto const f = pb({1, undef, 2});
  CHECK(leq(PartialBijection(3), f));
  CHECK(leq(f, f));
  CHECK(leq(pb({1, undef, undef}), f));
  CHECK_FALSE(leq(pb({2, undef, undef}), f));

  std::vector<std::size_t> const zero_e = {0, 1}, zero_f = {0, 2};
  CHECK_FALSE(leq(PartialBijection::identity_on(3, zero_e),
                  PartialBijection::identity_on(3, zero_f)));
}

TEST_CASE("joins") {
  auto const f = pb({1, undef, 2});
  std::vector<PartialBijection> const one = {f};
  CHECK(join(one) == f);

  std::vector<std::size_t> const zero_e = {0, 1}, zero = {0};
  std::vector<PartialBijection> const ex = {
      PartialBijection::identity_on(3, zero_e),
      PartialBijection::identity_on(3, zero)};
  CHECK(join(ex) == PartialBijection::identity_on(3, zero_e));

  std::vector<PartialBijection> const clash = {pb({0, 1}), pb({1, 0})};
  auto const out = try_join(clash, 2);
  REQUIRE_FALSE(out);
  CHECK(out.conflict->kind == JoinConflict::Kind::two_images);
  CHECK(out.conflict->point == 0);
  CHECK(out.conflict->first == 0);
  CHECK(out.conflict->second == 1);
  try {
    join(clash);
    FAIL("join succeeded");
  } catch (Error const& e) {
    CHECK(e.kind() == "JoinFails");
    CHECK(e.witness() == std::vector<std::size_t>{0, 0, 1});
  }

  std::vector<PartialBijection> const injectivity = {pb({0, undef}),
                                                     pb({undef, 0})};
  auto const bad = try_join(injectivity, 2);
  REQUIRE_FALSE(bad);
  CHECK(bad.conflict->kind == JoinConflict::Kind::two_preimages);
  CHECK(bad.conflict->point == 0);

  CHECK(try_join({}, 4).value == PartialBijection(4));
}

TEST_CASE("ideal isomorphisms of a semilattice") {
  auto const E = V_E();
  std::vector<std::size_t> const zero_e = {0, 1};
  CHECK(is_ideal_iso(PartialBijection::identity_on(3, zero_e), E));
  // e <-> f swaps two maximal elements and fixes 0
  CHECK(is_ideal_iso(pb({0, 2, 1}), E));
  // {e} is not an ideal
  CHECK_FALSE(is_ideal_iso(pb({undef, 1, undef}), E));

  auto const two = Semilattice::from_semigroup(chain(2));
  CHECK_FALSE(is_ideal_iso(pb({undef, 1}), two));
  CHECK(is_ideal_iso(PartialBijection::identity(2), two));
  // 0 -> 1, 1 -> 0 reverses the order
  CHECK_FALSE(is_ideal_iso(pb({1, 0}), two));
}

TEST_CASE("printing") {
  std::vector<std::size_t> const pts = {0, 2};
  CHECK(to_string(PartialBijection::identity_on(3, pts)) == "id{0,2}");
  CHECK(to_string(pb({1, undef, 0})) == "{0->1,2->0}");
  CHECK(to_string(PartialBijection(2)) == "id{}");
}

TEST_CASE("I_n agrees with set-of-pairs composition", "[property]") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto const all = all_partial_bijections(n);
    std::size_t expected = 0;  // sum over k of C(n,k)^2 k!
    for (std::size_t k = 0, c = 1, fact = 1; k <= n; ++k) {
      expected += c * c * fact;
      c    = c * (n - k) / (k + 1);
      fact = fact * (k + 1);
    }
    CHECK(all.size() == expected);
    for (auto const& f : all) {
      CHECK(f.inverse().inverse() == f);
      CHECK(compose(f, f.inverse()) == PartialBijection::identity_on(n, f.range()));
      CHECK(graph(f.inverse()) == oracle::inverse(graph(f)));
      for (auto const& g : all) {
        CHECK(graph(compose(f, g)) == oracle::compose(graph(f), graph(g)));
        CHECK(leq(f, g) == oracle::subset(graph(f), graph(g)));
        // f <= g iff f = g restricted to dom f
        CHECK(leq(f, g)
              == (f == compose(g, PartialBijection::identity_on(n, f.domain()))));
      }
    }
  }
  CHECK(symmetric_inverse_monoid(3).size() == 34);
}

TEST_CASE("join fails exactly when the union is not a partial bijection",
          "[property]") {
  std::mt19937_64 rng(testing_support::seed());
  auto const      all = all_partial_bijections(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PartialBijection> family;
    std::vector<oracle::Graph>    graphs;
    std::size_t const             k = 1 + rng() % 3;
    // half of the trials use restrictions of one map, which always join
    bool const common = trial % 2 == 0;
    auto const base   = all[pick(rng)];
    for (std::size_t i = 0; i < k; ++i) {
      auto f = common ? compose(base, PartialBijection::identity_on(
                                          4, all[pick(rng)].domain()))
                      : all[pick(rng)];
      graphs.push_back(graph(f));
      family.push_back(std::move(f));
    }
    auto const got    = try_join(family, 4);
    auto const expect = oracle::join(graphs);
    REQUIRE(got.value.has_value() == expect.has_value());
    if (common) CHECK(got);
    if (got) CHECK(graph(*got.value) == *expect);
  }
}

TEST_CASE("Munn maps are ideal isomorphisms", "[property]") {
  for (auto const& [name, S] : standard_corpus()) {
    INFO(name);
    auto const E = idempotent_semilattice(S);
    for (std::size_t s = 0; s < S.size(); ++s) {
      std::vector<std::size_t> image(E.element.size(), undef);
      for (std::size_t i = 0; i < E.element.size(); ++i) {
        std::size_t const e = E.element[i];
        if (S.leq(e, S.domain_idempotent(s))) {
          image[i] = E.index_of(S.product(S.product(s, e), S.inverse(s)));
        }
      }
      CHECK(is_ideal_iso(pb(image), E.lattice));
    }
  }
}
