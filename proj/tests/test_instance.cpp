#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/instance.hpp"
#include "support.hpp"

using namespace invsemi;

namespace {
  std::size_t parse_error_line(std::string const& text) {
    try {
      parse_instance(text);
    } catch (Error const& e) {
      CHECK(e.kind() == "ParseError");
      REQUIRE(e.witness().size() == 1);
      return e.witness()[0];
    }
    FAIL("parsed: " << text);
    return 0;
  }
}  // namespace

TEST_CASE("the example data file") {
  auto const inst = parse_instance_file(testing_support::data_file("vexample.inv"));
  CHECK(inst == generate("vexample", 0));
  auto const S = semigroup_of(inst);
  CHECK(S.names() == std::vector<std::string>{"0", "e", "f"});
  REQUIRE(inst.congruence);
  CHECK(inst.congruence->generated);
  CHECK(congruence_of(inst, S)->classes()
        == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  REQUIRE(inst.action);
  auto const maps = action_maps(inst);
  CHECK(to_string(maps[1]) == "id{0,1}");
  CHECK(action_block(maps, 3) == *inst.action);
}

TEST_CASE("explicit congruence blocks") {
  auto const inst = parse_instance_file(testing_support::data_file("z2_swap.inv"));
  auto const S    = semigroup_of(inst);
  CHECK(S.is_group());
  CHECK(*congruence_of(inst, S) == Congruence::universal(2));
  CHECK(to_string(action_maps(inst)[1]) == "{0->1,1->0}");
}

TEST_CASE("parse errors carry the line number") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("# only a comment\n\nnames a\n") == 3);
  CHECK(parse_error_line("semigroup 2\n0 0\n0\n") == 3);
  CHECK(parse_error_line("semigroup 1\n0\nnames a b\n") == 3);
  CHECK(parse_error_line("semigroup 1\n0\nwhatever\n") == 3);
  CHECK(parse_error_line("semigroup 2\n0 0\n0 2\n") == 3);
  CHECK(parse_error_line("semigroup 1\n0\naction 2\n0 x\n") == 4);
  CHECK(parse_error_line("semigroup 1\n0\naction 2\n0 2\n") == 4);
  CHECK(parse_error_line("semigroup 1\n0\ncongruence 1\n1\n") == 4);
  CHECK(parse_error_line("semigroup 1\n0\ncongruence-gen 1\n") == 4);
  CHECK(parse_error_line("semigroup 0\n") == 1);
  CHECK(parse_error_line("semigroup 1\n0\nsubset 0\nsubset 0\n") == 4);
}

TEST_CASE("algebra is checked only when used") {
  auto const inst = parse_instance("semigroup 2\n0 1\n0 0\n");
  try {
    semigroup_of(inst);
    FAIL("accepted a non-associative table");
  } catch (Error const& e) {
    CHECK(e.kind() == "NotAssociative");
  }
}

TEST_CASE("built-in families") {
  CHECK(semigroup_of(generate("In", 0)).size() == 1);
  CHECK(semigroup_of(generate("In", 1)).size() == 2);
  auto const I2 = semigroup_of(generate("In", 2));
  CHECK(I2.size() == 7);
  CHECK(I2.idempotents().size() == 4);
  CHECK(semigroup_of(generate("In", 3)).size() == 34);
  CHECK(semigroup_of(generate("chain", 5)).is_semilattice());
  CHECK(semigroup_of(generate("cyclic", 6)).is_group());

  auto kind = [](std::string const& family, std::size_t param) {
    try {
      generate(family, param);
    } catch (Error const& e) {
      return e.kind();
    }
    return std::string("none");
  };
  CHECK(kind("In", 4) == "OutOfRange");
  CHECK(kind("chain", 0) == "OutOfRange");
  CHECK(kind("cyclic", 9) == "OutOfRange");
  CHECK(kind("free", 1) == "UnknownFamily");
}

TEST_CASE("emit and parse round-trip", "[property]") {
  std::vector<InstanceFile> all = {generate("vexample", 0),
                                   parse_instance_file(testing_support::data_file("z2_swap.inv"))};
  for (auto const& [name, S] : standard_corpus()) all.push_back(instance_of(S));
  auto with_subset = generate("In", 2);
  with_subset.subset = std::vector<std::size_t>{0, 2};
  all.push_back(with_subset);

  for (auto const& inst : all) {
    auto const text = emit_instance(inst);
    auto const back = parse_instance(text);
    CHECK(back == inst);
    // emitting is canonical
    CHECK(emit_instance(back) == text);
  }
}
