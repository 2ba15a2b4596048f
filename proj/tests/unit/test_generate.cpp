#include "doctest.h"

#include "asdim/generate.hpp"
#include "fixtures.hpp"

using namespace asdim;

TEST_CASE("generate_instance") {
  SUBCASE("grid 3x3") {
    auto inst = generate_instance("grid", {3, 3}, 0);
    CHECK(inst.space->size() == 9);
    CHECK(diameter(*inst.space, inst.space->all_points()) == 4);
    REQUIRE(inst.action);
    CHECK(validate_action(*inst.action).ok());
  }
  SUBCASE("cycle 6 rotated by 3") {
    auto inst = generate_instance("cycle", {6, 3}, 0);
    REQUIRE(inst.action);
    CHECK(inst.action->group().order() == 2);
    CHECK(validate_action(*inst.action).ok());
  }
  SUBCASE("cycle reflection") {
    auto inst = generate_instance("cycle", {7, 0}, 0);
    REQUIRE(inst.action);
    CHECK(validate_action(*inst.action).ok());
    CHECK(orbits(*inst.action).size() == 4);
  }
  SUBCASE("random space is deterministic") {
    auto a = generate_instance("random", {8}, 7);
    auto b = generate_instance("random", {8}, 7);
    CHECK(a.space->size() == 8);
    CHECK(validate_metric(*a.space).ok());
    CHECK(*a.space == *b.space);
    CHECK_FALSE(a.action);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(generate_instance("torus", {3}, 0), ValidationError);
    CHECK_THROWS_AS(generate_instance("path", {}, 0), ValidationError);
  }
}

TEST_CASE("canonical actions are valid") {
  CHECK(validate_action(path_reflection(path_space(6))).ok());
  CHECK(validate_action(cycle_rotation(cycle_space(8), 4)).ok());
  CHECK(validate_action(cycle_rotation(cycle_space(6), 2)).ok());
  CHECK(cycle_rotation(cycle_space(6), 2).group().order() == 3);
  CHECK(validate_action(cycle_reflection(cycle_space(5))).ok());
  CHECK(validate_action(grid_rotation(grid_space(4, 4), 4, 4)).ok());
  CHECK(validate_action(grid_rotation(grid_space(3, 3), 3, 3, true)).ok());
  CHECK(validate_action(grid_rotation(grid_space(2, 3), 2, 3)).ok());
}

TEST_CASE("cayley balls") {
  auto z2 = cayley_ball("z2", 2);
  CHECK(z2.space->size() == 13);
  REQUIRE(z2.action);
  CHECK(validate_action(*z2.action).ok());
  CHECK(validate_metric(*z2.space).ok());

  auto free2 = cayley_ball("free2", 2);
  CHECK(free2.space->size() == 17);
  REQUIRE(free2.action);
  CHECK(validate_action(*free2.action).ok());
}

TEST_CASE("random equivariant instances") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Random rng(seed);
    auto   a = random_equivariant_instance(rng, 12, 6);
    CHECK(a.space().size() <= 12);
    CHECK(a.group().order() <= 6);
    CHECK(validate_metric(a.space()).ok());
    CHECK(validate_action(a).ok());
  }
  Random r1(99), r2(99);
  auto   a = random_equivariant_instance(r1, 10, 4);
  auto   b = random_equivariant_instance(r2, 10, 4);
  CHECK(a.space() == b.space());
  CHECK(a.perms() == b.perms());
}

TEST_CASE("all_subgroups") {
  CHECK(all_subgroups(FiniteGroup::cyclic(6)).size() == 4);
  CHECK(all_subgroups(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(small_groups(6).size() == 8);
  CHECK(small_groups(2).size() == 2);
}
