#include "doctest.h"

#include "../common/instances.hpp"
#include "asdim/sspace.hpp"
#include "fixtures.hpp"

using namespace asdim;
using asdim::test::q;

namespace {
  SpacePtr point() {
    return path_space(1);
  }

  SSpace two_c4() {
    return build_sspace({test::c4(), test::c4()}, {{0, 2}, {0, 2}}, {2, 3});
  }
}  // namespace

TEST_CASE("build_sspace") {
  SUBCASE("two points") {
    auto s = build_sspace({point(), point()}, {{0}, {0}}, {1, 2});
    CHECK(s.assembled()->dist(0, 1) == 2);
  }
  SUBCASE("segment and point") {
    auto s = build_sspace({path_space(2), point()}, {{0}, {0}}, {1, 2});
    CHECK(s.assembled()->dist(s.global_point(0, 1), s.global_point(1, 0)) == 3);
    CHECK(s.assembled()->label(2) == "1:0");
    CHECK(s.component_of(2) == 1);
    CHECK(s.local_point(2) == 0);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(build_sspace({path_space(2)}, {{0, 1}}, {q(1, 2)}),
                    ValidationError);
    CHECK_THROWS_AS(build_sspace({point(), point()}, {{0}, {0}}, {2, 2}),
                    ValidationError);
    CHECK_THROWS_AS(build_sspace({point()}, {{}}, {1}), ValidationError);
    CHECK_THROWS_AS(build_sspace({point()}, {{3}}, {1}), ValidationError);
    CHECK_THROWS_AS(build_sspace({point()}, {{0}}, {0}), ValidationError);
  }
  SUBCASE("prefix is the S-space of the first components") {
    auto s = build_sspace({path_space(3), point(), path_space(2)},
                          {{1}, {0}, {0, 1}}, {2, 3, 5});
    auto p = build_sspace({path_space(3), point()}, {{1}, {0}}, {2, 3});
    CHECK(*s.prefix(2) == *p.assembled());
  }
}

TEST_CASE("S-spaces are metric spaces") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Random rng(seed);
    auto   s = test::random_sspace(rng, 4, 8);
    CHECK(validate_metric(*s.assembled()).ok());
  }
}

TEST_CASE("sspace_componentwise_action") {
  SUBCASE("trivial group") {
    auto s = build_sspace({test::p5(), point()}, {{0}, {0}}, {4, 5});
    std::vector<IsometricAction> acts{IsometricAction::trivial(test::p5()),
                                      IsometricAction::trivial(point())};
    auto a = sspace_componentwise_action(s, acts);
    CHECK(validate_action(a).ok());
    CHECK(orbits(a).size() == 6);
  }
  SUBCASE("two antipodal 4-cycles") {
    auto s = two_c4();
    std::vector<IsometricAction> acts{cycle_rotation(s.components()[0], 2),
                                      cycle_rotation(s.components()[1], 2)};
    CHECK(validate_action(sspace_componentwise_action(s, acts)).ok());
  }
  SUBCASE("basepoints not invariant") {
    auto s = build_sspace({test::c4(), test::c4()}, {{0}, {0, 2}}, {2, 3});
    std::vector<IsometricAction> acts{cycle_rotation(s.components()[0], 2),
                                      cycle_rotation(s.components()[1], 2)};
    CHECK_THROWS_AS(sspace_componentwise_action(s, acts), ValidationError);
  }
}

TEST_CASE("sspace_quotient_commute") {
  SUBCASE("single component reduces to the quotient") {
    auto s = build_sspace({test::p5()}, {{0, 4}}, {4});
    std::vector<IsometricAction> acts{path_reflection(s.components()[0])};
    auto out = sspace_quotient_commute(s, acts);
    auto q   = quotient(acts[0]);
    CHECK(out.lhs.base->table() == q.base->table());
    CHECK(out.rhs.assembled()->table() == q.base->table());
  }
  SUBCASE("4-cycle and 5-path under Z/2") {
    auto s = build_sspace({test::c4(), test::p5()}, {{0, 2}, {1, 3}}, {4, 5});
    std::vector<IsometricAction> acts{cycle_rotation(s.components()[0], 2),
                                      path_reflection(s.components()[1])};
    auto out = sspace_quotient_commute(s, acts);
    auto const& l = *out.lhs.base;
    auto const& r = *out.rhs.assembled();
    REQUIRE(l.size() == r.size());
    CHECK(l.size() == 5);
    for (PointId i = 0; i < l.size(); ++i) {
      for (PointId j = 0; j < l.size(); ++j) {
        CHECK(l.dist(i, j) == r.dist(out.bijection[i], out.bijection[j]));
      }
    }
  }
  SUBCASE("random instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Random rng(seed);
      auto   inst = test::random_equivariant_sspace(rng, 2, 3, 8);
      auto   out  = sspace_quotient_commute(inst.space, inst.actions);
      auto   bij  = out.bijection;
      std::sort(bij.begin(), bij.end());
      CHECK(std::adjacent_find(bij.begin(), bij.end()) == bij.end());
      CHECK(bij.size() == out.rhs.assembled()->size());
    }
  }
}

TEST_CASE("restrict_decomposition") {
  auto s = build_sspace({path_space(3), point()}, {{0}, {0}}, {2, 3});
  SUBCASE("whole space") {
    auto parts = restrict_decomposition(s, {s.assembled(), 0, {{{0, 1, 2, 3}}}});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].families == std::vector<std::vector<PointSet>>{{{0, 1, 2}}});
    CHECK(parts[1].families == std::vector<std::vector<PointSet>>{{{0}}});
  }
  SUBCASE("aligned pieces") {
    auto parts = restrict_decomposition(s, {s.assembled(), 1, {{{0, 1, 2}, {3}}}});
    CHECK(parts[0].families == std::vector<std::vector<PointSet>>{{{0, 1, 2}}});
    CHECK(parts[1].families == std::vector<std::vector<PointSet>>{{{0}}});
  }
  SUBCASE("random decompositions") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Random rng(seed);
      auto   rs = test::random_sspace(rng, 3, 6);
      Scalar r(static_cast<std::int64_t>(rng.between(0, 4)));
      auto   d  = test::random_decomposition(rng, rs.assembled(), r);
      REQUIRE(validate_decomposition(d).ok());
      for (auto const& part : restrict_decomposition(rs, d)) {
        CHECK(validate_decomposition(part).ok());
        CHECK(part.r == r);
      }
    }
  }
}

TEST_CASE("merge_decompositions") {
  SUBCASE("one component") {
    auto          s = build_sspace({test::p5()}, {{0}}, {1});
    Decomposition head{s.prefix(1), 1, {{{0, 1}, {3, 4}}, {{2}}}};
    auto          out = merge_decompositions(s, head, {}, 1);
    CHECK(out.families == head.families);
  }
  SUBCASE("two singleton families") {
    auto s = build_sspace({path_space(3), path_space(2)}, {{0}, {0}}, {2, 3});
    Decomposition head{s.prefix(1), 1, {{{0}, {2}}, {{1}}}};
    std::vector<Decomposition> tails{{s.components()[1], 1, {{{0}}, {{1}}}}};
    auto out = merge_decompositions(s, head, tails, 1);
    CHECK(validate_decomposition(out).ok());
    CHECK_THROWS_AS(merge_decompositions(s, head, tails, 5), ValidationError);
  }
  SUBCASE("restrict then merge gives back the tails") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Random rng(seed);
      auto   s = test::random_sspace(rng, 4, 6);
      if (s.component_count() < 2) {
        continue;
      }
      std::size_t const head_count = rng.between(1, s.component_count() - 1);
      Scalar r = s.weights()[head_count] - 1;
      if (r < 0) {
        r = 0;
      }
      auto head = test::random_decomposition(rng, s.prefix(head_count), r);
      std::vector<Decomposition> tails;
      std::size_t                families = head.families.size();
      for (std::size_t n = head_count; n < s.component_count(); ++n) {
        tails.push_back(test::random_decomposition(rng, s.components()[n], r));
        families = std::max(families, tails.back().families.size());
      }
      test::pad_families(head, families);
      for (auto& t : tails) {
        test::pad_families(t, families);
      }
      auto merged = merge_decompositions(s, head, tails, r);
      CHECK(validate_decomposition(merged).ok());
      auto parts = restrict_decomposition(s, merged);
      for (std::size_t i = 0; i < tails.size(); ++i) {
        auto const& got = parts[head_count + i].families;
        REQUIRE(got.size() == tails[i].families.size());
        for (std::size_t j = 0; j < got.size(); ++j) {
          auto a = got[j];
          auto b = tails[i].families[j];
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          CHECK(a == b);
        }
      }
    }
  }
}
