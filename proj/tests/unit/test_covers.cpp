#include "doctest.h"

#include "asdim/covers.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asdim;
using asdim::test::cover;
using asdim::test::q;

TEST_CASE("Cover construction") {
  auto m = test::p5();
  CHECK_THROWS_AS(cover(m, {{0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(cover(m, {{0, 1, 2, 3, 4}, {}}), ValidationError);
  CHECK_THROWS_AS(cover(m, {{0, 1, 2, 3, 4, 7}}), ValidationError);
  auto c = cover(m, {{2, 1, 0}, {4, 3, 2}, {0, 1, 2}});
  CHECK(c.members()[0] == PointSet{0, 1, 2});
  CHECK(c.size() == 3);
}

TEST_CASE("dimension") {
  auto m = test::p5();
  CHECK(dimension(cover(m, {{0, 1, 2}, {2, 3, 4}})) == 1);
  CHECK(dimension(cover(m, {{0}, {1, 2}, {3, 4}})) == 0);
  CHECK(dimension(cover(test::c4(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 1);
}

TEST_CASE("lebesgue_number") {
  auto m = test::p5();
  CHECK(lebesgue_number(cover(m, {{0, 1, 2, 3, 4}})).is_infinite());
  CHECK(lebesgue_number(cover(m, {{0, 1, 2}, {2, 3, 4}})) == ExtScalar(1));
  CHECK(lebesgue_number(cover(m, {{0, 1, 2, 3}, {1, 2, 3, 4}})) == ExtScalar(2));
}

TEST_CASE("mesh") {
  auto m = test::p5();
  CHECK(mesh(cover(m, {{0}, {1}, {2}, {3}, {4}})) == 0);
  CHECK(mesh(cover(m, {{0, 1, 2}, {2, 3, 4}})) == 2);
  CHECK(mesh(cover(test::c4(), {{0, 1, 2}, {3}})) == 2);
}

TEST_CASE("is_r_disjoint") {
  auto m = test::p5();
  CHECK(is_r_disjoint(*m, {{0}, {4}}, 3));
  auto check = is_r_disjoint(*m, {{0}, {4}}, 4);
  CHECK_FALSE(check);
  REQUIRE(check.witness);
  CHECK(check.witness->x == 0);
  CHECK(check.witness->y == 4);
  CHECK(check.witness->distance == 4);
  CHECK(is_r_disjoint(*m, {{0, 1}, {3, 4}}, 1));
}

TEST_CASE("validate_decomposition") {
  auto m = test::p5();
  auto missing = validate_decomposition({m, 1, {{{0, 1}}, {{3, 4}}}});
  CHECK(missing.violations.contains("coverage"));
  REQUIRE(!missing.violations.entries().empty());

  auto good = validate_decomposition({m, 1, {{{0, 1}, {3, 4}}, {{2}}}});
  CHECK(good.ok());
  REQUIRE(good.piece_mesh);
  CHECK(*good.piece_mesh == 1);

  auto both = validate_decomposition({test::c4(), 2, {{{0}, {2}}}});
  CHECK(both.violations.contains("coverage"));
  CHECK(both.violations.contains("disjointness"));

  auto empty = validate_decomposition({m, 1, {{{0, 1, 2, 3, 4}, {}}}});
  CHECK(empty.violations.contains("empty-piece"));
  auto unknown = validate_decomposition({m, 1, {{{0, 1, 2, 3, 4, 9}}}});
  CHECK(unknown.violations.contains("unknown-point"));
}

TEST_CASE("ball_meet_count") {
  auto m = test::p5();
  CHECK(ball_meet_count(cover(m, {{0}, {1}, {2}, {3}, {4}}), 1) == 1);
  CHECK(ball_meet_count(cover(m, {{0, 1, 2}, {2, 3, 4}}), 2) == 2);
  CHECK(ball_meet_count(cover(m, {{0, 1, 2}, {2, 3, 4}}), q(1, 2)) == 2);
}

TEST_CASE("decomposition_to_cover") {
  auto m = test::p5();
  SUBCASE("single piece") {
    auto out = decomposition_to_cover({m, 4, {{{0, 1, 2, 3, 4}}}});
    CHECK(out.certificate.dimension == 0);
    CHECK(out.cover.size() == 1);
  }
  SUBCASE("integer metric is not thickened by r/4") {
    auto out = decomposition_to_cover({m, 1, {{{0, 1}, {3, 4}}, {{2}}}});
    CHECK(out.cover.members()
          == std::vector<PointSet>{{0, 1}, {3, 4}, {2}});
    CHECK(out.certificate.dimension == 0);
    CHECK(out.certificate.lebesgue >= ExtScalar(q(1, 4)));
    CHECK(out.certificate.lebesgue == ExtScalar(1));
  }
  SUBCASE("segment of length 8") {
    auto seg = path_space(9);
    auto out = decomposition_to_cover({seg, 4, {{{0, 1, 2, 3}}, {{4, 5, 6, 7, 8}}}});
    CHECK(out.cover.members()
          == std::vector<PointSet>{{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7, 8}});
    CHECK(out.certificate.dimension == 1);
    CHECK(out.certificate.lebesgue >= ExtScalar(1));
  }
  SUBCASE("invalid decomposition") {
    CHECK_THROWS_AS(decomposition_to_cover({m, 1, {{{0, 1}}, {{3, 4}}}}),
                    ValidationError);
  }
}

TEST_CASE("certificates agree with brute force on random covers") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Random rng(seed);
    auto   m = random_metric_space(rng.between(1, 9), rng);
    std::vector<PointSet> members;
    std::size_t           k = rng.between(1, 4);
    for (std::size_t i = 0; i < k; ++i) {
      PointSet u;
      for (PointId x = 0; x < m->size(); ++x) {
        if (rng.between(0, 2) == 0) {
          u.push_back(x);
        }
      }
      if (!u.empty()) {
        members.push_back(u);
      }
    }
    // Fill any gaps so the family covers.
    for (PointId x = 0; x < m->size(); ++x) {
      bool covered = false;
      for (auto const& u : members) {
        covered = covered || std::binary_search(u.begin(), u.end(), x);
      }
      if (!covered) {
        members.push_back({x});
      }
    }
    Cover c(m, members);
    auto  cert = certify(c);

    std::vector<std::set<PointId>> sets;
    for (auto const& u : members) {
      sets.emplace_back(u.begin(), u.end());
    }
    // Lebesgue number: the largest R among distances for which every open
    // R-ball lies in a member.
    if (cert.lebesgue.is_finite()) {
      auto L = cert.lebesgue.value();
      CHECK(oracle::every_ball_inside(*m, sets, L));
      Scalar next = L + Scalar(1, 1000);
      CHECK_FALSE(oracle::every_ball_inside(*m, sets, next));
    } else {
      CHECK(std::any_of(members.begin(), members.end(), [&](auto const& u) {
        return u.size() == m->size();
      }));
    }

    int max_mult = 0;
    for (PointId x = 0; x < m->size(); ++x) {
      int mult = 0;
      for (auto const& u : sets) {
        mult += static_cast<int>(u.count(x));
      }
      max_mult = std::max(max_mult, mult);
    }
    CHECK(cert.dimension == max_mult - 1);
  }
}
