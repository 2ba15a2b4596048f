#include <random>

#include "doctest.h"

#include "asdim/metric.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asdim;
using asdim::test::q;

TEST_CASE("scalars parse and print exactly") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar("0.25") == Scalar(1, 4));
  CHECK(parse_scalar("-1.5") == Scalar(-3, 2));
  CHECK(format_scalar(Scalar(6, 4)) == "3/2");
  CHECK(format_scalar(Scalar(4, 2)) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK(ExtScalar(5) < ExtScalar::infinity());
  CHECK(min(ExtScalar::infinity(), ExtScalar(2)) == ExtScalar(2));
  CHECK(format_scalar(ExtScalar::infinity()) == "inf");
}

TEST_CASE("build_graph_metric") {
  SUBCASE("path") {
    CHECK(test::p5()->dist(0, 4) == 4);
  }
  SUBCASE("4-cycle antipodes") {
    CHECK(test::c4()->dist(0, 2) == 2);
  }
  SUBCASE("3x3 grid agrees with breadth-first search") {
    auto                             grid = grid_space(3, 3);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i + 1 < 3) {
          edges.emplace_back(i * 3 + j, (i + 1) * 3 + j);
        }
        if (j + 1 < 3) {
          edges.emplace_back(i * 3 + j, i * 3 + j + 1);
        }
      }
    }
    auto bfs = oracle::bfs_distances(9, edges);
    CHECK(bfs[0][8] == 4);
    for (PointId x = 0; x < 9; ++x) {
      for (PointId y = 0; y < 9; ++y) {
        CHECK(grid->dist(x, y) == bfs[x][y]);
      }
    }
    CHECK(grid->dist(grid->index_of("0,0"), grid->index_of("2,2")) == 4);
  }
  SUBCASE("weights") {
    WeightedEdge const edges[] = {{0, 1, q(1, 2)}, {1, 2, q(1, 3)}, {0, 2, q(1)}};
    auto               m       = build_graph_metric(3, edges);
    CHECK(m.dist(0, 2) == q(5, 6));
  }
  SUBCASE("disconnected graph names two vertices") {
    WeightedEdge const edges[] = {{0, 1}};
    try {
      build_graph_metric({"a", "b", "c"}, edges);
      FAIL("expected an error");
    } catch (ValidationError const& e) {
      std::string what = e.what();
      CHECK(what.find("\"a\"") != std::string::npos);
      CHECK(what.find("\"c\"") != std::string::npos);
    }
  }
  SUBCASE("nonpositive weight") {
    WeightedEdge const edges[] = {{0, 1, q(0)}};
    CHECK_THROWS_AS(build_graph_metric(2, edges), ValidationError);
  }
}

TEST_CASE("validate_metric") {
  CHECK(validate_metric(*test::c4()).ok());

  auto asym   = FiniteMetricSpace::from_rows({"a", "b"}, {{0, 1}, {2, 0}});
  auto report = validate_metric(asym);
  REQUIRE(report.contains("asymmetry"));
  CHECK(report.entries().front().witness == std::vector<std::size_t>{0, 1});

  auto tri = FiniteMetricSpace::from_rows(
      {"a", "b", "c"}, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  report = validate_metric(tri);
  REQUIRE(report.contains("triangle"));
  bool found = false;
  for (auto const& v : report.entries()) {
    found = found || v.witness == std::vector<std::size_t>{0, 1, 2};
  }
  CHECK(found);

  auto pseudo = FiniteMetricSpace::from_rows({"a", "b"}, {{0, 0}, {0, 0}});
  CHECK(validate_metric(pseudo).contains("nonpositive-distance"));
}

TEST_CASE("balls, diameters and set distances") {
  auto m = test::p5();
  CHECK(ball(*m, 2, 1, BallMode::closed) == PointSet{1, 2, 3});
  CHECK(ball(*m, 2, 1, BallMode::open) == PointSet{2});
  CHECK(ball(*test::c4(), 0, 2, BallMode::closed) == PointSet{0, 1, 2, 3});
  CHECK_THROWS_AS(ball(*m, 9, 1, BallMode::open), ResolutionError);

  CHECK(diameter(*m, PointSet{0}) == 0);
  CHECK(diameter(*m, PointSet{0, 1, 2}) == 2);
  CHECK(diameter(*m, PointSet{0, 1, 3, 4}) == 4);
  CHECK_THROWS_AS(diameter(*m, PointSet{}), ValidationError);

  CHECK(set_distance(*m, PointSet{0}, PointSet{3, 4}) == ExtScalar(3));
  CHECK(set_distance(*m, PointSet{0, 1}, PointSet{1, 2}) == ExtScalar(0));
  CHECK(set_distance(*m, PointSet{0}, PointSet{}).is_infinite());
}

TEST_CASE("metric properties on random spaces") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Random rng(seed);
    auto   m = random_metric_space(rng.between(1, 12), rng);
    CHECK(validate_metric(*m).ok());

    PointId x = static_cast<PointId>(rng.between(0, m->size() - 1));
    Scalar  r(static_cast<std::int64_t>(rng.between(0, 6)));
    auto    open   = ball(*m, x, r, BallMode::open);
    auto    closed = ball(*m, x, r, BallMode::closed);
    CHECK(is_subset(open, closed));
    bool on_sphere = false;
    for (PointId y = 0; y < m->size(); ++y) {
      on_sphere = on_sphere || m->dist(x, y) == r;
    }
    CHECK((open == closed) == !on_sphere);

    // Diameter is monotone; set distance vanishes exactly on overlap.
    PointSet a, b;
    for (PointId y = 0; y < m->size(); ++y) {
      if (rng.coin()) {
        a.push_back(y);
      }
      if (rng.coin()) {
        b.push_back(y);
      }
    }
    if (!a.empty()) {
      PointSet bigger = make_point_set([&] {
        auto v = a;
        v.insert(v.end(), b.begin(), b.end());
        return v;
      }());
      CHECK(diameter(*m, a) <= diameter(*m, bigger));
    }
    if (!a.empty() && !b.empty()) {
      PointSet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      CHECK((set_distance(*m, a, b) == ExtScalar(0)) == !common.empty());
    }
  }
}
