#include "asdim/metric.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace asdim {

  PointSet make_point_set(std::vector<PointId> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
  }

  bool is_subset(std::span<PointId const> a, std::span<PointId const> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                       std::vector<Scalar>      table)
      : _labels(std::move(labels)), _table(std::move(table)) {
    if (_table.size() != _labels.size() * _labels.size()) {
      throw ValidationError("distance table has " + std::to_string(_table.size())
                            + " entries, expected "
                            + std::to_string(_labels.size() * _labels.size()));
    }
  }

  FiniteMetricSpace
  FiniteMetricSpace::from_rows(std::vector<std::string>                labels,
                               std::vector<std::vector<Scalar>> const& rows) {
    std::size_t const n = labels.size();
    if (rows.size() != n) {
      throw ValidationError("distance matrix has " + std::to_string(rows.size())
                            + " rows for " + std::to_string(n) + " points");
    }
    std::vector<Scalar> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw ValidationError("distance matrix row " + std::to_string(i)
                              + " has " + std::to_string(rows[i].size())
                              + " entries, expected " + std::to_string(n));
      }
      table.insert(table.end(), rows[i].begin(), rows[i].end());
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
  }

  FiniteMetricSpace
  FiniteMetricSpace::from_rows(std::vector<std::vector<Scalar>> const& rows) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      labels.push_back(std::to_string(i));
    }
    return from_rows(std::move(labels), rows);
  }

  std::optional<PointId>
  FiniteMetricSpace::find(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<PointId>(it - _labels.begin());
  }

  PointId FiniteMetricSpace::index_of(std::string const& label) const {
    if (auto x = find(label)) {
      return *x;
    }
    throw ResolutionError("unknown point \"" + label + "\"");
  }

  PointSet FiniteMetricSpace::all_points() const {
    PointSet result(size());
    for (PointId i = 0; i < size(); ++i) {
      result[i] = i;
    }
    return result;
  }

  bool same_space(SpacePtr const& a, SpacePtr const& b) {
    if (a == b) {
      return true;
    }
    return a && b && *a == *b;
  }

  FiniteMetricSpace build_graph_metric(std::vector<std::string>      vertices,
                                       std::span<WeightedEdge const> edges) {
    std::size_t const n = vertices.size();
    std::vector<std::vector<std::pair<PointId, Scalar>>> adj(n);
    for (auto const& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw ResolutionError("edge {" + std::to_string(e.u) + ","
                              + std::to_string(e.v)
                              + "} references a missing vertex");
      }
      if (e.weight <= 0) {
        throw ValidationError("edge {" + vertices[e.u] + "," + vertices[e.v]
                              + "} has nonpositive weight "
                              + format_scalar(e.weight));
      }
      adj[e.u].emplace_back(e.v, e.weight);
      adj[e.v].emplace_back(e.u, e.weight);
    }

    std::vector<Scalar> table(n * n);
    using Entry = std::pair<Scalar, PointId>;
    for (PointId src = 0; src < n; ++src) {
      std::vector<std::optional<Scalar>> best(n);
      std::vector<bool>                  done(n, false);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
      best[src] = Scalar(0);
      queue.emplace(Scalar(0), src);
      while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (done[u]) {
          continue;
        }
        done[u] = true;
        for (auto const& [v, w] : adj[u]) {
          Scalar candidate = d + w;
          if (!best[v] || candidate < *best[v]) {
            best[v] = candidate;
            queue.emplace(candidate, v);
          }
        }
      }
      for (PointId v = 0; v < n; ++v) {
        if (!best[v]) {
          throw ValidationError("graph is disconnected: no path between \""
                                + vertices[src] + "\" and \"" + vertices[v]
                                + "\"");
        }
        table[src * n + v] = *best[v];
      }
    }
    return FiniteMetricSpace(std::move(vertices), std::move(table));
  }

  FiniteMetricSpace build_graph_metric(std::size_t                   n,
                                       std::span<WeightedEdge const> edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
    }
    return build_graph_metric(std::move(labels), edges);
  }

  ValidationReport validate_metric(FiniteMetricSpace const& m) {
    ValidationReport report;
    auto const       n = static_cast<PointId>(m.size());
    for (PointId x = 0; x < n; ++x) {
      if (m.dist(x, x) != 0) {
        report.add("nonzero-self-distance", {x}, format_scalar(m.dist(x, x)));
      }
      for (PointId y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        if (m.dist(x, y) <= 0) {
          report.add("nonpositive-distance", {x, y},
                     format_scalar(m.dist(x, y)));
        }
        if (x < y && m.dist(x, y) != m.dist(y, x)) {
          report.add("asymmetry", {x, y},
                     format_scalar(m.dist(x, y))
                         + " != " + format_scalar(m.dist(y, x)));
        }
      }
    }
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) {
          if (m.dist(x, z) > m.dist(x, y) + m.dist(y, z)) {
            report.add("triangle", {x, y, z},
                       format_scalar(m.dist(x, z)) + " > "
                           + format_scalar(m.dist(x, y)) + " + "
                           + format_scalar(m.dist(y, z)));
          }
        }
      }
    }
    return report;
  }

  PointSet
  ball(FiniteMetricSpace const& m, PointId x, Scalar const& r, BallMode mode) {
    if (!m.contains(x)) {
      throw ResolutionError("ball centre " + std::to_string(x)
                            + " is not a point of the space");
    }
    PointSet result;
    for (PointId y = 0; y < m.size(); ++y) {
      auto const& d = m.dist(x, y);
      if (mode == BallMode::open ? d < r : d <= r) {
        result.push_back(y);
      }
    }
    return result;
  }

  Scalar diameter(FiniteMetricSpace const& m, std::span<PointId const> s) {
    if (s.empty()) {
      throw ValidationError("diameter of the empty set is undefined");
    }
    Scalar best(0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        best = std::max(best, m.dist(s[i], s[j]));
      }
    }
    return best;
  }

  ExtScalar set_distance(FiniteMetricSpace const& m,
                         std::span<PointId const> a,
                         std::span<PointId const> b) {
    ExtScalar best = ExtScalar::infinity();
    for (auto x : a) {
      for (auto y : b) {
        best = min(best, ExtScalar(m.dist(x, y)));
      }
    }
    return best;
  }

  ExtScalar point_set_distance(FiniteMetricSpace const& m,
                               PointId                  x,
                               std::span<PointId const> s) {
    PointId const single[] = {x};
    return set_distance(m, single, s);
  }

  FiniteMetricSpace subspace(FiniteMetricSpace const& m,
                             std::span<PointId const> points) {
    std::vector<std::string> labels;
    std::vector<Scalar>      table;
    labels.reserve(points.size());
    table.reserve(points.size() * points.size());
    for (auto x : points) {
      labels.push_back(m.label(x));
      for (auto y : points) {
        table.push_back(m.dist(x, y));
      }
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
  }

}  // namespace asdim
