#pragma once

// Brute-force reference computations used only by the tests. Each one works
// from raw distance tables or adjacency lists and shares no code path with
// the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <vector>

#include "asdim/metric.hpp"

namespace asdim::oracle {

  // Unweighted all-pairs distances by breadth-first search.
  inline std::vector<std::vector<int>>
  bfs_distances(std::size_t n, std::vector<std::pair<int, int>> const& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
      std::queue<int> q;
      q.push(static_cast<int>(s));
      dist[s][s] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
          if (dist[s][v] < 0) {
            dist[s][v] = dist[s][u] + 1;
            q.push(v);
          }
        }
      }
    }
    return dist;
  }

  // Orbit of x under the group generated by the given permutations.
  inline std::set<PointId>
  orbit_by_closure(std::vector<std::vector<PointId>> const& generators,
                   PointId                                  x) {
    std::set<PointId>    seen{x};
    std::vector<PointId> stack{x};
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (auto const& g : generators) {
        if (seen.insert(g[y]).second) {
          stack.push_back(g[y]);
        }
      }
    }
    return seen;
  }

  // Does every open R-ball lie inside one of the members?
  inline bool every_ball_inside(FiniteMetricSpace const&            m,
                                std::vector<std::set<PointId>> const& members,
                                Scalar const&                       R) {
    for (PointId x = 0; x < m.size(); ++x) {
      bool inside_some = false;
      for (auto const& u : members) {
        bool inside = true;
        for (PointId y = 0; y < m.size() && inside; ++y) {
          if (m.dist(x, y) < R && !u.contains(y)) {
            inside = false;
          }
        }
        inside_some = inside_some || inside;
      }
      if (!inside_some) {
        return false;
      }
    }
    return true;
  }

  // Minimal dimension (max multiplicity - 1) of a cover whose members are
  // arbitrary subsets of diameter <= B and in which every open R-ball lies
  // in some member; -1 when no such cover exists. Exhaustive: points are
  // visited in index order and an unsatisfied point branches over every
  // admissible subset containing its ball. Intended for <= 10 points.
  inline int min_dimension_exhaustive(FiniteMetricSpace const& m,
                                      Scalar const&            R,
                                      Scalar const&            B) {
    std::size_t const n = m.size();
    using Mask          = std::uint32_t;
    std::vector<Mask> need(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y || m.dist(x, y) < R) {
          need[x] |= Mask(1) << y;
        }
      }
    }
    std::vector<Mask> admissible;
    for (Mask s = 1; s < (Mask(1) << n); ++s) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = 0; y < n && ok; ++y) {
          if ((s >> x & 1U) && (s >> y & 1U) && m.dist(x, y) > B) {
            ok = false;
          }
        }
      }
      if (ok) {
        admissible.push_back(s);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (std::none_of(admissible.begin(), admissible.end(),
                       [&](Mask s) { return (s & need[x]) == need[x]; })) {
        return -1;
      }
    }
    for (int cap = 1; cap <= static_cast<int>(n); ++cap) {
      std::vector<Mask>                chosen;
      std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
        if (x == n) {
          return true;
        }
        for (auto s : chosen) {
          if ((s & need[x]) == need[x]) {
            return go(x + 1);
          }
        }
        for (auto s : admissible) {
          if ((s & need[x]) != need[x]
              || std::find(chosen.begin(), chosen.end(), s) != chosen.end()) {
            continue;
          }
          chosen.push_back(s);
          bool fits = true;
          for (std::size_t p = 0; p < n && fits; ++p) {
            int count = 0;
            for (auto c : chosen) {
              count += (c >> p) & 1U;
            }
            fits = count <= cap;
          }
          if (fits && go(x + 1)) {
            return true;
          }
          chosen.pop_back();
        }
        return false;
      };
      if (go(0)) {
        return cap - 1;
      }
    }
    return -1;
  }

}  // namespace asdim::oracle
