#include "asdim/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace asdim {

  namespace {
    constexpr std::size_t max_generated_points = 400;

    void check_size(std::size_t n) {
      if (n == 0 || n > max_generated_points) {
        throw ValidationError("instance size " + std::to_string(n)
                              + " outside 1.." + std::to_string(max_generated_points));
      }
    }

    IsometricAction make_action(GroupPtr                          group,
                                SpacePtr const&                   space,
                                std::vector<std::vector<PointId>> perms) {
      IsometricAction a(std::move(group), space, std::move(perms));
      validate_action(a).throw_if_failed("generated action");
      return a;
    }
  }  // namespace

  SpacePtr path_space(std::size_t n) {
    check_size(n);
    std::vector<WeightedEdge> edges;
    for (PointId i = 0; i + 1 < n; ++i) {
      edges.push_back({i, i + 1});
    }
    return share(build_graph_metric(n, edges));
  }

  SpacePtr cycle_space(std::size_t n) {
    check_size(n);
    std::vector<WeightedEdge> edges;
    for (PointId i = 0; i + 1 < n; ++i) {
      edges.push_back({i, i + 1});
    }
    if (n > 2) {
      edges.push_back({static_cast<PointId>(n - 1), 0});
    }
    return share(build_graph_metric(n, edges));
  }

  SpacePtr grid_space(std::size_t width, std::size_t height) {
    check_size(width * height);
    std::vector<std::string>  labels;
    std::vector<WeightedEdge> edges;
    auto index = [height](std::size_t i, std::size_t j) {
      return static_cast<PointId>(i * height + j);
    };
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 0; j < height; ++j) {
        labels.push_back(std::to_string(i) + "," + std::to_string(j));
        if (i + 1 < width) {
          edges.push_back({index(i, j), index(i + 1, j)});
        }
        if (j + 1 < height) {
          edges.push_back({index(i, j), index(i, j + 1)});
        }
      }
    }
    return share(build_graph_metric(std::move(labels), edges));
  }

  IsometricAction path_reflection(SpacePtr const& path) {
    auto const           n = static_cast<PointId>(path->size());
    std::vector<PointId> id(n), flip(n);
    for (PointId x = 0; x < n; ++x) {
      id[x]   = x;
      flip[x] = n - 1 - x;
    }
    return make_action(share(FiniteGroup::cyclic(2)), path, {id, flip});
  }

  IsometricAction cycle_rotation(SpacePtr const& cycle, std::size_t step) {
    std::size_t const n     = cycle->size();
    std::size_t const order = n / std::gcd(n, step % n == 0 ? n : step % n);
    std::vector<std::vector<PointId>> perms;
    for (std::size_t i = 0; i < order; ++i) {
      std::vector<PointId> p(n);
      for (std::size_t x = 0; x < n; ++x) {
        p[x] = static_cast<PointId>((x + i * step) % n);
      }
      perms.push_back(std::move(p));
    }
    return make_action(share(FiniteGroup::cyclic(order)), cycle,
                       std::move(perms));
  }

  IsometricAction cycle_reflection(SpacePtr const& cycle) {
    std::size_t const    n = cycle->size();
    std::vector<PointId> id(n), flip(n);
    for (std::size_t x = 0; x < n; ++x) {
      id[x]   = static_cast<PointId>(x);
      flip[x] = static_cast<PointId>((n - x) % n);
    }
    return make_action(share(FiniteGroup::cyclic(2)), cycle, {id, flip});
  }

  IsometricAction grid_rotation(SpacePtr const& grid,
                                std::size_t     width,
                                std::size_t     height,
                                bool            quarter_turn) {
    if (width * height != grid->size()) {
      throw ValidationError("grid_rotation: dimensions do not match the space");
    }
    if (quarter_turn && width != height) {
      throw ValidationError("grid_rotation: quarter turn needs a square grid");
    }
    std::size_t const order = quarter_turn ? 4 : 2;
    auto index = [height](std::size_t i, std::size_t j) {
      return static_cast<PointId>(i * height + j);
    };
    std::vector<std::vector<PointId>> perms(order);
    for (std::size_t k = 0; k < order; ++k) {
      perms[k].resize(grid->size());
      for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j < height; ++j) {
          std::size_t a = i, b = j;
          for (std::size_t t = 0; t < k; ++t) {
            if (quarter_turn) {
              std::tie(a, b) = std::make_pair(b, width - 1 - a);
            } else {
              std::tie(a, b) = std::make_pair(width - 1 - a, height - 1 - b);
            }
          }
          perms[k][index(i, j)] = index(a, b);
        }
      }
    }
    return make_action(share(FiniteGroup::cyclic(order)), grid,
                       std::move(perms));
  }

  Instance cayley_ball(std::string const& group, std::size_t radius) {
    if (radius > 4) {
      throw ValidationError("cayley_ball: radius above 4");
    }
    std::vector<std::string>  labels;
    std::vector<WeightedEdge> edges;
    std::vector<PointId>      flip;
    if (group == "z2") {
      std::map<std::pair<long, long>, PointId> index;
      auto const r = static_cast<long>(radius);
      for (long a = -r; a <= r; ++a) {
        for (long b = -r; b <= r; ++b) {
          if (std::labs(a) + std::labs(b) <= r) {
            index[{a, b}] = static_cast<PointId>(labels.size());
            labels.push_back(std::to_string(a) + "," + std::to_string(b));
          }
        }
      }
      flip.resize(labels.size());
      for (auto const& [p, i] : index) {
        auto const [a, b] = p;
        flip[i]           = index.at({-a, -b});
        for (auto q : {std::make_pair(a + 1, b), std::make_pair(a, b + 1)}) {
          if (auto it = index.find(q); it != index.end()) {
            edges.push_back({i, it->second});
          }
        }
      }
    } else if (group == "free2") {
      // Reduced words over a, A = a^-1, b, B = b^-1.
      auto inverse = [](char c) {
        return static_cast<char>(std::islower(c) ? std::toupper(c)
                                                 : std::tolower(c));
      };
      std::vector<std::string> words{""};
      for (std::size_t start = 0; start < words.size(); ++start) {
        auto const w = words[start];
        if (w.size() == radius) {
          continue;
        }
        for (char c : {'a', 'A', 'b', 'B'}) {
          if (!w.empty() && w.back() == inverse(c)) {
            continue;
          }
          words.push_back(w + c);
        }
      }
      std::map<std::string, PointId> index;
      for (auto const& w : words) {
        index[w] = static_cast<PointId>(labels.size());
        labels.push_back(w.empty() ? std::string("e") : w);
      }
      flip.resize(words.size());
      for (auto const& w : words) {
        std::string swapped = w;
        for (auto& c : swapped) {
          c = c == 'a' ? 'b' : c == 'b' ? 'a' : c == 'A' ? 'B' : 'A';
        }
        flip[index.at(w)] = index.at(swapped);
        if (!w.empty()) {
          edges.push_back({index.at(w.substr(0, w.size() - 1)), index.at(w)});
        }
      }
    } else {
      throw ValidationError("cayley_ball: unknown group \"" + group + "\"");
    }
    auto space = share(build_graph_metric(std::move(labels), edges));
    std::vector<PointId> id(space->size());
    std::iota(id.begin(), id.end(), PointId(0));
    auto action
        = make_action(share(FiniteGroup::cyclic(2)), space, {id, flip});
    return Instance{"cayley-ball", space, std::move(action)};
  }

  SpacePtr random_metric_space(std::size_t n, Random& rng) {
    check_size(n);
    std::vector<WeightedEdge> edges;
    for (PointId v = 1; v < n; ++v) {
      edges.push_back({static_cast<PointId>(rng.between(0, v - 1)), v,
                       Scalar(static_cast<std::int64_t>(rng.between(1, 3)))});
    }
    std::size_t const extra = rng.between(0, n);
    for (std::size_t i = 0; i < extra && n > 1; ++i) {
      auto u = static_cast<PointId>(rng.between(0, n - 1));
      auto v = static_cast<PointId>(rng.between(0, n - 1));
      if (u != v) {
        edges.push_back(
            {u, v, Scalar(static_cast<std::int64_t>(rng.between(1, 3)))});
      }
    }
    return share(build_graph_metric(n, edges));
  }

  std::vector<FiniteGroup> small_groups(std::size_t max_order) {
    std::vector<FiniteGroup> result;
    for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 6); ++n) {
      result.push_back(FiniteGroup::cyclic(n));
    }
    if (max_order >= 4) {
      std::vector<FiniteGroup> parts{FiniteGroup::cyclic(2),
                                     FiniteGroup::cyclic(2)};
      result.push_back(direct_sum(parts).group);
    }
    if (max_order >= 6) {
      result.push_back(FiniteGroup::symmetric(3));
    }
    return result;
  }

  std::vector<std::vector<Element>> all_subgroups(FiniteGroup const& g) {
    std::set<std::vector<Element>> found;
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = a; b < g.order(); ++b) {
        Element const gens[] = {a, b};
        found.insert(generated_subgroup(g, gens));
      }
    }
    // Groups up to order 6 are 2-generated; close under joins anyway.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Element>> current(found.begin(), found.end());
      for (auto const& h : current) {
        for (auto const& k : current) {
          std::vector<Element> gens = h;
          gens.insert(gens.end(), k.begin(), k.end());
          grew = found.insert(generated_subgroup(g, gens)).second || grew;
        }
      }
    }
    return {found.begin(), found.end()};
  }

  IsometricAction random_equivariant_instance(Random&     rng,
                                              std::size_t max_points,
                                              std::size_t max_order) {
    auto groups = small_groups(max_order);
    return random_equivariant_instance(
        rng, share(groups[rng.between(0, groups.size() - 1)]), max_points);
  }

  IsometricAction random_equivariant_instance(Random&         rng,
                                              GroupPtr const& group,
                                              std::size_t     max_points) {
    auto const& g          = *group;
    auto        subgroups  = all_subgroups(g);
    std::size_t const target = rng.between(1, max_points);

    // Blocks of left cosets aH; point = (block, coset representative).
    struct Point {
      std::size_t block;
      Element     rep;
    };
    std::vector<Point>                points;
    std::vector<std::vector<Element>> block_subgroup;
    while (points.size() < target) {
      std::vector<std::size_t> fitting;
      for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (g.order() / subgroups[i].size() + points.size() <= max_points) {
          fitting.push_back(i);
        }
      }
      if (fitting.empty()) {
        break;
      }
      auto const& h = subgroups[fitting[rng.between(0, fitting.size() - 1)]];
      block_subgroup.push_back(h);
      for (auto rep : coset_representatives(g, h)) {
        points.push_back({block_subgroup.size() - 1, rep});
      }
      if (rng.coin()) {
        break;
      }
    }
    std::size_t const n = points.size();

    auto locate = [&](std::size_t block, Element a) -> PointId {
      // The point of `block` whose coset contains a.
      auto const& h = block_subgroup[block];
      for (PointId i = 0; i < n; ++i) {
        if (points[i].block != block) {
          continue;
        }
        Element const rep_inv = g.inverse(points[i].rep);
        if (std::binary_search(h.begin(), h.end(), g.mul(rep_inv, a))) {
          return i;
        }
      }
      throw InternalAssertion("random_equivariant_instance: coset not found");
    };

    std::vector<std::vector<PointId>> perms(g.order(), std::vector<PointId>(n));
    for (Element x = 0; x < g.order(); ++x) {
      for (PointId i = 0; i < n; ++i) {
        perms[x][i] = locate(points[i].block, g.mul(x, points[i].rep));
      }
    }

    // G-invariant edge set: add whole orbits of random edges until connected.
    std::vector<WeightedEdge> edges;
    std::vector<PointId>      parent(n);
    std::iota(parent.begin(), parent.end(), PointId(0));
    auto find = [&parent](PointId x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t components = n;
    std::size_t extra      = rng.between(0, 2);
    while (n > 1 && (components > 1 || extra > 0)) {
      auto u = static_cast<PointId>(rng.between(0, n - 1));
      auto v = static_cast<PointId>(rng.between(0, n - 1));
      if (u == v) {
        continue;
      }
      if (components == 1) {
        --extra;
      }
      Scalar const w(static_cast<std::int64_t>(rng.between(1, 3)));
      for (Element x = 0; x < g.order(); ++x) {
        PointId const a = perms[x][u], b = perms[x][v];
        edges.push_back({a, b, w});
        if (find(a) != find(b)) {
          parent[find(a)] = find(b);
          --components;
        }
      }
    }

    std::vector<std::string> labels;
    for (auto const& p : points) {
      labels.push_back("b" + std::to_string(p.block) + ":" + g.name(p.rep));
    }
    auto space = share(build_graph_metric(std::move(labels), edges));
    return make_action(group, space, std::move(perms));
  }

  Instance generate_instance(std::string const&              kind,
                             std::vector<std::size_t> const& params,
                             std::uint64_t                   seed) {
    auto param = [&params, &kind](std::size_t i) {
      if (i >= params.size()) {
        throw ValidationError("generate " + kind + ": missing parameter "
                              + std::to_string(i + 1));
      }
      return params[i];
    };
    if (kind == "grid") {
      auto w = param(0), h = param(1);
      auto space = grid_space(w, h);
      return Instance{kind, space, grid_rotation(space, w, h)};
    }
    if (kind == "cycle") {
      auto n     = param(0);
      auto space = cycle_space(n);
      auto step  = params.size() > 1 ? params[1] : n / 2;
      if (step == 0) {
        return Instance{kind, space, cycle_reflection(space)};
      }
      return Instance{kind, space, cycle_rotation(space, step)};
    }
    if (kind == "path") {
      auto space = path_space(param(0));
      return Instance{kind, space, path_reflection(space)};
    }
    if (kind == "cayley-ball") {
      std::string group = params.size() > 1 && params[1] == 1 ? "free2" : "z2";
      return cayley_ball(group, param(0));
    }
    if (kind == "random") {
      Random rng(seed);
      return Instance{kind, random_metric_space(param(0), rng), std::nullopt};
    }
    throw ValidationError("unknown instance kind \"" + kind + "\"");
  }

}  // namespace asdim
