#pragma once

// Seeded random S-spaces and decompositions shared by the unit and
// acceptance tests.

#include <algorithm>
#include <utility>
#include <vector>

#include "asdim/covers.hpp"
#include "asdim/generate.hpp"
#include "asdim/sspace.hpp"

namespace asdim::test {

  // Weights with f(n) >= diam Y_n, strictly increasing.
  inline std::vector<Scalar> random_weights(Random&                      rng,
                                            std::vector<SpacePtr> const& parts,
                                            std::vector<PointSet> const& ys) {
    std::vector<Scalar> f;
    Scalar              last(0);
    for (std::size_t n = 0; n < parts.size(); ++n) {
      Scalar w = std::max(last + 1, diameter(*parts[n], ys[n]));
      w += Scalar(static_cast<std::int64_t>(rng.between(0, 3)));
      f.push_back(w);
      last = w;
    }
    return f;
  }

  inline SSpace random_sspace(Random&     rng,
                              std::size_t max_components,
                              std::size_t max_points) {
    std::size_t const     k = rng.between(1, max_components);
    std::vector<SpacePtr> parts;
    std::vector<PointSet> ys;
    for (std::size_t n = 0; n < k; ++n) {
      auto     m = random_metric_space(rng.between(1, max_points), rng);
      PointSet y;
      for (PointId x = 0; x < m->size(); ++x) {
        if (rng.between(0, 2) == 0) {
          y.push_back(x);
        }
      }
      if (y.empty()) {
        y.push_back(static_cast<PointId>(rng.between(0, m->size() - 1)));
      }
      parts.push_back(m);
      ys.push_back(y);
    }
    auto f = random_weights(rng, parts, ys);
    return build_sspace(parts, ys, f);
  }

  struct EquivariantSSpace {
    SSpace                       space;
    std::vector<IsometricAction> actions;
  };

  // Components carry actions of one common group; each Y_n is an orbit.
  inline EquivariantSSpace random_equivariant_sspace(Random&     rng,
                                                     std::size_t min_components,
                                                     std::size_t max_components,
                                                     std::size_t max_points) {
    auto groups = small_groups(6);
    auto group  = share(groups[rng.between(0, groups.size() - 1)]);
    std::size_t const            k = rng.between(min_components, max_components);
    std::vector<SpacePtr>        parts;
    std::vector<PointSet>        ys;
    std::vector<IsometricAction> actions;
    for (std::size_t n = 0; n < k; ++n) {
      auto a   = random_equivariant_instance(rng, group, max_points);
      auto obs = orbits(a);
      ys.push_back(obs[rng.between(0, obs.size() - 1)]);
      parts.push_back(a.space_ptr());
      actions.push_back(std::move(a));
    }
    auto f = random_weights(rng, parts, ys);
    return {build_sspace(parts, ys, f), std::move(actions)};
  }

  // A random partition into pieces, greedily sorted into r-disjoint families.
  inline Decomposition random_decomposition(Random&         rng,
                                            SpacePtr const& m,
                                            Scalar const&   r) {
    std::size_t const     labels = rng.between(1, m->size());
    std::vector<PointSet> pieces(labels);
    for (PointId x = 0; x < m->size(); ++x) {
      pieces[rng.between(0, labels - 1)].push_back(x);
    }
    std::erase_if(pieces, [](PointSet const& p) { return p.empty(); });
    Decomposition d{m, r, {}};
    for (auto const& piece : pieces) {
      bool placed = false;
      for (auto& family : d.families) {
        bool far = std::all_of(family.begin(), family.end(), [&](auto const& other) {
          return set_distance(*m, piece, other) > ExtScalar(r);
        });
        if (far) {
          family.push_back(piece);
          placed = true;
          break;
        }
      }
      if (!placed) {
        d.families.push_back({piece});
      }
    }
    return d;
  }

  inline void pad_families(Decomposition& d, std::size_t count) {
    while (d.families.size() < count) {
      d.families.emplace_back();
    }
  }

}  // namespace asdim::test
