#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asdim/action.hpp"

namespace asdim {

  // Seeded source for all random instances. Bounded draws use plain modulo
  // reduction so that sequences are identical on every standard library.
  class Random {
   public:
    explicit Random(std::uint64_t seed) : _engine(seed) {}

    // Uniform-ish integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
      return lo + _engine() % (hi - lo + 1);
    }

    bool coin() { return (_engine() & 1U) != 0; }

   private:
    std::mt19937_64 _engine;
  };

  SpacePtr path_space(std::size_t n);
  SpacePtr cycle_space(std::size_t n);
  // Points (i, j) labelled "i,j" at index i * height + j; L1 graph metric.
  SpacePtr grid_space(std::size_t width, std::size_t height);

  // Z/2 acting by x -> n-1-x.
  IsometricAction path_reflection(SpacePtr const& path);
  // Cyclic group generated by rotation x -> x + step on C_n.
  IsometricAction cycle_rotation(SpacePtr const& cycle, std::size_t step);
  // Z/2 acting by x -> -x on C_n.
  IsometricAction cycle_reflection(SpacePtr const& cycle);
  // Rotation of a width x height grid by 180 degrees (Z/2) or, for square
  // grids, by 90 degrees (Z/4).
  IsometricAction grid_rotation(SpacePtr const& grid,
                                std::size_t     width,
                                std::size_t     height,
                                bool            quarter_turn = false);

  // Ball of the given radius around the identity in a Cayley graph, with
  // the induced graph metric. "z2": Z^2 with standard generators, canonical
  // action x -> -x. "free2": free group on a, b, canonical action swapping
  // a and b.
  struct Instance {
    std::string                    kind;
    SpacePtr                       space;
    std::optional<IsometricAction> action;
  };

  Instance cayley_ball(std::string const& group, std::size_t radius);

  // Connected random graph (random spanning tree plus extra edges, weights
  // 1..3) with its shortest-path metric.
  SpacePtr random_metric_space(std::size_t n, Random& rng);

  // A random isometric action: a group of order <= max_order acting on a
  // union of coset spaces G/H (at most max_points points), metrised by a
  // G-invariant random graph.
  IsometricAction random_equivariant_instance(Random&     rng,
                                              std::size_t max_points,
                                              std::size_t max_order);
  // The same for a fixed group.
  IsometricAction random_equivariant_instance(Random&         rng,
                                              GroupPtr const& group,
                                              std::size_t     max_points);

  // All groups used by the random generators: Z/1..Z/6, Z/2+Z/2, S3,
  // restricted to order <= max_order.
  std::vector<FiniteGroup> small_groups(std::size_t max_order);

  // Every subgroup of g, each sorted.
  std::vector<std::vector<Element>> all_subgroups(FiniteGroup const& g);

  // kind: grid (w, h), cycle (n [, step]), path (n), cayley-ball (radius;
  // group chosen by params[1]: 0 = z2, 1 = free2), random (n). Canonical
  // actions: grid 180-degree rotation, cycle rotation by `step` (default
  // n/2, reflection when step = 0), path reflection. Random spaces carry
  // no action. Throws ValidationError on unknown kinds or sizes above caps.
  Instance generate_instance(std::string const&              kind,
                             std::vector<std::size_t> const& params,
                             std::uint64_t                   seed);

}  // namespace asdim
