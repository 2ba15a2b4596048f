#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asdim/errors.hpp"
#include "asdim/scalar.hpp"

namespace asdim {

  using PointId = std::uint32_t;

  // Sorted, duplicate-free list of point indices of some space.
  using PointSet = std::vector<PointId>;

  PointSet make_point_set(std::vector<PointId> points);

  bool is_subset(std::span<PointId const> a, std::span<PointId const> b);

  // A finite space with a dense, exact distance table. The constructor only
  // checks the shape of the table; metric axioms are checked by
  // validate_metric so that broken inputs can still be reported on.
  class FiniteMetricSpace {
   public:
    FiniteMetricSpace() = default;
    FiniteMetricSpace(std::vector<std::string> labels,
                      std::vector<Scalar>      table);

    static FiniteMetricSpace
    from_rows(std::vector<std::string>                labels,
              std::vector<std::vector<Scalar>> const& rows);

    // Labels "0", "1", ... .
    static FiniteMetricSpace from_rows(std::vector<std::vector<Scalar>> const& rows);

    std::size_t size() const noexcept { return _labels.size(); }

    Scalar const& dist(PointId x, PointId y) const {
      return _table[static_cast<std::size_t>(x) * _labels.size() + y];
    }

    std::string const& label(PointId x) const { return _labels.at(x); }
    std::vector<std::string> const& labels() const noexcept { return _labels; }
    std::vector<Scalar> const&      table() const noexcept { return _table; }

    std::optional<PointId> find(std::string const& label) const;

    // Throws ResolutionError for unknown labels.
    PointId index_of(std::string const& label) const;

    PointSet all_points() const;

    bool contains(PointId x) const noexcept { return x < _labels.size(); }

    friend bool operator==(FiniteMetricSpace const&,
                           FiniteMetricSpace const&) = default;

   private:
    std::vector<std::string> _labels;
    std::vector<Scalar>      _table;
  };

  using SpacePtr = std::shared_ptr<FiniteMetricSpace const>;

  inline SpacePtr share(FiniteMetricSpace space) {
    return std::make_shared<FiniteMetricSpace const>(std::move(space));
  }

  // Pointer identity or structural equality.
  bool same_space(SpacePtr const& a, SpacePtr const& b);

  struct WeightedEdge {
    PointId u;
    PointId v;
    Scalar  weight{1};
  };

  // Shortest-path metric of a connected graph with positive edge weights.
  FiniteMetricSpace build_graph_metric(std::vector<std::string>       vertices,
                                       std::span<WeightedEdge const> edges);
  FiniteMetricSpace build_graph_metric(std::size_t                   n,
                                       std::span<WeightedEdge const> edges);

  // Lists every zero/negative off-diagonal entry, nonzero diagonal entry,
  // asymmetric pair and violated triangle (x,y,z) with d(x,z) > d(x,y)+d(y,z).
  ValidationReport validate_metric(FiniteMetricSpace const& m);

  enum class BallMode { open, closed };

  PointSet
  ball(FiniteMetricSpace const& m, PointId x, Scalar const& r, BallMode mode);

  // Throws ValidationError on the empty set.
  Scalar diameter(FiniteMetricSpace const& m, std::span<PointId const> s);

  // +infinity if either set is empty.
  ExtScalar set_distance(FiniteMetricSpace const& m,
                         std::span<PointId const> a,
                         std::span<PointId const> b);

  ExtScalar point_set_distance(FiniteMetricSpace const& m,
                               PointId                  x,
                               std::span<PointId const> s);

  // The subspace on `points` (in the given order) with the restricted metric.
  FiniteMetricSpace subspace(FiniteMetricSpace const& m,
                             std::span<PointId const> points);

}  // namespace asdim
