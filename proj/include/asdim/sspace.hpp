#pragma once

#include <span>
#include <vector>

#include "asdim/action.hpp"
#include "asdim/covers.hpp"

namespace asdim {

  // Weighted disjoint union of finite spaces X_1, ..., X_k with basepoint
  // sets Y_n ⊆ X_n and weights f(1) < ... < f(k). Within a component the
  // metric is d_n; across components
  //   d(x, y) = d_n(x, Y_n) + d_m(y, Y_m) + max{f(n), f(m)}.
  class SSpace {
   public:
    std::vector<SpacePtr> const& components() const noexcept {
      return _components;
    }
    std::vector<PointSet> const& basepoints() const noexcept {
      return _basepoints;
    }
    std::vector<Scalar> const& weights() const noexcept { return _weights; }
    SpacePtr const&            assembled() const noexcept { return _assembled; }

    std::size_t component_count() const noexcept { return _components.size(); }

    std::size_t component_of(PointId global) const;
    PointId     local_point(PointId global) const;
    PointId     global_point(std::size_t component, PointId local) const;

    // Global indices of component n, in local order.
    PointSet component_points(std::size_t component) const;

    // The first `count` components with the restricted metric (equal to the
    // S-space of those components with the same weights).
    SpacePtr prefix(std::size_t count) const;

   private:
    friend SSpace build_sspace(std::vector<SpacePtr>, std::vector<PointSet>,
                               std::vector<Scalar>);

    std::vector<SpacePtr>    _components;
    std::vector<PointSet>    _basepoints;
    std::vector<Scalar>      _weights;
    std::vector<std::size_t> _offsets;  // size k + 1
    SpacePtr                 _assembled;
  };

  // Throws ValidationError unless every Y_n is a nonempty set of points of
  // X_n, f is positive and strictly increasing and f(n) >= diam Y_n.
  SSpace build_sspace(std::vector<SpacePtr> components,
                      std::vector<PointSet> basepoints,
                      std::vector<Scalar>   weights);

  // The componentwise action of a common group H. Each action must act on
  // the matching component and leave its basepoint set invariant; throws
  // ValidationError otherwise.
  IsometricAction
  sspace_componentwise_action(SSpace const&                       s,
                              std::span<IsometricAction const>    actions);

  struct QuotientCommutation {
    // H \ S({X_n}, {f(n)})
    QuotientSpace lhs;
    // S({H \ X_n}, {f(n)}) with basepoint sets p(Y_n)
    SSpace rhs;
    // bijection[q] is the rhs point matching lhs point q.
    std::vector<PointId> bijection;
  };

  // Builds both sides and an explicit bijection, verified to preserve all
  // pairwise distances (InternalAssertion otherwise).
  QuotientCommutation
  sspace_quotient_commute(SSpace const&                    s,
                          std::span<IsometricAction const> actions);

  // Intersects each piece with each component. The results are validated at
  // the same r (InternalAssertion on failure). Throws ValidationError if d
  // is not a valid decomposition of the assembled space.
  std::vector<Decomposition> restrict_decomposition(SSpace const&        s,
                                                    Decomposition const& d);

  // Joins a decomposition of the first N components (on s.prefix(N)) with
  // decompositions of each later component. N = component_count() -
  // tails.size(). Requires f(N+1) > r when tails are present, equal family
  // counts, and every input valid at parameter r.
  Decomposition merge_decompositions(SSpace const&                 s,
                                     Decomposition const&          head,
                                     std::span<Decomposition const> tails,
                                     Scalar const&                 r);

}  // namespace asdim
