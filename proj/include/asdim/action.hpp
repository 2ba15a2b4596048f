#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "asdim/group.hpp"
#include "asdim/metric.hpp"

namespace asdim {

  using GroupPtr = std::shared_ptr<FiniteGroup const>;

  inline GroupPtr share(FiniteGroup group) {
    return std::make_shared<FiniteGroup const>(std::move(group));
  }

  // A finite group acting on a finite metric space by permutations.
  // Construction checks shapes only; validate_action checks the action law
  // and the isometry law.
  class IsometricAction {
   public:
    IsometricAction(GroupPtr                          group,
                    SpacePtr                          space,
                    std::vector<std::vector<PointId>> perms);

    static IsometricAction trivial(SpacePtr space);

    FiniteGroup const&       group() const noexcept { return *_group; }
    FiniteMetricSpace const& space() const noexcept { return *_space; }
    GroupPtr const&          group_ptr() const noexcept { return _group; }
    SpacePtr const&          space_ptr() const noexcept { return _space; }

    PointId image(Element g, PointId x) const { return _perms[g][x]; }
    std::vector<PointId> const& perm(Element g) const { return _perms.at(g); }
    std::vector<std::vector<PointId>> const& perms() const noexcept {
      return _perms;
    }

    // Image of a set, sorted.
    PointSet image(Element g, std::span<PointId const> s) const;

   private:
    GroupPtr                          _group;
    SpacePtr                          _space;
    std::vector<std::vector<PointId>> _perms;
  };

  ValidationReport validate_action(IsometricAction const& a);

  // Orbits ordered by smallest member; each orbit sorted.
  std::vector<PointSet> orbits(IsometricAction const& a);

  // d(Fx, Fy) = min over f of d(x, f y).
  Scalar quotient_distance(IsometricAction const& a, PointId x, PointId y);

  struct QuotientSpace {
    // The space acted on.
    SpacePtr source;
    // The orbit space with the quotient metric.
    SpacePtr base;
    // orbit_of[x] is the quotient point containing x.
    std::vector<PointId> orbit_of;
    // Lowest-index member of each orbit.
    std::vector<PointId> representatives;
    // fibers[q] is the orbit q as a set of source points.
    std::vector<PointSet> fibers;

    PointSet project(std::span<PointId const> s) const;
    PointSet preimage(std::span<PointId const> s) const;
  };

  // Throws ValidationError if the action is invalid.
  QuotientSpace quotient(IsometricAction const& a);

  // The subgroup generated by {f : d(x, f x) <= max_displacement}.
  std::vector<Element> displacement_subgroup(IsometricAction const& a,
                                             PointId                x,
                                             Scalar const&          max_displacement);

  // The action of sum.group on a.space() in which slot j acts through a via
  // `iso` (iso[h] is the element of a.group() matching h in slot j) and all
  // other slots act trivially. When iso is omitted it is found with
  // find_isomorphism; ValidationError if the groups are not isomorphic.
  IsometricAction extend_action(IsometricAction const&                    a,
                                DirectSum const&                          sum,
                                std::size_t                               j,
                                std::optional<std::vector<Element>> const& iso
                                = std::nullopt);

}  // namespace asdim
