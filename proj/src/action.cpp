#include "asdim/action.hpp"

#include <algorithm>
#include <numeric>

namespace asdim {

  IsometricAction::IsometricAction(GroupPtr                          group,
                                   SpacePtr                          space,
                                   std::vector<std::vector<PointId>> perms)
      : _group(std::move(group)),
        _space(std::move(space)),
        _perms(std::move(perms)) {
    if (!_group || !_space) {
      throw ValidationError("action needs a group and a space");
    }
    if (_perms.size() != _group->order()) {
      throw ValidationError("action has " + std::to_string(_perms.size())
                            + " permutations for a group of order "
                            + std::to_string(_group->order()));
    }
    for (std::size_t g = 0; g < _perms.size(); ++g) {
      if (_perms[g].size() != _space->size()) {
        throw ValidationError("permutation of element " + _group->name(g)
                              + " has wrong length");
      }
      for (auto y : _perms[g]) {
        if (y >= _space->size()) {
          throw ValidationError("permutation of element " + _group->name(g)
                                + " maps outside the space");
        }
      }
    }
  }

  IsometricAction IsometricAction::trivial(SpacePtr space) {
    std::vector<PointId> identity(space->size());
    std::iota(identity.begin(), identity.end(), PointId(0));
    return IsometricAction(share(FiniteGroup::trivial()), std::move(space),
                           {identity});
  }

  PointSet IsometricAction::image(Element g, std::span<PointId const> s) const {
    std::vector<PointId> result;
    result.reserve(s.size());
    for (auto x : s) {
      result.push_back(_perms[g][x]);
    }
    return make_point_set(std::move(result));
  }

  ValidationReport validate_action(IsometricAction const& a) {
    ValidationReport   report;
    auto const&        g = a.group();
    auto const&        m = a.space();
    std::size_t const  n = m.size();
    for (Element h = 0; h < g.order(); ++h) {
      std::vector<bool> hit(n, false);
      for (PointId x = 0; x < n; ++x) {
        if (hit[a.image(h, x)]) {
          report.add("not-bijective", {h, x});
        }
        hit[a.image(h, x)] = true;
      }
    }
    for (PointId x = 0; x < n; ++x) {
      if (a.image(g.identity(), x) != x) {
        report.add("identity-law", {x});
      }
    }
    for (Element h = 0; h < g.order(); ++h) {
      for (Element k = 0; k < g.order(); ++k) {
        for (PointId x = 0; x < n; ++x) {
          if (a.image(g.mul(h, k), x) != a.image(h, a.image(k, x))) {
            report.add("action-law", {h, k, x});
            break;
          }
        }
      }
    }
    for (Element h = 0; h < g.order(); ++h) {
      for (PointId x = 0; x < n; ++x) {
        for (PointId y = x + 1; y < n; ++y) {
          if (m.dist(a.image(h, x), a.image(h, y)) != m.dist(x, y)) {
            report.add("isometry", {h, x, y},
                       "d(gx,gy)=" + format_scalar(m.dist(a.image(h, x),
                                                          a.image(h, y)))
                           + " but d(x,y)=" + format_scalar(m.dist(x, y)));
          }
        }
      }
    }
    return report;
  }

  std::vector<PointSet> orbits(IsometricAction const& a) {
    std::size_t const     n = a.space().size();
    std::vector<bool>     seen(n, false);
    std::vector<PointSet> result;
    for (PointId x = 0; x < n; ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<PointId> orbit;
      for (Element g = 0; g < a.group().order(); ++g) {
        orbit.push_back(a.image(g, x));
      }
      orbit = make_point_set(std::move(orbit));
      for (auto y : orbit) {
        seen[y] = true;
      }
      result.push_back(std::move(orbit));
    }
    return result;
  }

  Scalar quotient_distance(IsometricAction const& a, PointId x, PointId y) {
    auto const& m    = a.space();
    Scalar      best = m.dist(x, y);
    for (Element g = 0; g < a.group().order(); ++g) {
      best = std::min(best, m.dist(x, a.image(g, y)));
    }
    return best;
  }

  PointSet QuotientSpace::project(std::span<PointId const> s) const {
    std::vector<PointId> result;
    result.reserve(s.size());
    for (auto x : s) {
      result.push_back(orbit_of.at(x));
    }
    return make_point_set(std::move(result));
  }

  PointSet QuotientSpace::preimage(std::span<PointId const> s) const {
    std::vector<PointId> result;
    for (auto q : s) {
      auto const& fiber = fibers.at(q);
      result.insert(result.end(), fiber.begin(), fiber.end());
    }
    return make_point_set(std::move(result));
  }

  QuotientSpace quotient(IsometricAction const& a) {
    validate_action(a).throw_if_failed("quotient: invalid action");
    QuotientSpace q;
    q.source = a.space_ptr();
    q.fibers = orbits(a);
    q.orbit_of.resize(a.space().size());
    std::vector<std::string> labels;
    for (PointId i = 0; i < q.fibers.size(); ++i) {
      q.representatives.push_back(q.fibers[i].front());
      std::string label = "[";
      for (std::size_t k = 0; k < q.fibers[i].size(); ++k) {
        q.orbit_of[q.fibers[i][k]] = i;
        label += (k == 0 ? "" : ",") + a.space().label(q.fibers[i][k]);
      }
      labels.push_back(label + "]");
    }
    std::size_t const   k = q.fibers.size();
    std::vector<Scalar> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j]
            = quotient_distance(a, q.representatives[i], q.representatives[j]);
      }
    }
    q.base = share(FiniteMetricSpace(std::move(labels), std::move(table)));
    return q;
  }

  std::vector<Element> displacement_subgroup(IsometricAction const& a,
                                             PointId                x,
                                             Scalar const& max_displacement) {
    std::vector<Element> generators;
    for (Element g = 0; g < a.group().order(); ++g) {
      if (a.space().dist(x, a.image(g, x)) <= max_displacement) {
        generators.push_back(g);
      }
    }
    return generated_subgroup(a.group(), generators);
  }

  IsometricAction extend_action(IsometricAction const&                     a,
                                DirectSum const&                           sum,
                                std::size_t                                j,
                                std::optional<std::vector<Element>> const& iso) {
    if (j >= sum.radices.size()) {
      throw ValidationError("extend_action: slot out of range");
    }
    std::vector<Element> phi;
    if (iso) {
      phi = *iso;
    } else {
      // Slot j as a standalone group: restrict the table to the injection.
      auto const&              inj = sum.injections[j];
      std::vector<std::string> names;
      std::vector<Element>     table(inj.size() * inj.size());
      for (std::size_t u = 0; u < inj.size(); ++u) {
        names.push_back(sum.group.name(inj[u]));
        for (std::size_t v = 0; v < inj.size(); ++v) {
          table[u * inj.size() + v]
              = sum.component(sum.group.mul(inj[u], inj[v]), j);
        }
      }
      auto found = find_isomorphism(FiniteGroup(names, table), a.group(),
                                    std::max<std::size_t>(12, inj.size()));
      if (!found) {
        throw ValidationError(
            "extend_action: slot group is not isomorphic to the acting group");
      }
      phi = std::move(*found);
    }
    if (phi.size() != sum.radices[j]) {
      throw ValidationError("extend_action: isomorphism has wrong size");
    }
    std::vector<std::vector<PointId>> perms;
    for (Element h = 0; h < sum.group.order(); ++h) {
      perms.push_back(a.perm(phi[sum.component(h, j)]));
    }
    return IsometricAction(std::make_shared<FiniteGroup const>(sum.group),
                           a.space_ptr(), std::move(perms));
  }

}  // namespace asdim
