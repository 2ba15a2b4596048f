#include "asdim/sspace.hpp"

#include <algorithm>

namespace asdim {

  std::size_t SSpace::component_of(PointId global) const {
    auto it = std::upper_bound(_offsets.begin(), _offsets.end(), global);
    if (global >= _offsets.back()) {
      throw ResolutionError("point " + std::to_string(global)
                            + " is not in the S-space");
    }
    return static_cast<std::size_t>(it - _offsets.begin()) - 1;
  }

  PointId SSpace::local_point(PointId global) const {
    return static_cast<PointId>(global - _offsets[component_of(global)]);
  }

  PointId SSpace::global_point(std::size_t component, PointId local) const {
    if (component >= _components.size()
        || local >= _components[component]->size()) {
      throw ResolutionError("no point " + std::to_string(local)
                            + " in component " + std::to_string(component));
    }
    return static_cast<PointId>(_offsets[component] + local);
  }

  PointSet SSpace::component_points(std::size_t component) const {
    PointSet result;
    for (auto x = _offsets.at(component); x < _offsets.at(component + 1); ++x) {
      result.push_back(static_cast<PointId>(x));
    }
    return result;
  }

  SpacePtr SSpace::prefix(std::size_t count) const {
    if (count > _components.size()) {
      throw ValidationError("prefix longer than the component list");
    }
    PointSet points;
    for (std::size_t x = 0; x < _offsets[count]; ++x) {
      points.push_back(static_cast<PointId>(x));
    }
    return share(subspace(*_assembled, points));
  }

  SSpace build_sspace(std::vector<SpacePtr> components,
                      std::vector<PointSet> basepoints,
                      std::vector<Scalar>   weights) {
    std::size_t const k = components.size();
    if (k == 0) {
      throw ValidationError("build_sspace: no components");
    }
    if (basepoints.size() != k || weights.size() != k) {
      throw ValidationError("build_sspace: need one basepoint set and one "
                            "weight per component");
    }
    for (std::size_t n = 0; n < k; ++n) {
      basepoints[n] = make_point_set(std::move(basepoints[n]));
      auto const& y = basepoints[n];
      if (y.empty()) {
        throw ValidationError("build_sspace: basepoint set "
                              + std::to_string(n) + " is empty");
      }
      if (y.back() >= components[n]->size()) {
        throw ValidationError("build_sspace: basepoint set "
                              + std::to_string(n)
                              + " mentions a point outside its component");
      }
      if (weights[n] <= 0) {
        throw ValidationError("build_sspace: weight f(" + std::to_string(n)
                              + ") is not positive");
      }
      if (n > 0 && !(weights[n - 1] < weights[n])) {
        throw ValidationError("build_sspace: weights are not strictly "
                              "increasing at index "
                              + std::to_string(n));
      }
      auto diam = diameter(*components[n], y);
      if (weights[n] < diam) {
        throw ValidationError("build_sspace: f(" + std::to_string(n)
                              + ") = " + format_scalar(weights[n])
                              + " < diam Y = " + format_scalar(diam));
      }
    }

    SSpace s;
    s._offsets.push_back(0);
    for (auto const& c : components) {
      s._offsets.push_back(s._offsets.back() + c->size());
    }
    std::size_t const total = s._offsets.back();

    // Distance of each point to its own basepoint set.
    std::vector<Scalar>      to_base(total);
    std::vector<std::string> labels;
    for (std::size_t n = 0; n < k; ++n) {
      for (PointId x = 0; x < components[n]->size(); ++x) {
        to_base[s._offsets[n] + x]
            = point_set_distance(*components[n], x, basepoints[n]).value();
        labels.push_back(std::to_string(n) + ":" + components[n]->label(x));
      }
    }
    std::vector<Scalar> table(total * total);
    for (std::size_t n = 0; n < k; ++n) {
      for (std::size_t m = 0; m < k; ++m) {
        for (auto x = s._offsets[n]; x < s._offsets[n + 1]; ++x) {
          for (auto y = s._offsets[m]; y < s._offsets[m + 1]; ++y) {
            table[x * total + y]
                = n == m ? components[n]->dist(
                               static_cast<PointId>(x - s._offsets[n]),
                               static_cast<PointId>(y - s._offsets[n]))
                         : to_base[x] + to_base[y]
                               + std::max(weights[n], weights[m]);
          }
        }
      }
    }
    s._components = std::move(components);
    s._basepoints = std::move(basepoints);
    s._weights    = std::move(weights);
    s._assembled  = share(FiniteMetricSpace(std::move(labels), std::move(table)));
    return s;
  }

  namespace {
    void check_component_actions(SSpace const&                    s,
                                 std::span<IsometricAction const> actions) {
      if (actions.size() != s.component_count()) {
        throw ValidationError("need one action per S-space component");
      }
      for (std::size_t n = 0; n < actions.size(); ++n) {
        auto const& a = actions[n];
        if (!(a.group() == actions[0].group())) {
          throw ValidationError("component actions use different groups");
        }
        if (!same_space(a.space_ptr(), s.components()[n])) {
          throw ValidationError("action " + std::to_string(n)
                                + " does not act on component "
                                + std::to_string(n));
        }
        validate_action(a).throw_if_failed("component action "
                                           + std::to_string(n));
        for (Element g = 0; g < a.group().order(); ++g) {
          if (a.image(g, s.basepoints()[n]) != s.basepoints()[n]) {
            throw ValidationError(
                "basepoint set of component " + std::to_string(n)
                + " is not invariant under element " + a.group().name(g));
          }
        }
      }
    }
  }  // namespace

  IsometricAction
  sspace_componentwise_action(SSpace const&                    s,
                              std::span<IsometricAction const> actions) {
    check_component_actions(s, actions);
    auto const& group = actions[0].group();
    std::vector<std::vector<PointId>> perms(group.order());
    for (Element g = 0; g < group.order(); ++g) {
      for (std::size_t n = 0; n < actions.size(); ++n) {
        for (PointId x = 0; x < s.components()[n]->size(); ++x) {
          perms[g].push_back(s.global_point(n, actions[n].image(g, x)));
        }
      }
    }
    IsometricAction result(actions[0].group_ptr(), s.assembled(),
                           std::move(perms));
    auto report = validate_action(result);
    if (!report.ok()) {
      throw InternalAssertion("componentwise action is not isometric:\n"
                              + report.summary());
    }
    return result;
  }

  QuotientCommutation
  sspace_quotient_commute(SSpace const&                    s,
                          std::span<IsometricAction const> actions) {
    auto action = sspace_componentwise_action(s, actions);
    auto lhs    = quotient(action);

    std::vector<QuotientSpace> parts;
    std::vector<SpacePtr>      bases;
    std::vector<PointSet>      projected;
    for (std::size_t n = 0; n < actions.size(); ++n) {
      parts.push_back(quotient(actions[n]));
      bases.push_back(parts.back().base);
      projected.push_back(parts.back().project(s.basepoints()[n]));
    }
    auto rhs = build_sspace(std::move(bases), std::move(projected), s.weights());

    std::vector<PointId> bijection;
    for (auto rep : lhs.representatives) {
      auto n = s.component_of(rep);
      bijection.push_back(
          rhs.global_point(n, parts[n].orbit_of[s.local_point(rep)]));
    }
    if (make_point_set(bijection).size() != rhs.assembled()->size()
        || bijection.size() != rhs.assembled()->size()) {
      throw InternalAssertion("quotient commutation map is not a bijection");
    }
    auto const& left  = *lhs.base;
    auto const& right = *rhs.assembled();
    for (PointId i = 0; i < left.size(); ++i) {
      for (PointId j = 0; j < left.size(); ++j) {
        if (left.dist(i, j) != right.dist(bijection[i], bijection[j])) {
          throw InternalAssertion(
              "quotient commutation fails at (" + left.label(i) + ", "
              + left.label(j) + "): " + format_scalar(left.dist(i, j))
              + " != " + format_scalar(right.dist(bijection[i], bijection[j])));
        }
      }
    }
    return QuotientCommutation{std::move(lhs), std::move(rhs),
                               std::move(bijection)};
  }

  std::vector<Decomposition> restrict_decomposition(SSpace const&        s,
                                                    Decomposition const& d) {
    if (!same_space(d.space, s.assembled())) {
      throw ValidationError("restrict_decomposition: decomposition is not on "
                            "the assembled space");
    }
    auto report = validate_decomposition(d);
    report.violations.throw_if_failed("restrict_decomposition");

    std::vector<Decomposition> result;
    for (std::size_t n = 0; n < s.component_count(); ++n) {
      Decomposition part{s.components()[n], d.r, {}};
      for (auto const& family : d.families) {
        std::vector<PointSet> pieces;
        for (auto const& piece : family) {
          PointSet local;
          for (auto x : make_point_set(piece)) {
            if (s.component_of(x) == n) {
              local.push_back(s.local_point(x));
            }
          }
          if (!local.empty()) {
            pieces.push_back(std::move(local));
          }
        }
        part.families.push_back(std::move(pieces));
      }
      auto check = validate_decomposition(part);
      if (!check.ok()) {
        throw InternalAssertion("restriction to component " + std::to_string(n)
                                + " is invalid:\n"
                                + check.violations.summary());
      }
      if (*check.piece_mesh > *report.piece_mesh) {
        throw InternalAssertion("restriction increased the piece mesh");
      }
      result.push_back(std::move(part));
    }
    return result;
  }

  Decomposition merge_decompositions(SSpace const&                  s,
                                     Decomposition const&           head,
                                     std::span<Decomposition const> tails,
                                     Scalar const&                  r) {
    if (tails.size() >= s.component_count()) {
      throw ValidationError("merge_decompositions: head must cover at least "
                            "one component");
    }
    std::size_t const head_count = s.component_count() - tails.size();
    if (!tails.empty() && !(s.weights()[head_count] > r)) {
      throw ValidationError("merge_decompositions: f(N+1) = "
                            + format_scalar(s.weights()[head_count])
                            + " does not exceed r = " + format_scalar(r));
    }
    if (!same_space(head.space, s.prefix(head_count))) {
      throw ValidationError("merge_decompositions: head is not on the first "
                            + std::to_string(head_count) + " components");
    }
    auto check_at_r = [&r](Decomposition const& d, std::string const& what) {
      Decomposition at_r{d.space, r, d.families};
      validate_decomposition(at_r).violations.throw_if_failed(
          "merge_decompositions: " + what + " is not valid at r");
    };
    check_at_r(head, "head");
    for (std::size_t i = 0; i < tails.size(); ++i) {
      if (!same_space(tails[i].space, s.components()[head_count + i])) {
        throw ValidationError("merge_decompositions: tail " + std::to_string(i)
                              + " is not on component "
                              + std::to_string(head_count + i));
      }
      if (tails[i].families.size() != head.families.size()) {
        throw ValidationError("merge_decompositions: tail "
                              + std::to_string(i) + " has "
                              + std::to_string(tails[i].families.size())
                              + " families, head has "
                              + std::to_string(head.families.size()));
      }
      check_at_r(tails[i], "tail " + std::to_string(i));
    }

    // Prefix indices coincide with global indices.
    Decomposition out{s.assembled(), r, head.families};
    for (std::size_t i = 0; i < tails.size(); ++i) {
      for (std::size_t j = 0; j < out.families.size(); ++j) {
        for (auto const& piece : tails[i].families[j]) {
          PointSet global;
          for (auto x : piece) {
            global.push_back(s.global_point(head_count + i, x));
          }
          out.families[j].push_back(make_point_set(std::move(global)));
        }
      }
    }
    auto report = validate_decomposition(out);
    if (!report.ok()) {
      throw InternalAssertion("merged decomposition is invalid:\n"
                              + report.violations.summary());
    }
    return out;
  }

}  // namespace asdim
