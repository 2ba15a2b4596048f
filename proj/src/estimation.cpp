#include "asdim/estimation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace asdim {

  std::string to_string(CandidateFamily family) {
    return family == CandidateFamily::balls ? "balls" : "balls+subsets";
  }

  std::string to_string(Method method) {
    return method == Method::exact ? "exact" : "greedy";
  }

  std::string to_string(Comparison comparison) {
    switch (comparison) {
      case Comparison::equal:
        return "equal";
      case Comparison::quotient_lower:
        return "quotient-lower";
      case Comparison::quotient_higher:
        return "quotient-higher";
      default:
        return "undecided";
    }
  }

  CandidateFamily candidate_family_for(std::size_t         points,
                                       ExactOptions const& options) {
    return points <= options.subset_cap ? CandidateFamily::balls_and_subsets
                                        : CandidateFamily::balls;
  }

  namespace {
    using Mask = std::uint32_t;

    PointSet to_set(Mask mask) {
      PointSet result;
      for (PointId x = 0; mask != 0; ++x, mask >>= 1) {
        if (mask & 1U) {
          result.push_back(x);
        }
      }
      return result;
    }

    Mask to_mask(std::span<PointId const> s) {
      Mask mask = 0;
      for (auto x : s) {
        mask |= Mask(1) << x;
      }
      return mask;
    }

    // Depth-first search for a selection of candidates in which every point
    // x has a chosen candidate containing required[x] and no point lies in
    // more than `capacity` chosen candidates.
    class BoundedMultiplicitySearch {
     public:
      BoundedMultiplicitySearch(std::vector<Mask> const& required,
                                std::vector<Mask> const& candidates,
                                int                      capacity)
          : _required(required),
            _candidates(candidates),
            _capacity(capacity),
            _count(required.size(), 0),
            _used(candidates.size(), false) {}

      std::optional<std::vector<Mask>> run() {
        if (search()) {
          std::vector<Mask> result;
          for (auto i : _chosen) {
            result.push_back(_candidates[i]);
          }
          return result;
        }
        return std::nullopt;
      }

     private:
      bool satisfied(std::size_t x) const {
        for (auto i : _chosen) {
          if ((_candidates[i] & _required[x]) == _required[x]) {
            return true;
          }
        }
        return false;
      }

      bool fits(std::size_t i) const {
        Mask mask = _candidates[i];
        for (std::size_t p = 0; mask != 0; ++p, mask >>= 1) {
          if ((mask & 1U) && _count[p] >= _capacity) {
            return false;
          }
        }
        return true;
      }

      void apply(std::size_t i, int delta) {
        Mask mask = _candidates[i];
        for (std::size_t p = 0; mask != 0; ++p, mask >>= 1) {
          if (mask & 1U) {
            _count[p] += delta;
          }
        }
      }

      bool search() {
        // Most constrained unsatisfied point first.
        std::optional<std::size_t> pick;
        std::vector<std::size_t>   best_options;
        for (std::size_t x = 0; x < _required.size(); ++x) {
          if (satisfied(x)) {
            continue;
          }
          std::vector<std::size_t> options;
          for (std::size_t i = 0; i < _candidates.size(); ++i) {
            if (!_used[i] && (_candidates[i] & _required[x]) == _required[x]
                && fits(i)) {
              options.push_back(i);
            }
          }
          if (options.empty()) {
            return false;
          }
          if (!pick || options.size() < best_options.size()) {
            pick         = x;
            best_options = std::move(options);
          }
        }
        if (!pick) {
          return true;
        }
        for (auto i : best_options) {
          _used[i] = true;
          _chosen.push_back(i);
          apply(i, +1);
          if (search()) {
            return true;
          }
          apply(i, -1);
          _chosen.pop_back();
          _used[i] = false;
        }
        return false;
      }

      std::vector<Mask> const& _required;
      std::vector<Mask> const& _candidates;
      int                      _capacity;
      std::vector<int>         _count;
      std::vector<bool>        _used;
      std::vector<std::size_t> _chosen;
    };
  }  // namespace

  std::optional<Cover> min_dimension_cover_exact(SpacePtr const&     space,
                                                 Scalar const&       R,
                                                 Scalar const&       B,
                                                 ExactOptions const& options) {
    auto const&       m = *space;
    std::size_t const n = m.size();
    if (n > options.point_cap || n > 31) {
      throw ValidationError("min_dimension_cover_exact: " + std::to_string(n)
                            + " points exceeds the exact-search cap of "
                            + std::to_string(options.point_cap)
                            + "; use greedy_cover");
    }
    if (R < 0) {
      throw ValidationError("min_dimension_cover_exact: negative R");
    }
    if (n == 0) {
      return std::nullopt;
    }

    std::vector<Mask> required(n);
    for (PointId x = 0; x < n; ++x) {
      required[x] = to_mask(ball(m, x, R, BallMode::open)) | (Mask(1) << x);
    }

    auto diameter_ok = [&](Mask mask) {
      auto points = to_set(mask);
      return diameter(m, points) <= B;
    };

    std::vector<Mask> raw;
    for (PointId c = 0; c < n; ++c) {
      std::set<Scalar> radii;
      for (PointId y = 0; y < n; ++y) {
        if (m.dist(c, y) <= B) {
          radii.insert(m.dist(c, y));
        }
      }
      for (auto const& rho : radii) {
        Mask mask = to_mask(ball(m, c, rho, BallMode::closed));
        if (diameter_ok(mask)) {
          raw.push_back(mask);
        }
      }
    }
    if (candidate_family_for(n, options) == CandidateFamily::balls_and_subsets) {
      // diam(mask) = max(diam(mask minus lowest point), spread of the
      // lowest point to the rest).
      Mask const          full = (Mask(1) << n) - 1;
      std::vector<Scalar> diam(std::size_t(full) + 1, Scalar(0));
      for (Mask mask = 1; mask <= full; ++mask) {
        auto const low  = static_cast<PointId>(std::countr_zero(mask));
        Mask const rest = mask & (mask - 1);
        Scalar     d    = diam[rest];
        for (Mask r = rest; r != 0; r &= r - 1) {
          d = std::max(d, m.dist(low, static_cast<PointId>(std::countr_zero(r))));
        }
        diam[mask] = d;
        if (d <= B) {
          raw.push_back(mask);
        }
      }
    }

    // Drop duplicates and sets containing no required ball; extra members
    // of that kind never help.
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Mask> candidates;
    for (auto mask : raw) {
      bool useful = false;
      for (auto req : required) {
        useful = useful || (mask & req) == req;
      }
      if (useful) {
        candidates.push_back(mask);
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
      return std::popcount(a) > std::popcount(b);
    });
    for (auto req : required) {
      bool found = false;
      for (auto mask : candidates) {
        found = found || (mask & req) == req;
      }
      if (!found) {
        return std::nullopt;
      }
    }

    for (int capacity = 1; capacity <= static_cast<int>(n); ++capacity) {
      BoundedMultiplicitySearch search(required, candidates, capacity);
      if (auto chosen = search.run()) {
        std::sort(chosen->begin(), chosen->end());
        std::vector<PointSet> members;
        for (auto mask : *chosen) {
          members.push_back(to_set(mask));
        }
        Cover cover(space, std::move(members));
        auto  cert = certify(cover);
        if (cert.dimension != capacity - 1 || cert.lebesgue < ExtScalar(R)
            || cert.mesh > B) {
          throw InternalAssertion(
              "min_dimension_cover_exact: returned cover fails its "
              "certificate");
        }
        return cover;
      }
    }
    throw InternalAssertion("min_dimension_cover_exact: search exhausted "
                            "although a feasible cover exists");
  }

  Cover greedy_cover(SpacePtr const& space, Scalar const& R) {
    if (R <= 0) {
      throw ValidationError("greedy_cover: R must be positive");
    }
    auto const&          m = *space;
    std::vector<PointId> centres;
    for (PointId x = 0; x < m.size(); ++x) {
      bool far = true;
      for (auto c : centres) {
        far = far && m.dist(x, c) > R;
      }
      if (far) {
        centres.push_back(x);
      }
    }
    std::vector<PointSet> members;
    for (auto c : centres) {
      members.push_back(ball(m, c, 2 * R, BallMode::open));
    }
    Cover cover(space, std::move(members));
    if (lebesgue_number(cover) < ExtScalar(R)) {
      throw InternalAssertion("greedy_cover: Lebesgue number below R");
    }
    return cover;
  }

  std::optional<int> ProfileEntry::dimension() const {
    if (!certificate) {
      return std::nullopt;
    }
    return certificate->dimension;
  }

  namespace {
    ProfileEntry estimate_at(SpacePtr const&       m,
                             Scalar const&         R,
                             ProfileOptions const& options) {
      bool const exact
          = options.mode == EstimateMode::exact
            || (options.mode == EstimateMode::automatic
                && m->size() <= options.exact.point_cap);
      ProfileEntry entry;
      entry.scale = R;
      if (exact) {
        Scalar B         = options.mesh_bound.value_or(options.mesh_factor * R);
        entry.method     = Method::exact;
        entry.mesh_bound = B;
        entry.family     = candidate_family_for(m->size(), options.exact);
        entry.cover      = min_dimension_cover_exact(m, R, B, options.exact);
      } else {
        entry.method = Method::greedy;
        entry.cover  = greedy_cover(m, R);
      }
      if (entry.cover) {
        entry.certificate = certify(*entry.cover);
      }
      return entry;
    }
  }  // namespace

  DimensionProfile asdim_profile(SpacePtr const&         m,
                                 std::span<Scalar const> scales,
                                 ProfileOptions const&   options) {
    for (std::size_t i = 0; i < scales.size(); ++i) {
      if (scales[i] <= 0 || (i > 0 && !(scales[i - 1] < scales[i]))) {
        throw ValidationError("asdim_profile: scales must be positive and "
                              "strictly increasing");
      }
    }
    DimensionProfile profile;
    for (auto const& R : scales) {
      profile.entries.push_back(estimate_at(m, R, options));
    }
    return profile;
  }

  PipelineResult equivariant_cover_pipeline(IsometricAction const& a,
                                            Scalar const&          R,
                                            PipelineOptions const& options) {
    auto   q      = quotient(a);
    Method method = Method::exact;
    std::optional<Cover> c = options.quotient_cover;
    if (!c) {
      auto entry = estimate_at(q.base, R, options.estimate);
      if (!entry.cover) {
        throw InfeasibleError("equivariant_cover_pipeline: no cover of the "
                              "quotient with Lebesgue number >= "
                              + format_scalar(R) + " and mesh <= "
                              + format_scalar(*entry.mesh_bound));
      }
      method = entry.method;
      c      = std::move(entry.cover);
    }
    auto lift = lift_equivariant(a, q, *c, R);
    return PipelineResult{std::move(q), std::move(*c), method, std::move(lift)};
  }

  namespace {
    FamilySummary summarise(std::span<SpacePtr const> spaces,
                            std::span<Scalar const>   scales,
                            ProfileOptions const&     options) {
      FamilySummary summary;
      for (auto const& m : spaces) {
        summary.profiles.push_back(asdim_profile(m, scales, options));
      }
      for (std::size_t i = 0; i < scales.size(); ++i) {
        std::optional<int>    dim  = 0;
        std::optional<Scalar> mesh = Scalar(0);
        for (auto const& p : summary.profiles) {
          auto const& e = p.entries[i];
          if (!e.feasible()) {
            dim.reset();
            mesh.reset();
            break;
          }
          dim  = std::max(*dim, *e.dimension());
          mesh = std::max(*mesh, e.certificate->mesh);
        }
        summary.max_dimension.push_back(dim);
        summary.max_mesh.push_back(mesh);
      }
      return summary;
    }
  }  // namespace

  FamilyProfile family_profile(std::span<SpacePtr const>        spaces,
                               std::span<IsometricAction const> actions,
                               std::span<Scalar const>          scales,
                               ProfileOptions const&            options) {
    if (!actions.empty() && actions.size() != spaces.size()) {
      throw ValidationError("family_profile: need one action per space");
    }
    FamilyProfile result;
    result.spaces = summarise(spaces, scales, options);
    if (!actions.empty()) {
      std::vector<SpacePtr> quotients;
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (!same_space(actions[i].space_ptr(), spaces[i])) {
          throw ValidationError("family_profile: action "
                                + std::to_string(i)
                                + " does not act on its space");
        }
        quotients.push_back(quotient(actions[i]).base);
      }
      result.quotients = summarise(quotients, scales, options);
    }
    return result;
  }

  std::vector<QuotientComparisonRow>
  compare_quotient_dimensions(IsometricAction const&       a,
                              std::span<ScaleRegime const> regimes,
                              ExactOptions const&          options) {
    auto                               q = quotient(a);
    std::vector<QuotientComparisonRow> rows;
    for (auto const& regime : regimes) {
      QuotientComparisonRow row{regime, std::nullopt, std::nullopt,
                                Comparison::undecided};
      if (auto c = min_dimension_cover_exact(a.space_ptr(), regime.R,
                                             regime.B, options)) {
        row.space_dimension = dimension(*c);
      }
      if (auto c = min_dimension_cover_exact(q.base, regime.R, regime.B,
                                             options)) {
        row.quotient_dimension = dimension(*c);
      }
      if (row.space_dimension && row.quotient_dimension) {
        row.comparison = *row.quotient_dimension == *row.space_dimension
                             ? Comparison::equal
                         : *row.quotient_dimension < *row.space_dimension
                             ? Comparison::quotient_lower
                             : Comparison::quotient_higher;
      }
      rows.push_back(row);
    }
    return rows;
  }

}  // namespace asdim
