#include "asdim/covers.hpp"

#include <algorithm>

namespace asdim {

  Cover::Cover(SpacePtr space, std::vector<PointSet> members)
      : _space(std::move(space)) {
    if (!_space) {
      throw ValidationError("cover without a space");
    }
    std::size_t const n = _space->size();
    std::vector<bool> covered(n, false);
    _members.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto member = make_point_set(std::move(members[i]));
      if (member.empty()) {
        throw ValidationError("cover member " + std::to_string(i)
                              + " is empty");
      }
      if (member.back() >= n) {
        throw ValidationError("cover member " + std::to_string(i)
                              + " mentions point " + std::to_string(member.back())
                              + " outside the space");
      }
      for (auto x : member) {
        covered[x] = true;
      }
      _members.push_back(std::move(member));
    }
    for (PointId x = 0; x < n; ++x) {
      if (!covered[x]) {
        throw ValidationError("cover misses point " + std::to_string(x) + " ("
                              + _space->label(x) + ")");
      }
    }
  }

  int dimension(Cover const& c) {
    std::vector<int> count(c.space().size(), 0);
    for (auto const& member : c.members()) {
      for (auto x : member) {
        ++count[x];
      }
    }
    return *std::max_element(count.begin(), count.end()) - 1;
  }

  namespace {
    // d(x, X \ U) with U sorted.
    ExtScalar complement_distance(FiniteMetricSpace const& m,
                                  PointId                  x,
                                  PointSet const&          u) {
      ExtScalar best = ExtScalar::infinity();
      for (PointId y = 0; y < m.size(); ++y) {
        if (!std::binary_search(u.begin(), u.end(), y)) {
          best = min(best, ExtScalar(m.dist(x, y)));
        }
      }
      return best;
    }
  }  // namespace

  ExtScalar lebesgue_number(Cover const& c) {
    auto const& m      = c.space();
    ExtScalar   result = ExtScalar::infinity();
    for (PointId x = 0; x < m.size(); ++x) {
      ExtScalar best(0);
      for (auto const& member : c.members()) {
        if (std::binary_search(member.begin(), member.end(), x)) {
          best = max(best, complement_distance(m, x, member));
        }
      }
      result = min(result, best);
    }
    return result;
  }

  Scalar mesh(Cover const& c) {
    Scalar best(0);
    for (auto const& member : c.members()) {
      best = std::max(best, diameter(c.space(), member));
    }
    return best;
  }

  int ball_meet_count(Cover const& c, Scalar const& R) {
    auto const& m    = c.space();
    int         best = 0;
    for (PointId x = 0; x < m.size(); ++x) {
      int count = 0;
      for (auto const& member : c.members()) {
        if (point_set_distance(m, x, member) < ExtScalar(R)) {
          ++count;
        }
      }
      best = std::max(best, count);
    }
    return best;
  }

  DisjointnessCheck is_r_disjoint(FiniteMetricSpace const&     m,
                                  std::vector<PointSet> const& family,
                                  Scalar const&                r) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        for (auto x : family[i]) {
          for (auto y : family[j]) {
            if (m.dist(x, y) <= r) {
              return DisjointnessCheck{
                  false, DisjointnessWitness{i, j, x, y, m.dist(x, y)}};
            }
          }
        }
      }
    }
    return DisjointnessCheck{};
  }

  DecompositionReport validate_decomposition(Decomposition const& d) {
    DecompositionReport result;
    if (!d.space) {
      result.violations.add("missing-space", {});
      return result;
    }
    auto const&       m = *d.space;
    std::vector<bool> covered(m.size(), false);
    bool              all_nonempty = true;
    Scalar            piece_mesh(0);
    for (std::size_t j = 0; j < d.families.size(); ++j) {
      auto const& family = d.families[j];
      for (std::size_t k = 0; k < family.size(); ++k) {
        auto const& piece = family[k];
        if (piece.empty()) {
          result.violations.add("empty-piece", {j, k});
          all_nonempty = false;
          continue;
        }
        bool in_range = true;
        for (auto x : piece) {
          if (x >= m.size()) {
            result.violations.add("unknown-point", {j, k, x});
            in_range = false;
          } else {
            covered[x] = true;
          }
        }
        if (!in_range) {
          all_nonempty = false;
          continue;
        }
        piece_mesh = std::max(piece_mesh, diameter(m, piece));
      }
    }
    for (PointId x = 0; x < m.size(); ++x) {
      if (!covered[x]) {
        result.violations.add("coverage", {x},
                              "point " + m.label(x) + " is in no piece");
      }
    }
    if (!all_nonempty) {
      return result;
    }
    for (std::size_t j = 0; j < d.families.size(); ++j) {
      std::vector<PointSet> family;
      for (auto const& piece : d.families[j]) {
        family.push_back(make_point_set(piece));
      }
      // Report every offending pair, not just the first.
      for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a + 1; b < family.size(); ++b) {
          auto check = is_r_disjoint(m, {family[a], family[b]}, d.r);
          if (!check) {
            auto const& w = *check.witness;
            result.violations.add(
                "disjointness", {j, a, b, w.x, w.y},
                "distance " + format_scalar(w.distance)
                    + " <= r = " + format_scalar(d.r));
          }
        }
      }
    }
    result.piece_mesh = piece_mesh;
    return result;
  }

  CoverCertificate certify(Cover const& c, std::optional<Scalar> const& R) {
    CoverCertificate cert;
    cert.dimension = dimension(c);
    cert.lebesgue  = lebesgue_number(c);
    cert.mesh      = mesh(c);
    if (R) {
      cert.ball_meet = std::make_pair(*R, ball_meet_count(c, *R));
    }
    return cert;
  }

  CertifiedCover decomposition_to_cover(Decomposition const& d) {
    auto report = validate_decomposition(d);
    report.violations.throw_if_failed("decomposition_to_cover");
    auto const&           m         = *d.space;
    Scalar const          thickness = d.r / 4;
    std::vector<PointSet> members;
    for (auto const& family : d.families) {
      for (auto const& piece : family) {
        PointSet thick;
        for (PointId y = 0; y < m.size(); ++y) {
          if (point_set_distance(m, y, piece) <= ExtScalar(thickness)) {
            thick.push_back(y);
          }
        }
        members.push_back(std::move(thick));
      }
    }
    Cover cover(d.space, std::move(members));
    auto  cert = certify(cover);
    if (cert.dimension > static_cast<int>(d.families.size()) - 1) {
      throw InternalAssertion("decomposition_to_cover: dimension "
                              + std::to_string(cert.dimension) + " exceeds "
                              + std::to_string(d.families.size() - 1));
    }
    if (cert.lebesgue < ExtScalar(thickness)) {
      throw InternalAssertion("decomposition_to_cover: Lebesgue number "
                              + format_scalar(cert.lebesgue) + " below r/4");
    }
    return CertifiedCover{std::move(cover), cert};
  }

}  // namespace asdim
