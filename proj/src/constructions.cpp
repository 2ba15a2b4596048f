#include "asdim/constructions.hpp"

#include <algorithm>
#include <set>

namespace asdim {

  namespace {
    void require_quotient_of(IsometricAction const& a, QuotientSpace const& q) {
      if (!same_space(q.source, a.space_ptr())) {
        throw ValidationError("quotient was not built from this action's space");
      }
      if (orbits(a) != q.fibers) {
        throw ValidationError("quotient fibers are not the orbits of the action");
      }
    }

    [[noreturn]] void fail(std::string const& what) {
      throw InternalAssertion(what);
    }
  }  // namespace

  CertifiedCover pushforward_cover(IsometricAction const& a,
                                   QuotientSpace const&   q,
                                   Cover const&           c) {
    if (!same_space(c.space_ptr(), a.space_ptr())) {
      throw ValidationError("pushforward_cover: cover is not a cover of the "
                            "acted-on space");
    }
    require_quotient_of(a, q);

    std::set<PointSet>    seen;
    std::vector<PointSet> members;
    for (auto const& u : c.members()) {
      auto image = q.project(u);
      if (seen.insert(image).second) {
        members.push_back(std::move(image));
      }
    }
    Cover out(q.base, std::move(members));
    auto  cert = certify(out);

    auto const in_cert = certify(c);
    auto const order   = static_cast<int>(a.group().order());
    if (cert.mesh > in_cert.mesh) {
      fail("pushforward_cover: mesh grew from " + format_scalar(in_cert.mesh)
           + " to " + format_scalar(cert.mesh));
    }
    if (cert.lebesgue < in_cert.lebesgue) {
      fail("pushforward_cover: Lebesgue number fell from "
           + format_scalar(in_cert.lebesgue) + " to "
           + format_scalar(cert.lebesgue));
    }
    if (cert.dimension > order * (in_cert.dimension + 1) - 1) {
      fail("pushforward_cover: dimension " + std::to_string(cert.dimension)
           + " exceeds |F|(n+1)-1 = "
           + std::to_string(order * (in_cert.dimension + 1) - 1));
    }
    return CertifiedCover{std::move(out), cert};
  }

  EquivarianceCheck check_equivariance(IsometricAction const& a,
                                       Cover const&           c) {
    std::set<PointSet> members(c.members().begin(), c.members().end());
    for (std::size_t i = 0; i < c.members().size(); ++i) {
      for (Element g = 0; g < a.group().order(); ++g) {
        auto image = a.image(g, c.members()[i]);
        if (!members.contains(image)) {
          return EquivarianceCheck{false,
                                   std::make_tuple(i, g, std::move(image))};
        }
      }
    }
    return EquivarianceCheck{};
  }

  LiftResult lift_equivariant(IsometricAction const& a,
                              QuotientSpace const&   q,
                              Cover const&           c,
                              Scalar const&          R) {
    if (R <= 0) {
      throw ValidationError("lift_equivariant: R must be positive");
    }
    if (!same_space(c.space_ptr(), q.base)) {
      throw ValidationError(
          "lift_equivariant: cover is not a cover of the quotient space");
    }
    require_quotient_of(a, q);

    auto const in_cert = certify(c);
    if (in_cert.lebesgue < ExtScalar(R)) {
      throw ValidationError("lift_equivariant: quotient cover has Lebesgue "
                            "number "
                            + format_scalar(in_cert.lebesgue) + " < R = "
                            + format_scalar(R));
    }

    auto const&       m     = a.space();
    auto const&       group = a.group();
    Scalar const      s     = std::max(in_cert.mesh, R);
    Scalar const      reach = 4 * s;
    LiftTrace         trace{s, R, {}};
    std::vector<PointSet> members;

    for (std::size_t u = 0; u < c.members().size(); ++u) {
      LiftMember record;
      record.quotient_member = u;
      record.fiber           = q.preimage(c.members()[u]);
      record.basepoint       = record.fiber.front();
      record.base_subgroup   = displacement_subgroup(a, record.basepoint, reach);

      for (auto f : coset_representatives(group, record.base_subgroup)) {
        LiftPiece piece;
        piece.representative = f;
        piece.centre         = a.image(f, record.basepoint);
        piece.subgroup       = displacement_subgroup(a, piece.centre, reach);
        for (auto y : record.fiber) {
          for (auto h : piece.subgroup) {
            if (m.dist(y, a.image(h, piece.centre)) <= s) {
              piece.points.push_back(y);
              break;
            }
          }
        }
        members.push_back(piece.points);
        record.pieces.push_back(std::move(piece));
      }

      // (v) pieces of one fiber are more than 2s apart and exhaust it.
      std::vector<PointId> joined;
      for (std::size_t i = 0; i < record.pieces.size(); ++i) {
        auto const& pi = record.pieces[i].points;
        joined.insert(joined.end(), pi.begin(), pi.end());
        for (std::size_t j = i + 1; j < record.pieces.size(); ++j) {
          auto d = set_distance(m, pi, record.pieces[j].points);
          if (d <= ExtScalar(2 * s)) {
            fail("lift_equivariant: pieces " + std::to_string(i) + " and "
                 + std::to_string(j) + " of member " + std::to_string(u)
                 + " are only " + format_scalar(d) + " apart (2s = "
                 + format_scalar(2 * s) + ")");
          }
        }
      }
      if (make_point_set(std::move(joined)) != record.fiber) {
        fail("lift_equivariant: pieces of member " + std::to_string(u)
             + " do not union to the fiber");
      }
      trace.members.push_back(std::move(record));
    }

    // Any empty piece would also violate (v); Cover rejects it here.
    Cover out(a.space_ptr(), std::move(members));
    auto  cert = certify(out);

    auto equivariant = check_equivariance(a, out);
    cert.equivariant = equivariant.ok;
    if (!equivariant) {
      auto const& [i, g, image] = *equivariant.witness;
      fail("lift_equivariant: image of member " + std::to_string(i)
           + " under element " + group.name(g) + " is not a member");
    }
    Scalar const mesh_bound = 4 * s * static_cast<std::int64_t>(group.order() + 1);
    if (!(cert.mesh < mesh_bound)) {
      fail("lift_equivariant: mesh " + format_scalar(cert.mesh)
           + " is not below 4s(|F|+1) = " + format_scalar(mesh_bound));
    }
    if (cert.dimension > in_cert.dimension) {
      fail("lift_equivariant: dimension " + std::to_string(cert.dimension)
           + " exceeds quotient cover dimension "
           + std::to_string(in_cert.dimension));
    }
    ExtScalar const lebesgue_floor = min(in_cert.lebesgue, ExtScalar(2 * s));
    if (cert.lebesgue < lebesgue_floor || cert.lebesgue < ExtScalar(R)) {
      fail("lift_equivariant: Lebesgue number " + format_scalar(cert.lebesgue)
           + " below min(lebesgue(c), 2s) = " + format_scalar(lebesgue_floor));
    }
    return LiftResult{std::move(out), cert, std::move(trace)};
  }

}  // namespace asdim
