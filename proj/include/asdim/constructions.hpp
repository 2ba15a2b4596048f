#pragma once

#include <optional>
#include <vector>

#include "asdim/action.hpp"
#include "asdim/covers.hpp"

namespace asdim {

  // Image of a cover of X under the orbit projection X -> F\X, with members
  // deduplicated as sets. Certified: mesh does not grow, the Lebesgue number
  // does not shrink and the dimension is at most |F|(n+1)-1 where n is the
  // input dimension. Throws ValidationError when c or q does not belong to
  // a, InternalAssertion if a certified bound fails.
  CertifiedCover pushforward_cover(IsometricAction const& a,
                                   QuotientSpace const&   q,
                                   Cover const&           c);

  struct EquivarianceCheck {
    bool ok = true;
    // (member index, group element, image set) of the first failure.
    std::optional<std::tuple<std::size_t, Element, PointSet>> witness;

    explicit operator bool() const noexcept { return ok; }
  };

  // True iff the image of every member under every group element is again a
  // member (as a set).
  EquivarianceCheck check_equivariance(IsometricAction const& a,
                                       Cover const&           c);

  struct LiftPiece {
    // Coset representative f; the piece is U_{f x_U}.
    Element representative;
    PointId centre;  // f x_U
    // Subgroup generated by {h : d(f x_U, h f x_U) <= 4s}.
    std::vector<Element> subgroup;
    PointSet             points;
  };

  struct LiftMember {
    std::size_t quotient_member;
    PointId     basepoint;  // x_U
    PointSet    fiber;      // p^{-1}(U)
    // The subgroup at x_U itself, whose left cosets index the pieces.
    std::vector<Element>   base_subgroup;
    std::vector<LiftPiece> pieces;
  };

  // Complete record of one execution of the equivariant lift.
  struct LiftTrace {
    Scalar                  s{0};
    Scalar                  R{0};
    std::vector<LiftMember> members;
  };

  struct LiftResult {
    Cover            cover;
    CoverCertificate certificate;
    LiftTrace        trace;
  };

  // Lifts a cover of F\X to an F-equivariant bounded cover of X.
  //
  // With s = max(mesh(c), R), each member U with fiber p^{-1}(U) and
  // basepoint x_U (lowest-index point of the fiber) contributes one piece
  //   U_{f x_U} = p^{-1}(U) ∩ ⋃_{h ∈ F_{f x_U, s}} B_s(h f x_U)
  // per left coset f F_{x_U, s}, where F_{y, s} is generated by the
  // elements moving y by at most 4s and B_s is the closed ball.
  //
  // Certified on every call (InternalAssertion on failure):
  //   (i)   the output is F-invariant as a family;
  //   (ii)  mesh < 4s(|F| + 1);
  //   (iii) dimension <= dimension(c);
  //   (iv)  lebesgue >= min(lebesgue(c), 2s) >= R;
  //   (v)   per member, pieces are pairwise more than 2s apart and union to
  //         the fiber.
  // Throws ValidationError if R <= 0, if lebesgue(c) < R, or if c is not a
  // cover of q.base.
  LiftResult lift_equivariant(IsometricAction const& a,
                              QuotientSpace const&   q,
                              Cover const&           c,
                              Scalar const&          R);

}  // namespace asdim
