#pragma once

#include <optional>
#include <span>
#include <vector>

#include "asdim/metric.hpp"

namespace asdim {

  // A finite cover of a space by nonempty point sets. Members may repeat as
  // sets; each entry counts separately toward multiplicity.
  class Cover {
   public:
    // Throws ValidationError if a member is empty, mentions an unknown point
    // or the members do not cover the space. Members are normalised to
    // sorted sets; member order is preserved.
    Cover(SpacePtr space, std::vector<PointSet> members);

    FiniteMetricSpace const&     space() const noexcept { return *_space; }
    SpacePtr const&              space_ptr() const noexcept { return _space; }
    std::vector<PointSet> const& members() const noexcept { return _members; }
    std::size_t size() const noexcept { return _members.size(); }

   private:
    SpacePtr              _space;
    std::vector<PointSet> _members;
  };

  // Largest number of members containing a single point, minus one.
  int dimension(Cover const& c);

  // min over x of max over members U of d(x, X \ U). For every R at most
  // this value each open R-ball lies in a member; for larger R some open
  // ball does not. +infinity when a member is the whole space.
  ExtScalar lebesgue_number(Cover const& c);

  // Largest member diameter.
  Scalar mesh(Cover const& c);

  // max over x of the number of members meeting the open ball B_R(x).
  int ball_meet_count(Cover const& c, Scalar const& R);

  struct DisjointnessWitness {
    std::size_t first_piece;
    std::size_t second_piece;
    PointId     x;
    PointId     y;
    Scalar      distance;
  };

  struct DisjointnessCheck {
    bool                               ok = true;
    std::optional<DisjointnessWitness> witness;

    explicit operator bool() const noexcept { return ok; }
  };

  // True iff every two distinct pieces are more than r apart.
  DisjointnessCheck is_r_disjoint(FiniteMetricSpace const&     m,
                                  std::vector<PointSet> const& family,
                                  Scalar const&                r);

  // Families j = 0..n of pieces; each family r-disjoint, pieces covering the
  // space. Stored as given; validate_decomposition checks it.
  struct Decomposition {
    SpacePtr                           space;
    Scalar                             r{0};
    std::vector<std::vector<PointSet>> families;
  };

  struct DecompositionReport {
    ValidationReport violations;
    // Largest piece diameter, when every piece is nonempty.
    std::optional<Scalar> piece_mesh;

    bool ok() const noexcept { return violations.ok(); }
  };

  DecompositionReport validate_decomposition(Decomposition const& d);

  struct CoverCertificate {
    int                                   dimension = 0;
    ExtScalar                             lebesgue;
    Scalar                                mesh{0};
    std::optional<std::pair<Scalar, int>> ball_meet;  // (R, count)
    std::optional<bool>                   equivariant;

    friend bool operator==(CoverCertificate const&,
                           CoverCertificate const&) = default;
  };

  CoverCertificate certify(Cover const&                  c,
                           std::optional<Scalar> const& meet_radius
                           = std::nullopt);

  struct CertifiedCover {
    Cover            cover;
    CoverCertificate certificate;
  };

  // Members are closed r/4-neighbourhoods of the pieces. Throws
  // ValidationError on an invalid decomposition and InternalAssertion if
  // the result has dimension above (families - 1) or Lebesgue number below
  // r/4.
  CertifiedCover decomposition_to_cover(Decomposition const& d);

}  // namespace asdim
