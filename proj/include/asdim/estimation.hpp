#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asdim/constructions.hpp"
#include "asdim/covers.hpp"

namespace asdim {

  // Which sets the exact search may use as cover members. The family is
  // reported with every exact result so minimality claims stay scoped.
  enum class CandidateFamily {
    // Closed balls of diameter <= B.
    balls,
    // Closed balls plus every subset of diameter <= B.
    balls_and_subsets,
  };

  std::string to_string(CandidateFamily family);

  struct ExactOptions {
    std::size_t point_cap  = 16;
    std::size_t subset_cap = 10;
  };

  CandidateFamily candidate_family_for(std::size_t          points,
                                       ExactOptions const& options = {});

  // A cover with Lebesgue number >= R and mesh <= B whose dimension is
  // minimal among covers built from the candidate family, or nullopt when
  // no such cover exists. Deterministic. Throws ValidationError if the
  // space exceeds options.point_cap (use greedy_cover instead) or R < 0.
  std::optional<Cover> min_dimension_cover_exact(SpacePtr const&     m,
                                                 Scalar const&       R,
                                                 Scalar const&       B,
                                                 ExactOptions const& options
                                                 = {});

  // Open 2R-balls around a maximal R-separated net chosen in index order
  // (a point becomes a centre when it is more than R from every earlier
  // centre). Every open R-ball then lies in one member, which is asserted
  // on the recomputed certificate. Throws ValidationError if R <= 0.
  Cover greedy_cover(SpacePtr const& m, Scalar const& R);

  enum class EstimateMode { automatic, exact, greedy };

  enum class Method { exact, greedy };

  std::string to_string(Method method);

  struct ProfileOptions {
    // Fixed mesh bound for exact search; when absent B = mesh_factor * R.
    std::optional<Scalar> mesh_bound;
    Scalar                mesh_factor{4};
    EstimateMode          mode = EstimateMode::automatic;
    ExactOptions          exact;
  };

  struct ProfileEntry {
    Scalar                         scale{0};
    std::optional<Scalar>          mesh_bound;  // exact mode only
    Method                         method = Method::exact;
    std::optional<CandidateFamily> family;      // exact mode only
    // Empty when infeasible.
    std::optional<Cover>            cover;
    std::optional<CoverCertificate> certificate;

    bool                feasible() const noexcept { return cover.has_value(); }
    std::optional<int>  dimension() const;
  };

  struct DimensionProfile {
    std::vector<ProfileEntry> entries;
  };

  // Per scale, the best cover found with Lebesgue number >= scale. Scales
  // must be positive and strictly increasing (ValidationError otherwise).
  DimensionProfile asdim_profile(SpacePtr const&        m,
                                 std::span<Scalar const> scales,
                                 ProfileOptions const&  options = {});

  struct PipelineOptions {
    // Cover of the quotient to lift; estimated when absent.
    std::optional<Cover> quotient_cover;
    ProfileOptions       estimate;
  };

  struct PipelineResult {
    QuotientSpace quotient;
    Cover         quotient_cover;
    Method        method = Method::exact;
    LiftResult    lift;
  };

  // Estimate a cover of F\X with Lebesgue number >= R, then lift it to an
  // F-equivariant cover of X. Throws InfeasibleError when the estimator
  // finds no quotient cover.
  PipelineResult equivariant_cover_pipeline(IsometricAction const& a,
                                            Scalar const&          R,
                                            PipelineOptions const& options
                                            = {});

  struct FamilySummary {
    std::vector<DimensionProfile> profiles;
    // Per scale: the largest member dimension (nullopt if some member is
    // infeasible) and the largest member mesh, the uniform bound surrogate.
    std::vector<std::optional<int>>    max_dimension;
    std::vector<std::optional<Scalar>> max_mesh;
  };

  struct FamilyProfile {
    FamilySummary                spaces;
    std::optional<FamilySummary> quotients;
  };

  // When `actions` is non-empty it must pair one action with each space;
  // the quotient family is then profiled as well.
  FamilyProfile family_profile(std::span<SpacePtr const>        spaces,
                               std::span<IsometricAction const> actions,
                               std::span<Scalar const>          scales,
                               ProfileOptions const&            options = {});

  struct ScaleRegime {
    Scalar R;
    Scalar B;
  };

  enum class Comparison { equal, quotient_lower, quotient_higher, undecided };

  std::string to_string(Comparison comparison);

  struct QuotientComparisonRow {
    ScaleRegime        regime;
    std::optional<int> space_dimension;     // nullopt: infeasible
    std::optional<int> quotient_dimension;  // nullopt: infeasible
    Comparison         comparison = Comparison::undecided;
  };

  // Exact minimal dimensions of X and F\X side by side at each (R, B).
  std::vector<QuotientComparisonRow>
  compare_quotient_dimensions(IsometricAction const&       a,
                              std::span<ScaleRegime const> regimes,
                              ExactOptions const&          options = {});

}  // namespace asdim
