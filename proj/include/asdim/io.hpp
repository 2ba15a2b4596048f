#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asdim/constructions.hpp"
#include "asdim/estimation.hpp"
#include "asdim/sspace.hpp"

namespace asdim::io {

  using json = nlohmann::ordered_json;

  // Written into every emitted document.
  inline constexpr char const* format_version = "asdim-1";

  // Canonical text of a document: two-space indent plus trailing newline.
  std::string dump(json const& doc);

  // Accepts a JSON string ("p/q", "p", decimal) or a JSON integer.
  Scalar    scalar_from_json(json const& value);
  json      scalar_to_json(Scalar const& value);
  ExtScalar ext_scalar_from_json(json const& value);
  json      ext_scalar_to_json(ExtScalar const& value);

  json              space_to_json(FiniteMetricSpace const& m, std::string const& id);
  FiniteMetricSpace space_from_json(json const& doc);

  // One edge "u v [w]" per line; '#' starts a comment. Vertices are named by
  // their tokens in order of first appearance.
  FiniteMetricSpace space_from_edge_list(std::string const& text);

  json        group_to_json(FiniteGroup const& g, std::string const& id);
  FiniteGroup group_from_json(json const& doc);

  json action_to_json(IsometricAction const& a,
                      std::string const&     id,
                      std::string const&     group_id,
                      std::string const&     space_id);

  json             certificate_to_json(CoverCertificate const& cert);
  CoverCertificate certificate_from_json(json const& doc);

  // Certificate is recomputed here; the argument only adds optional fields
  // (ball-meet count, equivariance flag) when present.
  json cover_to_json(Cover const&                           c,
                     std::string const&                     id,
                     std::string const&                     space_id,
                     std::optional<CoverCertificate> const& cert = std::nullopt);

  json decomposition_to_json(Decomposition const& d,
                             std::string const&   id,
                             std::string const&   space_id);

  json sspace_to_json(std::string const&              id,
                      std::vector<std::string> const& component_ids,
                      std::vector<PointSet> const&    basepoints,
                      std::vector<Scalar> const&      weights);

  json      trace_to_json(LiftTrace const& t, FiniteGroup const& g);
  LiftTrace trace_from_json(json const& doc, FiniteGroup const& g);

  json profile_to_json(DimensionProfile const& p, std::string const& space_id);
  // Header: space,R,B,method,family,feasible,dimension,mesh,lebesgue
  std::string profile_to_csv(DimensionProfile const& p,
                             std::string const&      space_id,
                             bool                    header = true);

  json quotient_to_json(QuotientSpace const& q,
                        std::string const&   quotient_id,
                        std::string const&   action_id);

  // Named registry of objects loaded from files. Documents are kept raw and
  // resolved (and validated) on first use so that dangling references and
  // invalid objects are reported per id.
  class Workspace {
   public:
    // Adds every object of a file: a single object, an {"objects": [...]}
    // bundle, or (for .txt/.edges files) an edge list registered under the
    // file stem. Throws ValidationError on malformed input and on duplicate
    // ids.
    void load_file(std::filesystem::path const& path);
    void add_document(json doc);
    void add_space(std::string const& id, SpacePtr space);

    bool                     contains(std::string const& id) const;
    std::string              type_of(std::string const& id) const;
    std::vector<std::string> ids() const;
    std::vector<std::string> ids_of_type(std::string const& type) const;
    json const&              document(std::string const& id) const;

    // ResolutionError for unknown ids or ids of the wrong type;
    // ValidationError when the object fails its validator.
    SpacePtr        space(std::string const& id);
    GroupPtr        group(std::string const& id);
    IsometricAction action(std::string const& id);
    Cover           cover(std::string const& id);
    Decomposition   decomposition(std::string const& id);
    SSpace          sspace(std::string const& id);

    // The id a space was registered under (for covers of computed spaces).
    std::optional<std::string> id_of(SpacePtr const& space) const;

   private:
    json const& expect(std::string const& id, std::string const& type) const;

    std::map<std::string, json>     _documents;
    std::vector<std::string>        _order;
    std::map<std::string, SpacePtr> _spaces;
    std::map<std::string, GroupPtr> _groups;
  };

}  // namespace asdim::io
