#include "asdim/io.hpp"

#include <fstream>
#include <sstream>

namespace asdim::io {

  namespace {
    json const& field(json const& doc, char const* key) {
      if (!doc.is_object() || !doc.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
      }
      return doc.at(key);
    }

    std::string string_field(json const& doc, char const* key) {
      auto const& value = field(doc, key);
      if (!value.is_string()) {
        throw ValidationError(std::string("field \"") + key
                              + "\" must be a string");
      }
      return value.get<std::string>();
    }

    PointSet point_set_from_json(json const& value) {
      if (!value.is_array()) {
        throw ValidationError("point set must be an array of indices");
      }
      std::vector<PointId> points;
      for (auto const& x : value) {
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
          throw ValidationError("point index must be a nonnegative integer");
        }
        points.push_back(x.get<PointId>());
      }
      return make_point_set(std::move(points));
    }

    json point_set_to_json(std::span<PointId const> s) {
      json out = json::array();
      for (auto x : s) {
        out.push_back(x);
      }
      return out;
    }

    json element_set_to_json(FiniteGroup const&        g,
                             std::span<Element const> s) {
      json out = json::array();
      for (auto a : s) {
        out.push_back(g.name(a));
      }
      return out;
    }

    std::vector<Element> element_set_from_json(FiniteGroup const& g,
                                               json const&        value) {
      std::vector<Element> out;
      for (auto const& name : value) {
        out.push_back(g.index_of(name.get<std::string>()));
      }
      return out;
    }

    json header(char const* type, std::string const& id) {
      json doc;
      doc["version"] = format_version;
      doc["type"]    = type;
      doc["id"]      = id;
      return doc;
    }
  }  // namespace

  std::string dump(json const& doc) {
    return doc.dump(2) + "\n";
  }

  Scalar scalar_from_json(json const& value) {
    if (value.is_number_integer()) {
      return Scalar(value.get<std::int64_t>());
    }
    if (value.is_string()) {
      try {
        return parse_scalar(value.get<std::string>());
      } catch (std::invalid_argument const& e) {
        throw ValidationError(e.what());
      }
    }
    throw ValidationError("scalar must be an integer or a \"p/q\" string, got "
                          + value.dump());
  }

  json scalar_to_json(Scalar const& value) {
    return format_scalar(value);
  }

  ExtScalar ext_scalar_from_json(json const& value) {
    if (value.is_string() && value.get<std::string>() == "inf") {
      return ExtScalar::infinity();
    }
    return ExtScalar(scalar_from_json(value));
  }

  json ext_scalar_to_json(ExtScalar const& value) {
    return format_scalar(value);
  }

  json space_to_json(FiniteMetricSpace const& m, std::string const& id) {
    json doc      = header("space", id);
    doc["points"] = m.labels();
    json rows     = json::array();
    for (PointId x = 0; x < m.size(); ++x) {
      json row = json::array();
      for (PointId y = 0; y < m.size(); ++y) {
        row.push_back(scalar_to_json(m.dist(x, y)));
      }
      rows.push_back(std::move(row));
    }
    doc["dist"] = std::move(rows);
    return doc;
  }

  FiniteMetricSpace space_from_json(json const& doc) {
    std::vector<std::string> labels;
    for (auto const& p : field(doc, "points")) {
      labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    }
    std::vector<std::vector<Scalar>> rows;
    for (auto const& row : field(doc, "dist")) {
      std::vector<Scalar> values;
      for (auto const& v : row) {
        values.push_back(scalar_from_json(v));
      }
      rows.push_back(std::move(values));
    }
    return FiniteMetricSpace::from_rows(std::move(labels), rows);
  }

  FiniteMetricSpace space_from_edge_list(std::string const& text) {
    std::vector<std::string>  names;
    std::vector<WeightedEdge> edges;
    auto vertex = [&names](std::string const& token) {
      auto it = std::find(names.begin(), names.end(), token);
      if (it != names.end()) {
        return static_cast<PointId>(it - names.begin());
      }
      names.push_back(token);
      return static_cast<PointId>(names.size() - 1);
    };
    std::istringstream lines(text);
    std::string        line;
    std::size_t        number = 0;
    while (std::getline(lines, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       tokens(line);
      std::vector<std::string> parts;
      for (std::string t; tokens >> t;) {
        parts.push_back(t);
      }
      if (parts.empty()) {
        continue;
      }
      if (parts.size() == 1) {
        vertex(parts[0]);  // isolated vertex declaration
        continue;
      }
      if (parts.size() > 3) {
        throw ValidationError("edge list line " + std::to_string(number)
                              + ": expected \"u v [w]\"");
      }
      Scalar weight(1);
      if (parts.size() == 3) {
        try {
          weight = parse_scalar(parts[2]);
        } catch (std::invalid_argument const& e) {
          throw ValidationError("edge list line " + std::to_string(number)
                                + ": " + e.what());
        }
      }
      auto u = vertex(parts[0]);
      auto v = vertex(parts[1]);
      edges.push_back({u, v, weight});
    }
    return build_graph_metric(std::move(names), edges);
  }

  json group_to_json(FiniteGroup const& g, std::string const& id) {
    json doc        = header("group", id);
    doc["elements"] = g.names();
    json rows       = json::array();
    for (Element a = 0; a < g.order(); ++a) {
      json row = json::array();
      for (Element b = 0; b < g.order(); ++b) {
        row.push_back(g.mul(a, b));
      }
      rows.push_back(std::move(row));
    }
    doc["mul"] = std::move(rows);
    return doc;
  }

  FiniteGroup group_from_json(json const& doc) {
    std::vector<std::string> names;
    for (auto const& e : field(doc, "elements")) {
      names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    auto const&          rows = field(doc, "mul");
    std::vector<Element> table;
    if (rows.size() != names.size()) {
      throw ValidationError("group table has " + std::to_string(rows.size())
                            + " rows for " + std::to_string(names.size())
                            + " elements");
    }
    for (auto const& row : rows) {
      if (row.size() != names.size()) {
        throw ValidationError("group table row has wrong length");
      }
      for (auto const& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw ValidationError("group table entries must be element indices");
        }
        table.push_back(v.get<Element>());
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  json action_to_json(IsometricAction const& a,
                      std::string const&     id,
                      std::string const&     group_id,
                      std::string const&     space_id) {
    json doc     = header("action", id);
    doc["group"] = group_id;
    doc["space"] = space_id;
    json perm    = json::object();
    for (Element g = 0; g < a.group().order(); ++g) {
      perm[a.group().name(g)] = a.perm(g);
    }
    doc["perm"] = std::move(perm);
    return doc;
  }

  json certificate_to_json(CoverCertificate const& cert) {
    json doc;
    doc["dimension"] = cert.dimension;
    doc["lebesgue"]  = ext_scalar_to_json(cert.lebesgue);
    doc["mesh"]      = scalar_to_json(cert.mesh);
    if (cert.ball_meet) {
      doc["ball_meet"] = {{"R", scalar_to_json(cert.ball_meet->first)},
                          {"count", cert.ball_meet->second}};
    }
    if (cert.equivariant) {
      doc["equivariant"] = *cert.equivariant;
    }
    return doc;
  }

  CoverCertificate certificate_from_json(json const& doc) {
    CoverCertificate cert;
    cert.dimension = field(doc, "dimension").get<int>();
    cert.lebesgue  = ext_scalar_from_json(field(doc, "lebesgue"));
    cert.mesh      = scalar_from_json(field(doc, "mesh"));
    if (doc.contains("ball_meet")) {
      auto const& meet = doc.at("ball_meet");
      cert.ball_meet   = std::make_pair(scalar_from_json(field(meet, "R")),
                                      field(meet, "count").get<int>());
    }
    if (doc.contains("equivariant")) {
      cert.equivariant = doc.at("equivariant").get<bool>();
    }
    return cert;
  }

  json cover_to_json(Cover const&                           c,
                     std::string const&                     id,
                     std::string const&                     space_id,
                     std::optional<CoverCertificate> const& extra) {
    json doc        = header("cover", id);
    doc["space_id"] = space_id;
    json members    = json::array();
    for (auto const& m : c.members()) {
      members.push_back(point_set_to_json(m));
    }
    doc["members"] = std::move(members);
    auto cert      = certify(c, extra && extra->ball_meet
                                    ? std::optional<Scalar>(extra->ball_meet->first)
                                    : std::nullopt);
    if (extra) {
      cert.equivariant = extra->equivariant;
    }
    doc["certificate"] = certificate_to_json(cert);
    return doc;
  }

  json decomposition_to_json(Decomposition const& d,
                             std::string const&   id,
                             std::string const&   space_id) {
    json doc        = header("decomposition", id);
    doc["space_id"] = space_id;
    doc["r"]        = scalar_to_json(d.r);
    json families   = json::array();
    for (auto const& family : d.families) {
      json pieces = json::array();
      for (auto const& piece : family) {
        pieces.push_back(point_set_to_json(piece));
      }
      families.push_back(std::move(pieces));
    }
    doc["families"] = std::move(families);
    return doc;
  }

  json sspace_to_json(std::string const&              id,
                      std::vector<std::string> const& component_ids,
                      std::vector<PointSet> const&    basepoints,
                      std::vector<Scalar> const&      weights) {
    json doc          = header("sspace", id);
    doc["components"] = component_ids;
    json bases        = json::array();
    for (auto const& y : basepoints) {
      bases.push_back(point_set_to_json(y));
    }
    doc["basepoints"] = std::move(bases);
    json f            = json::array();
    for (auto const& w : weights) {
      f.push_back(scalar_to_json(w));
    }
    doc["f"] = std::move(f);
    return doc;
  }

  json trace_to_json(LiftTrace const& t, FiniteGroup const& g) {
    json doc;
    doc["version"] = format_version;
    doc["type"]    = "lift-trace";
    doc["s"]       = scalar_to_json(t.s);
    doc["R"]       = scalar_to_json(t.R);
    json members   = json::array();
    for (auto const& m : t.members) {
      json entry;
      entry["quotient_member"] = m.quotient_member;
      entry["basepoint"]       = m.basepoint;
      entry["fiber"]           = point_set_to_json(m.fiber);
      entry["base_subgroup"]   = element_set_to_json(g, m.base_subgroup);
      json pieces              = json::array();
      for (auto const& p : m.pieces) {
        json piece;
        piece["representative"] = g.name(p.representative);
        piece["centre"]         = p.centre;
        piece["subgroup"]       = element_set_to_json(g, p.subgroup);
        piece["points"]         = point_set_to_json(p.points);
        pieces.push_back(std::move(piece));
      }
      entry["pieces"] = std::move(pieces);
      members.push_back(std::move(entry));
    }
    doc["members"] = std::move(members);
    return doc;
  }

  LiftTrace trace_from_json(json const& doc, FiniteGroup const& g) {
    LiftTrace t;
    t.s = scalar_from_json(field(doc, "s"));
    t.R = scalar_from_json(field(doc, "R"));
    for (auto const& entry : field(doc, "members")) {
      LiftMember m;
      m.quotient_member = field(entry, "quotient_member").get<std::size_t>();
      m.basepoint       = field(entry, "basepoint").get<PointId>();
      m.fiber           = point_set_from_json(field(entry, "fiber"));
      m.base_subgroup = element_set_from_json(g, field(entry, "base_subgroup"));
      for (auto const& piece : field(entry, "pieces")) {
        LiftPiece p;
        p.representative = g.index_of(string_field(piece, "representative"));
        p.centre         = field(piece, "centre").get<PointId>();
        p.subgroup       = element_set_from_json(g, field(piece, "subgroup"));
        p.points         = point_set_from_json(field(piece, "points"));
        m.pieces.push_back(std::move(p));
      }
      t.members.push_back(std::move(m));
    }
    return t;
  }

  json profile_to_json(DimensionProfile const& p, std::string const& space_id) {
    json doc;
    doc["version"]  = format_version;
    doc["type"]     = "profile";
    doc["space_id"] = space_id;
    json entries    = json::array();
    for (auto const& e : p.entries) {
      json entry;
      entry["R"] = scalar_to_json(e.scale);
      if (e.mesh_bound) {
        entry["B"] = scalar_to_json(*e.mesh_bound);
      }
      entry["method"] = to_string(e.method);
      if (e.family) {
        entry["family"] = to_string(*e.family);
      }
      entry["feasible"] = e.feasible();
      if (e.cover) {
        entry["certificate"] = certificate_to_json(*e.certificate);
        json members         = json::array();
        for (auto const& m : e.cover->members()) {
          members.push_back(point_set_to_json(m));
        }
        entry["members"] = std::move(members);
      }
      entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc;
  }

  std::string profile_to_csv(DimensionProfile const& p,
                             std::string const&      space_id,
                             bool                    header_line) {
    std::string out;
    if (header_line) {
      out += "space,R,B,method,family,feasible,dimension,mesh,lebesgue\n";
    }
    for (auto const& e : p.entries) {
      out += space_id + "," + format_scalar(e.scale) + ","
             + (e.mesh_bound ? format_scalar(*e.mesh_bound) : "") + ","
             + to_string(e.method) + ","
             + (e.family ? to_string(*e.family) : "") + ","
             + (e.feasible() ? "true" : "false") + ",";
      if (e.certificate) {
        out += std::to_string(e.certificate->dimension) + ","
               + format_scalar(e.certificate->mesh) + ","
               + format_scalar(e.certificate->lebesgue);
      } else {
        out += ",,";
      }
      out += "\n";
    }
    return out;
  }

  json quotient_to_json(QuotientSpace const& q,
                        std::string const&   quotient_id,
                        std::string const&   action_id) {
    json projection               = header("projection", quotient_id + ".projection");
    projection["action_id"]       = action_id;
    projection["space_id"]        = quotient_id;
    projection["orbit_of"]        = q.orbit_of;
    projection["representatives"] = q.representatives;
    json doc;
    doc["version"] = format_version;
    doc["objects"]
        = json::array({space_to_json(*q.base, quotient_id), projection});
    return doc;
  }

  // Workspace --------------------------------------------------------------

  void Workspace::load_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ResolutionError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto const ext = path.extension().string();
    if (ext == ".txt" || ext == ".edges") {
      add_space(path.stem().string(),
                share(space_from_edge_list(buffer.str())));
      return;
    }
    json doc;
    try {
      doc = json::parse(buffer.str());
    } catch (json::parse_error const& e) {
      throw ValidationError(path.string() + ": " + e.what());
    }
    if (doc.is_object() && doc.contains("objects")) {
      for (auto const& item : doc.at("objects")) {
        add_document(item);
      }
    } else {
      if (doc.is_object() && !doc.contains("id")) {
        doc["id"] = path.stem().string();
      }
      add_document(std::move(doc));
    }
  }

  void Workspace::add_document(json doc) {
    if (!doc.is_object()) {
      throw ValidationError("object must be a JSON object");
    }
    if (doc.contains("version") && doc.at("version") != format_version) {
      throw ValidationError("unsupported format version " + doc.at("version").dump());
    }
    if (!doc.contains("type") && doc.contains("points") && doc.contains("dist")) {
      doc["type"] = "space";
    }
    auto id   = string_field(doc, "id");
    auto type = string_field(doc, "type");
    if (_documents.contains(id)) {
      throw ValidationError("duplicate id \"" + id + "\"");
    }
    _order.push_back(id);
    _documents.emplace(id, std::move(doc));
  }

  void Workspace::add_space(std::string const& id, SpacePtr space) {
    if (_documents.contains(id)) {
      throw ValidationError("duplicate id \"" + id + "\"");
    }
    _order.push_back(id);
    _documents.emplace(id, space_to_json(*space, id));
    _spaces.emplace(id, std::move(space));
  }

  bool Workspace::contains(std::string const& id) const {
    return _documents.contains(id);
  }

  std::string Workspace::type_of(std::string const& id) const {
    return document(id).at("type").get<std::string>();
  }

  std::vector<std::string> Workspace::ids() const {
    return _order;
  }

  std::vector<std::string> Workspace::ids_of_type(std::string const& type) const {
    std::vector<std::string> result;
    for (auto const& id : _order) {
      if (type_of(id) == type) {
        result.push_back(id);
      }
    }
    return result;
  }

  json const& Workspace::document(std::string const& id) const {
    auto it = _documents.find(id);
    if (it == _documents.end()) {
      throw ResolutionError("unknown id \"" + id + "\"");
    }
    return it->second;
  }

  json const& Workspace::expect(std::string const& id,
                                std::string const& type) const {
    auto const& doc = document(id);
    if (doc.at("type") != type) {
      throw ResolutionError("\"" + id + "\" is a " + doc.at("type").get<std::string>()
                            + ", expected a " + type);
    }
    return doc;
  }

  SpacePtr Workspace::space(std::string const& id) {
    if (auto it = _spaces.find(id); it != _spaces.end()) {
      return it->second;
    }
    auto m = space_from_json(expect(id, "space"));
    validate_metric(m).throw_if_failed("space \"" + id + "\"");
    auto ptr = share(std::move(m));
    _spaces.emplace(id, ptr);
    return ptr;
  }

  GroupPtr Workspace::group(std::string const& id) {
    if (auto it = _groups.find(id); it != _groups.end()) {
      return it->second;
    }
    auto ptr = share(group_from_json(expect(id, "group")));
    _groups.emplace(id, ptr);
    return ptr;
  }

  IsometricAction Workspace::action(std::string const& id) {
    auto const& doc   = expect(id, "action");
    auto        group = this->group(string_field(doc, "group"));
    auto        space = this->space(string_field(doc, "space"));
    std::vector<std::vector<PointId>> perms(group->order());
    std::vector<bool>                 given(group->order(), false);
    for (auto const& [name, image] : field(doc, "perm").items()) {
      auto g = group->index_of(name);
      for (auto const& y : image) {
        perms[g].push_back(y.get<PointId>());
      }
      given[g] = true;
    }
    for (Element g = 0; g < group->order(); ++g) {
      if (!given[g]) {
        throw ValidationError("action \"" + id + "\" has no permutation for "
                              + group->name(g));
      }
    }
    IsometricAction a(group, space, std::move(perms));
    validate_action(a).throw_if_failed("action \"" + id + "\"");
    return a;
  }

  Cover Workspace::cover(std::string const& id) {
    auto const&           doc   = expect(id, "cover");
    auto                  space = this->space(string_field(doc, "space_id"));
    std::vector<PointSet> members;
    for (auto const& m : field(doc, "members")) {
      members.push_back(point_set_from_json(m));
    }
    Cover c(space, std::move(members));
    if (doc.contains("certificate")) {
      auto claimed = certificate_from_json(doc.at("certificate"));
      auto actual  = certify(c, claimed.ball_meet
                                   ? std::optional<Scalar>(claimed.ball_meet->first)
                                   : std::nullopt);
      if (claimed.equivariant) {
        if (!doc.contains("action_id")) {
          throw ValidationError("cover \"" + id
                                + "\" claims equivariance without an action_id");
        }
        actual.equivariant
            = check_equivariance(action(string_field(doc, "action_id")), c).ok;
      }
      if (!(actual == claimed)) {
        throw ValidationError("cover \"" + id
                              + "\" carries a certificate that does not match "
                                "its members");
      }
    }
    return c;
  }

  Decomposition Workspace::decomposition(std::string const& id) {
    auto const&   doc = expect(id, "decomposition");
    Decomposition d;
    d.space = this->space(string_field(doc, "space_id"));
    d.r     = scalar_from_json(field(doc, "r"));
    for (auto const& family : field(doc, "families")) {
      std::vector<PointSet> pieces;
      for (auto const& piece : family) {
        pieces.push_back(point_set_from_json(piece));
      }
      d.families.push_back(std::move(pieces));
    }
    return d;
  }

  SSpace Workspace::sspace(std::string const& id) {
    auto const&           doc = expect(id, "sspace");
    std::vector<SpacePtr> components;
    for (auto const& c : field(doc, "components")) {
      components.push_back(space(c.get<std::string>()));
    }
    std::vector<PointSet> basepoints;
    for (auto const& y : field(doc, "basepoints")) {
      basepoints.push_back(point_set_from_json(y));
    }
    std::vector<Scalar> weights;
    for (auto const& w : field(doc, "f")) {
      weights.push_back(scalar_from_json(w));
    }
    return build_sspace(std::move(components), std::move(basepoints),
                        std::move(weights));
  }

  std::optional<std::string> Workspace::id_of(SpacePtr const& space) const {
    for (auto const& [id, ptr] : _spaces) {
      if (ptr == space) {
        return id;
      }
    }
    for (auto const& [id, ptr] : _spaces) {
      if (*ptr == *space) {
        return id;
      }
    }
    return std::nullopt;
  }

}  // namespace asdim::io
