#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "asdim/estimation.hpp"
#include "asdim/generate.hpp"
#include "asdim/io.hpp"

using namespace asdim;
using io::json;

namespace {

  struct Options {
    std::vector<std::string> inputs;
    std::string              out;
    std::string              action;
    std::string              cover;
    std::string              space;
    std::string              sspace;
    std::vector<std::string> actions;
    std::string              R;
    std::string              B;
    std::string              scales;
    std::string              mode = "auto";
    std::string              format = "json";
    std::uint64_t            seed = 0;
    std::string              kind;
    std::vector<std::size_t> params;
    std::string              id;
  };

  char const* kind_name(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::validation:
        return "validation";
      case ErrorKind::resolution:
        return "resolution";
      case ErrorKind::infeasible:
        return "infeasible";
      case ErrorKind::internal:
        return "internal";
    }
    return "internal";
  }

  void report(json line) {
    std::cerr << line.dump() << '\n';
  }

  void report_error(ErrorKind kind, std::string const& message,
                    std::optional<std::string> const& id = std::nullopt) {
    json line;
    if (id) {
      line["id"] = *id;
    }
    line["error"]   = kind_name(kind);
    line["message"] = message;
    report(std::move(line));
  }

  Scalar scalar_flag(std::string const& name, std::string const& text) {
    try {
      return parse_scalar(text);
    } catch (std::invalid_argument const& e) {
      throw ValidationError("--" + name + ": " + e.what());
    }
  }

  Scalar required_scalar(std::string const& name, std::string const& text) {
    if (text.empty()) {
      throw ValidationError("--" + name + " is required");
    }
    return scalar_flag(name, text);
  }

  EstimateMode parse_mode(std::string const& text) {
    if (text == "auto") {
      return EstimateMode::automatic;
    }
    if (text == "exact") {
      return EstimateMode::exact;
    }
    if (text == "greedy") {
      return EstimateMode::greedy;
    }
    throw ValidationError("--mode must be exact, greedy or auto");
  }

  void load(io::Workspace& ws, Options const& opt) {
    for (auto const& path : opt.inputs) {
      ws.load_file(path);
    }
  }

  std::string pick(io::Workspace const& ws, std::string const& chosen,
                   std::string const& type) {
    if (!chosen.empty()) {
      return chosen;
    }
    auto ids = ws.ids_of_type(type);
    if (ids.empty()) {
      throw ResolutionError("no " + type + " loaded");
    }
    if (ids.size() > 1) {
      throw ValidationError("several objects of type " + type
                            + " loaded; choose one with --" + type);
    }
    return ids.front();
  }

  void emit(Options const& opt, std::string const& text) {
    if (opt.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(opt.out);
    if (!file) {
      throw ResolutionError("cannot write " + opt.out);
    }
    file << text;
  }

  json bundle(std::vector<json> objects) {
    json doc;
    doc["version"] = io::format_version;
    doc["objects"] = std::move(objects);
    return doc;
  }

  std::string space_id_of(io::Workspace& ws, SpacePtr const& space,
                          std::string const& fallback) {
    auto id = ws.id_of(space);
    return id ? *id : fallback;
  }

  // validate -----------------------------------------------------------------

  int run_validate(Options const& opt) {
    io::Workspace ws;
    int           code = 0;
    auto fail = [&code](ErrorKind kind) {
      if (code == 0) {
        code = static_cast<int>(kind);
      }
    };
    for (auto const& path : opt.inputs) {
      try {
        ws.load_file(path);
      } catch (Error const& e) {
        report_error(e.kind(), e.what());
        fail(e.kind());
      } catch (json::exception const& e) {
        report_error(ErrorKind::validation, path + ": " + e.what());
        fail(ErrorKind::validation);
      }
    }
    auto violations = [&](std::string const& id, ValidationReport const& r,
                          auto const& name_of) {
      for (auto const& v : r.entries()) {
        json line;
        line["id"]    = id;
        line["error"] = "validation";
        line["kind"]  = v.kind;
        json witness  = json::array();
        for (auto w : v.witness) {
          witness.push_back(name_of(w));
        }
        line["witness"] = std::move(witness);
        if (!v.detail.empty()) {
          line["detail"] = v.detail;
        }
        report(std::move(line));
      }
      if (!r.ok()) {
        fail(ErrorKind::validation);
      }
      return r.ok();
    };
    for (auto const& id : ws.ids()) {
      bool ok = true;
      try {
        auto type = ws.type_of(id);
        if (type == "space") {
          auto m = io::space_from_json(ws.document(id));
          ok     = violations(id, validate_metric(m), [&m](std::size_t x) {
            return m.label(static_cast<PointId>(x));
          });
          if (ok) {
            ws.space(id);
          }
        } else if (type == "group") {
          ws.group(id);
        } else if (type == "action") {
          ws.action(id);
        } else if (type == "cover") {
          ws.cover(id);
        } else if (type == "decomposition") {
          auto d = ws.decomposition(id);
          ok     = violations(id, validate_decomposition(d).violations,
                              [](std::size_t x) { return json(x); });
        } else if (type == "sspace") {
          ws.sspace(id);
        } else if (type == "projection" || type == "lift-trace"
                   || type == "profile" || type == "commutation") {
          // Derived outputs carry no independent claims.
        } else {
          throw ValidationError("unknown object type \"" + type + "\"");
        }
      } catch (Error const& e) {
        report_error(e.kind(), e.what(), id);
        fail(e.kind());
        ok = false;
      } catch (json::exception const& e) {
        report_error(ErrorKind::validation, e.what(), id);
        fail(ErrorKind::validation);
        ok = false;
      }
      json line;
      line["id"]    = id;
      line["valid"] = ok;
      std::cout << line.dump() << '\n';
    }
    return code;
  }

  // constructions -------------------------------------------------------------

  int run_quotient(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto id = pick(ws, opt.action, "action");
    auto a  = ws.action(id);
    emit(opt, io::dump(io::quotient_to_json(quotient(a), id + ".quotient", id)));
    return 0;
  }

  int run_pushforward(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto action_id = pick(ws, opt.action, "action");
    auto cover_id  = pick(ws, opt.cover, "cover");
    auto a         = ws.action(action_id);
    auto c         = ws.cover(cover_id);
    auto q         = quotient(a);
    auto out       = pushforward_cover(a, q, c);
    auto qid       = action_id + ".quotient";
    emit(opt, io::dump(bundle({io::space_to_json(*q.base, qid),
                               io::cover_to_json(out.cover,
                                                 cover_id + ".pushforward", qid)})));
    return 0;
  }

  // Independent re-check of what the lift certifies, on the cover that is
  // about to be written.
  void recheck_lift(IsometricAction const& a, Cover const& quotient_cover,
                    Cover const& lifted, Scalar const& R, Scalar const& s) {
    auto cert  = certify(lifted);
    auto order = static_cast<std::int64_t>(a.group().order());
    if (!check_equivariance(a, lifted)) {
      throw InternalAssertion("lifted cover is not equivariant");
    }
    if (!(cert.mesh < 4 * s * (order + 1))) {
      throw InternalAssertion("lifted cover mesh " + format_scalar(cert.mesh)
                              + " is not below 4s(|F|+1)");
    }
    if (cert.dimension > dimension(quotient_cover)) {
      throw InternalAssertion("lifted cover dimension exceeds the quotient cover's");
    }
    if (cert.lebesgue < ExtScalar(R)) {
      throw InternalAssertion("lifted cover Lebesgue number is below R");
    }
  }

  // Fault injection for exercising the internal-assertion exit path.
  Cover maybe_inject_fault(Cover const& c) {
    char const* fault = std::getenv("ASDIM_FAULT_INJECT");
    if (fault == nullptr || std::string(fault) != "lift-extra-member") {
      return c;
    }
    auto members = c.members();
    members.push_back({0});
    return Cover(c.space_ptr(), std::move(members));
  }

  std::vector<json> lift_documents(io::Workspace&         ws,
                                   std::string const&     action_id,
                                   IsometricAction const& a,
                                   Cover const&           quotient_cover,
                                   LiftResult const&      lift,
                                   std::string const&     prefix) {
    auto lifted = maybe_inject_fault(lift.cover);
    recheck_lift(a, quotient_cover, lifted, lift.trace.R, lift.trace.s);
    CoverCertificate extra;
    extra.equivariant = true;
    auto space_id     = space_id_of(ws, a.space_ptr(), action_id + ".space");
    auto cover_doc    = io::cover_to_json(lifted, prefix + ".lift", space_id, extra);
    cover_doc["action_id"] = action_id;
    auto trace_doc         = io::trace_to_json(lift.trace, a.group());
    trace_doc["id"]        = prefix + ".trace";
    trace_doc["action_id"] = action_id;
    return {cover_doc, trace_doc};
  }

  int run_lift(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto action_id = pick(ws, opt.action, "action");
    auto cover_id  = pick(ws, opt.cover, "cover");
    auto R         = required_scalar("R", opt.R);
    auto a         = ws.action(action_id);
    auto c         = ws.cover(cover_id);
    auto q         = quotient(a);
    auto lift      = lift_equivariant(a, q, c, R);
    emit(opt, io::dump(bundle(lift_documents(ws, action_id, a, c, lift, cover_id))));
    return 0;
  }

  int run_equivariant_cover(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto action_id = pick(ws, opt.action, "action");
    auto R         = required_scalar("R", opt.R);
    auto a         = ws.action(action_id);
    PipelineOptions options;
    options.estimate.mode = parse_mode(opt.mode);
    if (!opt.B.empty()) {
      options.estimate.mesh_bound = scalar_flag("B", opt.B);
    }
    auto result = equivariant_cover_pipeline(a, R, options);
    auto qid    = action_id + ".quotient";
    auto qcover = io::cover_to_json(result.quotient_cover, action_id + ".quotient-cover", qid);
    qcover["method"] = to_string(result.method);
    std::vector<json> objects{io::space_to_json(*result.quotient.base, qid), qcover};
    for (auto& doc : lift_documents(ws, action_id, a, result.quotient_cover,
                                    result.lift, action_id)) {
      objects.push_back(std::move(doc));
    }
    emit(opt, io::dump(bundle(std::move(objects))));
    return 0;
  }

  int run_sspace(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto id = pick(ws, opt.sspace, "sspace");
    auto s  = ws.sspace(id);
    std::vector<json> objects{io::space_to_json(*s.assembled(), id + ".assembled")};
    if (!opt.actions.empty()) {
      std::vector<IsometricAction> actions;
      for (auto const& a : opt.actions) {
        actions.push_back(ws.action(a));
      }
      auto out = sspace_quotient_commute(s, actions);
      objects.push_back(io::space_to_json(*out.lhs.base, id + ".quotient"));
      objects.push_back(io::space_to_json(*out.rhs.assembled(), id + ".quotient-sspace"));
      json doc;
      doc["version"]   = io::format_version;
      doc["type"]      = "commutation";
      doc["id"]        = id + ".commutation";
      doc["bijection"] = out.bijection;
      doc["verified"]  = true;
      objects.push_back(std::move(doc));
    }
    emit(opt, io::dump(bundle(std::move(objects))));
    return 0;
  }

  // estimation ----------------------------------------------------------------

  int run_estimate(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto id   = pick(ws, opt.space, "space");
    auto m    = ws.space(id);
    auto R    = required_scalar("R", opt.R);
    auto mode = parse_mode(opt.mode);
    if (!(R > 0)) {
      throw ValidationError("--R must be positive");
    }
    ExactOptions exact;
    if (mode == EstimateMode::automatic) {
      mode = m->size() <= exact.point_cap ? EstimateMode::exact : EstimateMode::greedy;
    }
    json doc;
    if (mode == EstimateMode::exact) {
      Scalar B = opt.B.empty() ? 4 * R : scalar_flag("B", opt.B);
      auto   c = min_dimension_cover_exact(m, R, B, exact);
      if (!c) {
        throw InfeasibleError("no cover of \"" + id + "\" with Lebesgue number >= "
                              + format_scalar(R) + " and mesh <= "
                              + format_scalar(B) + " in the candidate family");
      }
      doc = io::cover_to_json(*c, id + ".estimate", id);
      doc["method"]           = to_string(Method::exact);
      doc["candidate_family"] = to_string(candidate_family_for(m->size(), exact));
      doc["R"]                = io::scalar_to_json(R);
      doc["B"]                = io::scalar_to_json(B);
    } else {
      auto c = greedy_cover(m, R);
      doc    = io::cover_to_json(c, id + ".estimate", id);
      doc["method"] = to_string(Method::greedy);
      doc["R"]      = io::scalar_to_json(R);
    }
    emit(opt, io::dump(doc));
    return 0;
  }

  int run_profile(Options const& opt) {
    io::Workspace ws;
    load(ws, opt);
    auto id = pick(ws, opt.space, "space");
    auto m  = ws.space(id);
    if (opt.scales.empty()) {
      throw ValidationError("--scales is required");
    }
    std::vector<Scalar> scales;
    std::stringstream   list(opt.scales);
    for (std::string item; std::getline(list, item, ',');) {
      scales.push_back(scalar_flag("scales", item));
    }
    ProfileOptions options;
    options.mode = parse_mode(opt.mode);
    if (!opt.B.empty()) {
      options.mesh_bound = scalar_flag("B", opt.B);
    }
    auto profile = asdim_profile(m, scales, options);
    if (opt.format == "csv") {
      emit(opt, io::profile_to_csv(profile, id));
    } else if (opt.format == "json") {
      emit(opt, io::dump(io::profile_to_json(profile, id)));
    } else {
      throw ValidationError("--format must be json or csv");
    }
    return 0;
  }

  int run_generate(Options const& opt) {
    auto inst = generate_instance(opt.kind, opt.params, opt.seed);
    auto id   = opt.id.empty() ? opt.kind : opt.id;
    std::vector<json> objects{io::space_to_json(*inst.space, id)};
    if (inst.action) {
      objects.push_back(io::group_to_json(inst.action->group(), id + ".group"));
      objects.push_back(
          io::action_to_json(*inst.action, id + ".action", id + ".group", id));
    }
    emit(opt, io::dump(bundle(std::move(objects))));
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified covers of finite metric spaces and their quotients"};
  app.require_subcommand(1);
  Options opt;

  auto inputs = [&opt](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("inputs", opt.inputs, "JSON or edge-list files");
    if (required) {
      o->required();
    }
    cmd->add_option("--out", opt.out, "Output file (default: standard output)");
  };

  auto* validate = app.add_subcommand("validate", "Validate every object in the inputs");
  inputs(validate);

  auto* quotient_cmd = app.add_subcommand("quotient", "Orbit space of an action");
  inputs(quotient_cmd);
  quotient_cmd->add_option("--action", opt.action, "Action id");

  auto* pushforward = app.add_subcommand("pushforward", "Project a cover to the orbit space");
  inputs(pushforward);
  pushforward->add_option("--action", opt.action, "Action id");
  pushforward->add_option("--cover", opt.cover, "Cover id");

  auto* lift = app.add_subcommand("lift", "Lift a cover of the orbit space to an equivariant cover");
  inputs(lift);
  lift->add_option("--action", opt.action, "Action id");
  lift->add_option("--cover", opt.cover, "Cover of the orbit space");
  lift->add_option("--R", opt.R, "Required Lebesgue number");

  auto* equivariant = app.add_subcommand(
      "equivariant-cover", "Estimate a cover of the orbit space and lift it");
  inputs(equivariant);
  equivariant->add_option("--action", opt.action, "Action id");
  equivariant->add_option("--R", opt.R, "Required Lebesgue number");
  equivariant->add_option("--B", opt.B, "Mesh bound for exact search");
  equivariant->add_option("--mode", opt.mode, "exact, greedy or auto");

  auto* sspace = app.add_subcommand("sspace", "Assemble an S-space, optionally with its quotient");
  inputs(sspace);
  sspace->add_option("--sspace", opt.sspace, "S-space id");
  sspace->add_option("--actions", opt.actions, "One action id per component")
      ->delimiter(',');

  auto* estimate = app.add_subcommand("estimate", "Minimal-dimension cover at one scale");
  inputs(estimate);
  estimate->add_option("--space", opt.space, "Space id");
  estimate->add_option("--R", opt.R, "Required Lebesgue number");
  estimate->add_option("--B", opt.B, "Mesh bound (default 4R)");
  estimate->add_option("--mode", opt.mode, "exact, greedy or auto");

  auto* profile = app.add_subcommand("profile", "Cover dimension across scales");
  inputs(profile);
  profile->add_option("--space", opt.space, "Space id");
  profile->add_option("--scales", opt.scales, "Comma-separated increasing scales");
  profile->add_option("--B", opt.B, "Fixed mesh bound (default 4R per scale)");
  profile->add_option("--mode", opt.mode, "exact, greedy or auto");
  profile->add_option("--format", opt.format, "json or csv");

  auto* generate = app.add_subcommand("generate", "Generate a test instance");
  generate->add_option("kind", opt.kind, "grid, cycle, path, cayley-ball or random")
      ->required();
  generate->add_option("params", opt.params, "Size parameters");
  generate->add_option("--seed", opt.seed, "Random seed");
  generate->add_option("--id", opt.id, "Id of the generated space");
  generate->add_option("--out", opt.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::validation);
  }

  try {
    if (*validate) {
      return run_validate(opt);
    }
    if (*quotient_cmd) {
      return run_quotient(opt);
    }
    if (*pushforward) {
      return run_pushforward(opt);
    }
    if (*lift) {
      return run_lift(opt);
    }
    if (*equivariant) {
      return run_equivariant_cover(opt);
    }
    if (*sspace) {
      return run_sspace(opt);
    }
    if (*estimate) {
      return run_estimate(opt);
    }
    if (*profile) {
      return run_profile(opt);
    }
    if (*generate) {
      return run_generate(opt);
    }
  } catch (Error const& e) {
    report_error(e.kind(), e.what());
    return static_cast<int>(e.kind());
  } catch (json::exception const& e) {
    report_error(ErrorKind::validation, e.what());
    return static_cast<int>(ErrorKind::validation);
  }
  return 0;
}
