#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asdim/estimation.hpp"
#include "asdim/generate.hpp"
#include "asdim/io.hpp"

namespace py = pybind11;
using namespace asdim;

// Exact scalars travel as fractions.Fraction; ints and strings are accepted.
namespace pybind11::detail {

  template <>
  struct type_caster<Scalar> {
    PYBIND11_TYPE_CASTER(Scalar, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
      if (!src) {
        return false;
      }
      try {
        if (py::isinstance<py::str>(src)) {
          value = parse_scalar(src.cast<std::string>());
          return true;
        }
        if (py::isinstance<py::bool_>(src) || py::isinstance<py::float_>(src)) {
          return false;
        }
        if (py::isinstance<py::int_>(src)) {
          value = Scalar(src.cast<std::int64_t>());
          return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
          value = Scalar(src.attr("numerator").cast<std::int64_t>(),
                         src.attr("denominator").cast<std::int64_t>());
          return true;
        }
      } catch (std::exception const&) {
        return false;
      }
      return false;
    }

    static handle cast(Scalar const& s, return_value_policy, handle) {
      static auto fraction = py::module_::import("fractions").attr("Fraction");
      return fraction(s.numerator(), s.denominator()).release();
    }
  };

  template <>
  struct type_caster<ExtScalar> {
    PYBIND11_TYPE_CASTER(ExtScalar, const_name("fractions.Fraction | float"));

    bool load(handle src, bool convert) {
      if (py::isinstance<py::float_>(src) && std::isinf(src.cast<double>())
          && src.cast<double>() > 0) {
        value = ExtScalar::infinity();
        return true;
      }
      make_caster<Scalar> inner;
      if (!inner.load(src, convert)) {
        return false;
      }
      value = ExtScalar(cast_op<Scalar>(inner));
      return true;
    }

    static handle cast(ExtScalar const& s, return_value_policy p, handle parent) {
      if (s.is_infinite()) {
        return py::float_(std::numeric_limits<double>::infinity()).release();
      }
      return make_caster<Scalar>::cast(s.value(), p, parent);
    }
  };

}  // namespace pybind11::detail

namespace {

  using SpaceHandle = std::shared_ptr<FiniteMetricSpace>;
  using GroupHandle = std::shared_ptr<FiniteGroup>;

  SpaceHandle handle(SpacePtr const& p) { return std::const_pointer_cast<FiniteMetricSpace>(p); }
  GroupHandle handle(GroupPtr const& p) { return std::const_pointer_cast<FiniteGroup>(p); }

  py::list violations(ValidationReport const& r) {
    py::list out;
    for (auto const& v : r.entries()) {
      py::dict d;
      d["kind"]    = v.kind;
      d["witness"] = v.witness;
      d["detail"]  = v.detail;
      out.append(d);
    }
    return out;
  }

  py::dict certificate(CoverCertificate const& c) {
    py::dict d;
    d["dimension"] = c.dimension;
    d["lebesgue"]  = py::cast(c.lebesgue);
    d["mesh"]      = py::cast(c.mesh);
    if (c.ball_meet) {
      d["ball_meet"] = py::make_tuple(py::cast(c.ball_meet->first), c.ball_meet->second);
    }
    if (c.equivariant) {
      d["equivariant"] = *c.equivariant;
    }
    return d;
  }

  ProfileOptions profile_options(std::optional<Scalar> const& B, std::string const& mode) {
    ProfileOptions o;
    o.mesh_bound = B;
    if (mode == "auto") {
      o.mode = EstimateMode::automatic;
    } else if (mode == "exact") {
      o.mode = EstimateMode::exact;
    } else if (mode == "greedy") {
      o.mode = EstimateMode::greedy;
    } else {
      throw ValidationError("unknown mode \"" + mode + "\"");
    }
    return o;
  }

  py::dict profile_entry(ProfileEntry const& e) {
    py::dict d;
    d["R"]        = py::cast(e.scale);
    d["B"]        = py::cast(e.mesh_bound);
    d["method"]   = to_string(e.method);
    d["family"]   = e.family ? py::cast(to_string(*e.family)) : py::none();
    d["feasible"] = e.feasible();
    d["dimension"] = py::cast(e.dimension());
    d["cover"]     = py::cast(e.cover);
    d["certificate"] = e.certificate ? py::object(certificate(*e.certificate)) : py::none();
    return d;
  }

  std::string dump_json(io::json const& doc) { return io::dump(doc); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact asymptotic-dimension toolkit for finite metric spaces with group actions.";

  auto base = py::register_exception<Error>(m, "AsdimError");
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ResolutionError>(m, "ResolutionError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<InternalAssertion>(m, "InternalAssertion", base.ptr());

  py::class_<FiniteMetricSpace, SpaceHandle>(m, "Space")
      .def(py::init([](std::vector<std::vector<Scalar>> const& rows,
                       std::optional<std::vector<std::string>> const& labels) {
             return labels ? FiniteMetricSpace::from_rows(*labels, rows)
                           : FiniteMetricSpace::from_rows(rows);
           }),
           py::arg("rows"), py::arg("labels") = py::none())
      .def_static("from_edge_list", [](std::string const& text) {
        return std::make_shared<FiniteMetricSpace>(io::space_from_edge_list(text));
      })
      .def_static("from_json", [](std::string const& text) {
        return std::make_shared<FiniteMetricSpace>(io::space_from_json(io::json::parse(text)));
      })
      .def("to_json", [](FiniteMetricSpace const& s, std::string const& id) {
        return dump_json(io::space_to_json(s, id));
      }, py::arg("id"))
      .def("__len__", &FiniteMetricSpace::size)
      .def_property_readonly("labels", &FiniteMetricSpace::labels)
      .def("dist", &FiniteMetricSpace::dist)
      .def("index_of", &FiniteMetricSpace::index_of)
      .def("violations", [](FiniteMetricSpace const& s) { return violations(validate_metric(s)); })
      .def("diameter", [](FiniteMetricSpace const& s) { return diameter(s, s.all_points()); })
      .def("__eq__", [](FiniteMetricSpace const& a, FiniteMetricSpace const& b) { return a == b; });

  m.def("path_space", [](std::size_t n) { return handle(path_space(n)); });
  m.def("cycle_space", [](std::size_t n) { return handle(cycle_space(n)); });
  m.def("grid_space", [](std::size_t w, std::size_t h) { return handle(grid_space(w, h)); });
  m.def("random_space", [](std::size_t n, std::uint64_t seed) {
    Random rng(seed);
    return handle(random_metric_space(n, rng));
  }, py::arg("n"), py::arg("seed"));

  py::class_<FiniteGroup, GroupHandle>(m, "Group")
      .def(py::init<std::vector<std::string>, std::vector<Element>>(), py::arg("names"),
           py::arg("table"))
      .def_static("cyclic", [](std::size_t n) { return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n)); })
      .def_static("dihedral", [](std::size_t n) { return std::make_shared<FiniteGroup>(FiniteGroup::dihedral(n)); })
      .def_static("symmetric", [](std::size_t n) { return std::make_shared<FiniteGroup>(FiniteGroup::symmetric(n)); })
      .def("__len__", &FiniteGroup::order)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("names", &FiniteGroup::names)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("to_json", [](FiniteGroup const& g, std::string const& id) {
        return dump_json(io::group_to_json(g, id));
      }, py::arg("id"));

  py::class_<IsometricAction>(m, "Action")
      .def(py::init([](GroupHandle g, SpaceHandle s, std::vector<std::vector<PointId>> perms) {
             return IsometricAction(g, s, std::move(perms));
           }),
           py::arg("group"), py::arg("space"), py::arg("perms"))
      .def_property_readonly("group", [](IsometricAction const& a) { return handle(a.group_ptr()); })
      .def_property_readonly("space", [](IsometricAction const& a) { return handle(a.space_ptr()); })
      .def_property_readonly("perms", &IsometricAction::perms)
      .def("image", py::overload_cast<Element, PointId>(&IsometricAction::image, py::const_))
      .def("violations", [](IsometricAction const& a) { return violations(validate_action(a)); })
      .def("orbits", [](IsometricAction const& a) { return orbits(a); })
      .def("quotient_distance", [](IsometricAction const& a, PointId x, PointId y) {
        return quotient_distance(a, x, y);
      })
      .def("displacement_subgroup", [](IsometricAction const& a, PointId x, Scalar const& d) {
        return displacement_subgroup(a, x, d);
      })
      .def("to_json", [](IsometricAction const& a, std::string const& id, std::string const& group_id,
                         std::string const& space_id) {
        return dump_json(io::action_to_json(a, id, group_id, space_id));
      }, py::arg("id"), py::arg("group_id"), py::arg("space_id"));

  m.def("path_reflection", [](SpaceHandle s) { return path_reflection(s); });
  m.def("cycle_rotation", [](SpaceHandle s, std::size_t step) { return cycle_rotation(s, step); });
  m.def("cycle_reflection", [](SpaceHandle s) { return cycle_reflection(s); });
  m.def("grid_rotation", [](SpaceHandle s, std::size_t w, std::size_t h, bool quarter) {
    return grid_rotation(s, w, h, quarter);
  }, py::arg("grid"), py::arg("width"), py::arg("height"), py::arg("quarter_turn") = false);
  m.def("random_action", [](std::uint64_t seed, std::size_t max_points, std::size_t max_order) {
    Random rng(seed);
    return random_equivariant_instance(rng, max_points, max_order);
  }, py::arg("seed"), py::arg("max_points") = 12, py::arg("max_order") = 6);

  py::class_<QuotientSpace>(m, "Quotient")
      .def_property_readonly("source", [](QuotientSpace const& q) { return handle(q.source); })
      .def_property_readonly("base", [](QuotientSpace const& q) { return handle(q.base); })
      .def_readonly("orbit_of", &QuotientSpace::orbit_of)
      .def_readonly("representatives", &QuotientSpace::representatives)
      .def_readonly("fibers", &QuotientSpace::fibers)
      .def("project", [](QuotientSpace const& q, std::vector<PointId> const& s) { return q.project(s); })
      .def("preimage", [](QuotientSpace const& q, std::vector<PointId> const& s) { return q.preimage(s); });

  m.def("quotient", &quotient);

  py::class_<Cover>(m, "Cover")
      .def(py::init([](SpaceHandle s, std::vector<PointSet> members) {
             return Cover(s, std::move(members));
           }),
           py::arg("space"), py::arg("members"))
      .def_property_readonly("space", [](Cover const& c) { return handle(c.space_ptr()); })
      .def_property_readonly("members", &Cover::members)
      .def("__len__", &Cover::size)
      .def("dimension", [](Cover const& c) { return dimension(c); })
      .def("lebesgue", [](Cover const& c) { return lebesgue_number(c); })
      .def("mesh", [](Cover const& c) { return mesh(c); })
      .def("certificate", [](Cover const& c) { return certificate(certify(c)); })
      .def("to_json", [](Cover const& c, std::string const& id, std::string const& space_id) {
        return dump_json(io::cover_to_json(c, id, space_id));
      }, py::arg("id"), py::arg("space_id"));

  m.def("is_equivariant", [](IsometricAction const& a, Cover const& c) {
    return check_equivariance(a, c).ok;
  });
  m.def("pushforward_cover", [](IsometricAction const& a, QuotientSpace const& q, Cover const& c) {
    auto out = pushforward_cover(a, q, c);
    return py::make_tuple(out.cover, certificate(out.certificate));
  });
  m.def("lift_equivariant", [](IsometricAction const& a, QuotientSpace const& q, Cover const& c,
                               Scalar const& R) {
    auto out = lift_equivariant(a, q, c, R);
    py::dict trace;
    trace["s"] = py::cast(out.trace.s);
    trace["R"] = py::cast(out.trace.R);
    trace["json"] = dump_json(io::trace_to_json(out.trace, a.group()));
    return py::make_tuple(out.cover, certificate(out.certificate), trace);
  }, py::arg("action"), py::arg("quotient"), py::arg("cover"), py::arg("R"));

  m.def("decomposition_to_cover", [](SpaceHandle s, Scalar const& r,
                                     std::vector<std::vector<PointSet>> families) {
    auto out = decomposition_to_cover(Decomposition{s, r, std::move(families)});
    return py::make_tuple(out.cover, certificate(out.certificate));
  }, py::arg("space"), py::arg("r"), py::arg("families"));
  m.def("decomposition_violations", [](SpaceHandle s, Scalar const& r,
                                       std::vector<std::vector<PointSet>> families) {
    return violations(validate_decomposition(Decomposition{s, r, std::move(families)}).violations);
  }, py::arg("space"), py::arg("r"), py::arg("families"));

  m.def("greedy_cover", [](SpaceHandle s, Scalar const& R) { return greedy_cover(s, R); },
        py::arg("space"), py::arg("R"));
  m.def("min_dimension_cover", [](SpaceHandle s, Scalar const& R, Scalar const& B) {
    return min_dimension_cover_exact(s, R, B);
  }, py::arg("space"), py::arg("R"), py::arg("B"));
  m.def("profile", [](SpaceHandle s, std::vector<Scalar> const& scales, std::optional<Scalar> B,
                      std::string const& mode) {
    auto     p = asdim_profile(s, scales, profile_options(B, mode));
    py::list out;
    for (auto const& e : p.entries) {
      out.append(profile_entry(e));
    }
    return out;
  }, py::arg("space"), py::arg("scales"), py::arg("B") = py::none(), py::arg("mode") = "auto");
  m.def("equivariant_cover", [](IsometricAction const& a, Scalar const& R, std::optional<Scalar> B,
                                std::string const& mode) {
    PipelineOptions o;
    o.estimate = profile_options(B, mode);
    auto out   = equivariant_cover_pipeline(a, R, o);
    py::dict d;
    d["quotient"]       = out.quotient;
    d["quotient_cover"] = out.quotient_cover;
    d["method"]         = to_string(out.method);
    d["cover"]          = out.lift.cover;
    d["certificate"]    = certificate(out.lift.certificate);
    return d;
  }, py::arg("action"), py::arg("R"), py::arg("B") = py::none(), py::arg("mode") = "auto");
  m.def("compare_quotient_dimensions", [](IsometricAction const& a,
                                          std::vector<std::pair<Scalar, Scalar>> const& regimes) {
    std::vector<ScaleRegime> rs;
    for (auto const& [R, B] : regimes) {
      rs.push_back({R, B});
    }
    py::list out;
    for (auto const& row : compare_quotient_dimensions(a, rs)) {
      py::dict d;
      d["R"]          = py::cast(row.regime.R);
      d["B"]          = py::cast(row.regime.B);
      d["space"]      = py::cast(row.space_dimension);
      d["quotient"]   = py::cast(row.quotient_dimension);
      d["comparison"] = to_string(row.comparison);
      out.append(d);
    }
    return out;
  }, py::arg("action"), py::arg("regimes"));

  py::class_<SSpace>(m, "SSpace")
      .def(py::init([](std::vector<SpaceHandle> const& comps, std::vector<PointSet> basepoints,
                       std::vector<Scalar> weights) {
             return build_sspace(std::vector<SpacePtr>(comps.begin(), comps.end()),
                                 std::move(basepoints), std::move(weights));
           }),
           py::arg("components"), py::arg("basepoints"), py::arg("weights"))
      .def_property_readonly("assembled", [](SSpace const& s) { return handle(s.assembled()); })
      .def_property_readonly("weights", &SSpace::weights)
      .def_property_readonly("basepoints", &SSpace::basepoints)
      .def("__len__", &SSpace::component_count)
      .def("component_of", &SSpace::component_of)
      .def("global_point", &SSpace::global_point)
      .def("componentwise_action", [](SSpace const& s, std::vector<IsometricAction> const& actions) {
        return sspace_componentwise_action(s, actions);
      })
      .def("quotient_commutation", [](SSpace const& s, std::vector<IsometricAction> const& actions) {
        auto out = sspace_quotient_commute(s, actions);
        return py::make_tuple(out.lhs, out.rhs, out.bijection);
      });
}
