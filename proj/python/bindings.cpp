#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primaltop/space_io.hpp"

namespace py = pybind11;
using namespace primaltop;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::dict report_to_py(const CheckReport& r) {
  py::dict out = json_to_py(check_report_to_json(r));
  out["elapsed_seconds"] = r.elapsed_seconds;
  if (!r.strategy.empty()) out["strategy"] = r.strategy;
  return out;
}

py::dict kuratowski_to_py(const KuratowskiReport& r, const Universe& u) {
  auto axiom = [&u](const KuratowskiReport::Axiom& a) {
    py::list witness;
    for (Bits b : a.witness) witness.append(bits_to_string(u, b));
    return py::dict(py::arg("passed") = a.passed, py::arg("witness") = witness);
  };
  return py::dict(py::arg("preserves_empty") = axiom(r.preserves_empty),
                  py::arg("extensive") = axiom(r.extensive),
                  py::arg("additive") = axiom(r.additive),
                  py::arg("idempotent") = axiom(r.idempotent),
                  py::arg("all_passed") = r.all_passed());
}

SweepStrategy strategy_from_args(const std::string& mode, int samples, std::uint64_t seed) {
  if (mode == "exhaustive") return SweepStrategy::exhaustive();
  if (mode == "sampled") return SweepStrategy::sampled(samples, seed);
  throw Error("parse-error", "strategy must be \"exhaustive\" or \"sampled\"");
}

OperatorTable::Kind kind_from_name(const std::string& name) {
  if (name == "diamond") return OperatorTable::Kind::Diamond;
  if (name == "diamond-r") return OperatorTable::Kind::DiamondR;
  if (name == "cl") return OperatorTable::Kind::ClDiamond;
  if (name == "cl-r") return OperatorTable::Kind::ClDiamondR;
  if (name == "identity") return OperatorTable::Kind::Identity;
  throw Error("parse-error", "unknown operator \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite primal topological space engine";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "EngineError");

  py::class_<Universe, std::shared_ptr<Universe>>(m, "Universe")
      .def(py::init([](const std::vector<std::string>& points) {
        return std::make_shared<Universe>(points);
      }))
      .def_property_readonly("points", &Universe::points)
      .def("__len__", &Universe::size)
      .def("__eq__", [](const Universe& a, const Universe& b) { return a == b; })
      .def("__repr__", [](const Universe& u) {
        std::string out = "Universe([";
        for (int i = 0; i < u.size(); ++i) out += (i ? ", '" : "'") + u.name_of(i) + "'";
        return out + "])";
      });

  py::class_<Subset>(m, "Subset")
      .def(py::init(
          [](UniversePtr u, const std::vector<std::string>& names) { return Subset::of(u, names); }))
      .def_static("empty", &Subset::empty)
      .def_static("full", &Subset::full)
      .def_property_readonly("names", &Subset::names)
      .def_property_readonly("bits", &Subset::bits)
      .def("complement", &Subset::complement)
      .def("is_subset_of", &Subset::is_subset_of)
      .def("is_empty", &Subset::is_empty)
      .def("__contains__",
           [](const Subset& s, const std::string& name) { return s.contains(name); })
      .def("__len__", &Subset::count)
      .def("__or__", [](const Subset& a, const Subset& b) { return a | b; })
      .def("__and__", [](const Subset& a, const Subset& b) { return a & b; })
      .def("__sub__", [](const Subset& a, const Subset& b) { return a - b; })
      .def("__eq__", [](const Subset& a, const Subset& b) { return a == b; })
      .def("__hash__", [](const Subset& s) { return static_cast<size_t>(s.bits()); })
      .def("__repr__", &Subset::to_string);

  py::class_<SetFamily>(m, "SetFamily")
      .def(py::init([](UniversePtr u, const std::vector<std::vector<std::string>>& members) {
        std::vector<Bits> bits;
        bits.reserve(members.size());
        for (const auto& names : members) bits.push_back(Subset::of(u, names).bits());
        return SetFamily(u, bits);
      }))
      .def_property_readonly("universe", [](const SetFamily& f) {
        return std::const_pointer_cast<Universe>(f.universe_ptr());
      })
      .def("members", &SetFamily::members)
      .def("contains", &SetFamily::contains)
      .def("union_all", &SetFamily::union_all)
      .def("intersection_all", &SetFamily::intersection_all)
      .def("includes", &SetFamily::includes)
      .def("__len__", &SetFamily::size)
      .def("__contains__", &SetFamily::contains)
      .def("__eq__", [](const SetFamily& a, const SetFamily& b) { return a == b; })
      .def("__iter__",
           [](const SetFamily& f) {
             py::list members;
             for (const auto& s : f.members()) members.append(s);
             return py::iter(members);
           })
      .def("__repr__", &SetFamily::to_string);

  py::class_<Topology>(m, "Topology")
      .def_static("validate", &Topology::validate)
      .def_static("discrete", &Topology::discrete)
      .def_static("indiscrete", &Topology::indiscrete)
      .def_property_readonly("universe", [](const Topology& t) {
        return std::const_pointer_cast<Universe>(t.universe_ptr());
      })
      .def_property_readonly("opens", &Topology::opens)
      .def_property_readonly("closed_sets", &Topology::closed_sets)
      .def_property_readonly("regular_open_family", &Topology::regular_open_family)
      .def_property_readonly("regular_closed_family", &Topology::regular_closed_family)
      .def_property_readonly("delta_open_family", &Topology::delta_open_family)
      .def("is_open", &Topology::is_open)
      .def("is_closed", &Topology::is_closed)
      .def("interior", &Topology::interior)
      .def("closure", &Topology::closure)
      .def("open_neighborhoods",
           py::overload_cast<std::string_view>(&Topology::open_neighborhoods, py::const_))
      .def("regular_open_neighborhoods",
           py::overload_cast<std::string_view>(&Topology::regular_open_neighborhoods, py::const_))
      .def("is_regular_open", &Topology::is_regular_open)
      .def("delta_interior", &Topology::delta_interior)
      .def("delta_closure", &Topology::delta_closure)
      .def("is_delta_open", &Topology::is_delta_open)
      .def("is_delta_closed", &Topology::is_delta_closed)
      .def("is_regular_space", &Topology::is_regular_space)
      .def("is_hausdorff", &Topology::is_hausdorff)
      .def("__repr__", [](const Topology& t) { return "Topology(" + t.opens().to_string() + ")"; });

  py::class_<Primal>(m, "Primal")
      .def_static("validate", &Primal::validate)
      .def_static("empty", &Primal::empty)
      .def_static("all_proper_subsets", &Primal::all_proper_subsets)
      .def_static("point_primal", &Primal::point_primal)
      .def_property_readonly("members", &Primal::members)
      .def("contains", &Primal::contains)
      .def("__contains__", &Primal::contains)
      .def("__len__", &Primal::size)
      .def("__eq__", [](const Primal& a, const Primal& b) { return a == b; })
      .def("__repr__", [](const Primal& p) { return "Primal(" + p.members().to_string() + ")"; });

  py::class_<PrimalSpace>(m, "PrimalSpace")
      .def(py::init(&PrimalSpace::create))
      .def_static("create", &PrimalSpace::create)
      .def_property_readonly("universe", [](const PrimalSpace& s) {
        return std::const_pointer_cast<Universe>(s.universe_ptr());
      })
      .def_property_readonly("topology", &PrimalSpace::topology)
      .def_property_readonly("primal", &PrimalSpace::primal);

  py::class_<OperatorTable>(m, "OperatorTable")
      .def_static("build",
                  [](const PrimalSpace& s, const std::string& kind) {
                    return OperatorTable::build(s, kind_from_name(kind));
                  })
      .def_property_readonly("name", &OperatorTable::name)
      .def("__len__", &OperatorTable::size)
      .def("value", &OperatorTable::value);

  m.def("diamond", &diamond);
  m.def("diamond_r", &diamond_r);
  m.def("cl_diamond", &cl_diamond);
  m.def("cl_diamond_r", &cl_diamond_r);
  m.def("tau_diamond", &tau_diamond);
  m.def("tau_diamond_r", &tau_diamond_r);
  m.def("base_family", &base_family);
  m.def("topology_from_base", &topology_from_base);
  m.def("kuratowski_check", [](const OperatorTable& t) {
    return kuratowski_to_py(kuratowski_check(t), *t.universe_ptr());
  });

  m.def("enumerate_primals", &enumerate_primals);
  m.def("enumerate_topologies", &enumerate_topologies);
  m.def("default_point_names", &default_point_names);

  m.def("theorem_catalog", [] {
    py::list out;
    for (const auto& info : theorem_catalog())
      out.append(py::dict(
          py::arg("id") = std::string(info.id),
          py::arg("kind") = info.kind == TheoremKind::Direct ? "direct" : "converse",
          py::arg("description") = std::string(info.description)));
    return out;
  });
  m.def("check_theorem", [](const std::string& id, const PrimalSpace& s) {
    return report_to_py(check_theorem(id, s));
  });
  m.def(
      "sweep",
      [](const std::string& id, int n, const std::string& strategy, int samples,
         std::uint64_t seed) {
        return report_to_py(sweep_theorem(id, n, strategy_from_args(strategy, samples, seed)));
      },
      py::arg("id"), py::arg("n"), py::arg("strategy") = "exhaustive",
      py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def(
      "find_counterexample",
      [](const std::string& id, int n, const std::string& strategy, int samples,
         std::uint64_t seed) {
        return report_to_py(find_counterexample(id, n, strategy_from_args(strategy, samples, seed)));
      },
      py::arg("id"), py::arg("n"), py::arg("strategy") = "exhaustive",
      py::arg("samples") = 1000, py::arg("seed") = 0);

  m.def("parse_space", [](const std::string& text) {
    const SpaceDocument doc = parse_space_document(text);
    return py::make_tuple(doc.name, doc.to_space());
  });
  m.def("load_space", [](const std::string& path) {
    const SpaceDocument doc = load_space_document(path);
    return py::make_tuple(doc.name, doc.to_space());
  });
}
