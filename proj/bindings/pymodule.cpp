#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scord/blocks.hpp"
#include "scord/cnf.hpp"
#include "scord/copies.hpp"
#include "scord/embed.hpp"
#include "scord/embedding.hpp"
#include "scord/forcing.hpp"
#include "scord/hclass.hpp"
#include "scord/spec.hpp"
#include "scord/term.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& e : j) out.append(to_py(e));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

json to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json out = json::array();
    for (const py::handle& e : h) out.push_back(to_json(e));
    return out;
  }
  if (py::isinstance<py::dict>(h)) {
    json out = json::object();
    for (const auto& [k, v] : h.cast<py::dict>()) out[k.cast<std::string>()] = to_json(v);
    return out;
  }
  throw py::type_error("spec must be built from dict/list/str/int/bool/None");
}

scord::SubsetSpec spec_arg(const py::handle& h, const scord::Term& t) {
  scord::SubsetSpec s = scord::spec_from_json(to_json(h));
  scord::shape_check(s, t);
  return s;
}

}  // namespace

PYBIND11_MODULE(_scord, m) {
  m.doc() = "Countable scattered linear orders: embeddability, minimal "
            "decompositions, block partitions, copies, separative quotients";

  // Translators run newest-first, so the base goes in before the leaves.
  py::register_exception<scord::error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<scord::parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<scord::shape_error>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<scord::precondition_error>(m, "PreconditionError", PyExc_ValueError);

  py::class_<scord::Term>(m, "Term")
      .def(py::init([](const std::string& s) { return scord::parse_term(s); }),
           py::arg("text"))
      .def_static("parse", [](const std::string& s) { return scord::parse_term(s); },
                  py::arg("text"))
      .def("__str__", [](const scord::Term& t) { return t.repr(); })
      .def("__repr__", [](const scord::Term& t) { return "Term('" + t.repr() + "')"; })
      .def("__eq__", [](const scord::Term& a, const scord::Term& b) { return a.repr() == b.repr(); })
      .def("__hash__", [](const scord::Term& t) { return py::hash(py::str(t.repr())); })
      .def("mirror", [](const scord::Term& t) { return scord::mirror(t); })
      .def_property_readonly("arity", &scord::Term::arity)
      .def_property_readonly("parts", [](const scord::Term& t) {
        std::vector<std::string> out;
        for (const scord::HTerm& p : t.parts()) out.push_back(p.repr());
        return out;
      });
  // Lets every Term-typed argument accept a plain string.
  py::implicitly_convertible<py::str, scord::Term>();

  m.def("embeds",
        [](const scord::Term& s, const scord::Term& t) { return scord::embeds(s, t); },
        py::arg("s"), py::arg("t"));

  m.def("witness",
        [](const scord::Term& s, const scord::Term& t, int depth) -> py::object {
          const auto w = scord::embed_witness(s, t, depth);
          if (!w) return py::none();
          py::list out;
          for (const auto& [from, to] : w->pairs)
            out.append(py::make_tuple(py::cast(from), py::cast(to)));
          return out;
        },
        py::arg("s"), py::arg("t"), py::arg("depth") = 3);

  m.def("ord_value", [](const scord::Term& t) -> py::object {
    const auto v = scord::ord_value(t);
    if (!v) return py::none();
    return py::str(scord::to_string(*v));
  });

  m.def("mdecomp", [](const scord::Term& t) {
    const scord::Decomposition d = scord::min_decomposition(t);
    json parts = json::array(), prov = json::array();
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      parts.push_back(d.parts[i].repr());
      prov.push_back({d.provenance[i].first, d.provenance[i].second});
    }
    return to_py({{"m", d.m}, {"parts", parts}, {"provenance", prov}});
  });

  m.def("blocks", [](const scord::Term& t) {
    const scord::Decomposition d = scord::min_decomposition(t);
    const auto bs = scord::block_partition(d.parts);
    json arr = json::array();
    for (const scord::Block& b : bs) {
      json parts = json::array();
      for (const scord::HTerm& p : b.parts) parts.push_back(p.repr());
      arr.push_back({{"kind", std::string(1, scord::to_char(b.kind))},
                     {"first", b.first},
                     {"last", b.last},
                     {"parts", parts}});
    }
    return to_py({{"bar", scord::bar_notation(bs)}, {"blocks", arr}});
  });

  m.def("sq", [](const scord::Term& t) { return scord::to_string(scord::sq_of(t)); });
  m.def("sq_report",
        [](const scord::Term& t) { return to_py(scord::sq_report_to_json(scord::sq_report(t))); });

  m.def("ordinal_sq", [](const std::string& s) {
    const scord::Cnf a = scord::parse_cnf(s);
    const scord::OrdinalSq os = scord::sq_of_ordinal(a);
    const scord::PosetExpr norm = scord::normalize(os.expr);
    return to_py({{"ordinal", scord::to_string(a)},
                  {"towers_text", scord::to_string(os.expr)},
                  {"sq", scord::poset_to_json(norm)},
                  {"sq_text", scord::to_string(norm)},
                  {"annotations", os.annotations}});
  });

  m.def("contains_copy",
        [](const scord::Term& t, const py::handle& spec) {
          return scord::contains_copy(t, spec_arg(spec, t));
        },
        py::arg("t"), py::arg("spec"));

  m.def("le_star",
        [](const scord::Term& t, const py::handle& a, const py::handle& b) {
          const scord::Verdict v = scord::le_star(t, spec_arg(a, t), spec_arg(b, t));
          return v == scord::Verdict::True    ? "true"
                 : v == scord::Verdict::False ? "false"
                                              : "unknown";
        },
        py::arg("t"), py::arg("a"), py::arg("b"));

  m.def("restrict",
        [](const scord::Term& t, const py::handle& spec) -> py::object {
          const auto r = scord::restrict_term(t, spec_arg(spec, t));
          if (!r) return py::none();
          return py::cast(*r);
        },
        py::arg("t"), py::arg("spec"));

  m.def("disjoint", [](const scord::Term& t) {
    const scord::DisjointCopies d = scord::disjoint_copies(t);
    return to_py({{"found", true},
                  {"first", scord::rep_to_json(d.first)},
                  {"second", scord::rep_to_json(d.second)},
                  {"first_image", scord::spec_to_json(d.first_image)},
                  {"second_image", scord::spec_to_json(d.second_image)}});
  });
}
