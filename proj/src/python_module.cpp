#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "catcolim/cli.hpp"
#include "catcolim/dsl.hpp"
#include "catcolim/tensor_verify.hpp"

namespace py = pybind11;
using namespace catcolim;

namespace {

std::string tri(Tri t) { return tri_name(t); }

std::string path_text(const Category& c, const Path& p) {
  if (p.is_identity()) return "id(" + quote_name(c.object_name(p.src)) + ")";
  return c.format_path(p);
}

// A category or the carrier of a tensor category of a document.
CategoryPtr carrier(const Document& d, const std::string& name) {
  return d.type_of(name) == BlockType::Tensor ? d.tensor(name)->carrier() : d.category(name);
}

py::dict report_dict(const std::string& test, const UPReport& r) {
  py::dict out;
  out["test"] = test;
  out["verdict"] = tri(r.verdict());
  out["well_defined"] = r.comparison_well_defined;
  out["fully_faithful"] = r.fully_faithful;
  out["essentially_surjective"] = r.essentially_surjective;
  out["unknown"] = r.unknown;
  out["summary"] = r.summary();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Colimits of presented categories and strict symmetric tensor categories";

  // messages start with the error code name, e.g. "ParseError: 3:5: ..."
  py::register_exception<Error>(m, "CatcolimError");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool; returns (exit code, stdout, stderr).");

  py::class_<Document>(m, "Document")
      .def(py::init([](const std::string& text, std::size_t max_len, std::size_t max_hom) {
             Bounds b;
             b.max_len = max_len;
             b.max_hom = max_hom;
             return parse_document(text, b);
           }),
           py::arg("text"), py::arg("max_len") = Bounds{}.max_len, py::arg("max_hom") = Bounds{}.max_hom)
      .def("text", [](const Document& d) { return print_document(d); })
      .def("records", [](const Document& d) { return export_records(d); })
      .def("blocks",
           [](const Document& d) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [t, n] : d.blocks()) out.emplace_back(block_type_name(t), n);
             return out;
           })
      .def("num_objects", [](const Document& d, const std::string& n) { return carrier(d, n)->num_objects(); })
      .def("num_arrows", [](const Document& d, const std::string& n) { return carrier(d, n)->num_arrows(); })
      .def(
          "hom",
          [](const Document& d, const std::string& n, const std::string& src, const std::string& dst) {
            CategoryPtr c = carrier(d, n);
            std::vector<Path> hom = c->hom(c->object(src), c->object(dst));
            std::sort(hom.begin(), hom.end(), [&](const Path& a, const Path& b) { return c->shortlex_less(a, b); });
            std::vector<std::string> out;
            for (const auto& p : hom) out.push_back(path_text(*c, p));
            return out;
          },
          py::arg("category"), py::arg("src"), py::arg("dst"), "Hom-set in shortlex order; raises when it does not close.")
      .def(
          "normalize",
          [](const Document& d, const std::string& n, const std::string& term) {
            CategoryPtr c = carrier(d, n);
            return path_text(*c, c->normalize(c->parse_path(term)));
          },
          py::arg("category"), py::arg("term"))
      .def(
          "equal",
          [](const Document& d, const std::string& n, const std::string& a, const std::string& b) {
            CategoryPtr c = carrier(d, n);
            return tri(c->equal(c->parse_path(a), c->parse_path(b)));
          },
          py::arg("category"), py::arg("a"), py::arg("b"), "Equal, Distinct or Unknown.")
      .def(
          "pi0",
          [](const Document& d, const std::string& n) {
            CategoryPtr c = carrier(d, n);
            std::vector<std::vector<std::string>> out;
            for (const auto& comp : pi0(*c)) {
              out.emplace_back();
              for (ObjId x : comp) out.back().push_back(c->object_name(x));
            }
            return out;
          },
          py::arg("category"), "Connected components as lists of object names.")
      .def(
          "construct",
          [](Document& d, const std::string& kind, const std::vector<std::string>& inputs, bool tensor,
             const std::string& route, const std::string& name) {
            auto k = kind_from_name(kind);
            if (!k) throw Error(ErrorCode::Unsupported, "unknown kind '" + kind + "'");
            ConstructionBlock c;
            c.kind = *k;
            c.tensor = tensor;
            c.inputs = inputs;
            c.route = route == "direct" ? Route::Direct : Route::Composite;
            if (tensor) return add_construction(d, c, run_tensor_construction(d, c), name);
            return add_construction(d, c, run_construction(d, c), name);
          },
          py::arg("kind"), py::arg("inputs"), py::arg("tensor") = false, py::arg("route") = "composite",
          py::arg("name") = "C", "Runs a construction and appends its outputs; returns the block name.")
      .def(
          "check_universal",
          [](const Document& d, const std::string& name, const Document& tests) {
            py::list out;
            if (d.construction(name).tensor) {
              TensorConstructionResult c = load_tensor_construction(d, name);
              for (const auto& t : tests.names(BlockType::Tensor)) out.append(report_dict(t, check_universal(c, tests.tensor(t))));
            } else {
              ConstructionResult c = load_construction(d, name);
              for (const auto& t : tests.names(BlockType::Category)) out.append(report_dict(t, check_universal(c, tests.category(t))));
            }
            return out;
          },
          py::arg("construction"), py::arg("tests"), "One report per test category of the matching type.")
      .def(
          "tensor_pi0",
          [](const Document& d, const std::string& n) {
            CommMonoid mon = pi0_tensor(*d.tensor(n));
            std::vector<std::string> names;
            for (std::size_t i = 0; i < mon.size(); ++i) names.push_back(mon.name(i));
            return py::make_tuple(names, mon.unit(), mon.table());
          },
          py::arg("category"), "Components with their multiplication: (names, unit index, table).");
}
