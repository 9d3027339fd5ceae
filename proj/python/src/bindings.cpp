#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extalg/io.hpp"

namespace py = pybind11;
using namespace extalg;

namespace {

int vertex_of(const Algebra& alg, const std::string& label) {
  int v = alg.quiver().vertex_index(label);
  if (v < 0) throw Error("unknown vertex '" + label + "'");
  return v;
}

}  // namespace

PYBIND11_MODULE(_extalg, m) {
  m.doc() = "minimal resolutions and Ext algebra presentations of bounded quiver algebras";

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("name", &Algebra::name)
      .def_property_readonly("field", &Algebra::field)
      .def_property_readonly("dimension", &Algebra::dimension)
      .def_property_readonly("vertices",
                             [](const Algebra& a) {
                               std::vector<std::string> out;
                               for (size_t v = 0; v < a.quiver().num_vertices(); ++v)
                                 out.push_back(a.quiver().vertex_label(int(v)));
                               return out;
                             })
      .def("normal_form",
           [](const Algebra& a, const std::string& text) {
             return a.nf(parse_element(text, a.quiver(), a.field())).str();
           })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra " + a.name() + " dim " + std::to_string(a.dimension()) + ">";
      });

  m.def("load", &io::load_algebra, py::arg("spec"),
        "load an algebra from a file path or builtin:m11");
  m.def(
      "parse",
      [](const std::string& text, const std::string& name) { return io::parse_algebra(text, name); },
      py::arg("text"), py::arg("name") = "");
  m.def("serialize", &io::serialize_algebra, py::arg("algebra"));

  m.def(
      "resolve",
      [](const Algebra& alg, const std::string& simple, int degree) {
        Resolution res = Resolution::minimal(alg, vertex_of(alg, simple), size_t(degree));
        py::list terms;
        for (size_t n = 0; n <= res.top(); ++n) {
          py::list t;
          for (int s : res.term(n).summands()) t.append(alg.quiver().vertex_label(s));
          terms.append(t);
        }
        py::dict out;
        out["terms"] = terms;
        out["verified"] = all_pass(verify_resolution(res));
        return out;
      },
      py::arg("algebra"), py::arg("simple"), py::arg("degree"));

  m.def(
      "ext_dim",
      [](const Algebra& alg, const std::string& from, const std::string& to, int degree) {
        ExtContext ctx(alg);
        return ctx.ext_dim(vertex_of(alg, from), vertex_of(alg, to), size_t(degree));
      },
      py::arg("algebra"), py::arg("from_simple"), py::arg("to_simple"), py::arg("degree"));

  m.def(
      "hilbert",
      [](const Algebra& alg, const std::string& source, int degree) {
        return hilbert_from_resolution(
            Resolution::minimal(alg, vertex_of(alg, source), size_t(degree)));
      },
      py::arg("algebra"), py::arg("source"), py::arg("degree"));

  m.def(
      "verify_m11",
      [](int bound) {
        m11::VerificationReport rep = m11::verify_m11(bound);
        py::list checks;
        for (const m11::Check& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["status"] = c.status;
          d["details"] = c.details;
          checks.append(d);
        }
        py::dict out;
        out["bound"] = rep.bound;
        out["ok"] = rep.ok();
        out["checks"] = checks;
        return out;
      },
      py::arg("bound") = 12);
}
