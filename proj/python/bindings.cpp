#include "sgalg/cli.hpp"
#include "sgalg/json_report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sgalg;

namespace {

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::tuple to_py(const IntegerVector& v) { return py::make_tuple(to_py(v.x), to_py(v.y)); }

template <class V>
py::list to_py_list(const std::vector<V>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(static_cast<const IntegerVector&>(v)));
  return out;
}

LatticeVector from_py(const std::pair<py::int_, py::int_>& p) {
  auto x = Integer(py::str(p.first).cast<std::string>());
  auto y = Integer(py::str(p.second).cast<std::string>());
  auto v = LatticeVector::from(IntegerVector(x, y));
  if (!v) throw py::value_error("coordinates must be nonnegative");
  return *v;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const std::vector<std::string>& names,
                                 std::size_t n) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, names, MonomialOrder::grevlex(n)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_sgalg, m) {
  m.doc() = "Exact invariants of affine semigroups <a, a+d, ..., a+kd> in N^2";

  static py::exception<Error> base_error(m, "SgalgError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FamilyError& e) {
      py::object cls = py::module_::import("builtins").attr("ValueError");
      PyErr_SetString(cls.ptr(), (to_string(e.kind()) + ": " + e.what()).c_str());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<SemigroupFamily>(m, "Family")
      .def(py::init([](std::pair<py::int_, py::int_> a, std::pair<py::int_, py::int_> d, int k,
                       std::optional<std::pair<py::int_, py::int_>> b, int mu_bound) {
             std::optional<LatticeVector> ext;
             if (b) ext = from_py(*b);
             return build_family(from_py(a), from_py(d), k, ext, mu_bound);
           }),
           py::arg("a"), py::arg("d"), py::arg("k"), py::arg("b") = py::none(),
           py::arg("mu_bound") = kDefaultMuBound)
      .def_property_readonly("a", [](const SemigroupFamily& f) { return to_py(f.a().vec()); })
      .def_property_readonly("d", [](const SemigroupFamily& f) { return to_py(f.d().vec()); })
      .def_property_readonly("k", &SemigroupFamily::k)
      .def_property_readonly("b", [](const SemigroupFamily& f) -> py::object {
        if (!f.is_extended()) return py::none();
        return to_py(f.extension()->vec());
      })
      .def_property_readonly("mu", &SemigroupFamily::mu)
      .def_property_readonly("generators",
                             [](const SemigroupFamily& f) { return to_py_list(f.generators()); })
      .def("apery_set", [](const SemigroupFamily& f) { return to_py_list(apery_set(f).elements); })
      .def("apery_bruteforce",
           [](const SemigroupFamily& f) { return to_py_list(apery_bruteforce(f).set.elements); })
      .def("quasi_frobenius", [](const SemigroupFamily& f) { return to_py_list(quasi_frobenius(f)); })
      .def("cm_type", &cm_type)
      .def("is_cohen_macaulay", [](const SemigroupFamily& f) { return is_cohen_macaulay(f).cohen_macaulay; })
      .def("is_normal", [](const SemigroupFamily& f) { return is_normal(f).normal; })
      .def("is_member",
           [](const SemigroupFamily& f, std::pair<py::int_, py::int_> v) {
             return is_member(f, from_py(v).vec()).has_value();
           })
      .def("ideal_generators", &ideal_generator_strings)
      .def("groebner_basis",
           [](const SemigroupFamily& f) {
             auto G = f.is_extended() ? extended_generators(f) : generating_set(f.k()).G;
             auto gb = buchberger(G, MonomialOrder::grevlex(family_nvars(f)));
             return strings(gb.elements, family_variable_names(f.k(), f.is_extended()),
                            family_nvars(f));
           })
      .def("toric_kernel",
           [](const SemigroupFamily& f) {
             return strings(toric_kernel(f).elements, family_variable_names(f.k(), f.is_extended()),
                            family_nvars(f));
           })
      .def("hilbert_numerator",
           [](const SemigroupFamily& f) {
             py::dict out;
             for (const auto& [s, c] : hilbert_numerator(f.k(), f).numerator) out[to_py(s.vec())] = to_py(c);
             return out;
           })
      .def("betti", [](const SemigroupFamily& f) { return resolution(f.k(), f).betti; })
      .def("regularity", [](const SemigroupFamily& f) { return regularity(f).regularity; })
      .def("enumerate",
           [](const SemigroupFamily& f, long cap_x, long cap_y) {
             return to_py_list(enumerate_semigroup(f, {cap_x, cap_y, std::nullopt}));
           },
           py::arg("cap_x"), py::arg("cap_y"))
      .def("report",
           [](const SemigroupFamily& f, const std::string& command, bool include_toric) {
             ReportOptions o;
             o.include_toric = include_toric;
             return json_to_py(build_report(f, parse_command(command), o));
           },
           py::arg("command") = "analyze", py::arg("include_toric") = true)
      .def("__repr__", [](const SemigroupFamily& f) { return "Family(" + f.describe() + ")"; });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"sgalg"};
        full.insert(full.end(), args.begin(), args.end());
        std::ostringstream out, err;
        int code = run_cli(full, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
