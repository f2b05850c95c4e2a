#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "d4quad/pipeline.hpp"

namespace py = pybind11;
using namespace d4quad;

namespace {

// arbitrary-precision bridge: python int <-> mpz via decimal strings
Int to_int(const py::object& o) { return Int(py::str(o).cast<std::string>()); }

py::object to_py(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_d4quad, m) {
  m.doc() = "Regularity pipeline for D(4)-quadruples containing {a, ka}";

  py::register_exception<Error>(m, "Error");

  m.def("fundamental_pair", [](int k) {
    auto [r, a] = pell::fundamental_pair(k);
    return py::make_tuple(to_py(r), to_py(a));
  });
  m.def("pair_at", [](int k, unsigned p) {
    auto pr = pell::pair_at(k, p);
    py::dict d;
    d["r"] = to_py(pr.r);
    d["a"] = to_py(pr.a);
    d["b"] = to_py(pr.b());
    return d;
  });
  m.def("c_family", [](int k, unsigned p, const std::string& family) {
    auto tc = tuples::c_family(pell::pair_at(k, p),
                               tuples::family_from_name(family));
    py::dict d;
    d["c"] = to_py(tc.c);
    d["s"] = to_py(tc.s);
    d["t"] = to_py(tc.t);
    return d;
  });
  m.def("d_pm", [](const py::object& a, const py::object& b,
                   const py::object& c) {
    auto [dm, dp] = tuples::d_pm(to_int(a), to_int(b), to_int(c));
    return py::make_tuple(to_py(dm), to_py(dp));
  });
  m.def("check_tuple", [](const std::vector<py::object>& elements) {
    std::vector<Int> v;
    v.reserve(elements.size());
    for (const auto& e : elements) v.push_back(to_int(e));
    return tuples::check_tuple(v);
  });
  m.def("is_regular", [](const std::vector<py::object>& elements) {
    std::vector<Int> v;
    v.reserve(elements.size());
    for (const auto& e : elements) v.push_back(to_int(e));
    return tuples::is_regular(v);
  });
  m.def("extend_triple", [](const py::object& a, const py::object& b,
                            const py::object& c, const py::object& d_max) {
    py::list out;
    for (const auto& d :
         oracle::extend_triple(to_int(a), to_int(b), to_int(c), to_int(d_max)))
      out.append(to_py(d));
    return out;
  });
  m.def("trivial_solution", [](int k, unsigned p, int nu, int sign) {
    auto ts = seq::trivial_solution(pell::pair_at(k, p), nu, sign);
    py::dict d;
    d["x"] = to_py(ts.x);
    d["d"] = to_py(ts.d);
    d["c"] = to_py(ts.c);
    return d;
  });
  m.def("p_bound", [](int k, int family, const std::string& branch) {
    auto pb = linforms::p_bound(k, family, linforms::branch_from_name(branch));
    return py::make_tuple(pb.p_max, to_py(pb.index_cap));
  });
  m.def(
      "verify_family",
      [](int k, const std::string& family, int p_max) {
        auto report = pipeline::verify_family(
            k, tuples::family_from_name(family), p_max);
        return pipeline::to_json(report);
      },
      py::arg("k"), py::arg("family"), py::arg("p_max") = 0);
  m.def("fibonacci_check", &oracle::fibonacci_check);
  m.def("k4_check",
        [](const py::object& r_max) { return oracle::k4_check(to_int(r_max)); });
}
