#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdlib>
#include <string>

#include "zagreb/bounds.hpp"
#include "zagreb/exact.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/surd.hpp"

namespace py = pybind11;
using zagreb::Int;

namespace {

// cpp_int <-> arbitrary-precision python int, via decimal strings.
Int to_bigint(py::handle h) {
  if (!PyLong_Check(h.ptr())) throw py::type_error("an integer is required");
  return Int(std::string(py::str(h)));
}

py::object from_bigint(const Int& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object fraction(const zagreb::Rational& q) {
  py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(from_bigint(boost::multiprecision::numerator(q)),
              from_bigint(boost::multiprecision::denominator(q)));
}

py::dict check_to_dict(const zagreb::CheckResult& r) {
  py::dict out;
  out["status"] = zagreb::to_cstring(r.status);
  py::list parts;
  for (const zagreb::Comparison& c : r.parts) {
    py::dict part;
    part["label"] = c.label;
    part["lhs"] = c.lhs_display;
    part["rhs"] = c.rhs_display;
    part["relation"] = c.relation;
    part["witness"] = c.witness.to_string();
    part["sign"] = c.sign;
    part["ok"] = c.ok;
    part["cert_c_sq_k"] = from_bigint(c.cert_c_sq_k);
    part["cert_p_sq"] = from_bigint(c.cert_p_sq);
    parts.append(part);
  }
  out["parts"] = parts;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact extremal values and bounds for the sum of squared degrees";

  m.def("isqrt", [](py::object x) { return from_bigint(zagreb::isqrt_floor(to_bigint(x))); },
        py::arg("x"), "Floor square root of a nonnegative integer.");
  m.def("binom2", [](py::object x) { return from_bigint(zagreb::binom2(to_bigint(x))); },
        py::arg("x"), "x*(x-1)/2.");

  m.def(
      "triangular_decompose",
      [](py::object mm) {
        zagreb::TriDecomp d = zagreb::triangular_decompose(to_bigint(mm));
        return py::make_tuple(from_bigint(d.r), from_bigint(d.q));
      },
      py::arg("m"), "The unique (r, q) with m = r(r-1)/2 + q and 0 <= q < r.");
  m.def(
      "co_decompose",
      [](py::object n, py::object mm) {
        zagreb::CoDecomp d = zagreb::co_decompose(to_bigint(n), to_bigint(mm));
        return py::make_tuple(from_bigint(d.s), from_bigint(d.t));
      },
      py::arg("n"), py::arg("m"));

  m.def("value_C",
        [](py::object n, py::object mm) {
          return from_bigint(zagreb::value_C(to_bigint(n), to_bigint(mm)));
        },
        py::arg("n"), py::arg("m"), "2m(r-1) + q(q+1).");
  m.def("value_S",
        [](py::object n, py::object mm) {
          return from_bigint(zagreb::value_S(to_bigint(n), to_bigint(mm)));
        },
        py::arg("n"), py::arg("m"));
  m.def("f_exact",
        [](py::object n, py::object mm) {
          return from_bigint(zagreb::f_exact(to_bigint(n), to_bigint(mm)));
        },
        py::arg("n"), py::arg("m"),
        "max{C(n,m), S(n,m)}: the maximum sum of squared degrees.");
  m.def("complement_transfer",
        [](py::object n, py::object mm, py::object f_of_m) {
          return from_bigint(
              zagreb::complement_transfer(to_bigint(n), to_bigint(mm), to_bigint(f_of_m)));
        },
        py::arg("n"), py::arg("m"), py::arg("f_of_m"),
        "f(n, binom(n,2)-m) from f(n,m).");

  py::class_<zagreb::Surd>(m, "Surd", "Exact p + c*sqrt(k).")
      .def(py::init([](py::object p, py::object c, py::object k) {
             return zagreb::Surd(to_bigint(p), to_bigint(c), to_bigint(k));
           }),
           py::arg("p"), py::arg("c") = 0, py::arg("k") = 0)
      .def_property_readonly("p", [](const zagreb::Surd& s) { return from_bigint(s.p()); })
      .def_property_readonly("c", [](const zagreb::Surd& s) { return from_bigint(s.c()); })
      .def_property_readonly("k", [](const zagreb::Surd& s) { return from_bigint(s.k()); })
      .def("sign", &zagreb::Surd::sign)
      .def("is_rational", &zagreb::Surd::is_rational)
      .def("display", [](const zagreb::Surd& s) { return zagreb::display6(s); },
           "6-significant-digit decimal (display only).")
      .def("__float__",
           [](const zagreb::Surd& s) { return std::strtod(zagreb::display6(s).c_str(), nullptr); })
      .def("__str__", &zagreb::Surd::to_string)
      .def("__repr__", [](const zagreb::Surd& s) { return "Surd(" + s.to_string() + ")"; })
      .def("__eq__", [](const zagreb::Surd& a, const zagreb::Surd& b) {
             return zagreb::surd_diff_sign(a, b) == 0;
           })
      .def("__lt__", [](const zagreb::Surd& a, const zagreb::Surd& b) {
             return zagreb::surd_diff_sign(a, b) < 0;
           })
      .def("__le__", [](const zagreb::Surd& a, const zagreb::Surd& b) {
             return zagreb::surd_diff_sign(a, b) <= 0;
           })
      .def("__gt__", [](const zagreb::Surd& a, const zagreb::Surd& b) {
             return zagreb::surd_diff_sign(a, b) > 0;
           })
      .def("__ge__", [](const zagreb::Surd& a, const zagreb::Surd& b) {
             return zagreb::surd_diff_sign(a, b) >= 0;
           });

  m.def("de_caen_D",
        [](py::object n, py::object mm) {
          return fraction(zagreb::de_caen_D(to_bigint(n), to_bigint(mm)));
        },
        py::arg("n"), py::arg("m"), "m(2m/(n-1) + n-2) as a Fraction.");
  m.def("nikiforov_F",
        [](py::object n, py::object mm) {
          return zagreb::nikiforov_F(to_bigint(n), to_bigint(mm));
        },
        py::arg("n"), py::arg("m"));
  m.def("theorem1_bounds",
        [](py::object n, py::object mm) {
          zagreb::Theorem1Bounds b = zagreb::theorem1_bounds(to_bigint(n), to_bigint(mm));
          return py::make_tuple(b.lower, b.upper, b.applies);
        },
        py::arg("n"), py::arg("m"), "(lower, upper, applies).");

  m.def("check_bo1", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_bo1(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_bo2", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_bo2(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_bo3", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_bo3(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_bo4", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_bo4(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_prop2", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_prop2(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_lemma_pro1", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_lemma_pro1(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_lemma_pro3", [](py::object n, py::object mm) {
    return check_to_dict(zagreb::check_lemma_pro3(to_bigint(n), to_bigint(mm)));
  });
  m.def("check_prop_pr0",
        [](py::object r) { return check_to_dict(zagreb::check_prop_pr0(to_bigint(r))); });
  m.def("ratio_D_over_f_exceeds",
        [](py::object n, py::object mm, py::object num, py::object den) {
          return zagreb::ratio_D_over_f_exceeds(to_bigint(n), to_bigint(mm), to_bigint(num),
                                                to_bigint(den));
        },
        py::arg("n"), py::arg("m"), py::arg("threshold_num"), py::arg("threshold_den"));

  py::class_<zagreb::Graph>(m, "Graph", "Simple labeled graph.")
      .def(py::init<std::int64_t, std::vector<zagreb::Graph::Edge>>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &zagreb::Graph::vertex_count)
      .def_property_readonly("edges", &zagreb::Graph::edges)
      .def("edge_count", &zagreb::Graph::edge_count)
      .def("degrees", &zagreb::Graph::degrees)
      .def("sum_sq_degrees",
           [](const zagreb::Graph& g) { return from_bigint(zagreb::sum_sq_degrees(g)); })
      .def("to_edge_list", [](const zagreb::Graph& g) { return zagreb::to_edge_list(g); })
      .def("__eq__", [](const zagreb::Graph& a, const zagreb::Graph& b) { return a == b; })
      .def("__repr__", [](const zagreb::Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complement", &zagreb::complement, py::arg("g"));
  m.def("quasi_complete", &zagreb::quasi_complete, py::arg("n"), py::arg("m"));
  m.def("quasi_star", &zagreb::quasi_star, py::arg("n"), py::arg("m"));
  m.def("extremal_graph", &zagreb::extremal_graph, py::arg("n"), py::arg("m"));
  m.def("from_edge_list",
        [](const std::string& text) { return zagreb::from_edge_list(text); });

  py::class_<zagreb::OracleResult>(m, "OracleResult")
      .def_readonly("n", &zagreb::OracleResult::n)
      .def_readonly("m", &zagreb::OracleResult::m)
      .def_property_readonly(
          "max_value", [](const zagreb::OracleResult& r) { return from_bigint(r.max_value); })
      .def_readonly("witness_degrees", &zagreb::OracleResult::witness_degrees)
      .def("__repr__", [](const zagreb::OracleResult& r) {
        return "OracleResult(n=" + std::to_string(r.n) + ", m=" + std::to_string(r.m) +
               ", max=" + r.max_value.str() + ")";
      });

  m.def("brute_force_max", &zagreb::brute_force_max, py::arg("n"), py::arg("m"),
        py::arg("allow_large") = false);
  m.def("brute_force_sweep", &zagreb::brute_force_sweep, py::arg("n"),
        py::arg("allow_large") = false);
}
