// Copyright 2026 The WalkForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkforge/circuit_io.hpp"
#include "walkforge/error.hpp"
#include "walkforge/synthesis.hpp"
#include "walkforge/verify.hpp"

namespace py = pybind11;
using namespace walkforge;

namespace {

WalkExpr as_expr(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_expr(o.cast<std::string>());
  return o.cast<WalkExpr>();
}

py::dict gate_dict(const Gate& g) {
  py::dict d;
  d["kind"] = to_string(g.kind);
  d["wire"] = g.target < 0 ? py::object(py::none()) : py::object(py::int_(g.target));
  py::list params;
  if (g.kind == GateKind::Phase2) {
    params.append(g.theta1);
    params.append(g.theta2);
  } else if (g.kind == GateKind::GlobalPhase) {
    params.append(g.theta1);
  }
  d["params"] = params;
  py::list ctrls;
  for (const auto& k : g.controls) ctrls.append(py::make_tuple(k.wire, k.polarity == Polarity::OnOne ? 1 : 0));
  d["controls"] = ctrls;
  return d;
}

}  // namespace

PYBIND11_MODULE(_walkforge, m) {
  m.doc() = "Exact, time-independent circuits for continuous-time quantum walks";

  auto base = py::register_exception<Error>(m, "WalkforgeError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DegreeMismatchError>(m, "DegreeMismatchError", pre.ptr());
  py::register_exception<NotCommutingError>(m, "NotCommutingError", base.ptr());
  py::register_exception<EmbeddingError>(m, "EmbeddingError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<WalkExpr>(m, "Expr")
      .def(py::init([](const std::string& text) { return parse_expr(text); }), py::arg("text"))
      .def("__str__", [](const WalkExpr& e) { return to_string(e); })
      .def("__repr__", [](const WalkExpr& e) { return "Expr('" + to_string(e) + "')"; })
      .def("__eq__", [](const WalkExpr& a, const WalkExpr& b) { return a == b; })
      .def("__hash__", [](const WalkExpr& e) { return py::hash(py::str(to_string(e))); });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("dim", &Graph::dim)
      .def_property_readonly("wires", &Graph::wires)
      .def_property_readonly("label", &Graph::label)
      .def_property_readonly("active", &Graph::active_mask)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacency", &Graph::dense)
      .def("to_json", [](const Graph& g) { return to_json(g); })
      .def("to_dot", [](const Graph& g) { return to_dot(g); });

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("wires", &Circuit::wires)
      .def("__len__", &Circuit::size)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def_property_readonly("gates", [](const Circuit& c) {
        py::list out;
        for (const auto& g : c.gates()) out.append(gate_dict(g));
        return out;
      })
      .def("unitary", [](const Circuit& c, int cap) { return unitary_of(c, cap); },
           py::arg("max_wires") = default_limits().max_unitary_wires)
      .def("apply", [](const Circuit& c, const Eigen::VectorXcd& psi) {
        Eigen::VectorXcd out = apply_to_state(c, StateVector(psi)).amplitudes();
        return out;
      })
      .def("two_qubit_cost", &two_qubit_cost)
      .def("to_json", [](const Circuit& c) { return to_json(c); })
      .def("to_qasm", [](const Circuit& c) { return to_qasm(c); })
      .def_static("from_json", &circuit_from_json)
      .def_static("from_qasm", &circuit_from_qasm);

  m.def("parse_expr", [](const std::string& s) { return parse_expr(s); });
  m.def("graph_of", [](const py::object& e) { return graph_of(as_expr(e)); }, py::arg("expr"));
  m.def(
      "synth",
      [](const py::object& e, double t, double gamma) {
        const WalkExpr x = as_expr(e);
        validate(x);
        return synth(x, WalkParams(gamma, t));
      },
      py::arg("expr"), py::arg("t") = 1.0, py::arg("gamma") = 1.0);
  m.def(
      "oracle",
      [](const py::object& e, double t, double gamma) {
        return expm_graph(graph_of(as_expr(e)), WalkParams(gamma, t));
      },
      py::arg("expr"), py::arg("t") = 1.0, py::arg("gamma") = 1.0);
  m.def(
      "eigh",
      [](const Eigen::MatrixXd& h) {
        const auto d = eig_hermitian(h);
        return py::make_tuple(d.lambda, d.q);
      },
      py::arg("h"), "Eigenvalues (descending) and eigenvector columns of a real symmetric matrix.");
  m.def(
      "verify",
      [](const py::object& e, const std::vector<double>& ts, const std::vector<double>& gammas,
         double tol) {
        const auto r = verify(as_expr(e), ts, gammas, tol);
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["t"] = row.t;
          d["gamma"] = row.gamma;
          d["max_dist"] = row.max_dist;
          d["spec_dist"] = row.spec_dist;
          d["gates"] = row.gates;
          d["cost2q"] = row.cost2q;
          d["pass"] = row.pass;
          d["error"] = row.error;
          rows.append(d);
        }
        py::dict out;
        out["expr"] = r.expr;
        out["dim"] = r.dim;
        out["rows"] = rows;
        out["all_pass"] = r.all_pass();
        out["t_independent"] = r.structural_t_independent;
        out["csv"] = to_csv(r);
        return out;
      },
      py::arg("expr"), py::arg("ts"), py::arg("gammas") = std::vector<double>{1.0},
      py::arg("tol") = default_tolerances().verification);
  m.def(
      "t_independence",
      [](const py::object& e, const std::vector<double>& ts, double gamma) {
        return t_independence(as_expr(e), ts, {}, gamma);
      },
      py::arg("expr"), py::arg("ts"), py::arg("gamma") = 1.0);
  m.def(
      "scaling_csv",
      [](const std::string& family, const std::vector<int>& sizes, double t, double gamma) {
        return to_csv(scaling(family, sizes, WalkParams(gamma, t)));
      },
      py::arg("family"), py::arg("sizes"), py::arg("t") = 1.0, py::arg("gamma") = 1.0);
  m.def("commutes", [](const py::object& a, const py::object& b) {
    return commutes(graph_of(as_expr(a)), graph_of(as_expr(b)));
  });
}
