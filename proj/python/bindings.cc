// Copyright 2026 The frustgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "frustgraph/error.h"
#include "frustgraph/gf.h"
#include "frustgraph/oracle.h"
#include "frustgraph/report.h"
#include "frustgraph/stabilizer.h"
#include "frustgraph/symplectic.h"

namespace py = pybind11;
using namespace frustgraph;

namespace {

using Rows = std::vector<std::vector<int64_t>>;

Rows to_rows(const GFMatrix &m) {
    Rows out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        auto row = m.row(r);
        out[r].assign(row.begin(), row.end());
    }
    return out;
}

Stabilizer code(const std::string &name, uint32_t d, std::optional<size_t> n) {
    return builtin_code(name, d, n.value_or(name == "five_qudit" ? 5 : 3));
}

py::tuple rational(const Rational &q) {
    return py::make_tuple(q.num, q.den);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Commutation structure of qudit Pauli groups and stabilizer entanglement";
    m.attr("__version__") = std::string(kVersion);

    static PyObject *error_type = PyErr_NewException("frustgraph._core.FrustgraphError", PyExc_ValueError, nullptr);
    m.attr("FrustgraphError") = py::reinterpret_borrow<py::object>(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object inst = py::handle(error_type)(e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type, inst.ptr());
        }
    });

    m.def(
        "rank", [](const Rows &rows, uint32_t d) { return rank(GFMatrix::from_rows(d, rows)); }, py::arg("rows"),
        py::arg("d"));
    m.def(
        "nullspace",
        [](const Rows &rows, uint32_t d) {
            std::vector<std::vector<uint32_t>> out;
            for (const auto &v : nullspace_basis(GFMatrix::from_rows(d, rows))) {
                out.emplace_back(v.begin(), v.end());
            }
            return out;
        },
        py::arg("rows"), py::arg("d"));
    m.def(
        "canonical_form",
        [](const Rows &gamma, uint32_t d) {
            CanonicalForm f = canonical_form(GFMatrix::from_rows(d, gamma));
            py::dict out;
            out["transform"] = to_rows(f.transform);
            out["blocks"] = f.blocks;
            out["residual_dim"] = f.residual_dim;
            return out;
        },
        py::arg("gamma"), py::arg("d"));
    m.def(
        "generating_graph",
        [](const std::string &text) {
            InputDocument doc = parse_document(text);
            return to_rows(generating_graph(doc.d, doc.generators));
        },
        py::arg("document"));

    m.def(
        "gm_measure",
        [](const std::string &name, uint32_t d, const std::vector<size_t> &side, std::optional<size_t> n) {
            return rational(gm_measure(code(name, d, n), SiteSubset(side)).gm);
        },
        py::arg("code"), py::arg("d"), py::arg("side"), py::arg("n") = py::none());
    m.def(
        "ggm_measure",
        [](const std::string &name, uint32_t d, std::optional<size_t> n) {
            return rational(ggm_measure(code(name, d, n)));
        },
        py::arg("code"), py::arg("d"), py::arg("n") = py::none());

    m.def("verify_swap_identity", &verify_swap_identity, py::arg("d"));
    m.def(
        "lagrange_extremum",
        [](uint32_t d, uint64_t seed) {
            OptimizerConfig cfg;
            cfg.seed = seed;
            return lagrange_extremum(d, cfg);
        },
        py::arg("d"), py::arg("seed") = 0);

    m.def(
        "run_command",
        [](const std::string &command, std::optional<std::string> document, std::optional<std::string> builtin,
           uint32_t d, std::optional<size_t> n, uint64_t seed, size_t restarts, size_t max_iters, double tol,
           size_t cap_vertices, bool chromatic, bool overlap, bool swap, bool lagrange) {
            std::optional<InputDocument> doc;
            if (document && builtin) {
                throw Error(ErrorCode::InvalidConfig, "pass either a document or a builtin, not both");
            }
            if (document) {
                doc = parse_document(*document);
            } else if (builtin) {
                doc = builtin_document(*builtin, d, n.value_or(*builtin == "five_qudit" ? 5 : 3));
            }
            CommandFlags flags;
            flags.optimizer = {restarts, max_iters, tol, seed};
            flags.cap_vertices = cap_vertices;
            flags.chromatic = chromatic;
            flags.overlap = overlap;
            flags.swap = swap;
            flags.lagrange = lagrange;
            if (swap || lagrange) {
                flags.check_d = d;
            }
            Report r = run_command(parse_command(command), doc, flags);
            return emit_report(r, ReportFormat::Json);
        },
        py::arg("command"), py::arg("document") = py::none(), py::kw_only(), py::arg("builtin") = py::none(),
        py::arg("d") = 2, py::arg("n") = py::none(), py::arg("seed") = 0, py::arg("restarts") = 32,
        py::arg("max_iters") = 500, py::arg("tol") = 1e-9, py::arg("cap_vertices") = kCliqueVertexCap,
        py::arg("chromatic") = false, py::arg("overlap") = false, py::arg("swap") = false,
        py::arg("lagrange") = false);
}
