#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jcirc/jacobsthal.hpp"
#include "jcirc/verify.hpp"

namespace py = pybind11;
using namespace jcirc;

namespace {

py::object py_int(const Integer& v) {
    return py::module_::import("builtins").attr("int")(to_decimal(v));
}

py::object py_fraction(const Rational& q) {
    return py::module_::import("fractions")
        .attr("Fraction")(py_int(q.num()), py_int(q.den()));
}

py::list py_fractions(const std::vector<Rational>& row) {
    py::list out;
    for (const Rational& v : row) out.append(py_fraction(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(jcirc, m) {
    m.doc() = "exact determinants, inverses and eigenvalues of Jacobsthal-family "
              "circulant matrices";

    m.def("seq_term",
          [](const std::string& kind, std::size_t k) { return py_int(term(kind_from_name(kind), k)); },
          py::arg("kind"), py::arg("k"), "k-th term by the recurrence");
    m.def("seq_term_binet",
          [](const std::string& kind, std::size_t k) {
              return py_int(term_binet(kind_from_name(kind), k));
          },
          py::arg("kind"), py::arg("k"), "k-th term by the closed form");

    m.def("first_row",
          [](const std::string& kind, std::size_t n) {
              const CirculantMatrix circ = build_sequence_circulant(kind_from_name(kind), n);
              py::list out;
              for (const Rational& v : circ.first_row()) out.append(py_int(v.to_integer()));
              return out;
          },
          py::arg("kind"), py::arg("n"), "first row of the sequence circulant");

    m.def("det_closed",
          [](const std::string& kind, std::size_t n) {
              return py_int(det_closed(kind_from_name(kind), n));
          },
          py::arg("kind"), py::arg("n"), "closed-form determinant");
    m.def("det_bareiss",
          [](const std::string& kind, std::size_t n) {
              const Rational d =
                  det_bareiss(to_dense(build_sequence_circulant(kind_from_name(kind), n)));
              return py_int(d.to_integer());
          },
          py::arg("kind"), py::arg("n"), "fraction-free elimination determinant (oracle)");

    m.def("inverse_first_row",
          [](const std::string& kind, std::size_t n) {
              const ClosedInverse inv = inverse_closed(kind_from_name(kind), n);
              py::dict out;
              out["first_row"] = py_fractions(inv.matrix.first_row());
              out["oracle_validated"] = inv.oracle_validated;
              return out;
          },
          py::arg("kind"), py::arg("n"),
          "closed-form inverse first row as Fractions, plus the oracle flag");

    m.def("eigenvalues",
          [](const std::string& kind, std::size_t n) {
              return eigenvalues_dft(build_sequence_circulant(kind_from_name(kind), n)).lambdas;
          },
          py::arg("kind"), py::arg("n"), "DFT eigenvalues");
    m.def("eigenvalue_closed",
          [](const std::string& kind, std::size_t n, std::size_t k) {
              return eigenvalue_closed(kind_from_name(kind), n, k);
          },
          py::arg("kind"), py::arg("n"), py::arg("k"),
          "closed-form eigenvalue, 1 <= k <= n-1 (raises at the removable point w^k = -1)");
    m.def("eigenvalue_real_exact",
          [](const std::string& kind, std::size_t n, std::size_t k) {
              return py_fraction(eigenvalue_real_exact(kind_from_name(kind), n, k));
          },
          py::arg("kind"), py::arg("n"), py::arg("k"),
          "exact eigenvalue at the real spectrum points k = 0 and (even n) k = n/2");

    m.def("verify",
          [](const std::string& kind, std::size_t n_from, std::size_t n_to) {
              py::list out;
              for (const VerificationReport& rep :
                   verify_all(kind_from_name(kind), n_from, n_to)) {
                  for (const ClaimRecord& claim : rep.claims) {
                      py::dict rec;
                      rec["kind"] = std::string(kind_name(rep.kind));
                      rec["n"] = rep.n;
                      rec["claim"] = claim.id;
                      rec["status"] = std::string(claim_status_name(claim.status));
                      rec["closed_form_value"] = claim.closed_form_value;
                      rec["oracle_value"] = claim.oracle_value;
                      out.append(std::move(rec));
                  }
              }
              return out;
          },
          py::arg("kind"), py::arg("n_from"), py::arg("n_to"),
          "run every closed form against its oracle; claim records as dicts");

    m.attr("__version__") = "0.1.0";
}
