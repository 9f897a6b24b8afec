#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uecsm/angletests.hpp"
#include "uecsm/constructors.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/nilpotent4.hpp"
#include "uecsm/oracle.hpp"
#include "uecsm/report.hpp"
#include "uecsm/tracetests.hpp"

namespace py = pybind11;
using namespace uecsm;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1) || a.shape(0) == 0) {
    throw DimensionMismatch("expected a non-empty square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return CMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

ComplexArray to_array(const CMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  ComplexArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict residuals;
  for (const auto& r : v.residuals) residuals[py::str(r.name)] = r.value;
  py::dict d;
  d["criterion"] = v.criterion;
  d["pass"] = v.pass;
  d["tol"] = v.tol;
  d["max_residual"] = v.max_residual();
  d["residuals"] = residuals;
  return d;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_uecsm, m) {
  m.doc() = "UECSM tests for small complex matrices";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("uecsm_verdict", [](const ComplexArray& t, double tol) { return verdict_dict(uecsm_verdict(to_matrix(t), tol)); },
        py::arg("t"), py::arg("tol") = kDefaultTol);
  m.def("transpose_equivalence",
        [](const ComplexArray& t, double tol) { return verdict_dict(transpose_equivalence(to_matrix(t), tol)); },
        py::arg("t"), py::arg("tol") = kDefaultTol);
  m.def("psi7", [](const ComplexArray& t) { return psi7(to_matrix(t)).values; });
  m.def("phi3", [](const ComplexArray& t) { return phi3(to_matrix(t)).values; });

  m.def(
      "angle_suite",
      [](const ComplexArray& t, double tol) {
        const AngleSuite s = angle_suite(to_matrix(t), tol);
        py::dict d;
        d["eigenvalues"] = s.spectrum.eigenvalues;
        d["wat"] = verdict_dict(s.wat.verdict);
        d["sat"] = verdict_dict(s.sat.verdict);
        d["lsat"] = verdict_dict(s.lsat.verdict);
        d["det3"] = s.det3 ? py::object(verdict_dict(*s.det3)) : py::none();
        d["uecsm"] = s.uecsm;
        return d;
      },
      py::arg("t"), py::arg("tol") = kDefaultTol);

  m.def(
      "classify_nilpotent",
      [](Complex a, Complex b, Complex c, Complex d, Complex e, Complex f, double tol) {
        return json_to_py(to_json(run_classify({a, b, c, d, e, f}, tol)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"), py::arg("f"),
      py::arg("tol") = kDefaultTol);

  m.def(
      "find_symmetrizer",
      [](const ComplexArray& t, int restarts, int max_iters, double witness_tol) {
        const OracleResult r = find_symmetrizer(to_matrix(t), restarts, max_iters, witness_tol);
        py::dict d;
        d["status"] = r.status == OracleStatus::Witness ? "witness" : "inconclusive";
        d["u"] = r.u ? py::object(to_array(*r.u)) : py::none();
        d["residual"] = r.residual;
        d["iterations"] = r.iterations;
        d["restarts_used"] = r.restarts_used;
        return d;
      },
      py::arg("t"), py::arg("restarts") = 20, py::arg("max_iters") = 300,
      py::arg("witness_tol") = kDefaultWitnessTol);

  m.def(
      "construct",
      [](int k, int negative, std::vector<Complex> diag, std::uint64_t seed) {
        const ConstructReport r = run_construct(Signature(k, k + negative), diag, seed);
        return py::make_tuple(to_array(r.construction.t), to_array(r.construction.q), json_to_py(to_json(r)));
      },
      py::arg("k"), py::arg("negative"), py::arg("diag"), py::arg("seed") = 0);

  m.def(
      "test",
      [](const ComplexArray& t, double tol, bool oracle, std::string label) {
        TestOptions o;
        o.tol = Tolerances::uniform(tol);
        o.oracle = oracle;
        MatrixDocument doc{label.empty() ? std::nullopt : std::optional<std::string>(label), to_matrix(t)};
        return json_to_py(to_json(run_test(doc, o)));
      },
      py::arg("t"), py::arg("tol") = kDefaultTol, py::arg("oracle") = false, py::arg("label") = "");

  m.def("read_document", [](const std::string& path) {
    const MatrixDocument doc = read_document(path);
    return py::make_tuple(doc.label ? py::object(py::str(*doc.label)) : py::none(), to_array(doc.matrix));
  });
  m.def("write_document", [](const ComplexArray& t, std::optional<std::string> label) {
    return write_document({std::move(label), to_matrix(t)});
  }, py::arg("t"), py::arg("label") = py::none());
}
