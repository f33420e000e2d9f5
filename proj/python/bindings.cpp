#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockda/charged.hpp"
#include "fockda/expression.hpp"
#include "fockda/grading.hpp"
#include "fockda/qchar.hpp"
#include "fockda/suites.hpp"
#include "fockda/winf.hpp"

namespace py = pybind11;
using namespace fockda;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

py::list series_records(const CharacterSeries& s) {
  py::list out;
  for (const auto& [key, c] : s.coefficients()) {
    out.append(py::make_tuple(key.first, key.second, py::int_(py::str(c.get_str()))));
  }
  return out;
}

std::vector<std::string> as_json(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(r.to_json());
  return out;
}

}  // namespace

PYBIND11_MODULE(_fockda, m) {
  m.doc() = "Exact neutral and charged free fermion computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("apply", [](const std::string& expr) { return render_state(evaluate_expression(expr)); }, py::arg("expr"),
        "Evaluate an operator expression and render the resulting state.");
  m.def(
      "grades",
      [](const std::vector<int>& indices) {
        const auto v = FermionMonomial::from_indices(indices);
        return py::make_tuple(dg(v), weight(v).to_string(), deg_h(v));
      },
      py::arg("indices"), "(dg, weight, deg_h) of the monomial with the given indices.");
  m.def("partition_count", &partition_count, py::arg("k"));
  m.def("sector_dimension", [](int n, int k) { return sector_basis(n, k).size(); }, py::arg("n"), py::arg("k"));
  m.def(
      "lemma_vector",
      [](const std::vector<int>& parts) { return lemma_vector(Partition{parts}).indices(); }, py::arg("parts"));
  m.def(
      "da_map",
      [](const std::vector<int>& indices) { return render(da_map(FermionMonomial::from_indices(indices))); },
      py::arg("indices"), "Image of a neutral monomial on the charged side.");
  m.def(
      "character",
      [](int qmax_half, const std::string& form) {
        if (form == "trace") return series_records(char_trace(Rational(qmax_half, 2)));
        if (form == "product") return series_records(char_product_form(qmax_half));
        if (form == "sum") return series_records(char_sum_form(qmax_half));
        throw std::invalid_argument("form must be trace, product or sum");
      },
      py::arg("qmax_half"), py::arg("form") = "trace");
  m.def(
      "jacobi",
      [](const std::string& which, int qmax) {
        if (which != "DA" && which != "A") throw std::invalid_argument("which must be DA or A");
        return jacobi_check(which == "DA" ? JacobiKind::DA : JacobiKind::A, qmax).to_json();
      },
      py::arg("which"), py::arg("qmax"));
  m.def(
      "scalar_defect",
      [](int k1, int n1, int k2, int n2, const std::string& cut) -> py::object {
        const auto d = scalar_defect_check(k1, n1, k2, n2, rat(cut));
        if (!d.scalar) return py::none();
        return py::str(d.scalar->to_string());
      },
      py::arg("k1"), py::arg("n1"), py::arg("k2"), py::arg("n2"), py::arg("weight_cut") = "6");
  m.def(
      "decompose",
      [](int nmax, int kmax) {
        py::list out;
        for (const auto& r : decompose_table(nmax, kmax)) {
          py::dict d;
          d["n"] = r.n;
          d["k"] = r.k;
          d["dim"] = r.dim;
          d["p(k)"] = r.partitions;
          d["match"] = r.match();
          out.append(d);
        }
        return out;
      },
      py::arg("nmax"), py::arg("kmax"));

  m.def(
      "verify_clifford",
      [](const std::string& max_index, const std::string& cut, int jobs) {
        return clifford_check(rat(max_index), rat(cut), jobs).to_json();
      },
      py::arg("max_index") = "15/2", py::arg("weight_cut") = "8", py::arg("jobs") = 1);
  m.def(
      "verify_heisenberg",
      [](int mmax, const std::string& cut, int jobs) { return as_json(heisenberg_suite(mmax, rat(cut), jobs)); },
      py::arg("mmax") = 5, py::arg("weight_cut") = "10", py::arg("jobs") = 1);
  m.def(
      "verify_virasoro",
      [](const std::string& family, const std::string& lambda, const std::string& b, int mmax, const std::string& cut,
         int jobs) {
        return as_json(virasoro_suite(parse_virasoro_family(family), rat(lambda), rat(b), mmax, rat(cut), jobs));
      },
      py::arg("family"), py::arg("lambda_") = "1/2", py::arg("b") = "0", py::arg("mmax") = 4, py::arg("weight_cut") = "8",
      py::arg("jobs") = 1);
  m.def(
      "verify_identities", [](int mmax, const std::string& cut, int jobs) { return as_json(identities_suite(mmax, rat(cut), jobs)); },
      py::arg("mmax") = 4, py::arg("weight_cut") = "8", py::arg("jobs") = 1);
  m.def(
      "verify_iso", [](int nmax, const std::string& cut, int jobs) { return as_json(iso_checks(rat(cut), nmax, jobs)); },
      py::arg("nmax") = 4, py::arg("weight_cut") = "8", py::arg("jobs") = 1);
  m.def(
      "verify_winf",
      [](int kmax, int mmax, int hmax, const std::string& cut, int jobs) {
        return as_json(winf_suite(kmax, mmax, hmax, rat(cut), jobs));
      },
      py::arg("kmax") = 2, py::arg("mmax") = 3, py::arg("hmax") = 4, py::arg("weight_cut") = "8", py::arg("jobs") = 1);
  m.def(
      "verify_charged",
      [](const std::vector<std::string>& lambdas, const std::vector<std::string>& bs, int mmax, const std::string& cut,
         int jobs) {
        std::vector<Rational> ls, cs;
        for (const auto& s : lambdas) ls.push_back(rat(s));
        for (const auto& s : bs) cs.push_back(rat(s));
        return as_json(charged_suite(ls, cs, mmax, rat(cut), jobs));
      },
      py::arg("lambdas"), py::arg("bs"), py::arg("mmax") = 3, py::arg("weight_cut") = "8", py::arg("jobs") = 1);
}
