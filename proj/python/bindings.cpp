#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lucasx/cli.hpp"
#include "lucasx/congruence.hpp"
#include "lucasx/newton.hpp"
#include "lucasx/oracles.hpp"
#include "lucasx/parser.hpp"
#include "lucasx/pscheme.hpp"

namespace py = pybind11;
using namespace lucasx;

namespace {

// Python ints of any size go through their decimal text.
py::int_ to_py(const Integer& v) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
}

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

CtSpec make_spec(const std::string& P, const std::string& Q, const std::string& vars) {
  auto v = parse_variable_list(vars);
  return CtSpec(parse(P, v), parse(Q, v));
}

py::list to_list(const SequenceWindow& w) {
  py::list out;
  for (const auto& v : w.values) out.append(to_py(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lucasx, m) {
  m.doc() = "Constant-term sequences and their Lucas-type congruences";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);

  m.def("canonical", [](const std::string& text, const std::string& vars) {
    auto v = parse_variable_list(vars);
    return to_canonical_string(parse(text, v), v);
  }, py::arg("text"), py::arg("vars"));

  m.def("constant_term", [](const std::string& text, const std::string& vars) {
    return to_py(constant_term(parse(text, parse_variable_list(vars))));
  }, py::arg("text"), py::arg("vars"));

  m.def("ct_sequence", [](const std::string& P, const std::string& Q, const std::string& vars,
                          std::size_t n_max, std::optional<std::uint64_t> modulus) {
    std::optional<Modulus> mod;
    if (modulus) mod = Modulus(*modulus);
    return to_list(ct_sequence(make_spec(P, Q, vars), n_max, mod));
  }, py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("n_max"), py::arg("modulus") = py::none());

  m.def("oracle", [](const std::string& name, unsigned long n) {
    auto o = oracles::named(name);
    if (!o) throw std::invalid_argument("unknown oracle '" + name + "'");
    return to_py((*o)(n));
  }, py::arg("name"), py::arg("n"));
  m.def("oracle_names", &oracles::names);

  m.def("lucas_verify", [](const std::string& P, const std::string& Q, const std::string& vars,
                           std::uint64_t p, std::size_t n_max) {
    return report_format(lucas_verify(make_spec(P, Q, vars), p, n_max));
  }, py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("p"), py::arg("n_max"));

  m.def("dwork_verify", [](const std::string& P, const std::string& Q, const std::string& vars,
                           std::uint64_t p, unsigned r, std::size_t m_max, std::size_t n_max) {
    return report_format(dwork_verify(make_spec(P, Q, vars), p, r, m_max, n_max));
  }, py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("p"), py::arg("r"), py::arg("m_max"),
     py::arg("n_max"));

  m.def("glc_verify", [](const std::string& P, const std::string& Q, const std::string& vars,
                         std::uint64_t p, std::size_t n_max, bool simple) {
    auto s = make_spec(P, Q, vars);
    return report_format(simple ? glc_simple_verify(s.P, s.Q, p, n_max) : glc_verify(s.P, s.Q, p, n_max));
  }, py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("p"), py::arg("n_max"), py::arg("simple") = false);

  m.def("kronecker", [](const py::int_& d, std::uint64_t p) { return kronecker_mod_p(from_py(d), p); },
        py::arg("d"), py::arg("p"));

  m.def("newton", [](const std::string& text, const std::string& vars) {
    LaurentPoly f = parse(text, parse_variable_list(vars));
    auto np = newton_polytope(f);
    py::dict d;
    d["dim"] = np.dim;
    d["affine_dim"] = np.affine_dim;
    d["vertices"] = np.vertices;
    d["interior_points"] = interior_integral_points(np);
    d["origin_only_interior"] = origin_only_interior(f);
    d["support_in_unit_box"] = support_in_unit_box(f);
    return d;
  }, py::arg("text"), py::arg("vars"));

  m.def("synthesize", [](const std::string& P, const std::string& Q, const std::string& vars,
                         std::uint64_t p, unsigned r, std::size_t max_states) {
    return scheme_dump(synthesize(make_spec(P, Q, vars), p, r, max_states));
  }, py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("p"), py::arg("r") = 1, py::arg("max_states") = 64);

  m.def("scheme_evaluate", [](const std::string& scheme, std::uint64_t n) {
    return evaluate(scheme_parse(scheme), n);
  }, py::arg("scheme"), py::arg("n"));

  m.def("scheme_verify", [](const std::string& scheme, const std::string& P, const std::string& Q,
                            const std::string& vars, std::size_t n_max) {
    return report_format(verify(scheme_parse(scheme), make_spec(P, Q, vars), n_max));
  }, py::arg("scheme"), py::arg("P"), py::arg("Q"), py::arg("vars"), py::arg("n_max"));

  m.def("catalan_mod", [](std::uint64_t n, std::uint64_t p) { return catalan_digit_formula(n, p); },
        py::arg("n"), py::arg("p"));
  m.def("s_mod5", &s_mod5, py::arg("n"));
  m.def("never_divisible_primes", [](const std::string& name, std::uint64_t bound) {
    auto o = oracles::named(name);
    if (!o) throw std::invalid_argument("unknown oracle '" + name + "'");
    return never_divisible_primes(*o, bound);
  }, py::arg("oracle"), py::arg("bound"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run_args(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
