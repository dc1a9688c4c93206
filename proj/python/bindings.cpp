#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bianchi/bounds.hpp"
#include "bianchi/eisenstein.hpp"
#include "bianchi/error.hpp"
#include "bianchi/exactmath.hpp"
#include "bianchi/lefschetz.hpp"
#include "bianchi/quadfield.hpp"
#include "bianchi/sczech.hpp"
#include "bianchi/verify.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace bianchi;

namespace {

py::object to_py(const BigInt& v) {
  const std::string s = to_string(v);
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const BigRat& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigInt(numerator(v))), to_py(BigInt(denominator(v))));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Involution involution(const std::string& name) {
  if (name == "sigma") return Involution::sigma;
  if (name == "tau") return Involution::tau;
  throw PreconditionError("involution must be 'sigma' or 'tau'");
}

BracketVariant bracket_variant(const std::string& name) {
  const auto v = parse_bracket(name);
  require(v.has_value(), "unknown bracket '" + name + "'");
  return *v;
}

CharacterVariant character_variant(const std::string& name) {
  const auto v = parse_character(name);
  require(v.has_value(), "unknown character variant '" + name + "'");
  return *v;
}

py::object trace_value(const TraceValue& t) {
  if (t.is_exact()) return to_py(t.lo);
  return py::make_tuple(to_py(t.lo), to_py(t.hi));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lefschetz numbers and Eisenstein traces for Bianchi groups";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConformanceError>(m, "ConformanceError", PyExc_ArithmeticError);

  m.def("factorize", [](const py::int_& n) {
    py::list out;
    for (const auto& [p, e] : factorize(from_py(n))) out.append(py::make_tuple(to_py(p), e));
    return out;
  });
  m.def("legendre", [](const py::int_& a, const py::int_& p) { return legendre(from_py(a), from_py(p)); });
  m.def("kronecker", [](const py::int_& a, const py::int_& n) { return kronecker(from_py(a), from_py(n)); });
  m.def("hilbert2", [](const py::int_& a, const py::int_& b) { return hilbert2(from_py(a), from_py(b)); });
  m.def("euler_phi", [](const py::int_& n) { return to_py(euler_phi(from_py(n))); });
  m.def("sym_power_trace", [](const py::int_& t, long k) { return to_py(sym_power_trace(from_py(t), k)); });

  py::class_<QuadField>(m, "QuadField")
      .def_property_readonly("d", &QuadField::d)
      .def_property_readonly("discriminant", &QuadField::discriminant)
      .def_property_readonly("class_number", &QuadField::class_number)
      .def_property_readonly("t", &QuadField::t)
      .def_property_readonly("d2", &QuadField::d2)
      .def_property_readonly("ramified_primes", &QuadField::ramified_primes)
      .def("splitting_type",
           [](const QuadField& f, std::int64_t p) { return std::string(to_string(splitting_type(f, p))); })
      .def("__repr__", [](const QuadField& f) { return "QuadField(d=" + std::to_string(f.d()) + ")"; });
  m.def("make_field", &make_field, py::arg("d"));
  m.def("two_torsion_count", [](std::int64_t d) { return two_torsion_count(make_field(d)); });

  m.def("lefschetz_sigma_principal", [](std::int64_t d, std::int64_t N, long k) {
    const QuadField f = make_field(d);
    return to_py(lefschetz_sigma_principal(f, make_level(f, N), k));
  }, py::arg("d"), py::arg("N"), py::arg("k"));
  m.def("lefschetz_sigma_prime_power", [](std::int64_t d, std::int64_t p, unsigned n, long k) {
    return to_py(lefschetz_sigma_prime_power(make_field(d), p, n, k));
  }, py::arg("d"), py::arg("p"), py::arg("n"), py::arg("k"));
  m.def("lefschetz_level_one", [](std::int64_t d, const std::string& inv, long k, const std::string& bracket) {
    return to_py(lefschetz_level_one(make_field(d), involution(inv), k, bracket_variant(bracket)).value);
  }, py::arg("d"), py::arg("involution"), py::arg("k"), py::arg("bracket") = std::string(to_string(kDefaultBracket)));

  m.def("cusp_count", [](std::int64_t d, std::int64_t N) { return to_py(cusp_count(make_field(d), N)); });
  m.def("trace_sigma_h2_eis", [](std::int64_t d, std::int64_t N, long k) {
    return to_py(trace_sigma_h2_eis(make_field(d), N, k));
  });
  m.def("trace_tau_h2_eis", [](std::int64_t d, std::int64_t N, long k) {
    return to_py(trace_tau_h2_eis(make_field(d), N, k));
  });
  m.def("trace_sigma_h1_eis", [](std::int64_t d, std::int64_t p, unsigned n) {
    return to_py(trace_sigma_h1_eis(make_field(d), p, n));
  });
  m.def("sczech_trace", [](std::int64_t d, std::int64_t N, const std::string& variant) {
    const auto t = sczech_trace(make_field(d), N, character_variant(variant));
    return std::complex<double>(t.real, t.imag);
  }, py::arg("d"), py::arg("N"), py::arg("variant") = std::string(to_string(kDefaultCharacter)));

  m.def("cusp_lower_bound", [](std::int64_t d, std::int64_t N, long k, const std::string& inv) {
    const auto r = cusp_lower_bound(make_field(d), N, k, involution(inv));
    py::dict out;
    out["bound"] = to_py(r.bound);
    out["mode"] = std::string(to_string(r.mode));
    out["L"] = to_py(r.L);
    out["tr0"] = trace_value(r.tr0);
    out["tr1"] = trace_value(r.tr1);
    out["tr2"] = trace_value(r.tr2);
    py::dict provenance;
    for (const auto& p : r.provenance) provenance[py::str(p.ingredient)] = p.source;
    out["provenance"] = provenance;
    out["warnings"] = r.warnings;
    return out;
  }, py::arg("d"), py::arg("N"), py::arg("k"), py::arg("involution") = "sigma");
  m.def("gl2_trace_sigma1", [](std::int64_t d, long k, const std::string& bracket) {
    return to_py(gl2_trace_sigma1(make_field(d), k, bracket_variant(bracket)).value);
  }, py::arg("d"), py::arg("k"), py::arg("bracket") = std::string(to_string(kDefaultBracket)));

  m.def("verify", [](const std::string& suite) {
    const auto result = run_suite(suite);
    py::list out;
    for (const auto& c : result.checks) out.append(py::make_tuple(c.name, c.passed, c.hard, c.detail));
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
