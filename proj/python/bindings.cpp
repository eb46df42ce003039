#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsrforge/enumeration.hpp"
#include "tsrforge/json_io.hpp"
#include "tsrforge/search.hpp"
#include "tsrforge/tables.hpp"
#include "tsrforge/verify.hpp"

namespace py = pybind11;
using namespace tsrforge;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json from_py(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }
py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

SearchOptions search_options(std::uint64_t budget, bool allow_even_n, unsigned threads) {
  SearchOptions o;
  o.budget = budget;
  o.allow_even_n = allow_even_n;
  o.threads = threads;
  o.limits = Limits::from_environment();
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Primitive transformation shift registers over finite fields";

  static py::exception<TsrError> tsr_error(m, "TsrError", PyExc_ValueError);
  static py::exception<BudgetExhaustedError> budget_error(m, "BudgetExhaustedError", tsr_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExhaustedError& e) {
      py::set_error(budget_error, e.what());
    } catch (const TsrError& e) {
      py::set_error(tsr_error, e.what());
    }
  });

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def_static("prime", [](std::uint64_t p) { return std::const_pointer_cast<Field>(Field::prime(p)); })
      .def_static(
          "extension",
          [](std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
            FieldPtr f = modulus ? Field::extension(p, k, *modulus) : Field::extension(p, k);
            return std::const_pointer_cast<Field>(f);
          },
          py::arg("p"), py::arg("k"), py::arg("modulus") = py::none())
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("generator", &Field::generator)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("format", [](const Field& f, Elem a) { return format_element(f, a); })
      .def("parse", [](const Field& f, const std::string& s) { return parse_element(f, s); })
      .def("multiplicative_order", [](const Field& f, Elem a) { return multiplicative_order(f, a); })
      .def("is_primitive_element", [](const Field& f, Elem a) { return is_primitive_element(f, a); })
      .def("primitive_elements", [](const Field& f) { return primitive_elements(f); });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](std::shared_ptr<Field> f, const std::string& text) { return parse_polynomial(f, text); }))
      .def(py::init([](std::shared_ptr<Field> f, std::vector<Elem> coeffs) { return Polynomial(f, std::move(coeffs)); }))
      .def_property_readonly("coeffs", &Polynomial::coeffs)
      .def_property_readonly("degree", [](const Polynomial& p) -> py::object {
        if (p.is_zero()) return py::none();
        return py::int_(p.size_degree());
      })
      .def_property_readonly("field", [](const Polynomial& p) { return std::const_pointer_cast<Field>(p.field()); })
      .def("compose", &Polynomial::compose)
      .def("monic", &Polynomial::monic)
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "')"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; });

  m.def("is_irreducible", &is_irreducible);
  m.def("is_primitive", &is_primitive);
  m.def("primitivity_certificate", [](const Polynomial& f) -> py::object {
    const PrimitivityResult r = is_primitive_poly(f);
    if (!r.certificate) return py::none();
    return to_py(certificate_to_json(*r.certificate));
  });
  m.def("verify_certificate", [](const py::object& cert) { return verify_certificate(certificate_from_json(from_py(cert))); });
  m.def("conjugate_product", &conjugate_product);
  m.def("reciprocal", &reciprocal);

  m.def("tsr_charpoly", [](const py::object& spec) { return to_string(tsr_charpoly_formula(spec_from_json(from_py(spec)))); });
  m.def("tsr_charpoly_direct", [](const py::object& spec) { return to_string(tsr_charpoly_direct(spec_from_json(from_py(spec)))); });
  m.def("tsr_period", [](const py::object& spec) { return tsr_period(spec_from_json(from_py(spec)), Limits::from_environment()); });
  m.def("is_primitive_tsr", [](const py::object& spec) { return is_primitive_tsr(spec_from_json(from_py(spec))); });
  m.def("normalize_spec", [](const py::object& spec) { return to_py(spec_to_json(spec_from_json(from_py(spec)))); });

  m.def(
      "search_primitive_tsr",
      [](std::uint64_t q, unsigned mm, unsigned n, std::uint64_t budget, bool allow_even_n, unsigned threads) {
        const SearchResult r = search_primitive_tsr(q, mm, n, search_options(budget, allow_even_n, threads));
        Json j = search_result_to_json(r);
        const std::string replay = replay_search(r);
        j["replay"] = replay.empty() ? "ok" : replay;
        return to_py(j);
      },
      py::arg("q"), py::arg("m"), py::arg("n"), py::arg("budget") = std::uint64_t{1} << 22,
      py::arg("allow_even_n") = false, py::arg("threads") = 1);
  m.def(
      "verify_conjecture",
      [](std::uint64_t q, unsigned mm, unsigned n, const std::string& form, std::uint64_t budget, unsigned threads) {
        ConjectureForm f = form == "direct" ? ConjectureForm::Direct : ConjectureForm::Composition;
        if (form != "direct" && form != "composition") fail(ErrorKind::UnknownKind, "form must be direct or composition");
        return to_py(witness_to_json(verify_conjecture(q, mm, n, f, search_options(budget, true, threads))));
      },
      py::arg("q"), py::arg("m"), py::arg("n"), py::arg("form") = "direct", py::arg("budget") = std::uint64_t{1} << 22,
      py::arg("threads") = 1);
  m.def("find_trace_one_quadratic", [](unsigned mm) { return find_trace_one_quadratic(mm, Limits::from_environment()); });

  m.def(
      "enumerate_special_primitives",
      [](std::uint64_t q, unsigned mm, unsigned n, const std::string& form, unsigned threads) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_special_primitives(q, mm, n, parse_special_form(form), Limits::from_environment(), threads)) {
          out.push_back(to_string(p));
        }
        return out;
      },
      py::arg("q"), py::arg("m"), py::arg("n"), py::arg("form") = "P_mnq", py::arg("threads") = 1);
  m.def(
      "enumerate_tsrp",
      [](std::uint64_t q, unsigned mm, unsigned n, unsigned threads) {
        py::list out;
        for (const auto& s : enumerate_tsrp_bruteforce(q, mm, n, Limits::from_environment(), threads)) out.append(to_py(spec_to_json(s)));
        return out;
      },
      py::arg("q"), py::arg("m"), py::arg("n"), py::arg("threads") = 1);
  m.def("closed_form_count", [](const std::string& kind, std::uint64_t q, unsigned mm, unsigned n) {
    return big(closed_form_count(parse_count_kind(kind), q, mm, n));
  });
  m.def("tsrp_count_theorem", [](std::uint64_t q, unsigned mm, unsigned n, std::uint64_t p_count) {
    return big(tsrp_count_theorem(q, mm, n, p_count));
  });
  m.def("tsrp_upper_bound", [](std::uint64_t q, unsigned mm, unsigned n) { return big(tsrp_upper_bound(q, mm, n)); });
  m.def(
      "count_matrices_with_charpoly",
      [](const Polynomial& p, unsigned threads) {
        return count_matrices_with_charpoly(p, static_cast<unsigned>(p.size_degree()), Limits::from_environment(), threads);
      },
      py::arg("p"), py::arg("threads") = 1);
  m.def("cyclotomic_coset_leaders", [](unsigned mm) { return cyclotomic_partition(mm, Limits::from_environment()).leaders; });
  m.def(
      "count_trace_one_classes",
      [](unsigned mm, unsigned threads) {
        const TraceOneCount c = count_trace_one_classes(mm, Limits::from_environment(), threads);
        return py::make_tuple(c.r, c.p2m2);
      },
      py::arg("m"), py::arg("threads") = 1);
  m.def("count_trace_one_elements", [](unsigned mm) { return count_trace_one_elements(mm, Limits::from_environment()); });

  m.def(
      "build_table",
      [](const std::string& id, bool deep, unsigned threads) {
        const TableReport t = build_table(parse_table_id(id), TableOptions{deep, threads, Limits::from_environment()});
        py::dict files;
        for (const auto& [name, contents] : t.files) files[py::str(name)] = contents;
        return files;
      },
      py::arg("id"), py::arg("deep") = false, py::arg("threads") = 1);
  m.def(
      "run_verify",
      [](const std::string& level, bool inject_fault, unsigned threads, std::uint64_t seed) {
        VerifyOptions o{parse_verify_level(level), inject_fault, threads, seed, Limits::from_environment()};
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : run_verify(o)) out.emplace_back(r.name, r.passed, r.detail);
        return out;
      },
      py::arg("level") = "quick", py::arg("inject_fault") = false, py::arg("threads") = 1, py::arg("seed") = 1);
}
