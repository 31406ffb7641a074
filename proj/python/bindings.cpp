#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cobord/char_class.hpp"
#include "cobord/cli/commands.hpp"
#include "cobord/cli/document.hpp"
#include "cobord/cli/expr.hpp"
#include "cobord/cli/render.hpp"
#include "cobord/errors.hpp"
#include "cobord/fgl.hpp"
#include "cobord/proj_space.hpp"
#include "cobord/thom_lab.hpp"

namespace py = pybind11;
using namespace cobord;

namespace {

py::list terms_of(const GradedPoly& poly) {
  py::list out;
  for (const auto& term : cli::canonical_terms(poly)) {
    py::dict powers;
    for (const auto& [name, power] : term.powers) powers[py::str(name)] = power;
    out.append(py::make_tuple(term.coeff.to_string(), powers));
  }
  return out;
}

template <class T>
std::string json_of(const T& value) {
  return cli::to_json(cli::make_document(value)).dump(2);
}

SymbolMode mode_of(const std::string& name) { return symbol_mode_from_string(name); }

CharClassPoly char_class_from_expr(const std::string& source, int m, int n, const std::string& mode,
                                   std::size_t cutoff) {
  return CharClassPoly(m, n, cli::evaluate_expr(*cli::parse_expr(source), CharClassPoly::variables_for(m, n), cutoff),
                       mode_of(mode));
}

TruncSeries series_from_expr(const std::string& source, const std::vector<std::string>& variables, int order,
                             std::size_t cutoff) {
  return TruncSeries(cli::evaluate_expr(*cli::parse_expr(source), make_unit_variables(variables), cutoff), order);
}

template <class T>
void add_arithmetic(py::class_<T>& cls) {
  cls.def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const T& v, long k) { return v * Rational(k); })
      .def("__rmul__", [](const T& v, long k) { return v * Rational(k); });
}

}  // namespace

PYBIND11_MODULE(_cobord, m) {
  m.doc() = "Exact complex-cobordism characteristic-class calculus";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ConfigurationError>(m, "ConfigurationError", error);
  py::register_exception<UsageError>(m, "UsageError", error);
  auto domain = py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<TruncationError>(m, "TruncationError", domain);
  py::register_exception<ParseError>(m, "ParseError", error);

  m.attr("DEFAULT_ORDER") = kDefaultOrder;
  m.attr("DEFAULT_CUTOFF") = kDefaultCutoff;

  py::class_<GradedPoly>(m, "Poly")
      .def_property_readonly("variables", [](const GradedPoly& p) { return p.variables()->names; })
      .def("terms", &terms_of)
      .def("to_text", [](const GradedPoly& p) { return cli::to_text(p); })
      .def("to_latex", [](const GradedPoly& p) { return cli::to_latex(p); })
      .def(py::self == py::self)
      .def("__repr__", [](const GradedPoly& p) { return "Poly(" + cli::to_text(p) + ")"; });

  py::class_<TruncSeries> series(m, "Series");
  series.def_static("parse", &series_from_expr, py::arg("source"), py::arg("variables"), py::arg("order"),
                    py::arg("cutoff") = kDefaultCutoff)
      .def_property_readonly("order", &TruncSeries::order)
      .def_property_readonly("variables", &TruncSeries::variables)
      .def_property_readonly("poly", &TruncSeries::poly)
      .def("terms", [](const TruncSeries& s) { return terms_of(s.poly()); })
      .def("to_text", [](const TruncSeries& s) { return cli::to_text(s.poly()); })
      .def("to_latex", [](const TruncSeries& s) { return cli::to_latex(s.poly()); })
      .def("to_json", &json_of<TruncSeries>)
      .def("is_zero", &TruncSeries::is_zero)
      .def("__repr__", [](const TruncSeries& s) {
        return "Series(" + cli::to_text(s.poly()) + ", order=" + std::to_string(s.order()) + ")";
      });
  add_arithmetic(series);

  py::class_<FglContext>(m, "FglContext")
      .def(py::init([](int order, std::optional<std::size_t> cutoff) {
             return cutoff ? FglContext::build(order, *cutoff) : FglContext::build(order);
           }),
           py::arg("order") = kDefaultOrder, py::arg("cutoff") = py::none())
      .def_property_readonly("order", &FglContext::order)
      .def_property_readonly("cutoff", &FglContext::cutoff)
      .def_property_readonly("log", &FglContext::log)
      .def_property_readonly("exp", &FglContext::exp)
      .def_property_readonly("inverse", &FglContext::inverse)
      .def_property_readonly("sum", &FglContext::sum);

  m.def("k_series", &k_series, py::arg("ctx"), py::arg("k"));
  m.def("nary_sum", &nary_sum, py::arg("ctx"), py::arg("variables"));
  m.def("fgl_add", py::overload_cast<const FglContext&, const TruncSeries&, const TruncSeries&>(&fgl_add));
  m.def("series_revert", &series_revert);
  m.def("series_compose", &series_compose, py::arg("outer"), py::arg("inner"));

  py::class_<CharClassPoly> cc(m, "CharClassPoly");
  cc.def_static("parse", &char_class_from_expr, py::arg("source"), py::arg("m"), py::arg("n"),
                py::arg("mode") = "cobordism", py::arg("cutoff") = kDefaultCutoff)
      .def_property_readonly("m", &CharClassPoly::m)
      .def_property_readonly("n", &CharClassPoly::n)
      .def_property_readonly("mode", [](const CharClassPoly& p) { return std::string(to_string(p.mode())); })
      .def_property_readonly("poly", &CharClassPoly::poly)
      .def("augmented", &CharClassPoly::augmented)
      .def("homogeneous_part", &CharClassPoly::homogeneous_part)
      .def("with_mode", [](const CharClassPoly& p, const std::string& mode) { return p.with_mode(mode_of(mode)); })
      .def("is_zero", &CharClassPoly::is_zero)
      .def("terms", [](const CharClassPoly& p) { return terms_of(p.poly()); })
      .def("to_text", [](const CharClassPoly& p) { return cli::to_text(p.poly()); })
      .def("to_latex", [](const CharClassPoly& p) { return cli::to_latex(p.poly()); })
      .def("to_json", &json_of<CharClassPoly>)
      .def_static("from_json", [](const std::string& text) { return cli::char_class_from(cli::document_from_text(text)); })
      .def("__repr__", [](const CharClassPoly& p) {
        return "CharClassPoly(" + cli::to_text(p.poly()) + ", m=" + std::to_string(p.m()) + ", n=" +
               std::to_string(p.n()) + ", mode=" + to_string(p.mode()) + ")";
      });
  add_arithmetic(cc);

  py::class_<ProjSpaceClass> proj(m, "ProjSpaceClass");
  proj.def_property_readonly("dim", &ProjSpaceClass::dim)
      .def_property_readonly("series", &ProjSpaceClass::series)
      .def("is_zero", &ProjSpaceClass::is_zero)
      .def("terms", [](const ProjSpaceClass& c) { return terms_of(c.series().poly()); })
      .def("to_text", [](const ProjSpaceClass& c) { return cli::to_text(c.series().poly()); })
      .def("to_latex", [](const ProjSpaceClass& c) { return cli::to_latex(c.series().poly()); })
      .def("to_json", &json_of<ProjSpaceClass>)
      .def("__repr__", [](const ProjSpaceClass& c) {
        return "ProjSpaceClass(" + cli::to_text(c.series().poly()) + ", dim=" + std::to_string(c.dim()) + ")";
      });
  add_arithmetic(proj);

  py::class_<MapModel>(m, "MapModel").def(py::init<int, long>(), py::arg("n"), py::arg("d"));

  m.def("line_power_class", &line_power_class, py::arg("ctx"), py::arg("n"), py::arg("k"));
  m.def("tangent_chern", &tangent_chern, py::arg("ctx"), py::arg("n"));
  m.def("pullback_tangent_chern", &pullback_tangent_chern, py::arg("ctx"), py::arg("map"));
  m.def("epsilon_space", &epsilon_space);
  m.def("evaluate_char_poly", &evaluate_char_poly, py::arg("poly"), py::arg("map"), py::arg("ctx"));

  m.def("symmetric_reduce", &symmetric_reduce);
  m.def("det_c1", &det_c1, py::arg("ctx"), py::arg("rank"));
  m.def(
      "quotient_chern",
      [](int mm, int n, int order, std::size_t cutoff, const std::string& mode) {
        return quotient_chern(mm, n, order, cutoff, mode_of(mode));
      },
      py::arg("m"), py::arg("n"), py::arg("order"), py::arg("cutoff") = kDefaultCutoff,
      py::arg("mode") = "cohomology");
  m.def("chern_dold_line", &chern_dold_line);
  m.def("chern_dold_poly", &chern_dold_poly, py::arg("ctx"), py::arg("poly"));
  m.def("chern_dold_inverse", &chern_dold_inverse, py::arg("ctx"), py::arg("poly"));

  py::class_<SingularityId>(m, "SingularityId")
      .def_static("parse", &SingularityId::parse)
      .def_static("sigma", &SingularityId::sigma)
      .def_property_readonly("r", &SingularityId::r)
      .def_property_readonly("codimension", &SingularityId::codimension)
      .def_property_readonly("name", &SingularityId::name)
      .def(py::self == py::self)
      .def("__repr__", [](const SingularityId& s) { return "SingularityId(" + s.name() + ")"; });

  py::class_<Realization>(m, "Realization")
      .def(py::init<CharClassPoly, SingularityId, std::string>(), py::arg("poly"), py::arg("target"),
           py::arg("label") = "")
      .def_property_readonly("poly", &Realization::poly)
      .def_property_readonly("target", &Realization::target)
      .def_property_readonly("label", &Realization::label);

  m.def("thom_poly", &thom_poly_cohomological, py::arg("singularity"), py::arg("m"), py::arg("n"),
        py::arg("cutoff") = kDefaultCutoff);
  m.def("realization_trivial", &realization_trivial, py::arg("singularity"), py::arg("m"), py::arg("n"),
        py::arg("cutoff") = kDefaultCutoff);
  m.def("realization_p1", &realization_p1, py::arg("ctx"), py::arg("rank"), py::arg("order"));
  m.def("check_realization",
        py::overload_cast<const CharClassPoly&, const SingularityId&>(&check_realization));
  m.def("check_realization", py::overload_cast<const Realization&, const SingularityId&>(&check_realization));
  m.def(
      "combine_affine",
      [](const Realization& p, const Realization& q, const std::string& lambda, bool allow_rational) {
        return combine_affine(p, q, Rational::parse(lambda), allow_rational);
      },
      py::arg("p"), py::arg("q"), py::arg("lam"), py::arg("allow_rational") = false);
  m.def("combine_affine", py::overload_cast<const Realization&, const Realization&, long>(&combine_affine),
        py::arg("p"), py::arg("q"), py::arg("lam"));

  py::class_<LemmaReport>(m, "LemmaReport")
      .def_readonly("d", &LemmaReport::d)
      .def_readonly("class_resolution", &LemmaReport::class_resolution)
      .def_readonly("class_naive", &LemmaReport::class_naive)
      .def_readonly("difference", &LemmaReport::difference)
      .def_readonly("verdict", &LemmaReport::verdict);
  m.def("lemma_check", &lemma_check, py::arg("ctx"), py::arg("d"));

  py::class_<DivisibilityReport>(m, "DivisibilityReport")
      .def_readonly("numerator", &DivisibilityReport::numerator)
      .def_readonly("divisor", &DivisibilityReport::divisor)
      .def_readonly("quotient", &DivisibilityReport::quotient)
      .def_readonly("remainder", &DivisibilityReport::remainder)
      .def_readonly("integral", &DivisibilityReport::integral_flag)
      .def_property_readonly("divisible", &DivisibilityReport::divisible);
  m.def("divisibility_check", &divisibility_check, py::arg("numerator"), py::arg("divisor"));

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("difference", &TheoremReport::difference)
      .def_readonly("character", &TheoremReport::character)
      .def_readonly("division", &TheoremReport::division)
      .def_property_readonly("per_grade", [](const TheoremReport& r) {
        py::list out;
        for (const auto& g : r.per_grade) out.append(py::make_tuple(g.grade, g.divisible));
        return out;
      });
  m.def("theorem_harness",
        py::overload_cast<const Realization&, const Realization&, const SingularityId&, const SingularityId&,
                          const FglContext&>(&theorem_harness),
        py::arg("p"), py::arg("q"), py::arg("singularity"), py::arg("singular_locus"), py::arg("ctx"));
  m.def("theorem_harness",
        py::overload_cast<const Realization&, const Realization&, const SingularityId&, const CharClassPoly&,
                          const FglContext&>(&theorem_harness),
        py::arg("p"), py::arg("q"), py::arg("singularity"), py::arg("divisor"), py::arg("ctx"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the cobord command line in-process; returns (exit_code, stdout, stderr).");
}
