#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobform/cli.hpp"
#include "frobform/corpus.hpp"
#include "frobform/expression.hpp"
#include "frobform/homothety.hpp"
#include "frobform/io.hpp"

namespace py = pybind11;
using namespace frobform;

namespace {

std::vector<std::string> strings(const Vector &v) {
    std::vector<std::string> out;
    for (const auto &x : v)
        out.push_back(x.to_string());
    return out;
}

std::vector<std::vector<std::string>> strings(const Matrix &m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(m(i, j).to_string());
    return out;
}

FieldSpec field(const std::string &text) { return FieldSpec::parse(text); }

Scalar scalar(const std::string &f, const std::string &text) { return Scalar::parse(field(f), text); }

py::dict report_dict(const ObstructionReport &r) {
    py::dict d;
    d["verdict"] = std::string(verdict_name(r.verdict));
    d["reason"] = r.reason ? py::cast(std::string(reason_name(*r.reason))) : py::none();
    py::list failures;
    for (auto f : r.failures)
        failures.append(std::string(reason_name(f)));
    d["failures"] = failures;
    py::list checks;
    for (const auto &c : r.checks)
        checks.append(py::make_tuple(c.name, std::string(outcome_name(c.outcome)), c.detail));
    d["checks"] = checks;
    d["u"] = r.u.to_string();
    if (r.witness) {
        d["alpha"] = r.witness->alpha.to_string();
        d["v"] = strings(r.witness->v);
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_frobform, m) {
    m.doc() = "Frobenius forms on finite-dimensional algebras over Q and GF(p)";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
    error.call_once_and_store_result([&]() { return py::exception<Error>(m, "FrobformError"); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error &e) {
            std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
            py::set_error(error.get_stored(), msg.c_str());
        }
    });

    py::class_<Algebra>(m, "Algebra")
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("field", [](const Algebra &a) { return a.field().to_string(); })
        .def_property_readonly("basis", &Algebra::basis_names)
        .def_property_readonly("commutative", &Algebra::is_commutative)
        .def("element", [](const Algebra &a, const std::string &s) { return parse_element(s, a); })
        .def("one", &Algebra::one)
        .def("is_local", [](const Algebra &a) { return try_local_structure(a).has_value(); })
        .def("radical_dim", [](const Algebra &a) { return radical(a).size(); });

    py::class_<Element>(m, "Element")
        .def_property_readonly("coords", [](const Element &x) { return strings(x.coords()); })
        .def("__str__", &Element::to_string)
        .def("__repr__", [](const Element &x) { return "Element(" + x.to_string() + ")"; })
        .def("__add__", [](const Element &a, const Element &b) { return a + b; })
        .def("__sub__", [](const Element &a, const Element &b) { return a - b; })
        .def("__mul__", [](const Element &a, const Element &b) { return a * b; })
        .def("__neg__", [](const Element &a) { return -a; })
        .def("__pow__", [](const Element &a, std::size_t n) { return a.pow(n); })
        .def("__eq__", [](const Element &a, const Element &b) { return a == b; })
        .def("is_central", [](const Element &x) { return is_central(x); })
        .def("inverse", [](const Element &x) { return inverse(x); });

    py::class_<Endo>(m, "Endo")
        .def("__call__", &Endo::operator())
        .def_property_readonly("matrix", [](const Endo &e) { return strings(e.matrix()); })
        .def("__mul__", [](const Endo &a, const Endo &b) { return a * b; })
        .def("__pow__", &Endo::pow)
        .def("is_identity", &Endo::is_identity)
        .def("order", [](const Endo &s, std::size_t bound) { return automorphism_order(s, bound); },
             py::arg("bound") = kDefaultOrderBound)
        .def("inner_order",
             [](const Endo &s, std::size_t bound) -> std::optional<std::pair<std::size_t, Element>> {
                 if (auto io = inner_order(s, bound))
                     return std::make_pair(io->n, io->a);
                 return std::nullopt;
             },
             py::arg("bound") = kDefaultOrderBound);

    py::class_<Form>(m, "Form")
        .def_property_readonly("algebra", &Form::algebra)
        .def_property_readonly("matrix", [](const Form &b) { return strings(b.matrix()); })
        .def_property_readonly("symmetric", &Form::symmetric)
        .def("__call__", [](const Form &b, const Element &r, const Element &s) { return b(r, s).to_string(); })
        .def("nakayama", [](const Form &b) { return nakayama(b); })
        .def("twist", [](const Form &b, const Element &u) { return twist(b, u); })
        .def("det_class", [](const Form &b) { return det_class(b).to_string(); });

    py::class_<CorpusEntry>(m, "CorpusEntry")
        .def_readonly("name", &CorpusEntry::name)
        .def_readonly("parameters", &CorpusEntry::parameters)
        .def_readonly("algebra", &CorpusEntry::algebra)
        .def("form", &CorpusEntry::form)
        .def("to_json", [](const CorpusEntry &e) {
            return write_algebra_file(e.algebra, {{"lambda", e.functional.covector()}});
        });

    m.def("extended_nn", [](const std::string &f) { return extended_nn(field(f)); }, py::arg("field") = "Q");
    m.def("nakayama_nesbitt",
          [](const std::string &f, const std::string &alpha) { return nakayama_nesbitt(field(f), scalar(f, alpha)); },
          py::arg("field") = "Q", py::arg("alpha") = "1");
    m.def("planar_quartic",
          [](const std::string &f, const std::string &a, const std::string &b, const std::string &c) {
              return planar_quartic(field(f), scalar(f, a), scalar(f, b), scalar(f, c));
          },
          py::arg("field") = "Q", py::arg("a") = "1", py::arg("b") = "1", py::arg("c") = "2");
    m.def("quartic_companion",
          [](const std::string &f, const std::string &delta) { return quartic_companion(field(f), scalar(f, delta)); },
          py::arg("field") = "Q", py::arg("delta") = "2");
    m.def("truncated_poly", [](const std::string &f, std::size_t n) { return truncated_poly(field(f), n); },
          py::arg("field") = "Q", py::arg("n") = 4);
    m.def("group_algebra",
          [](const std::string &f, const std::vector<std::vector<std::size_t>> &table,
             std::vector<std::string> names) { return group_algebra(field(f), table, std::move(names)); },
          py::arg("field"), py::arg("table"), py::arg("names") = std::vector<std::string>{});
    m.def("heisenberg27", [](const std::string &f) { return heisenberg27(field(f)); }, py::arg("field") = "GF(3)");

    m.def("load",
          [](const std::string &text, const std::string &name) {
              AlgebraFile f = parse_algebra_file(text);
              return form_from_functional(f.functional(name));
          },
          py::arg("text"), py::arg("functional") = "lambda", "Form of a named functional in a JSON algebra file.");

    m.def("norm",
          [](const Endo &sigma, std::size_t n, const Element &u) { return norm(NormContext(sigma, n), u); });
    m.def("straighten",
          [](const Form &b, std::size_t bound) {
              StraightenedForm s = straighten_form(b, bound);
              return py::make_tuple(s.form, s.n, s.a, s.u);
          },
          py::arg("form"), py::arg("bound") = kDefaultOrderBound);
    m.def("nakayama_similar", [](const Form &b, const Form &c) {
        return nakayama_similarity(b, c) == Similarity::Similar;
    });
    m.def("probe",
          [](const Form &b, const Form &c, std::size_t bound, std::uint64_t seed) {
              return report_dict(homothety_probe(b, c, bound, seed));
          },
          py::arg("b"), py::arg("b_prime"), py::arg("bound") = kDefaultOrderBound, py::arg("seed") = 0);
    m.def("conjecture",
          [](const Form &b, std::size_t trials, std::uint64_t seed, unsigned threads) {
              ConjectureSummary s;
              {
                  py::gil_scoped_release release;
                  s = conjecture_probe(b, trials, seed, kDefaultOrderBound, threads);
              }
              py::dict d;
              d["trials"] = s.trials;
              d["order"] = s.order;
              d["central_unobstructed"] = s.central_unobstructed;
              d["central_obstructed"] = s.central_obstructed;
              d["noncentral_obstructed"] = s.noncentral_obstructed;
              d["noncentral_inconclusive"] = s.noncentral_inconclusive;
              d["witnesses"] = s.witnesses;
              py::list cands;
              for (const auto &c : s.candidates)
                  cands.append(py::make_tuple(c.trial, c.u.to_string(), c.norm.to_string()));
              d["candidates"] = cands;
              return d;
          },
          py::arg("form"), py::arg("trials") = 200, py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("run",
          [](const std::vector<std::string> &args, const std::string &input) {
              std::istringstream in(input);
              std::ostringstream out, err;
              int code = run(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "", "Runs the command line tool; returns (code, stdout, stderr).");
}
