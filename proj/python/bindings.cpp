#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "pbw/algebra_io.hpp"
#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"
#include "pbw/parse.hpp"
#include "pbw/rewrite.hpp"
#include "pbw/symmetrize.hpp"

namespace py = pybind11;
using namespace pbw;

namespace {

using Names = std::shared_ptr<const std::vector<std::string>>;

struct PyPoly {
    FreePoly poly;
    Names names;

    std::string str() const { return render(poly, names ? names.get() : nullptr); }
};

PyPoly combine(const PyPoly& a, FreePoly value) {
    return {std::move(value), a.names};
}

struct PyAlgebra {
    BracketTable table;
    ValidationResult validation;
    Names names;

    explicit PyAlgebra(BracketTable t)
        : table(std::move(t)), validation(validate(table)),
          names(std::make_shared<const std::vector<std::string>>(table.display_names())) {}

    std::string validation_report() const {
        std::ostringstream out;
        if (validation.ok()) {
            out << "valid Lie algebra: " << table.n << " generator(s), "
                << validation.lie->certificate.size() << " Jacobi triple(s) verified\n";
        } else {
            out << "not a Lie algebra: " << validation.violations.size()
                << " failing Jacobi triple(s)\n";
            for (const JacobiViolation& v : validation.violations)
                out << "  (" << v.i << "," << v.j << "," << v.k << "): residue "
                    << render(v.residue, names.get()) << "\n";
        }
        return out.str();
    }

    const ValidatedLie& require_lie() const {
        if (!validation.ok())
            throw SemanticError("the table is not a Lie algebra:\n" + validation_report());
        return *validation.lie;
    }
};

FreePoly poly_arg(const PyAlgebra& algebra, const py::object& value) {
    if (py::isinstance<py::str>(value))
        return parse_expression(value.cast<std::string>(), algebra.table).poly;
    return value.cast<PyPoly>().poly;
}

ReduceOptions options_for(bool force, bool want_trace) {
    ReduceOptions options;
    options.force = force;
    options.want_trace = want_trace;
    return options;
}

NormalForm normal_form_impl(const PyAlgebra& algebra, const py::object& value,
                            const std::string& basis, bool force, bool want_trace) {
    const FreePoly p = poly_arg(algebra, value);
    if (basis == "ordered")
        return pbw_normal_form(p, algebra.table, options_for(force, want_trace));
    if (basis == "regular")
        return reduce_to_regular(p, algebra.table, options_for(force, want_trace));
    throw DomainError("basis must be 'ordered' or 'regular'");
}

std::vector<std::vector<std::string>> matrix_rows(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r].push_back(to_string(m.at(r, c)));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact normal forms in universal enveloping algebras";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "SemanticError", PyExc_RuntimeError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<PyPoly>(m, "Poly")
        .def("__str__", &PyPoly::str)
        .def("__repr__", [](const PyPoly& p) { return "Poly(" + p.str() + ")"; })
        .def("__add__", [](const PyPoly& a, const PyPoly& b) { return combine(a, a.poly + b.poly); })
        .def("__sub__", [](const PyPoly& a, const PyPoly& b) { return combine(a, a.poly - b.poly); })
        .def("__mul__", [](const PyPoly& a, const PyPoly& b) { return combine(a, a.poly * b.poly); })
        .def("__neg__", [](const PyPoly& a) { return combine(a, -a.poly); })
        .def("__pow__", [](const PyPoly& a, int e) { return combine(a, pow(a.poly, e)); })
        .def("__eq__", [](const PyPoly& a, const PyPoly& b) { return a.poly == b.poly; })
        .def_property_readonly("degree",
                               [](const PyPoly& p) -> py::object {
                                   const auto d = p.poly.degree();
                                   return d ? py::cast(*d) : py::none();
                               })
        .def_property_readonly("is_zero", [](const PyPoly& p) { return p.poly.is_zero(); })
        .def_property_readonly("is_regular", [](const PyPoly& p) { return is_regular(p.poly); })
        .def("power_decomposition", [](const PyPoly& p) {
            const PowerDecomposition pd = power_decomposition(p.poly);
            std::vector<std::tuple<std::string, std::vector<std::string>, int>> out;
            for (const PowerSummand& s : pd.summands) {
                std::vector<std::string> form;
                for (const Rational& c : s.form.coefficients)
                    form.push_back(to_string(c));
                out.emplace_back(to_string(s.coeff), std::move(form), s.exponent);
            }
            return out;
        });

    py::class_<PyAlgebra>(m, "Algebra")
        .def_static("from_text",
                    [](const std::string& text) { return PyAlgebra(parse_algebra(text)); })
        .def_static("from_file",
                    [](const std::string& path) { return PyAlgebra(load_algebra_file(path)); })
        .def_static("builtin",
                    [](const std::string& family, int n) {
                        return PyAlgebra(builtin(parse_family(family), n));
                    })
        .def_property_readonly("n", [](const PyAlgebra& a) { return a.table.n; })
        .def_property_readonly("names", [](const PyAlgebra& a) { return *a.names; })
        .def_property_readonly("is_lie", [](const PyAlgebra& a) { return a.validation.ok(); })
        .def("validation_report", &PyAlgebra::validation_report)
        .def("text", [](const PyAlgebra& a) { return algebra_text(a.table); })
        .def("parse",
             [](const PyAlgebra& a, const std::string& text) {
                 return PyPoly{parse_expression(text, a.table).poly, a.names};
             })
        .def("generator",
             [](const PyAlgebra& a, int i) {
                 return PyPoly{FreePoly::generator(a.table.n, i), a.names};
             })
        .def("bracket",
             [](const PyAlgebra& a, const py::object& p, const py::object& q) {
                 return PyPoly{bracket(a.table, poly_arg(a, p), poly_arg(a, q)), a.names};
             })
        .def("jacobi_residue",
             [](const PyAlgebra& a, int i, int j, int k) {
                 return PyPoly{jacobi_residue(a.table, i, j, k), a.names};
             })
        .def(
            "normal_form",
            [](const PyAlgebra& a, const py::object& p, const std::string& basis, bool force) {
                return PyPoly{normal_form_impl(a, p, basis, force, false).value, a.names};
            },
            py::arg("poly"), py::arg("basis") = "ordered", py::arg("force") = false)
        .def(
            "normal_form_with_trace",
            [](const PyAlgebra& a, const py::object& p, const std::string& basis, bool force) {
                const NormalForm nf = normal_form_impl(a, p, basis, force, true);
                return py::make_tuple(PyPoly{nf.value, a.names}, render(nf.trace, a.names.get()),
                                      nf.canonical);
            },
            py::arg("poly"), py::arg("basis") = "ordered", py::arg("force") = false)
        .def("equivalent",
             [](const PyAlgebra& a, const py::object& p, const py::object& q) {
                 return equivalent(poly_arg(a, p), poly_arg(a, q), a.table);
             })
        .def("witness",
             [](const PyAlgebra& a, int i, int j, int k) {
                 const Witness w = nonuniqueness_witness(a.table, i, j, k);
                 return py::make_tuple(PyPoly{w.value, a.names}, render(w.trace, a.names.get()));
             })
        .def(
            "quotient_dimension",
            [](const PyAlgebra& a, int d) { return quotient_dimension(a.table, d); },
            py::arg("max_degree"))
        .def(
            "pbw_report",
            [](const PyAlgebra& a, int d) {
                const PbwIndependenceReport report = check_pbw_independence(a.require_lie(), d);
                return py::make_tuple(report.pass(), report.text());
            },
            py::arg("max_degree"))
        .def(
            "basis_change",
            [](const PyAlgebra& a, int d) {
                const BasisChange bc = basis_change(a.require_lie(), d);
                std::vector<std::string> labels;
                for (const MultiIndex& index : bc.basis)
                    labels.push_back(render(sorted_word(index), a.names.get()));
                return py::make_tuple(labels, matrix_rows(bc.sym_to_ordered),
                                      matrix_rows(bc.ordered_to_sym));
            },
            py::arg("max_degree"));

    m.def("symmetrize", [](const std::string& expr) {
        const ParsedExpression parsed = parse_expression(expr);
        return render(phi(commutative_image(parsed.poly)));
    });
    m.def(
        "parse",
        [](const std::string& expr, int n) {
            return PyPoly{parse_expression(expr, n).poly, nullptr};
        },
        py::arg("expr"), py::arg("n"));
}
