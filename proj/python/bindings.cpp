#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triuniv/achievability.hpp"
#include "triuniv/catalog.hpp"
#include "triuniv/escalation.hpp"
#include "triuniv/oracles.hpp"
#include "triuniv/reduction.hpp"
#include "triuniv/truant.hpp"

namespace py = pybind11;
using namespace triuniv;

namespace {

TriSum make_sum(const std::vector<std::int64_t>& coeffs) {
    return TriSum::canonicalize(coeffs);
}

std::vector<std::uint64_t> as_tuple(const TriSum& sum) {
    return {sum.coefficients().begin(), sum.coefficients().end()};
}

py::object report_value(const TruantReport& report) {
    if (report.found()) return py::int_(report.value());
    return py::none();
}

py::dict status_dict(const UniversalityStatus& status) {
    py::dict d;
    d["parity"] = std::string(to_string(status.parity));
    switch (status.kind) {
        case UniversalityStatus::Kind::CriterionCertified:
            d["kind"] = "criterion-certified";
            d["criterion"] = status.criterion;
            break;
        case UniversalityStatus::Kind::BoundVerified:
            d["kind"] = "bound-verified";
            d["bound"] = status.value;
            break;
        case UniversalityStatus::Kind::FailsAt:
            d["kind"] = "fails-at";
            d["target"] = status.value;
            break;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Representability of integers by weighted sums of triangular numbers";

    m.def("triangular", &triangular, py::arg("x"), "T(x) = (x^2+x)/2");

    m.def(
        "canonicalize",
        [](const std::vector<std::int64_t>& coeffs) { return as_tuple(make_sum(coeffs)); },
        py::arg("coefficients"), "Validate and sort a coefficient multiset");

    m.def(
        "parse", [](const std::string& text) { return as_tuple(TriSum::parse(text)); },
        py::arg("text"), "Parse the textual form '1,1,7,14'");

    m.def(
        "represents",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t n) {
            return represents(make_sum(coeffs), n);
        },
        py::arg("coefficients"), py::arg("n"));

    m.def(
        "achievable_values",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t bound) {
            return AchievabilityCache::global().get_or_compute(make_sum(coeffs), bound)
                ->values_up_to(bound);
        },
        py::arg("coefficients"), py::arg("bound"),
        "All represented targets up to the bound");

    m.def(
        "truant",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t bound) {
            return report_value(truant(make_sum(coeffs), bound));
        },
        py::arg("coefficients"), py::arg("bound") = 100'000,
        "Least unrepresented target, or None");

    m.def(
        "even_truant",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t bound) {
            return report_value(even_truant(make_sum(coeffs), bound));
        },
        py::arg("coefficients"), py::arg("bound") = 100'000,
        "Least unrepresented even target, or None");

    m.def(
        "classify",
        [](const std::vector<std::int64_t>& coeffs, const std::string& set_name,
           std::uint64_t bound) {
            const CriterionSet* set = catalog::find_criterion(set_name);
            if (!set) throw py::value_error("unknown criterion set '" + set_name + "'");
            return status_dict(classify(make_sum(coeffs), *set, bound));
        },
        py::arg("coefficients"), py::arg("criterion"), py::arg("bound") = 100'000);

    m.def(
        "representation_count",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t n) {
            return representation_count(make_sum(coeffs), n);
        },
        py::arg("coefficients"), py::arg("n"));

    m.def(
        "represents_even_via_odd_squares",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t target) {
            return represents_even_via_odd_squares(make_sum(coeffs), target);
        },
        py::arg("coefficients"), py::arg("target"));

    m.def(
        "shifted_target",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t n) {
            return shifted_target(make_sum(coeffs), n);
        },
        py::arg("coefficients"), py::arg("n"), "16n + sum of coefficients");

    m.def(
        "reduction_solver",
        [](const std::vector<std::int64_t>& coeffs, std::uint64_t target) {
            return reduction_solver(make_sum(coeffs), target);
        },
        py::arg("coefficients"), py::arg("target"));

    m.def(
        "escalate_json",
        [](std::size_t max_arity, std::uint64_t bound) {
            EscalationOptions options;
            options.max_arity = max_arity;
            options.bound = bound;
            return tree_to_json(escalate(options));
        },
        py::arg("max_arity") = 5, py::arg("bound") = 100'000,
        "Escalation tree as a JSON string");

    m.def(
        "table1",
        [](std::uint64_t bound) {
            const Table1Result result = table1(bound);
            py::dict by_arity;
            for (const auto& [arity, sums] : result.by_arity) {
                py::list rows;
                for (const TriSum& sum : sums) rows.append(as_tuple(sum));
                by_arity[py::int_(arity)] = rows;
            }
            py::dict d;
            d["by_arity"] = by_arity;
            d["matches_catalog"] = result.diff.empty();
            return d;
        },
        py::arg("bound") = 100'000, "Proper even universal sums grouped by arity");

    m.def("criterion_sets", [] {
        py::dict sets;
        for (const CriterionSet* set :
             {&catalog::e8_even(), &catalog::bk8(), &catalog::kane_odd()}) {
            py::dict d;
            d["targets"] = set->targets;
            d["parity"] = std::string(to_string(set->parity));
            d["provenance"] = set->provenance;
            sets[py::str(set->name)] = d;
        }
        return sets;
    });

    m.def("liouville_triples", [] {
        py::list out;
        for (const TriSum& sum : catalog::liouville_triples()) out.append(as_tuple(sum));
        return out;
    });

    m.def(
        "expected_even_truant",
        [](const std::vector<std::int64_t>& coeffs) -> py::object {
            auto v = catalog::expected_even_truant(make_sum(coeffs));
            if (!v) return py::none();
            return py::int_(*v);
        },
        py::arg("coefficients"), "Catalog even truant, when known");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
}
