#include "sqlab/binomial.hpp"
#include "sqlab/cli.hpp"
#include "sqlab/dyadic.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/ideal.hpp"
#include "sqlab/report.hpp"
#include "sqlab/secondary.hpp"
#include "sqlab/steenrod.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace py = pybind11;

namespace {

sqlab::Limits limits_for(int degree_cap)
{
    sqlab::Limits limits;
    limits.degree_cap = degree_cap;
    return limits;
}

sqlab::Factorization relation_from(const std::string& relation, const std::string& expr, int sphere_dim,
                                   const sqlab::Limits& limits)
{
    if (!relation.empty() && !expr.empty())
        throw std::invalid_argument("give either relation or expr, not both");
    if (!expr.empty())
        return sqlab::factor_by_right_square(expr, "custom", limits);
    const sqlab::CatalogRelation* r =
        relation.empty() ? sqlab::relation_for_sphere(sphere_dim) : sqlab::find_relation(relation);
    if (r == nullptr)
        throw std::invalid_argument(relation.empty() ? "no catalogued relation for S^" + std::to_string(sphere_dim)
                                                     : "unknown relation '" + relation + "'");
    return sqlab::to_factorization(*r, limits);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Mod-2 Steenrod algebra workbench";
    m.attr("__version__") = SQLAB_VERSION;
    m.attr("DEFAULT_DEGREE_CAP") = sqlab::default_degree_cap;

    py::register_exception<sqlab::DegreeCapExceeded>(m, "DegreeCapError", PyExc_RuntimeError);

    m.def(
        "adem",
        [](const std::string& expr, int degree_cap) {
            return sqlab::to_string(sqlab::adem_normalize(sqlab::parse_element(expr), limits_for(degree_cap)));
        },
        py::arg("expr"), py::arg("degree_cap") = sqlab::default_degree_cap,
        "Admissible normal form of an element, e.g. adem('Sq2 Sq2') == 'Sq3 Sq1'.");

    m.def(
        "admissible_basis",
        [](int d, int degree_cap) {
            std::vector<std::string> out;
            for (const auto& mono : sqlab::admissible_basis(d, limits_for(degree_cap)))
                out.push_back(sqlab::to_string(mono));
            return out;
        },
        py::arg("degree"), py::arg("degree_cap") = sqlab::default_degree_cap);

    m.def("binom_mod2", &sqlab::choose_mod2, py::arg("n"), py::arg("k"), "Parity of C(n, k).");

    m.def(
        "ideal_member",
        [](const std::string& expr, int k, int degree_cap) {
            return sqlab::ideal_member(sqlab::parse_element(expr), k, limits_for(degree_cap));
        },
        py::arg("expr"), py::arg("k"), py::arg("degree_cap") = sqlab::default_degree_cap);

    m.def(
        "min_ideal_k", [](int d, int degree_cap) { return sqlab::min_ideal_k(d, limits_for(degree_cap)); },
        py::arg("degree"), py::arg("degree_cap") = sqlab::default_degree_cap);

    m.def("ffunc", [](std::uint64_t n) { return sqlab::johnson_merzel_f(n); }, py::arg("n"));
    m.def("loop_bound", &sqlab::loop_bound, py::arg("sphere_dim"));

    m.def(
        "_bound_json",
        [](int sphere_dim, const std::string& relation, const std::string& expr, int degree_cap) {
            const auto limits = limits_for(degree_cap);
            auto f = relation_from(relation, expr, sphere_dim, limits);
            if (sphere_dim <= 0 || sphere_dim % 2 == 0)
                throw std::invalid_argument("sphere dimension must be odd and positive");
            return sqlab::to_json(sqlab::lower_bound((sphere_dim - 1) / 2, f, 1, limits)).dump();
        },
        py::arg("sphere_dim"), py::arg("relation") = "", py::arg("expr") = "",
        py::arg("degree_cap") = sqlab::default_degree_cap);

    m.def(
        "_theorem1_json",
        [](int t, int degree_cap) { return sqlab::to_json(sqlab::theorem_one_bounds(t, 1, limits_for(degree_cap))).dump(); },
        py::arg("t"), py::arg("degree_cap") = sqlab::default_degree_cap);

    m.def(
        "_distinguish_json", [](int n, int q) { return sqlab::to_json(sqlab::distinguish(n, q)).dump(); },
        py::arg("n"), py::arg("q"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = sqlab::cli::run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one sqlab command in-process; returns (exit_code, stdout, stderr).");
}
