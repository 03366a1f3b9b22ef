#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootgrade/coinduce.hpp"
#include "rootgrade/jobspec.hpp"
#include "rootgrade/realize.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace rootgrade;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string> &xs) {
    std::vector<Rational> out;
    for (const auto &s : xs)
        out.push_back(parse_rational(s));
    return out;
}

std::vector<std::string> from_weight(const Weight &w) {
    std::vector<std::string> out;
    for (const auto &r : w)
        out.push_back(Rational(r).get_str());
    return out;
}

std::map<std::string, size_t>
character_dict(const std::map<Weight, size_t> &chi) {
    std::map<std::string, size_t> out;
    for (const auto &[w, m] : chi)
        out[weight_key(w)] = m;
    return out;
}

CoordinateAlgebra algebra_by_name(const std::string &name) {
    if (name == "rationals")
        return CoordinateAlgebra::rationals();
    if (name == "dual_numbers")
        return CoordinateAlgebra::dual_numbers();
    if (name == "split_pair")
        return CoordinateAlgebra::split_pair();
    if (name.rfind("truncated:", 0) == 0)
        return CoordinateAlgebra::truncated(std::stoul(name.substr(10)));
    throw std::invalid_argument("unknown coordinate algebra: " + name);
}

GModule module_by_name(const GradedLieAlgebra &g, const std::string &name) {
    if (name == "standard")
        return standard_module(g);
    if (name == "adjoint")
        return adjoint_module(g);
    if (name == "trivial")
        return highest_weight_module(g, Weight(g.delta.rank, Rational(0)));
    throw std::invalid_argument("unknown module: " + name);
}

} // namespace

PYBIND11_MODULE(_rootgrade, m) {
    m.doc() = "Exact weakly root-graded Lie algebras, coinduced section "
              "modules, and big-cell factorizations.";

    py::class_<GradedLieAlgebra>(m, "GradedLieAlgebra")
        .def_readonly("dim", &GradedLieAlgebra::dim)
        .def_readonly("labels", &GradedLieAlgebra::labels)
        .def_property_readonly(
            "rank", [](const GradedLieAlgebra &g) { return g.delta.rank; })
        .def_property_readonly("family",
                               [](const GradedLieAlgebra &g) {
                                   return family_name(g.delta.family);
                               })
        .def_property_readonly("R",
                               [](const GradedLieAlgebra &g) {
                                   std::vector<std::string> out;
                                   for (const auto &w : g.R)
                                       out.push_back(weight_key(w));
                                   return out;
                               })
        .def("__repr__", [](const GradedLieAlgebra &g) {
            return "<GradedLieAlgebra dim=" + std::to_string(g.dim) + " over " +
                   family_name(g.delta.family) + std::to_string(g.delta.rank) +
                   ">";
        });

    py::class_<ParabolicSubalgebra>(m, "ParabolicSubalgebra")
        .def_property_readonly(
            "dim_p",
            [](const ParabolicSubalgebra &p) { return p.p_indices.size(); })
        .def_property_readonly(
            "dim_u",
            [](const ParabolicSubalgebra &p) { return p.u_indices.size(); })
        .def_property_readonly(
            "dim_l",
            [](const ParabolicSubalgebra &p) { return p.l_indices.size(); })
        .def_property_readonly(
            "dim_n",
            [](const ParabolicSubalgebra &p) { return p.n_indices.size(); })
        .def_readonly("k_u", &ParabolicSubalgebra::k_u)
        .def_readonly("k_n", &ParabolicSubalgebra::k_n);

    py::class_<GModule>(m, "GModule")
        .def_readonly("dim", &GModule::dim)
        .def_property_readonly("weights", [](const GModule &v) {
            std::vector<std::string> out;
            for (const auto &w : v.weights)
                out.push_back(weight_key(w));
            return out;
        });

    py::class_<PModule>(m, "PModule")
        .def_readonly("dim", &PModule::dim)
        .def_readonly("u_acts_trivially", &PModule::u_acts_trivially);

    py::class_<SectionModule>(m, "SectionModule")
        .def_readonly("dim", &SectionModule::dim)
        .def_readonly("e_dim", &SectionModule::e_dim)
        .def_readonly("invariants_certified",
                      &SectionModule::invariants_certified)
        .def_property_readonly("character",
                               [](const SectionModule &s) {
                                   return character_dict(s.character);
                               })
        .def("__repr__", [](const SectionModule &s) {
            return "<SectionModule dim=" + std::to_string(s.dim) + ">";
        });

    m.def(
        "chevalley",
        [](const std::string &family, size_t rank) {
            return build_chevalley(build_root_system(parse_family(family),
                                                     rank));
        },
        py::arg("family"), py::arg("rank"));
    m.def(
        "tensor",
        [](const std::string &algebra, const std::string &family,
           size_t rank) {
            return build_tensor(
                algebra_by_name(algebra),
                build_chevalley(build_root_system(parse_family(family),
                                                  rank)));
        },
        py::arg("algebra"), py::arg("family"), py::arg("rank"));
    m.def(
        "gl",
        [](const std::string &algebra, size_t n) {
            return build_gln(algebra_by_name(algebra), n);
        },
        py::arg("algebra"), py::arg("n"));
    m.def(
        "abelian_extension",
        [](const std::string &family, size_t rank,
           const std::string &module) {
            auto gd =
                build_chevalley(build_root_system(parse_family(family), rank));
            return build_abelian_extension(gd, module_by_name(gd, module));
        },
        py::arg("family"), py::arg("rank"), py::arg("module") = "standard");

    m.def(
        "parabolic",
        [](const GradedLieAlgebra &g, const std::vector<std::string> &x) {
            return parabolic_subalgebra(g, to_rationals(x));
        },
        py::arg("g"), py::arg("x"));

    m.def("module", &module_by_name, py::arg("g"), py::arg("name"));
    m.def(
        "highest_weight_module",
        [](const GradedLieAlgebra &g, const std::vector<std::string> &lam) {
            return highest_weight_module(g, to_rationals(lam));
        },
        py::arg("g"), py::arg("highest_weight"));

    m.def(
        "character_module",
        [](const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const std::vector<std::string> &lam) {
            return character_pmodule(g, par, to_rationals(lam));
        },
        py::arg("g"), py::arg("parabolic"), py::arg("lam"));
    m.def("trivial_module", &trivial_pmodule, py::arg("g"),
          py::arg("parabolic"));
    m.def("restrict_to_p", &restrict_to_p, py::arg("g"), py::arg("parabolic"),
          py::arg("module"));

    m.def(
        "sections",
        [](const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const PModule &E) { return g_delta_finite_part(g, par, E); },
        py::arg("g"), py::arg("parabolic"), py::arg("E"));
    m.def("minimal_submodule", &minimal_submodule, py::arg("g"),
          py::arg("sections"));

    m.def(
        "validate",
        [](const GradedLieAlgebra &g) {
            auto rep = validate(g);
            py::dict out;
            out["ok"] = rep.ok;
            out["classification"] =
                rep.graded ? std::string("graded") : std::string("weakly graded");
            out["failures"] = rep.failures;
            return out;
        },
        py::arg("g"));

    m.def(
        "realize",
        [](const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const GModule &V) {
            auto rep = verify_realization(g, par, V);
            py::dict out;
            out["ok"] = rep.ok();
            out["irreducible_basis_orbits"] = rep.irreducible_basis_orbits;
            out["irreducible_certified"] = rep.irreducible_certified;
            out["injective"] = rep.injective;
            out["equivariant"] = rep.equivariant;
            out["image_is_minimal_submodule"] = rep.image_is_minimal;
            out["image_dim"] = rep.image_dim;
            out["section_dim"] = rep.section_dim;
            return out;
        },
        py::arg("g"), py::arg("parabolic"), py::arg("V"));

    m.def(
        "frobenius",
        [](const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const GModule &W, const PModule &E) {
            auto S = g_delta_finite_part(g, par, E);
            auto r = frobenius_dims(g, par, W, E, S);
            return py::make_tuple(r.d1, r.d2, r.certified);
        },
        py::arg("g"), py::arg("parabolic"), py::arg("W"), py::arg("E"));

    m.def(
        "run_job",
        [](const std::string &command, const std::string &spec_text,
           bool pretty, size_t max_rank, size_t max_weyl_order) {
            JobOptions opts;
            opts.pretty = pretty;
            opts.rs_config.max_rank = max_rank;
            opts.rs_config.max_weyl_order = max_weyl_order;
            auto r = run_job(command, spec_text, opts);
            return py::make_tuple(r.exit_code, r.document);
        },
        py::arg("command"), py::arg("spec_text"), py::arg("pretty") = false,
        py::arg("max_rank") = 4, py::arg("max_weyl_order") = 1152);
}
