#include "rootgrade/jobspec.hpp"

#include "rootgrade/coinduce.hpp"
#include "rootgrade/groupfact.hpp"
#include "rootgrade/realize.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

namespace rootgrade {

using json = nlohmann::ordered_json;

namespace {

std::string input_digest(const std::string &text) {
    // FNV-1a, 64 bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

const json &need(const json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end())
        throw SpecError(std::string("missing field: ") + key);
    return *it;
}

Rational jrat(const json &j, const char *what) {
    try {
        if (j.is_number_integer())
            return Rational(j.get<long>());
        if (j.is_string())
            return parse_rational(j.get<std::string>());
    } catch (const std::exception &e) {
        throw SpecError(std::string(what) + ": " + e.what());
    }
    throw SpecError(std::string(what) +
                    ": expected an integer or a \"p/q\" string");
}

Scalar jscalar(const json &j, const char *what) {
    try {
        if (j.is_number_integer())
            return Scalar(j.get<long>());
        if (j.is_string())
            return parse_scalar(j.get<std::string>());
    } catch (const std::exception &e) {
        throw SpecError(std::string(what) + ": " + e.what());
    }
    throw SpecError(std::string(what) +
                    ": expected an integer or a scalar string");
}

std::vector<Rational> jrat_list(const json &j, const char *what) {
    if (!j.is_array())
        throw SpecError(std::string(what) + ": expected an array");
    std::vector<Rational> out;
    for (const auto &e : j)
        out.push_back(jrat(e, what));
    return out;
}

Vec jvec(const json &j, size_t dim, const char *what) {
    if (!j.is_array() || j.size() != dim)
        throw SpecError(std::string(what) + ": expected an array of length " +
                        std::to_string(dim));
    Vec v(dim);
    for (size_t i = 0; i < dim; ++i)
        v[i] = jscalar(j[i], what);
    return v;
}

Mat jmat(const json &j, size_t rows, size_t cols, const char *what) {
    if (!j.is_array() || j.size() != rows)
        throw SpecError(std::string(what) + ": expected " +
                        std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        Vec row = jvec(j[r], cols, what);
        for (size_t c = 0; c < cols; ++c)
            m.at(r, c) = row[c];
    }
    return m;
}

CoordinateAlgebra named_algebra(const std::string &name, const json *parent) {
    if (name == "rationals")
        return CoordinateAlgebra::rationals();
    if (name == "dual_numbers")
        return CoordinateAlgebra::dual_numbers();
    if (name == "split_pair")
        return CoordinateAlgebra::split_pair();
    if (name == "truncated") {
        if (!parent)
            throw SpecError("coordinate_algebra: truncated needs a degree");
        long k = need(*parent, "degree").get<long>();
        if (k < 1 || k > 16)
            throw SpecError("coordinate_algebra.degree: out of range [1,16]");
        return CoordinateAlgebra::truncated(static_cast<size_t>(k));
    }
    throw SpecError("coordinate_algebra: unknown name '" + name + "'");
}

CoordinateAlgebra parse_algebra(const json &j) {
    if (j.is_string())
        return named_algebra(j.get<std::string>(), nullptr);
    if (!j.is_object())
        throw SpecError("coordinate_algebra: expected a name or an object");
    if (j.contains("name"))
        return named_algebra(need(j, "name").get<std::string>(), &j);
    CoordinateAlgebra a;
    long d = need(j, "dim").get<long>();
    if (d < 1 || d > 64)
        throw SpecError("coordinate_algebra.dim: out of range [1,64]");
    a.dim = static_cast<size_t>(d);
    const json &sc = need(j, "structure_constants");
    if (!sc.is_array() || sc.size() != a.dim)
        throw SpecError("coordinate_algebra.structure_constants: expected " +
                        std::to_string(a.dim) + " rows");
    a.mul.resize(a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        if (!sc[i].is_array() || sc[i].size() != a.dim)
            throw SpecError("coordinate_algebra.structure_constants: row " +
                            std::to_string(i) + " has wrong length");
        for (size_t k = 0; k < a.dim; ++k)
            a.mul[i].push_back(
                jvec(sc[i][k], a.dim, "coordinate_algebra.structure_constants"));
    }
    a.unit = jvec(need(j, "unit"), a.dim, "coordinate_algebra.unit");
    try {
        a.validate();
        return a.with_unit_first();
    } catch (const std::exception &e) {
        throw SpecError(std::string("coordinate_algebra: ") + e.what());
    }
}

RootSystem parse_root_system(const json &spec, const RootSystemConfig &cfg) {
    const json &rs = need(spec, "root_system");
    Family fam;
    try {
        fam = parse_family(need(rs, "family").get<std::string>());
    } catch (const std::exception &e) {
        throw SpecError(std::string("root_system.family: ") + e.what());
    }
    long rank = need(rs, "rank").get<long>();
    if (rank < 1 || static_cast<size_t>(rank) > cfg.max_rank)
        throw SpecError("root_system.rank: out of range [1," +
                        std::to_string(cfg.max_rank) + "]");
    try {
        return build_root_system(fam, static_cast<size_t>(rank), cfg);
    } catch (const std::exception &e) {
        throw SpecError(std::string("root_system: ") + e.what());
    }
}

GModule parse_gmodule(const json &j, const GradedLieAlgebra &g,
                      const char *what);

GradedLieAlgebra build_algebra(const json &spec, const RootSystemConfig &cfg) {
    const json &c = need(spec, "construction");
    std::string type =
        c.is_string() ? c.get<std::string>()
                      : need(c, "type").get<std::string>();
    if (type == "chevalley")
        return build_chevalley(parse_root_system(spec, cfg));
    if (type == "tensor") {
        auto A = parse_algebra(need(spec, "coordinate_algebra"));
        return build_tensor(A, build_chevalley(parse_root_system(spec, cfg)));
    }
    if (type == "gl_n") {
        long n = need(c, "n").get<long>();
        if (n < 2 || static_cast<size_t>(n) > cfg.max_rank + 1)
            throw SpecError("construction.n: out of range [2," +
                            std::to_string(cfg.max_rank + 1) + "]");
        auto A = spec.contains("coordinate_algebra")
                     ? parse_algebra(spec["coordinate_algebra"])
                     : CoordinateAlgebra::rationals();
        return build_gln(A, static_cast<size_t>(n), cfg);
    }
    if (type == "abelian_extension") {
        auto gd = build_chevalley(parse_root_system(spec, cfg));
        auto V = parse_gmodule(need(c, "module"), gd, "construction.module");
        return build_abelian_extension(gd, V);
    }
    throw SpecError("construction.type: unknown '" + type + "'");
}

GModule parse_gmodule(const json &j, const GradedLieAlgebra &g,
                      const char *what) {
    try {
        if (j.is_string()) {
            std::string name = j.get<std::string>();
            if (name == "standard")
                return standard_module(g);
            if (name == "adjoint")
                return adjoint_module(g);
            if (name == "trivial")
                return highest_weight_module(
                    g, Weight(g.delta.rank, Rational(0)));
            throw SpecError(std::string(what) + ": unknown module '" + name +
                            "'");
        }
        if (j.is_object() && j.contains("highest_weight"))
            return highest_weight_module(
                g, jrat_list(j["highest_weight"],
                             (std::string(what) + ".highest_weight").c_str()));
        if (j.is_object() && j.contains("direct_sum")) {
            const json &parts = j["direct_sum"];
            if (!parts.is_array() || parts.empty())
                throw SpecError(std::string(what) +
                                ".direct_sum: expected a nonempty array");
            GModule acc = parse_gmodule(parts[0], g, what);
            for (size_t i = 1; i < parts.size(); ++i)
                acc = direct_sum(acc, parse_gmodule(parts[i], g, what));
            return acc;
        }
    } catch (const SpecError &) {
        throw;
    } catch (const std::exception &e) {
        throw SpecError(std::string(what) + ": " + e.what());
    }
    throw SpecError(std::string(what) +
                    ": expected \"standard\", \"adjoint\", \"trivial\", "
                    "{\"highest_weight\": …} or {\"direct_sum\": […]}");
}

PModule parse_pmodule(const json &j, const GradedLieAlgebra &g,
                      const ParabolicSubalgebra &par) {
    if (!j.is_object())
        throw SpecError("module_E: expected an object");
    try {
        if (j.contains("trivial") && j["trivial"].get<bool>())
            return trivial_pmodule(g, par);
        if (j.contains("character"))
            return character_pmodule(
                g, par, jrat_list(j["character"], "module_E.character"));
        if (j.contains("restrict"))
            return restrict_to_p(
                g, par, parse_gmodule(j["restrict"], g, "module_E.restrict"));
        if (j.contains("direct_sum")) {
            const json &parts = j["direct_sum"];
            if (!parts.is_array() || parts.empty())
                throw SpecError(
                    "module_E.direct_sum: expected a nonempty array");
            PModule acc = parse_pmodule(parts[0], g, par);
            for (size_t i = 1; i < parts.size(); ++i)
                acc = direct_sum(acc, parse_pmodule(parts[i], g, par));
            return acc;
        }
        if (j.contains("dim")) {
            PModule E;
            long d = j["dim"].get<long>();
            if (d < 1 || d > 64)
                throw SpecError("module_E.dim: out of range [1,64]");
            E.dim = static_cast<size_t>(d);
            const json &ws = need(j, "weights");
            if (!ws.is_array() || ws.size() != E.dim)
                throw SpecError("module_E.weights: expected " +
                                std::to_string(E.dim) + " entries");
            for (const auto &w : ws)
                E.weights.push_back(jrat_list(w, "module_E.weights"));
            const json &act = need(j, "action");
            if (!act.is_object())
                throw SpecError("module_E.action: expected an object keyed by "
                                "basis index");
            for (auto it = act.begin(); it != act.end(); ++it) {
                size_t idx = std::stoul(it.key());
                if (idx >= g.dim)
                    throw SpecError("module_E.action: basis index " +
                                    it.key() + " out of range");
                E.action[idx] = jmat(it.value(), E.dim, E.dim,
                                     "module_E.action");
            }
            E.u_acts_trivially = true;
            for (size_t i : par.u_indices)
                if (!E.act_index(i).is_zero())
                    E.u_acts_trivially = false;
            E.validate(g, par);
            return E;
        }
    } catch (const SpecError &) {
        throw;
    } catch (const std::exception &e) {
        throw SpecError(std::string("module_E: ") + e.what());
    }
    throw SpecError("module_E: expected {\"trivial\": true}, {\"character\": "
                    "[…]}, {\"restrict\": …}, {\"direct_sum\": […]} or an "
                    "explicit {dim, weights, action}");
}

ParabolicSubalgebra parse_parabolic(const json &spec,
                                    const GradedLieAlgebra &g) {
    auto x = jrat_list(need(spec, "parabolic_x"), "parabolic_x");
    if (x.size() != g.delta.rank)
        throw SpecError("parabolic_x: expected " +
                        std::to_string(g.delta.rank) + " coordinates");
    try {
        return parabolic_subalgebra(g, x);
    } catch (const std::exception &e) {
        throw SpecError(std::string("parabolic_x: ") + e.what());
    }
}

json weight_set_json(const std::vector<Weight> &ws) {
    std::set<Weight> sorted(ws.begin(), ws.end());
    json out = json::array();
    for (const auto &w : sorted)
        out.push_back(weight_key(w));
    return out;
}

json character_json(const std::map<Weight, size_t> &chi) {
    json out = json::object();
    for (const auto &[w, mult] : chi)
        out[weight_key(w)] = mult;
    return out;
}

json rational_list_json(const std::vector<Rational> &xs) {
    json out = json::array();
    for (const auto &r : xs)
        out.push_back(Rational(r).get_str());
    return out;
}

// ---- nlu command ------------------------------------------------------

Vec parse_amat_entry(const json &j, const CoordinateAlgebra &A) {
    if (j.is_array())
        return jvec(j, A.dim, "nlu.matrix entry");
    Scalar c = jscalar(j, "nlu.matrix entry");
    return c * A.unit;
}

json amat_json(const AMatrix &m) {
    json rows = json::array();
    for (size_t i = 0; i < m.n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.n; ++j) {
            json entry = json::array();
            for (const auto &c : m.at(i, j))
                entry.push_back(c.str());
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    return rows;
}

json run_nlu(const json &spec, int &code) {
    const json &nl = need(spec, "nlu");
    auto A = nl.contains("coordinate_algebra")
                 ? parse_algebra(nl["coordinate_algebra"])
                 : CoordinateAlgebra::rationals();
    const json &mj = need(nl, "matrix");
    if (!mj.is_array() || mj.empty())
        throw SpecError("nlu.matrix: expected a nonempty square array");
    size_t n = mj.size();
    AMatrix m(n, A.dim);
    for (size_t i = 0; i < n; ++i) {
        if (!mj[i].is_array() || mj[i].size() != n)
            throw SpecError("nlu.matrix: row " + std::to_string(i) +
                            " has wrong length");
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = parse_amat_entry(mj[i][j], A);
    }
    BlockProfile bp;
    if (nl.contains("block_profile")) {
        for (const auto &e : nl["block_profile"]) {
            long s = e.get<long>();
            if (s < 1)
                throw SpecError("nlu.block_profile: parts must be positive");
            bp.push_back(static_cast<size_t>(s));
        }
    } else {
        bp.assign(n, 1);
    }
    size_t total = 0;
    for (size_t s : bp)
        total += s;
    if (total != n)
        throw SpecError("nlu.block_profile: parts must sum to the matrix "
                        "size");
    auto r = nlu_factor(A, m, bp);
    json res;
    res["in_big_cell"] = r.in_big_cell;
    if (!r.in_big_cell) {
        code = 3;
        return res;
    }
    res["n"] = amat_json(r.n);
    res["l"] = amat_json(r.l);
    res["u"] = amat_json(r.u);
    return res;
}

// ---- explain ----------------------------------------------------------

std::string join_keys(const std::vector<Weight> &ws) {
    std::set<Weight> sorted(ws.begin(), ws.end());
    std::string s = "{";
    bool first = true;
    for (const auto &w : sorted) {
        if (!first)
            s += ", ";
        s += "(" + weight_key(w) + ")";
        first = false;
    }
    return s + "}";
}

std::string run_explain(const json &spec, const JobOptions &opts) {
    std::ostringstream out;
    GradedLieAlgebra g = build_algebra(spec, opts.rs_config);
    auto rep = validate(g);
    const json &c = spec["construction"];
    std::string type =
        c.is_string() ? c.get<std::string>() : c["type"].get<std::string>();
    out << "algebra: " << type << ", dim " << g.dim << ", "
        << (rep.graded ? "graded" : "weakly graded") << "\n";
    out << "grading root system: " << family_name(g.delta.family)
        << g.delta.rank << ", |Delta| = " << g.delta.roots.size()
        << ", Weyl order "
        << build_weyl_group(g.delta, opts.rs_config).elements.size() << "\n";
    out << "R = " << join_keys(g.R) << "\n";
    if (spec.contains("parabolic_x")) {
        auto par = parse_parabolic(spec, g);
        out << "Sigma+ = " << join_keys(par.system.sigma_plus)
            << ", Sigma0 = " << join_keys(par.system.sigma_zero)
            << ", Sigma- = " << join_keys(par.system.sigma_minus) << "\n";
        out << "dim p = " << par.p_indices.size()
            << ", dim u = " << par.u_indices.size()
            << ", dim l = " << par.l_indices.size()
            << ", dim n = " << par.n_indices.size() << ", k_u = " << par.k_u
            << ", k_n = " << par.k_n << "\n";
        if (spec.contains("module_E")) {
            auto E = parse_pmodule(spec["module_E"], g, par);
            auto W = build_weyl_group(g.delta, opts.rs_config);
            unsigned long B = window_bound(par, E, W.elements.size());
            auto window = candidate_window(g, par, E, W, B);
            out << "dim E = " << E.dim << ", window bound B = " << B
                << ", candidate window size = " << window.size() << "\n";
        }
    }
    return out.str();
}

// ---- dispatch ---------------------------------------------------------

json dispatch(const std::string &cmd, const json &spec, const JobOptions &opts,
              int &code) {
    if (cmd == "nlu")
        return run_nlu(spec, code);

    GradedLieAlgebra g = build_algebra(spec, opts.rs_config);

    if (cmd == "validate") {
        auto rep = validate(g);
        json res;
        res["dim"] = g.dim;
        res["ok"] = rep.ok;
        res["classification"] = rep.graded ? "graded" : "weakly graded";
        res["failures"] = rep.failures;
        if (!rep.ok)
            code = 3;
        return res;
    }
    if (cmd == "roots") {
        json res;
        res["family"] = family_name(g.delta.family);
        res["rank"] = g.delta.rank;
        res["delta"] = weight_set_json(g.delta.roots);
        res["delta_positive"] = weight_set_json(g.delta.positive_roots);
        res["simple"] = weight_set_json(g.delta.simple_roots);
        res["R"] = weight_set_json(g.R);
        res["reduced"] = (std::set<Weight>(g.R.begin(), g.R.end()) ==
                          std::set<Weight>(g.delta.roots.begin(),
                                           g.delta.roots.end()));
        return res;
    }

    auto par = parse_parabolic(spec, g);

    if (cmd == "parabolic") {
        json res;
        res["sigma_plus"] = weight_set_json(par.system.sigma_plus);
        res["sigma_zero"] = weight_set_json(par.system.sigma_zero);
        res["sigma_minus"] = weight_set_json(par.system.sigma_minus);
        res["x_sigma"] = rational_list_json(par.system.x_sigma);
        res["dim_p"] = par.p_indices.size();
        res["dim_u"] = par.u_indices.size();
        res["dim_l"] = par.l_indices.size();
        res["dim_n"] = par.n_indices.size();
        res["k_u"] = par.k_u;
        res["k_n"] = par.k_n;
        return res;
    }

    SectionOptions so;
    so.rs_config = opts.rs_config;

    if (cmd == "realize") {
        auto V = parse_gmodule(need(spec, "module_V"), g, "module_V");
        auto rep = verify_realization(g, par, V, so);
        json res;
        res["ok"] = rep.ok();
        res["irreducible_basis_orbits"] = rep.irreducible_basis_orbits;
        res["irreducible_certified"] = rep.irreducible_certified;
        res["lowest_slice_annihilated"] = rep.eq51;
        res["u_image_is_higher_part"] = rep.eq53;
        res["injective"] = rep.injective;
        res["equivariant"] = rep.equivariant;
        res["image_is_minimal_submodule"] = rep.image_is_minimal;
        res["image_dim"] = rep.image_dim;
        res["section_dim"] = rep.section_dim;
        return res;
    }

    auto E = parse_pmodule(need(spec, "module_E"), g, par);
    auto S = g_delta_finite_part(g, par, E, so);

    if (cmd == "sections") {
        json res;
        res["dim"] = S.dim;
        res["e_dim"] = S.e_dim;
        res["character"] = character_json(S.character);
        return res;
    }
    if (cmd == "character") {
        json res;
        res["dim"] = S.dim;
        res["character"] = character_json(S.character);
        return res;
    }
    if (cmd == "minimal") {
        auto M = minimal_submodule(g, S);
        json res;
        res["dim"] = M.dim;
        res["ambient_dim"] = S.dim;
        res["character"] = character_json(M.character);
        res["invariants_certified"] = M.invariants_certified;
        return res;
    }
    if (cmd == "frobenius") {
        auto W = parse_gmodule(need(spec, "module_W"), g, "module_W");
        auto r = frobenius_dims(g, par, W, E, S);
        json res;
        res["dim_hom_g"] = r.d1;
        res["dim_hom_p"] = r.d2;
        res["certified"] = r.certified;
        return res;
    }
    throw SpecError("unknown command: " + cmd);
}

} // namespace

const std::vector<std::string> &job_commands() {
    static const std::vector<std::string> cmds{
        "validate", "roots",   "parabolic", "sections", "character",
        "minimal",  "realize", "frobenius", "nlu",      "explain"};
    return cmds;
}

JobResult run_job(const std::string &command, const std::string &spec_text,
                  const JobOptions &opts) {
    json out;
    out["command"] = command;
    out["input_digest"] = input_digest(spec_text);
    int code = 0;
    try {
        const auto &cmds = job_commands();
        bool known = false;
        for (const auto &c : cmds)
            known = known || c == command;
        if (!known)
            throw SpecError("unknown command: " + command);
        json spec;
        try {
            spec = json::parse(spec_text);
        } catch (const json::parse_error &e) {
            throw SpecError(std::string("spec file is not valid JSON: ") +
                            e.what());
        }
        if (!spec.is_object())
            throw SpecError("spec file: expected a JSON object");
        if (command == "explain")
            return {0, run_explain(spec, opts)};
        out["result"] = dispatch(command, spec, opts, code);
    } catch (const SpecError &e) {
        out["error"] = e.what();
        code = 2;
    } catch (const MathPreconditionError &e) {
        out["error"] = e.what();
        code = 3;
    } catch (const json::exception &e) {
        out["error"] = std::string("spec file: ") + e.what();
        code = 2;
    } catch (const std::exception &e) {
        out["error"] = e.what();
        code = 1;
    }
    std::string doc = opts.pretty ? out.dump(2) : out.dump();
    doc += "\n";
    return {code, doc};
}

} // namespace rootgrade
