#include "gradalg/json_io.hpp"

namespace gradalg {

namespace {

const Json& need(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
    return *it;
}

long need_long(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<long>();
}

Int int_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw SchemaError(path, "expected an integer or a decimal string");
        }
    }
    throw SchemaError(path, "expected an integer or a decimal string");
}

std::vector<Int> int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    std::vector<Int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::int64_t> i64_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_number_integer())
            throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::vector<std::vector<std::int64_t>> i64_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(i64_vector(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

}  // namespace

Json abelian_to_json(const AbelianGroup& h) {
    Json factors = Json::array();
    for (const auto& f : h.invariant_factors()) factors.push_back(int_to_json(f));
    return Json{{"invariant_factors", factors}};
}

AbelianGroup abelian_from_json(const Json& j, const std::string& path) {
    auto factors = int_vector(need(j, "invariant_factors", path), path + ".invariant_factors");
    for (const auto& f : factors)
        if (f < 1) throw SchemaError(path + ".invariant_factors", "factors must be positive");
    return AbelianGroup(factors);
}

Json element_to_json(const AbelianElement& a) {
    Json coords = Json::array();
    for (const auto& c : a.coords) coords.push_back(int_to_json(c));
    return Json{{"coords", coords}};
}

AbelianElement element_from_json(const AbelianGroup& h, const Json& j, const std::string& path) {
    std::vector<Int> coords;
    if (j.is_array()) {
        coords = int_vector(j, path);
    } else {
        coords = int_vector(need(j, "coords", path), path + ".coords");
    }
    if (coords.size() != h.rank()) throw SchemaError(path, "wrong coordinate count");
    AbelianElement a{coords};
    if (!element_in_group(h, a)) throw SchemaError(path, "coordinates are not reduced");
    return a;
}

Json group_to_json(const FiniteGroup& g) {
    Json cayley = Json::array();
    for (const auto& row : g.cayley()) cayley.push_back(row);
    return Json{{"cayley", cayley}, {"names", g.names()}};
}

FiniteGroup group_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected a group object");
    if (j.contains("name")) {
        const auto& n = j["name"];
        if (!n.is_string()) throw SchemaError(path + ".name", "expected a string");
        auto g = named_group(n.get<std::string>());
        if (!g) throw SchemaError(path + ".name", "unknown group name");
        return *g;
    }
    const auto& cj = need(j, "cayley", path);
    if (!cj.is_array()) throw SchemaError(path + ".cayley", "expected an array of arrays");
    std::vector<std::vector<int>> cayley;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        auto row = i64_vector(cj[i], path + ".cayley[" + std::to_string(i) + "]");
        cayley.emplace_back(row.begin(), row.end());
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
        const auto& nj = j["names"];
        if (!nj.is_array()) throw SchemaError(path + ".names", "expected an array");
        for (const auto& n : nj) {
            if (!n.is_string()) throw SchemaError(path + ".names", "expected strings");
            names.push_back(n.get<std::string>());
        }
    }
    try {
        return FiniteGroup(cayley, names);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ".cayley", e.what());
    }
}

FiniteGroup group_from_spec(const std::string& spec, const std::string& path) {
    auto named = named_group(spec);
    if (named) return *named;
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded())
        throw SchemaError(path, "expected a builtin group name or inline group JSON");
    return group_from_json(j, path);
}

Json extension_to_json(const Extension& ext) {
    Json action = Json::array();
    for (const auto& f : ext.action) {
        Json m = Json::array();
        for (const auto& row : f.matrix) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(int_to_json(x));
            m.push_back(r);
        }
        action.push_back(Json{{"matrix", m}});
    }
    Json beta = Json::array();
    for (const auto& row : ext.beta) {
        Json r = Json::array();
        for (const auto& b : row) r.push_back(element_to_json(b)["coords"]);
        beta.push_back(r);
    }
    return Json{{"H", abelian_to_json(ext.H)},
                {"Q", group_to_json(ext.Q)},
                {"action", action},
                {"beta", beta}};
}

Extension extension_from_json(const Json& j, const std::string& path) {
    Extension ext;
    ext.H = abelian_from_json(need(j, "H", path), path + ".H");
    ext.Q = group_from_json(need(j, "Q", path), path + ".Q");
    const auto& aj = need(j, "action", path);
    if (!aj.is_array() || static_cast<int>(aj.size()) != ext.Q.order())
        throw SchemaError(path + ".action", "expected one automorphism per element of Q");
    for (std::size_t q = 0; q < aj.size(); ++q) {
        std::string apath = path + ".action[" + std::to_string(q) + "]";
        const Json& mj = aj[q].is_object() ? need(aj[q], "matrix", apath) : aj[q];
        auto rows = i64_matrix(mj, apath);
        IntMat m;
        for (auto& r : rows) m.emplace_back(r.begin(), r.end());
        if (m.size() != ext.H.rank())
            throw SchemaError(apath, "matrix must be rank x rank for H");
        for (const auto& r : m)
            if (r.size() != ext.H.rank())
                throw SchemaError(apath, "matrix must be rank x rank for H");
        ext.action.push_back(IntMatrixHom{ext.H, ext.H, m});
    }
    const auto& bj = need(j, "beta", path);
    if (!bj.is_array() || static_cast<int>(bj.size()) != ext.Q.order())
        throw SchemaError(path + ".beta", "expected a |Q| x |Q| table");
    for (std::size_t q1 = 0; q1 < bj.size(); ++q1) {
        if (!bj[q1].is_array() || static_cast<int>(bj[q1].size()) != ext.Q.order())
            throw SchemaError(path + ".beta", "expected a |Q| x |Q| table");
        std::vector<AbelianElement> row;
        for (std::size_t q2 = 0; q2 < bj[q1].size(); ++q2)
            row.push_back(element_from_json(
                ext.H, bj[q1][q2],
                path + ".beta[" + std::to_string(q1) + "][" + std::to_string(q2) + "]"));
        ext.beta.push_back(std::move(row));
    }
    return ext;
}

Json bicharacter_to_json(const Bicharacter& phi) {
    Json e = Json::array();
    for (const auto& row : phi.E) e.push_back(row);
    return Json{{"E", e}};
}

Bicharacter bicharacter_from_json(const AbelianGroup& h, const Json& j,
                                  const std::string& path) {
    auto e = i64_matrix(need(j, "E", path), path + ".E");
    if (e.size() != h.rank()) throw SchemaError(path + ".E", "matrix must be rank x rank");
    for (const auto& row : e)
        if (row.size() != h.rank()) throw SchemaError(path + ".E", "matrix must be rank x rank");
    return Bicharacter{h, e};
}

Json cocycle_to_json(const Cocycle2H& alpha) {
    Json t = Json::array();
    for (const auto& row : alpha.table) t.push_back(row);
    return Json{{"n", alpha.n}, {"table", t}};
}

Cocycle2H cocycle_from_json(const AbelianGroup& h, const Json& j, const std::string& path) {
    Cocycle2H alpha;
    alpha.H = h;
    alpha.n = need_long(need(j, "n", path), path + ".n");
    if (alpha.n < 1) throw SchemaError(path + ".n", "root order must be positive");
    alpha.table = i64_matrix(need(j, "table", path), path + ".table");
    std::size_t sz = h.element_count();
    if (alpha.table.size() != sz) throw SchemaError(path + ".table", "table must be |H| x |H|");
    for (const auto& row : alpha.table)
        if (row.size() != sz) throw SchemaError(path + ".table", "table must be |H| x |H|");
    return alpha;
}

Json cyclotomic_to_json(const CyclotomicNumber& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) {
        coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
    }
    return Json{{"n", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const Json& j, const std::string& path) {
    long n = need_long(need(j, "n", path), path + ".n");
    if (n < 1) throw SchemaError(path + ".n", "conductor must be positive");
    const auto& cj = need(j, "coeffs", path);
    if (!cj.is_array()) throw SchemaError(path + ".coeffs", "expected an array of pairs");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        std::string cpath = path + ".coeffs[" + std::to_string(i) + "]";
        const auto& pair = cj[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw SchemaError(cpath, "expected [numerator, denominator] decimal strings");
        try {
            Rational r(Int(pair[0].get<std::string>()), Int(pair[1].get<std::string>()));
            r.canonicalize();
            coeffs.push_back(r);
        } catch (const std::exception&) {
            throw SchemaError(cpath, "expected [numerator, denominator] decimal strings");
        }
    }
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(n)))
        throw SchemaError(path + ".coeffs", "coefficient count must equal phi(n)");
    return CyclotomicNumber(n, coeffs);
}

Json algebra_to_json(const GradedAlgebra& a) {
    Json structure = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.dim(); ++j) {
            Json terms = Json::array();
            for (const auto& [k, c] : a.basis_product(i, j))
                terms.push_back(Json::array({k, cyclotomic_to_json(c)}));
            row.push_back(terms);
        }
        structure.push_back(row);
    }
    Json identity = Json::array();
    for (const auto& [k, c] : a.identity_element())
        identity.push_back(Json::array({k, cyclotomic_to_json(c)}));
    return Json{{"conductor", a.conductor()},
                {"group", group_to_json(a.grading_group())},
                {"grading", a.grading()},
                {"structure", structure},
                {"identity", identity}};
}

Json bsz_to_json(const BSZPresentation& p) {
    Json alpha = Json::array();
    for (const auto& row : p.alpha) alpha.push_back(row);
    return Json{{"G", group_to_json(p.G)},
                {"H_elements", p.h_elements},
                {"alpha", Json{{"n", p.n}, {"table", alpha}}},
                {"tuple", p.tuple}};
}

BSZPresentation bsz_from_json(const Json& j, const std::string& path) {
    BSZPresentation p;
    p.G = group_from_json(need(j, "G", path), path + ".G");
    auto h = i64_vector(need(j, "H_elements", path), path + ".H_elements");
    p.h_elements.assign(h.begin(), h.end());
    const auto& aj = need(j, "alpha", path);
    p.n = need_long(need(aj, "n", path + ".alpha"), path + ".alpha.n");
    p.alpha = i64_matrix(need(aj, "table", path + ".alpha"), path + ".alpha.table");
    auto t = i64_vector(need(j, "tuple", path), path + ".tuple");
    p.tuple.assign(t.begin(), t.end());
    return p;
}

// ---------------------------------------------------------------------------
// Crossed presentations
// ---------------------------------------------------------------------------

namespace {

Json monomial_to_json(const MonomialCoefficient& m) {
    return Json{{"root", m.root}, {"exps", m.exps}};
}

MonomialCoefficient monomial_from_json(const Json& j, int var_count, long conductor,
                                       const std::string& path) {
    MonomialCoefficient m;
    m.root = need_long(need(j, "root", path), path + ".root");
    if (m.root < 0 || m.root >= conductor)
        throw SchemaError(path + ".root", "root exponent out of range");
    m.exps = i64_vector(need(j, "exps", path), path + ".exps");
    if (static_cast<int>(m.exps.size()) != var_count)
        throw SchemaError(path + ".exps", "wrong variable count");
    return m;
}

}  // namespace

Json presentation_to_json(const CrossedPresentation& p) {
    Json gamma = Json::array();
    for (const auto& row : p.gamma) {
        Json r = Json::array();
        for (const auto& mc : row) r.push_back(monomial_to_json(mc));
        gamma.push_back(r);
    }
    Json action = Json::array();
    for (const auto& f : p.action) {
        Json images = Json::array();
        for (const auto& img : f.image) images.push_back(monomial_to_json(img));
        action.push_back(images);
    }
    return Json{{"group", group_to_json(p.G)},
                {"H", abelian_to_json(p.H)},
                {"h_order", p.h_order},
                {"q_order", p.vars.q_order()},
                {"conductor", p.conductor},
                {"d", p.d},
                {"phi", bicharacter_to_json(p.phi)},
                {"variables", p.vars.names()},
                {"gamma", gamma},
                {"action", action}};
}

CrossedPresentation presentation_from_json(const Json& j, const std::string& path) {
    CrossedPresentation p;
    p.G = group_from_json(need(j, "group", path), path + ".group");
    p.H = abelian_from_json(need(j, "H", path), path + ".H");
    p.h_order = static_cast<int>(need_long(need(j, "h_order", path), path + ".h_order"));
    int q_order = static_cast<int>(need_long(need(j, "q_order", path), path + ".q_order"));
    p.conductor = need_long(need(j, "conductor", path), path + ".conductor");
    p.d = need_long(need(j, "d", path), path + ".d");
    if (p.conductor < 1) throw SchemaError(path + ".conductor", "conductor must be positive");
    if (p.d < 1 || p.conductor % p.d != 0)
        throw SchemaError(path + ".d", "d must be positive and divide the conductor");
    if (p.h_order < 1 || q_order < 1 || p.h_order * q_order != p.G.order())
        throw SchemaError(path + ".h_order", "|H| * |Q| must equal the group order");
    if (Int(p.h_order) != p.H.order())
        throw SchemaError(path + ".h_order", "h_order must match the kernel type");
    p.vars = VariableTable(q_order, p.d > 1);
    const auto& vj = need(j, "variables", path);
    std::vector<std::string> names;
    if (!vj.is_array()) throw SchemaError(path + ".variables", "expected an array");
    for (const auto& n : vj) {
        if (!n.is_string()) throw SchemaError(path + ".variables", "expected strings");
        names.push_back(n.get<std::string>());
    }
    if (names != p.vars.names())
        throw SchemaError(path + ".variables", "variable dictionary mismatch");
    p.phi = bicharacter_from_json(p.H, need(j, "phi", path), path + ".phi");
    if (!bicharacter_valid(p.phi)) throw SchemaError(path + ".phi", "invalid bicharacter");

    int order = p.G.order();
    int vcount = p.vars.count();
    const auto& gj = need(j, "gamma", path);
    if (!gj.is_array() || static_cast<int>(gj.size()) != order)
        throw SchemaError(path + ".gamma", "expected a |G| x |G| table");
    for (int g1 = 0; g1 < order; ++g1) {
        if (!gj[g1].is_array() || static_cast<int>(gj[g1].size()) != order)
            throw SchemaError(path + ".gamma", "expected a |G| x |G| table");
        std::vector<MonomialCoefficient> row;
        for (int g2 = 0; g2 < order; ++g2)
            row.push_back(monomial_from_json(
                gj[g1][g2], vcount, p.conductor,
                path + ".gamma[" + std::to_string(g1) + "][" + std::to_string(g2) + "]"));
        p.gamma.push_back(std::move(row));
    }
    const auto& actj = need(j, "action", path);
    if (!actj.is_array() || static_cast<int>(actj.size()) != order)
        throw SchemaError(path + ".action", "expected one substitution per group element");
    for (int g = 0; g < order; ++g) {
        const auto& fj = actj[g];
        if (!fj.is_array() || static_cast<int>(fj.size()) != vcount)
            throw SchemaError(path + ".action[" + std::to_string(g) + "]",
                              "expected one image per variable");
        MonomialAction f;
        for (int v = 0; v < vcount; ++v)
            f.image.push_back(monomial_from_json(fj[v], vcount, p.conductor,
                                                 path + ".action[" + std::to_string(g) + "][" +
                                                     std::to_string(v) + "]"));
        p.action.push_back(std::move(f));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

Json structure_report_to_json(const StructureReport& r) {
    return Json{{"H", abelian_to_json(r.H_type)},
                {"H_elements", r.H_elements},
                {"phi", bicharacter_to_json(r.phi)},
                {"phi_trivial", r.phi_trivial},
                {"S", abelian_to_json(r.S_type)},
                {"S_elements", r.S_elements},
                {"S_central", r.S_central},
                {"K_graded", r.K_graded},
                {"K_in_De", r.K_in_De},
                {"K_equals_K0", r.K_equals_K0},
                {"L_over_K0_degree", int_to_json(r.L_over_K0_degree)},
                {"D_degree", int_to_json(r.D_degree)},
                {"H_mod_S", abelian_to_json(r.H_mod_S_type)},
                {"d", r.d}};
}

Json case_rows_to_json(const std::vector<CaseRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json j = structure_report_to_json(row.report);
        j["merged_subgroups"] = row.merged_subgroups;
        j["merged_conjugate"] = row.merged_conjugate;
        out.push_back(std::move(j));
    }
    return Json{{"rows", out}};
}

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string phi_label(const StructureReport& r) {
    if (r.phi_trivial) return "trivial";
    std::string s = "nontrivial E=[";
    for (std::size_t i = 0; i < r.phi.E.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < r.phi.E[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(r.phi.E[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace

std::string case_rows_to_markdown(const std::vector<CaseRow>& rows) {
    std::ostringstream os;
    os << "| H | subgroups | phi | S | K graded | [L:K0] | deg D | K = K0 | K in D_e |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        bool trivial_h = r.H_type.is_trivial();
        os << "| " << describe(r.H_type) << " | " << row.merged_subgroups;
        if (row.merged_subgroups > 1)
            os << (row.merged_conjugate ? " (conjugate)" : " (non-conjugate)");
        os << " | " << (trivial_h ? "-" : phi_label(r));
        os << " | " << (trivial_h ? "-" : describe(r.S_type));
        os << " | " << (trivial_h ? "-" : yesno(r.K_graded));
        os << " | " << r.L_over_K0_degree.get_str();
        os << " | " << r.D_degree.get_str();
        os << " | " << (trivial_h ? "-" : yesno(r.K_equals_K0));
        os << " | " << (trivial_h ? "-" : yesno(r.K_in_De));
        os << " |\n";
    }
    return os.str();
}

}  // namespace gradalg
