#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gradalg/json_io.hpp"

namespace gradalg {

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("$", "cannot open input file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw SchemaError("$", "input is not valid JSON: " + path);
    return j;
}

Json parse_inline(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("$", "argument is not valid JSON");
    return j;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw SchemaError("$", "cannot open output file: " + out_path);
    f << text;
}

void emit_json(const Json& j, const std::string& out_path, std::ostream& out) {
    emit(j.dump(2) + "\n", out_path, out);
}

Json checks_to_json(const PresentationCheck& c) {
    Json j{{"cocycle_identity", c.cocycle_ok},
           {"commutators_realize_phi", c.commutator_ok},
           {"action_kernel_is_H", c.kernel_ok},
           {"homogeneous_invertible", c.invertible_ok},
           {"action_homomorphism", c.action_hom_ok},
           {"e_component_rank", c.e_rank_ok}};
    if (c.assoc_checked) j["basis_associativity"] = c.assoc_ok;
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gradalg: graded division algebra computations"};
    app.footer("Environment: GRADALG_THREADS caps internal parallelism (default 1).");
    app.require_subcommand(1);

    std::string in_path, out_path, group_spec, format = "json";
    long d_value = 1;

    auto* check_cmd = app.add_subcommand("check-cocycle", "validate extension cocycle data");
    check_cmd->add_option("--in", in_path, "extension JSON file")->required();
    check_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* schur_cmd = app.add_subcommand("schur", "Schur multiplier of a finite abelian group");
    schur_cmd->add_option("--group", group_spec, "abelian group JSON, e.g. {\"invariant_factors\":[2,2]}")
        ->required();
    schur_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* enum_cmd = app.add_subcommand("enumerate-phi", "invariant bicharacters of an extension");
    enum_cmd->add_option("--in", in_path, "extension JSON file")->required();
    enum_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* twisted_cmd = app.add_subcommand("twisted-algebra", "build and analyze F^alpha H");
    twisted_cmd->add_option("--in", in_path, "JSON file with H and alpha")->required();
    twisted_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* bsz_cmd = app.add_subcommand("bsz", "build and analyze a BSZ graded-simple algebra");
    bsz_cmd->add_option("--in", in_path, "BSZ presentation JSON file")->required();
    bsz_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* form_cmd = app.add_subcommand("form-exists", "division-algebra form existence");
    form_cmd->add_option("--in", in_path, "BSZ presentation JSON file")->required();
    form_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* case_cmd = app.add_subcommand("case-report", "per-subgroup grading structure table");
    case_cmd->add_option("--group", group_spec, "builtin name (D4, Q8, S3, Z_n, Z_axZ_b) or group JSON")
        ->required();
    case_cmd->add_option("--d", d_value, "degree of the e-component (default 1)");
    case_cmd->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    case_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* realize_cmd = app.add_subcommand("realize", "crossed-product presentation of a triple");
    realize_cmd->add_option("--in", in_path, "JSON file with extension, phi and d")->required();
    realize_cmd->add_option("--format", format, "json or markdown (relations)")
        ->check(CLI::IsMember({"json", "markdown"}));
    realize_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "verify a crossed-product presentation");
    verify_cmd->add_option("--in", in_path, "presentation JSON file")->required();
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check_cmd->parsed()) {
            auto ext = extension_from_json(load_json_file(in_path), "$");
            auto rep = validate_cocycle_beta(ext);
            emit_json(Json{{"valid", rep.ok}, {"message", rep.message}}, out_path, out);
            return 0;
        }
        if (schur_cmd->parsed()) {
            auto h = abelian_from_json(parse_inline(group_spec), "$.group");
            emit_json(Json{{"multiplier", abelian_to_json(schur_multiplier(h))}}, out_path, out);
            return 0;
        }
        if (enum_cmd->parsed()) {
            auto ext = extension_from_json(load_json_file(in_path), "$");
            auto rep = validate_cocycle_beta(ext);
            if (!rep.ok) {
                err << Json{{"error", "extension data invalid: " + rep.message}}.dump(2) << "\n";
                return 1;
            }
            auto list = enumerate_invariant_bicharacters(ext);
            Json arr = Json::array();
            for (const auto& phi : list) arr.push_back(bicharacter_to_json(phi));
            emit_json(Json{{"count", list.size()}, {"bicharacters", arr}}, out_path, out);
            return 0;
        }
        if (twisted_cmd->parsed()) {
            auto j = load_json_file(in_path);
            auto h = abelian_from_json(j.contains("H") ? j["H"] : Json(), "$.H");
            auto alpha = cocycle_from_json(h, j.contains("alpha") ? j["alpha"] : Json(), "$.alpha");
            auto a = twisted_group_algebra(h, alpha);  // rejects invalid cocycles
            auto cb = center_basis(a);
            bool ss = radical_is_zero(a);
            emit_json(Json{{"algebra", algebra_to_json(a)},
                           {"analysis", Json{{"center_dimension", cb.size()},
                                             {"semisimple", ss},
                                             {"central_simple", ss && cb.size() == 1}}}},
                      out_path, out);
            return 0;
        }
        if (bsz_cmd->parsed()) {
            auto p = bsz_from_json(load_json_file(in_path), "$");
            auto a = bsz_algebra(p);
            auto dims = homogeneous_dims(a);
            emit_json(Json{{"algebra", algebra_to_json(a)},
                           {"homogeneous_dims", dims.dims},
                           {"faithful", dims.faithful},
                           {"graded_simple", is_graded_simple(a)}},
                      out_path, out);
            return 0;
        }
        if (form_cmd->parsed()) {
            auto p = bsz_from_json(load_json_file(in_path), "$");
            auto f = form_exists(p);
            emit_json(Json{{"exists", f.exists},
                           {"conditions", Json{{"h_abelian", f.h_abelian},
                                               {"cosets_equal", f.cosets_equal},
                                               {"h_normal", f.h_normal},
                                               {"alpha_invariant", f.alpha_invariant}}}},
                      out_path, out);
            return 0;
        }
        if (case_cmd->parsed()) {
            auto g = group_from_spec(group_spec, "$.group");
            if (d_value < 1) {
                err << Json{{"error", "d must be a positive integer"}}.dump(2) << "\n";
                return 1;
            }
            auto rows = case_report(g, d_value);
            if (format == "markdown")
                emit(case_rows_to_markdown(rows), out_path, out);
            else
                emit_json(case_rows_to_json(rows), out_path, out);
            return 0;
        }
        if (realize_cmd->parsed()) {
            auto j = load_json_file(in_path);
            auto ext = extension_from_json(j.contains("extension") ? j["extension"] : Json(),
                                           "$.extension");
            auto phi = bicharacter_from_json(ext.H, j.contains("phi") ? j["phi"] : Json(),
                                             "$.phi");
            long d = 1;
            if (j.contains("d")) {
                if (!j["d"].is_number_integer()) throw SchemaError("$.d", "expected an integer");
                d = j["d"].get<long>();
            }
            auto v = validate_triple(ext, phi, d);
            if (!v.valid) {
                err << Json{{"valid", false},
                            {"beta_valid", v.beta_valid},
                            {"phi_valid", v.phi_valid},
                            {"phi_invariant", v.phi_invariant},
                            {"d_positive", v.d_positive},
                            {"message", v.message}}
                           .dump(2)
                    << "\n";
                return 1;
            }
            auto p = build_presentation(RealizableTriple{ext, phi, d});
            if (d > 1) p = hilbert_twist(p, d);
            if (format == "markdown") {
                std::ostringstream os;
                os << "# Crossed-product presentation\n\n";
                os << "group order " << p.G.order() << ", conductor " << p.conductor
                   << ", d = " << p.d << "\n\n";
                for (int g1 = 0; g1 < p.G.order(); ++g1)
                    for (int g2 = 0; g2 < p.G.order(); ++g2)
                        os << "- " << relation_string(p, g1, g2) << "\n";
                emit(os.str(), out_path, out);
            } else {
                emit_json(presentation_to_json(p), out_path, out);
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            auto p = presentation_from_json(load_json_file(in_path), "$");
            auto c = verify_presentation(p);
            emit_json(Json{{"ok", c.all_ok()}, {"checks", checks_to_json(c)}}, out_path, out);
            return c.all_ok() ? 0 : 1;
        }
    } catch (const SchemaError& e) {
        err << Json{{"error", e.what()}, {"path", e.field_path}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace gradalg
