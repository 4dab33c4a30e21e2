// Command-line front end: check algebra files, classify graph files,
// export catalog entries, and run the full verification suite.

#include <CLI11.hpp>

#include <iostream>

#include "dexsym/catalog.hpp"
#include "dexsym/verify.hpp"

namespace {

using namespace dexsym;

FieldSpec parse_field(const std::string& s) {
    if (s == "rational" || s == "q" || s == "Q") return FieldSpec::rational();
    if (s.rfind("gf:", 0) == 0) return FieldSpec::prime(std::stoul(s.substr(3)));
    throw error("unknown field \"" + s + "\" (use rational or gf:<p>)");
}

catalog::ParamMap parse_params(const std::vector<std::string>& kvs) {
    catalog::ParamMap pm;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw error("parameter must be name=value: " + kv);
        mpq_class v;
        if (v.set_str(kv.substr(eq + 1), 10) != 0) {
            throw error("cannot parse parameter value in " + kv);
        }
        v.canonicalize();
        pm[kv.substr(0, eq)] = v;
    }
    return pm;
}

std::vector<mpq_class> parse_sample_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw error("sample range must look like -2..2");
    long lo = std::stol(s.substr(0, dots)), hi = std::stol(s.substr(dots + 2));
    if (lo > hi) throw error("empty sample range " + s);
    std::vector<mpq_class> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(path, j.dump(2) + "\n");
    }
}

json parse_input(const std::string& path, const std::string& bytes) {
    try {
        return json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw error("parse error in " + path + ": " + e.what());
    }
}

int cmd_check(const std::string& path, const std::string& json_out,
              const std::string& field_override, long witness_depth) {
    const std::string bytes = read_file(path);
    AlgebraTable A = algebra_from_json(parse_input(path, bytes));
    if (!field_override.empty()) A = change_field(A, parse_field(field_override));

    DextralOptions dopts;
    dopts.coeff_bound = witness_depth;

    json rep;
    rep["tool"] = "dexsym";
    rep["version"] = verify::kVersion;
    rep["input"] = json{{"path", path}, {"digest", digest(bytes)}};
    rep["algebra"] = json{{"name", A.name()},
                          {"field", A.field().str()},
                          {"dim", A.dim()},
                          {"basis", A.basis_names()}};

    std::cout << A.name() << ": dim " << A.dim() << " over " << A.field().str() << "\n";

    json idents = json::array();
    for (const IdentityReport& r : identity_suite(A)) {
        idents.push_back(identity_report_to_json(r));
        std::cout << "  " << r.identity << ": " << (r.holds ? "holds" : "fails") << "\n";
    }
    rep["identities"] = std::move(idents);

    DextralVerdict v = decide_dextral(A, dopts);
    rep["dextral"] = verdict_to_json(A, v);
    std::cout << "  dextral symmetric: " << status_str(v.status);
    if (v.status == DextralStatus::ProvedYes) {
        std::cout << " (" << reason_str(*v.reason)
                  << (v.sufficiency ? ": " + sufficiency_str(*v.sufficiency) : "") << ")";
    } else if (v.status == DextralStatus::ProvedNo) {
        std::cout << "  [a = " << A.render(v.witness->a) << ", b = " << A.render(v.witness->b)
                  << ", c = " << A.render(v.witness->c) << ", b(ac) = "
                  << A.render(v.witness->b_ac) << "]";
    }
    std::cout << "\n";

    json ser = json::object();
    for (SeriesKind k : {SeriesKind::RightLower, SeriesKind::LeftLower, SeriesKind::Derived,
                         SeriesKind::Full}) {
        SeriesTrace t = series(A, k);
        ser[series_kind_str(k)] = series_to_json(A, t);
        std::cout << "  " << series_kind_str(k) << " series dims:";
        for (const Subspace& s : t.terms()) std::cout << " " << s.dim();
        std::cout << (t.terminal_is_zero() ? " (reaches 0)" : " (stabilizes nonzero)") << "\n";
    }
    rep["series"] = std::move(ser);

    json preds = json::object();
    auto pred = [&](const char* name, PredicateResult r) {
        preds[name] = json{{"holds", r.holds}};
        if (r.index) preds[name]["index"] = *r.index;
        std::cout << "  " << name << ": " << (r.holds ? "true" : "false");
        if (r.index) std::cout << " (index " << *r.index << ")";
        std::cout << "\n";
    };
    pred("solvable", is_solvable(A));
    pred("left_nilpotent", is_left_nilpotent(A));
    pred("right_nilpotent", is_right_nilpotent(A));
    pred("nilpotent", is_nilpotent(A));
    rep["predicates"] = std::move(preds);

    emit(rep, json_out);
    return 0;
}

int cmd_leavitt(const std::string& path, const std::string& json_out) {
    const std::string bytes = read_file(path);
    DirectedGraph g = graph_from_json(parse_input(path, bytes));
    GraphClassification c = classify_graph(g);
    json rep;
    rep["tool"] = "dexsym";
    rep["version"] = verify::kVersion;
    rep["input"] = json{{"path", path}, {"digest", digest(bytes)}};
    rep["classification"] = classification_to_json(g, c);

    std::cout << "graph: " << g.vertices.size() << " vertices, " << g.edges.size()
              << " edges\n";
    std::cout << "  dextral symmetric: " << (c.dextral ? "yes" : "no") << "\n";
    if (c.dextral) {
        std::cout << "  |I| = " << c.no_loop_vertices << ", |J| = " << c.one_loop_vertices
                  << "\n  iso class: " << c.iso_class << "\n";
    } else {
        for (const auto& v : c.violations) {
            std::cout << "  violation (" << v.rule << "): a = " << v.a.str(g)
                      << ", b = " << v.b.str(g) << ", c = " << v.c.str(g)
                      << "; b(ac) reduces to " << v.certificate.reduced.str(g) << "\n";
        }
    }
    emit(rep, json_out);
    return 0;
}

int cmd_catalog_list(bool long_form) {
    for (const auto& id : catalog::list()) {
        const auto& e = catalog::get(id);
        std::cout << id;
        if (!e.params.empty()) {
            std::cout << " (";
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << e.params[i].name << " in " << e.params[i].domain.str();
            }
            std::cout << ")";
        }
        if (long_form) {
            std::cout << "\n    " << e.expected.claim;
            if (!e.notes.empty()) std::cout << "\n    note: " << e.notes;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog_export(const std::string& id, const std::vector<std::string>& params,
                       const std::string& field, const std::string& out) {
    std::optional<FieldSpec> f;
    if (!field.empty()) f = parse_field(field);
    AlgebraTable A = catalog::instantiate(id, parse_params(params), f);
    json j = algebra_to_json(A);
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(out, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const std::string& json_out, const std::string& only,
               const std::string& samples, std::uint64_t seed) {
    verify::VerifyOptions opts;
    if (!only.empty()) opts.only = only;
    if (!samples.empty()) opts.param_samples = parse_sample_range(samples);
    opts.seed = seed;
    verify::VerifyReport rep = verify::run_verification(opts);
    for (const auto& c : rep.criteria) {
        std::cout << (c.passed() ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.title << " ("
                  << c.checks.size() << " checks)\n";
        if (!c.passed()) {
            for (const auto& ck : c.checks) {
                if (ck.status != verify::CheckStatus::Pass) {
                    std::cout << "    failed: " << ck.id << " (" << ck.claim << ")"
                              << (ck.details.empty() ? "" : " [" + ck.details + "]") << "\n";
                }
            }
        }
    }
    emit(verify::report_to_json(rep), json_out);
    std::cout << (rep.all_passed() ? "all criteria passed" : "FAILURES PRESENT") << "\n";
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dexsym: a workbench for dextral symmetry in finite-dimensional algebras"};
    app.set_version_flag("--version", dexsym::verify::kVersion);
    app.require_subcommand(1);

    std::string path, json_out, field, only, samples, out, id;
    std::vector<std::string> params;
    long witness_depth = 1;
    std::uint64_t seed = 0x5eed0001u;
    bool long_form = false;

    auto* check = app.add_subcommand("check", "run all checks on an algebra file");
    check->add_option("file", path, "algebra JSON file")->required();
    check->add_option("--json", json_out, "write a JSON report (path or -)");
    check->add_option("--field", field, "override the field (rational or gf:<p>)");
    check->add_option("--witness-depth", witness_depth,
                      "coordinate bound for the witness scan (default 1)");

    auto* leav = app.add_subcommand("leavitt", "classify the algebra of a graph file");
    leav->add_option("file", path, "graph JSON file")->required();
    leav->add_option("--json", json_out, "write a JSON report (path or -)");

    auto* cat = app.add_subcommand("catalog", "inspect and export the built-in catalog");
    auto* cat_list = cat->add_subcommand("list", "list entry ids");
    cat_list->add_flag("--long", long_form, "include claims and notes");
    auto* cat_export = cat->add_subcommand("export", "export an entry as an algebra file");
    cat_export->add_option("id", id, "entry id")->required();
    cat_export->add_option("--param", params, "parameter value, e.g. alpha=1/2");
    cat_export->add_option("--field", field, "instantiation field (rational or gf:<p>)");
    cat_export->add_option("-o,--out", out, "output path (default stdout)");

    auto* ver = app.add_subcommand("verify", "run the full verification suite");
    ver->add_option("--json", json_out, "write a JSON report (path or -)");
    ver->add_option("--only", only, "run only criteria whose id contains this string");
    ver->add_option("--param-samples", samples, "parameter sample range, e.g. -2..2");
    ver->add_option("--seed", seed, "seed for the randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return cmd_check(path, json_out, field, witness_depth);
        if (app.got_subcommand(leav)) return cmd_leavitt(path, json_out);
        if (app.got_subcommand(cat)) {
            if (cat->got_subcommand(cat_list)) return cmd_catalog_list(long_form);
            if (cat->got_subcommand(cat_export)) {
                return cmd_catalog_export(id, params, field, out);
            }
            std::cerr << "catalog: need a subcommand (list or export)\n";
            return 2;
        }
        if (app.got_subcommand(ver)) return cmd_verify(json_out, only, samples, seed);
    } catch (const dexsym::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
