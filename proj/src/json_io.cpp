#include "dexsym/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace dexsym {

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", f.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw error("field: expected {\"kind\": ...}");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_unsigned()) {
            throw error("field: prime field needs an unsigned \"p\"");
        }
        return FieldSpec::prime(j["p"].get<unsigned long>());
    }
    throw error("field: unknown kind \"" + kind + "\"");
}

json algebra_to_json(const AlgebraTable& A) {
    json j;
    j["name"] = A.name();
    j["field"] = field_to_json(A.field());
    j["basis"] = A.basis_names();
    json products = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t k = 0; k < A.dim(); ++k) {
            const Vec& v = A.structure(i, k);
            if (vec_is_zero(v)) continue;
            json value = json::array();
            for (std::size_t l = 0; l < v.size(); ++l) {
                if (v[l].is_zero()) continue;
                value.push_back(json::array({v[l].str(), A.basis_names()[l]}));
            }
            products.push_back(json{{"left", A.basis_names()[i]},
                                    {"right", A.basis_names()[k]},
                                    {"value", std::move(value)}});
        }
    }
    j["products"] = std::move(products);
    return j;
}

AlgebraTable algebra_from_json(const json& j) {
    if (!j.is_object()) throw error("algebra: expected a JSON object");
    for (const char* key : {"name", "field", "basis"}) {
        if (!j.contains(key)) throw error(std::string("algebra: missing \"") + key + "\"");
    }
    if (!j["name"].is_string()) throw error("algebra: \"name\" must be a string");
    FieldSpec field = field_from_json(j["field"]);
    if (!j["basis"].is_array()) throw error("algebra: \"basis\" must be an array");
    std::vector<std::string> basis;
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) throw error("algebra: basis names must be strings");
        basis.push_back(b.get<std::string>());
    }
    std::vector<AlgebraTable::SparseProduct> sparse;
    std::set<std::pair<std::string, std::string>> seen;
    if (j.contains("products")) {
        if (!j["products"].is_array()) throw error("algebra: \"products\" must be an array");
        for (const auto& p : j["products"]) {
            if (!p.is_object() || !p.contains("left") || !p.contains("right") ||
                !p.contains("value") || !p["left"].is_string() || !p["right"].is_string() ||
                !p["value"].is_array()) {
                throw error("algebra: products need left/right names and a value array");
            }
            AlgebraTable::SparseProduct sp;
            sp.left = p["left"].get<std::string>();
            sp.right = p["right"].get<std::string>();
            if (!seen.emplace(sp.left, sp.right).second) {
                throw error("algebra: duplicate product entry for (" + sp.left + ", " +
                            sp.right + ")");
            }
            for (const auto& term : p["value"]) {
                if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
                    !term[1].is_string()) {
                    throw error("algebra: value terms must be [coefficient, basis-name] pairs");
                }
                sp.value.emplace_back(Scalar::parse(term[0].get<std::string>(), field),
                                      term[1].get<std::string>());
            }
            sparse.push_back(std::move(sp));
        }
    }
    return AlgebraTable::from_sparse(j["name"].get<std::string>(), field, std::move(basis),
                                     sparse);
}

json graph_to_json(const DirectedGraph& g) {
    json j;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back(json{{"name", e.name},
                             {"src", g.vertices[e.src]},
                             {"rng", g.vertices[e.rng]}});
    }
    j["edges"] = std::move(edges);
    return j;
}

DirectedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
        throw error("graph: expected {\"vertices\": [...], \"edges\": [...]}");
    }
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw error("graph: vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::array<std::string, 3>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw error("graph: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("name") || !e.contains("src") ||
                !e.contains("rng") || !e["name"].is_string() || !e["src"].is_string() ||
                !e["rng"].is_string()) {
                throw error("graph: edges need string name/src/rng");
            }
            edges.push_back({e["name"].get<std::string>(), e["src"].get<std::string>(),
                             e["rng"].get<std::string>()});
        }
    }
    return DirectedGraph::make(std::move(vertices), std::move(edges));
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Scalar& x : v) a.push_back(x.str());
    return a;
}

json witness_to_json(const AlgebraTable& A, const Witness& w) {
    return json{{"a", vec_to_json(w.a)},
                {"b", vec_to_json(w.b)},
                {"c", vec_to_json(w.c)},
                {"a_bc", vec_to_json(w.a_bc)},
                {"b_ac", vec_to_json(w.b_ac)},
                {"pretty", "a = " + A.render(w.a) + ", b = " + A.render(w.b) +
                               ", c = " + A.render(w.c) + "; b(ac) = " + A.render(w.b_ac)}};
}

json verdict_to_json(const AlgebraTable& A, const DextralVerdict& v) {
    json j;
    j["status"] = status_str(v.status);
    if (v.status == DextralStatus::ProvedYes) {
        std::string reason = reason_str(*v.reason);
        if (v.sufficiency) reason += ":" + sufficiency_str(*v.sufficiency);
        j["reason"] = reason;
    } else if (v.status == DextralStatus::ProvedNo) {
        j["witness"] = witness_to_json(A, *v.witness);
    }
    return j;
}

json identity_report_to_json(const IdentityReport& r) {
    json j;
    j["identity"] = r.identity;
    j["holds"] = r.holds;
    if (r.violation) {
        j["violation"] = json{{"at", r.violation->at},
                              {"lhs", vec_to_json(r.violation->lhs)},
                              {"rhs", vec_to_json(r.violation->rhs)}};
    }
    return j;
}

json series_to_json(const AlgebraTable& A, const SeriesTrace& t) {
    json terms = json::array();
    for (const Subspace& s : t.terms()) {
        json rows = json::array();
        json pretty = json::array();
        for (const Vec& r : s.basis()) {
            rows.push_back(vec_to_json(r));
            pretty.push_back(A.render(r));
        }
        terms.push_back(
            json{{"dim", s.dim()}, {"basis", std::move(rows)}, {"span", std::move(pretty)}});
    }
    return json{{"kind", series_kind_str(t.kind())},
                {"terms", std::move(terms)},
                {"stabilized_at", t.stabilized_at()},
                {"terminal_is_zero", t.terminal_is_zero()}};
}

json classification_to_json(const DirectedGraph& g, const GraphClassification& c) {
    json violations = json::array();
    for (const auto& v : c.violations) {
        violations.push_back(json{
            {"rule", v.rule},
            {"a", v.a.str(g)},
            {"b", v.b.str(g)},
            {"c", v.c.str(g)},
            {"certificate",
             json{{"factor", v.certificate.factor.str(g)},
                  {"side", v.certificate.multiply_on_right ? "right" : "left"},
                  {"reduces_to", v.certificate.reduced.str(g)}}}});
    }
    json j;
    j["dextral"] = c.dextral;
    j["I"] = c.no_loop_vertices;
    j["J"] = c.one_loop_vertices;
    j["iso_class"] = c.iso_class;
    j["violations"] = std::move(violations);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << contents;
}

AlgebraTable load_algebra_file(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw error("parse error in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

DirectedGraph load_graph_file(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw error("parse error in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace dexsym
