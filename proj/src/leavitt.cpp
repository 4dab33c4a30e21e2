#include "dexsym/leavitt.hpp"

#include <algorithm>
#include <set>

namespace dexsym {

DirectedGraph DirectedGraph::make(std::vector<std::string> vertices,
                                  std::vector<std::array<std::string, 3>> edges) {
    DirectedGraph g;
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (v.empty()) throw error("DirectedGraph: empty vertex name");
        if (!seen.insert(v).second) throw error("DirectedGraph: duplicate vertex \"" + v + "\"");
    }
    g.vertices = std::move(vertices);
    std::set<std::string> seen_edges;
    for (const auto& [name, src, rng] : edges) {
        if (name.empty()) throw error("DirectedGraph: empty edge name");
        if (!seen_edges.insert(name).second) {
            throw error("DirectedGraph: duplicate edge \"" + name + "\"");
        }
        g.edges.push_back(Edge{name, g.vertex_index(src), g.vertex_index(rng)});
    }
    return g;
}

std::size_t DirectedGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == name) return i;
    }
    throw error("DirectedGraph: unknown vertex \"" + name + "\"");
}

std::size_t DirectedGraph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].name == name) return i;
    }
    throw error("DirectedGraph: unknown edge \"" + name + "\"");
}

std::vector<std::size_t> DirectedGraph::loops_at(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].src == v && edges[i].rng == v) out.push_back(i);
    }
    return out;
}

Path Path::at_vertex(const DirectedGraph& g, std::size_t v) {
    if (v >= g.vertices.size()) throw error("Path: vertex index out of range");
    return Path(v, {});
}

Path Path::of_edges(const DirectedGraph& g, std::vector<std::size_t> edges) {
    if (edges.empty()) throw error("Path: empty edge sequence, use at_vertex");
    for (std::size_t e : edges) {
        if (e >= g.edges.size()) throw error("Path: edge index out of range");
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (g.edges[edges[i]].rng != g.edges[edges[i + 1]].src) {
            throw error("Path: edges are not composable");
        }
    }
    const std::size_t base = g.edges[edges.front()].src;
    return Path(base, std::move(edges));
}

std::size_t Path::source(const DirectedGraph&) const {
    return base_;
}

std::size_t Path::range(const DirectedGraph& g) const {
    return is_vertex() ? base_ : g.edges[edges_.back()].rng;
}

std::string Path::str(const DirectedGraph& g) const {
    if (is_vertex()) return g.vertices[base_];
    std::string s;
    for (std::size_t e : edges_) s += g.edges[e].name;
    return s;
}

std::string Monomial::str(const DirectedGraph& g) const {
    std::string s;
    if (!coeff.is_one()) s += coeff.str() + "*";
    if (beta.is_vertex()) {
        s += alpha.str(g);
    } else if (alpha.is_vertex()) {
        s += "(" + beta.str(g) + ")*";
    } else {
        s += alpha.str(g) + "(" + beta.str(g) + ")*";
    }
    return s;
}

LpaElement LpaElement::zero(const FieldSpec& f) {
    return LpaElement(f);
}

LpaElement LpaElement::monomial(const DirectedGraph& g, Path alpha, Path beta, Scalar coeff) {
    if (alpha.range(g) != beta.range(g)) {
        throw error("LpaElement: monomial legs must share their range vertex");
    }
    LpaElement x(coeff.field());
    x.add_term(alpha, beta, coeff);
    return x;
}

LpaElement LpaElement::vertex(const DirectedGraph& g, std::size_t v, const FieldSpec& f) {
    Path p = Path::at_vertex(g, v);
    return monomial(g, p, p, Scalar::one(f));
}

LpaElement LpaElement::edge(const DirectedGraph& g, std::size_t e, const FieldSpec& f) {
    return monomial(g, Path::of_edges(g, {e}), Path::at_vertex(g, g.edges[e].rng),
                    Scalar::one(f));
}

LpaElement LpaElement::ghost(const DirectedGraph& g, std::size_t e, const FieldSpec& f) {
    return monomial(g, Path::at_vertex(g, g.edges[e].rng), Path::of_edges(g, {e}),
                    Scalar::one(f));
}

std::optional<Monomial> LpaElement::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [key, c] = *terms_.begin();
    return Monomial{key.first, key.second, c};
}

std::optional<Monomial> LpaElement::as_generator() const {
    auto m = as_monomial();
    if (!m) return std::nullopt;
    const std::size_t la = m->alpha.length(), lb = m->beta.length();
    if (la + lb <= 1) return m;
    return std::nullopt;
}

void LpaElement::add_term(const Path& alpha, const Path& beta, const Scalar& c) {
    if (!(c.field() == field_)) throw error("LpaElement: coefficient field mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(alpha, beta);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string LpaElement::str(const DirectedGraph& g) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += Monomial{key.first, key.second, c}.str(g);
    }
    return s;
}

LpaElement lpa_add(const LpaElement& x, const LpaElement& y) {
    LpaElement r = x;
    for (const auto& [key, c] : y.terms()) r.add_term(key.first, key.second, c);
    return r;
}

namespace {

bool is_prefix(const DirectedGraph& g, const Path& q, const Path& p) {
    if (q.length() > p.length()) return false;
    if (q.is_vertex()) return p.source(g) == q.base_vertex();
    for (std::size_t i = 0; i < q.length(); ++i) {
        if (q.edge_seq()[i] != p.edge_seq()[i]) return false;
    }
    return true;
}

// p = q . remainder
Path remainder_after(const DirectedGraph& g, const Path& p, const Path& q) {
    if (q.length() == p.length()) return Path::at_vertex(g, p.range(g));
    return Path::of_edges(
        g, std::vector<std::size_t>(p.edge_seq().begin() +
                                        static_cast<std::ptrdiff_t>(q.length()),
                                    p.edge_seq().end()));
}

Path concat(const DirectedGraph& g, const Path& p, const Path& q) {
    if (p.range(g) != q.source(g)) throw error("Path: concatenation ranges do not match");
    if (p.is_vertex()) return q;
    if (q.is_vertex()) return p;
    std::vector<std::size_t> edges = p.edge_seq();
    edges.insert(edges.end(), q.edge_seq().begin(), q.edge_seq().end());
    return Path::of_edges(g, std::move(edges));
}

}  // namespace

LpaElement lpa_multiply(const DirectedGraph& g, const LpaElement& x, const LpaElement& y) {
    if (!(x.field() == y.field())) throw error("lpa_multiply: field mismatch");
    LpaElement r(x.field());
    for (const auto& [kx, cx] : x.terms()) {
        const Path& alpha = kx.first;
        const Path& beta = kx.second;
        for (const auto& [ky, cy] : y.terms()) {
            const Path& gamma = ky.first;
            const Path& delta = ky.second;
            // (alpha beta*)(gamma delta*): beta* gamma collapses by CK-1
            if (is_prefix(g, beta, gamma)) {
                Path rest = remainder_after(g, gamma, beta);
                r.add_term(concat(g, alpha, rest), delta, cx * cy);
            } else if (is_prefix(g, gamma, beta)) {
                Path rest = remainder_after(g, beta, gamma);
                r.add_term(alpha, concat(g, delta, rest), cx * cy);
            }
        }
    }
    return r;
}

std::optional<NonzeroCertificate> certify_nonzero(const DirectedGraph& g, const LpaElement& x) {
    auto m = x.as_monomial();
    if (!m || m->coeff.is_zero()) return std::nullopt;
    const FieldSpec& f = x.field();
    std::optional<Monomial> factor;
    bool on_right = true;
    if (m->alpha.length() <= 1) {
        // (alpha beta*) beta = alpha r(beta) = alpha, a generator
        factor = Monomial{m->beta, Path::at_vertex(g, m->beta.range(g)), Scalar::one(f)};
        on_right = true;
    } else if (m->beta.length() <= 1) {
        // alpha* (alpha beta*) = r(alpha) beta* = beta*, a generator
        factor = Monomial{Path::at_vertex(g, m->alpha.range(g)), m->alpha, Scalar::one(f)};
        on_right = false;
    } else {
        return std::nullopt;
    }
    LpaElement fe = LpaElement::monomial(g, factor->alpha, factor->beta, factor->coeff);
    LpaElement product = on_right ? lpa_multiply(g, x, fe) : lpa_multiply(g, fe, x);
    auto gen = product.as_generator();
    if (!gen || gen->coeff.is_zero()) return std::nullopt;
    return NonzeroCertificate{*factor, on_right, *gen};
}

bool validate_witness(const DirectedGraph& g, const LpaElement& a, const LpaElement& b,
                      const LpaElement& c) {
    LpaElement abc = lpa_multiply(g, a, lpa_multiply(g, b, c));
    if (!abc.is_zero()) return false;
    LpaElement bac = lpa_multiply(g, b, lpa_multiply(g, a, c));
    return certify_nonzero(g, bac).has_value();
}

GraphClassification classify_graph(const DirectedGraph& g) {
    GraphClassification r;
    const FieldSpec f = FieldSpec::rational();

    auto certified_violation = [&](std::string rule, LpaElement a, LpaElement b, LpaElement c) {
        LpaElement bac = lpa_multiply(g, b, lpa_multiply(g, a, c));
        auto cert = certify_nonzero(g, bac);
        if (!cert || !validate_witness(g, a, b, c)) {
            throw std::logic_error("classify_graph: witness failed validation");
        }
        return GraphViolation{std::move(rule), std::move(a), std::move(b), std::move(c),
                              std::move(*cert)};
    };

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].src == g.edges[e].rng) continue;
        r.violations.push_back(certified_violation(
            "edge-with-distinct-endpoints", LpaElement::edge(g, e, f),
            LpaElement::vertex(g, g.edges[e].src, f), LpaElement::vertex(g, g.edges[e].rng, f)));
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::vector<std::size_t> loops = g.loops_at(v);
        if (loops.size() >= 2) {
            r.violations.push_back(certified_violation(
                "vertex-emitting-two-loops", LpaElement::ghost(g, loops[1], f),
                LpaElement::edge(g, loops[0], f), LpaElement::vertex(g, v, f)));
        }
        if (loops.empty()) {
            ++r.no_loop_vertices;
        } else if (loops.size() == 1) {
            ++r.one_loop_vertices;
        }
    }
    r.dextral = r.violations.empty();
    if (r.dextral) {
        if (g.vertices.empty()) {
            r.iso_class = "0";
        } else {
            std::string s;
            for (std::size_t k = 0; k < r.no_loop_vertices; ++k) {
                s += (s.empty() ? "" : " \xE2\x8A\x95 ");
                s += "R";
            }
            for (std::size_t k = 0; k < r.one_loop_vertices; ++k) {
                s += (s.empty() ? "" : " \xE2\x8A\x95 ");
                s += "R[x,x^-1]";
            }
            r.iso_class = s;
        }
    }
    return r;
}

}  // namespace dexsym
