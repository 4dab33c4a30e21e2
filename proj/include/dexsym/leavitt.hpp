#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dexsym/scalar.hpp"

namespace dexsym {

/// Row-finite directed multigraph: named vertices and named edges with
/// source and range. Multi-edges and loops are allowed; names must be
/// distinct within their kind.
struct DirectedGraph {
    struct Edge {
        std::string name;
        std::size_t src, rng;
    };

    static DirectedGraph make(std::vector<std::string> vertices,
                              std::vector<std::array<std::string, 3>> edges);

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    std::size_t vertex_index(const std::string& name) const;
    std::size_t edge_index(const std::string& name) const;
    std::vector<std::size_t> loops_at(std::size_t v) const;
};

/// Finite path: either a vertex (length 0) or a composable edge sequence.
class Path {
  public:
    static Path at_vertex(const DirectedGraph& g, std::size_t v);
    static Path of_edges(const DirectedGraph& g, std::vector<std::size_t> edges);

    bool is_vertex() const { return edges_.empty(); }
    std::size_t length() const { return edges_.size(); }
    std::size_t base_vertex() const { return base_; }
    const std::vector<std::size_t>& edge_seq() const { return edges_; }
    std::size_t source(const DirectedGraph& g) const;
    std::size_t range(const DirectedGraph& g) const;
    std::string str(const DirectedGraph& g) const;

    std::strong_ordering operator<=>(const Path&) const = default;

  private:
    Path(std::size_t base, std::vector<std::size_t> edges)
        : base_(base), edges_(std::move(edges)) {}
    std::size_t base_ = 0;  // the vertex for a length-0 path, else src of the first edge
    std::vector<std::size_t> edges_;
};

/// Monomial c * alpha beta^* with r(alpha) = r(beta).
struct Monomial {
    Path alpha, beta;
    Scalar coeff;
    std::string str(const DirectedGraph& g) const;
};

/// Finite linear combination of monomials alpha beta^*; zero coefficients
/// are never stored and terms are kept in a canonical order.
class LpaElement {
  public:
    explicit LpaElement(FieldSpec field = FieldSpec::rational()) : field_(field) {}

    static LpaElement zero(const FieldSpec& f = FieldSpec::rational());
    static LpaElement monomial(const DirectedGraph& g, Path alpha, Path beta, Scalar coeff);
    static LpaElement vertex(const DirectedGraph& g, std::size_t v,
                             const FieldSpec& f = FieldSpec::rational());
    static LpaElement edge(const DirectedGraph& g, std::size_t e,
                           const FieldSpec& f = FieldSpec::rational());
    static LpaElement ghost(const DirectedGraph& g, std::size_t e,
                            const FieldSpec& f = FieldSpec::rational());

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Path, Path>, Scalar>& terms() const { return terms_; }
    std::optional<Monomial> as_monomial() const;
    /// The single term when it is a scalar multiple of a plain generator
    /// (a vertex, an edge, or a ghost edge).
    std::optional<Monomial> as_generator() const;
    void add_term(const Path& alpha, const Path& beta, const Scalar& c);
    bool operator==(const LpaElement&) const = default;
    std::string str(const DirectedGraph& g) const;

  private:
    FieldSpec field_;
    std::map<std::pair<Path, Path>, Scalar> terms_;
};

LpaElement lpa_add(const LpaElement& x, const LpaElement& y);

/// Product in the Leavitt path algebra, reduced with the defining relations
/// for vertices/edges and the first Cuntz-Krieger relation only:
/// (a b^*)(c d^*) is (a c') d^* when c = b c', is a (d b')^* when b = c b',
/// and 0 otherwise. Vertex paths of length 0 encode the idempotent and
/// orthogonality relations.
LpaElement lpa_multiply(const DirectedGraph& g, const LpaElement& x, const LpaElement& y);

/// One-sided one-step certificate that a monomial is nonzero: multiplying
/// by `factor` on the stated side reduces the monomial, with the same
/// relations, to a scalar multiple of a plain generator (which is nonzero
/// in every Leavitt path algebra over a nontrivial ring).
struct NonzeroCertificate {
    Monomial factor;
    bool multiply_on_right = true;
    Monomial reduced;
};

/// Builds a certificate for a single monomial; absent for zero, for proper
/// linear combinations, and for monomials whose two path legs both have
/// length >= 2 (no single multiplication reaches a generator there).
std::optional<NonzeroCertificate> certify_nonzero(const DirectedGraph& g, const LpaElement& x);

/// True iff a(bc) = 0 and b(ac) carries a nonzero certificate.
bool validate_witness(const DirectedGraph& g, const LpaElement& a, const LpaElement& b,
                      const LpaElement& c);

struct GraphViolation {
    std::string rule;  // "edge-with-distinct-endpoints" or "vertex-emitting-two-loops"
    LpaElement a, b, c;
    NonzeroCertificate certificate;  // for b(ac)
};

/// Shape-level classification: the algebra of the graph is dextral
/// symmetric iff every edge is a loop and no vertex emits two loops; then
/// it splits into one summand per vertex, a base-ring copy for a bare
/// vertex and a Laurent polynomial algebra for a looped one.
struct GraphClassification {
    bool dextral = false;
    std::size_t no_loop_vertices = 0;   // |I|
    std::size_t one_loop_vertices = 0;  // |J|
    std::string iso_class;              // "" when not dextral, "0" for the empty graph
    std::vector<GraphViolation> violations;
};

GraphClassification classify_graph(const DirectedGraph& g);

}  // namespace dexsym
