#include "dexsym/algebra.hpp"

#include <set>

namespace dexsym {

AlgebraTable::AlgebraTable(std::string name, FieldSpec field, std::vector<std::string> basis_names,
                           std::vector<std::vector<Vec>> structure)
    : name_(std::move(name)), field_(field), names_(std::move(basis_names)), sc_(std::move(structure)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw error("AlgebraTable: empty basis name");
        if (!seen.insert(n).second) throw error("AlgebraTable: duplicate basis name \"" + n + "\"");
    }
    const std::size_t d = names_.size();
    if (sc_.size() != d) throw error("AlgebraTable: structure constant row count != dim");
    for (const auto& row : sc_) {
        if (row.size() != d) throw error("AlgebraTable: structure constant column count != dim");
        for (const Vec& v : row) {
            if (v.size() != d) throw error("AlgebraTable: product vector length != dim");
            for (const Scalar& x : v) {
                if (!(x.field() == field_)) throw error("AlgebraTable: entry field mismatch");
            }
        }
    }
}

AlgebraTable AlgebraTable::from_sparse(std::string name, FieldSpec field,
                                       std::vector<std::string> basis_names,
                                       const std::vector<SparseProduct>& products) {
    const std::size_t d = basis_names.size();
    auto index_of = [&](const std::string& n) -> std::size_t {
        for (std::size_t i = 0; i < d; ++i) {
            if (basis_names[i] == n) return i;
        }
        throw error("AlgebraTable: unknown basis name \"" + n + "\"");
    };
    std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d, zero_vec(field, d)));
    for (const auto& p : products) {
        std::size_t i = index_of(p.left), j = index_of(p.right);
        for (const auto& [coeff, target] : p.value) {
            sc[i][j][index_of(target)] += coeff;
        }
    }
    return AlgebraTable(std::move(name), field, std::move(basis_names), std::move(sc));
}

std::optional<std::size_t> AlgebraTable::basis_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::string AlgebraTable::render(const Vec& v) const {
    if (v.size() != dim()) throw error("render: dimension mismatch");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string c = v[i].str();
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (s.empty()) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        if (mag != "1") s += mag + "*";
        s += names_[i];
    }
    return s.empty() ? "0" : s;
}

Element multiply(const AlgebraTable& A, const Element& a, const Element& b) {
    const std::size_t d = A.dim();
    if (a.size() != d || b.size() != d) throw error("multiply: dimension mismatch");
    Vec r = A.zero();
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const Vec& cij = A.structure(i, j);
            Scalar w = a[i] * b[j];
            for (std::size_t l = 0; l < d; ++l) {
                if (!cij[l].is_zero()) r[l] += w * cij[l];
            }
        }
    }
    return r;
}

Element triple_right(const AlgebraTable& A, const Element& a, const Element& b, const Element& c) {
    return multiply(A, a, multiply(A, b, c));
}

bool is_ideal(const AlgebraTable& A, const Subspace& I) {
    if (I.ambient_dim() != A.dim() || !(I.field() == A.field())) {
        throw error("is_ideal: ambient mismatch");
    }
    for (const Vec& u : I.basis()) {
        for (std::size_t e = 0; e < A.dim(); ++e) {
            if (!I.contains(multiply(A, u, A.unit(e)))) return false;
            if (!I.contains(multiply(A, A.unit(e), u))) return false;
        }
    }
    return true;
}

QuotientAlgebra::QuotientAlgebra(AlgebraTable table, Subspace ideal,
                                 std::vector<std::size_t> coset_coords)
    : table_(std::move(table)), ideal_(std::move(ideal)), coset_coords_(std::move(coset_coords)) {}

Vec QuotientAlgebra::project(const Vec& v) const {
    Vec r = ideal_.reduce(v);
    Vec out;
    out.reserve(coset_coords_.size());
    for (std::size_t c : coset_coords_) out.push_back(r[c]);
    return out;
}

Vec QuotientAlgebra::lift(const Vec& u) const {
    if (u.size() != coset_coords_.size()) throw error("QuotientAlgebra::lift: dimension mismatch");
    Vec v = zero_vec(ideal_.field(), ideal_.ambient_dim());
    for (std::size_t k = 0; k < coset_coords_.size(); ++k) v[coset_coords_[k]] = u[k];
    return v;
}

QuotientAlgebra quotient(const AlgebraTable& A, const Subspace& I) {
    if (!is_ideal(A, I)) throw error("quotient: subspace is not a two-sided ideal");
    std::vector<std::size_t> coset;
    {
        std::size_t k = 0;
        for (std::size_t c = 0; c < A.dim(); ++c) {
            if (k < I.pivots().size() && I.pivots()[k] == c) {
                ++k;
            } else {
                coset.push_back(c);
            }
        }
    }
    const std::size_t q = coset.size();
    std::vector<std::string> names;
    names.reserve(q);
    for (std::size_t c : coset) names.push_back(A.basis_names()[c]);

    QuotientAlgebra proto(AlgebraTable("tmp", A.field(), {}, {}), I, coset);
    std::vector<std::vector<Vec>> sc(q, std::vector<Vec>(q, zero_vec(A.field(), q)));
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            sc[a][b] = proto.project(multiply(A, A.unit(coset[a]), A.unit(coset[b])));
        }
    }
    AlgebraTable table(A.name() + " mod I", A.field(), std::move(names), std::move(sc));
    return QuotientAlgebra(std::move(table), I, std::move(coset));
}

Subspace subspace_product(const AlgebraTable& A, const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != A.dim() || V.ambient_dim() != A.dim() || !(U.field() == A.field()) ||
        !(V.field() == A.field())) {
        throw error("subspace_product: ambient mismatch");
    }
    std::vector<Vec> rows;
    rows.reserve(U.dim() * V.dim());
    for (const Vec& u : U.basis()) {
        for (const Vec& v : V.basis()) rows.push_back(multiply(A, u, v));
    }
    return rref(A.field(), A.dim(), rows);
}

AlgebraTable direct_sum(const AlgebraTable& A, const AlgebraTable& B) {
    if (!(A.field() == B.field())) throw error("direct_sum: field mismatch");
    const std::size_t da = A.dim(), db = B.dim(), d = da + db;
    std::vector<std::string> names;
    names.reserve(d);
    for (const auto& n : A.basis_names()) names.push_back(n + "_1");
    for (const auto& n : B.basis_names()) names.push_back(n + "_2");
    auto embed = [&](const Vec& v, std::size_t offset) {
        Vec r = zero_vec(A.field(), d);
        for (std::size_t l = 0; l < v.size(); ++l) r[offset + l] = v[l];
        return r;
    };
    std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d, zero_vec(A.field(), d)));
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) sc[i][j] = embed(A.structure(i, j), 0);
    }
    for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j) sc[da + i][da + j] = embed(B.structure(i, j), da);
    }
    return AlgebraTable(A.name() + " (+) " + B.name(), A.field(), std::move(names), std::move(sc));
}

Subspace close_under_product(const AlgebraTable& A, const Subspace& S) {
    Subspace cur = S;
    for (;;) {
        Subspace next = subspace_sum(cur, subspace_product(A, cur, cur));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

AlgebraTable restrict_to_subalgebra(const AlgebraTable& A, const Subspace& S) {
    if (S.ambient_dim() != A.dim()) throw error("restrict_to_subalgebra: ambient mismatch");
    const std::size_t k = S.dim();
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 0; i < k; ++i) names.push_back("u" + std::to_string(i + 1));
    std::vector<std::vector<Vec>> sc(k, std::vector<Vec>(k, zero_vec(A.field(), k)));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            Vec p = multiply(A, S.basis()[a], S.basis()[b]);
            if (!S.contains(p)) {
                throw error("restrict_to_subalgebra: subspace is not multiplicatively closed");
            }
            sc[a][b] = S.coordinates(p);
        }
    }
    return AlgebraTable(A.name() + " subalgebra", A.field(), std::move(names), std::move(sc));
}

AlgebraTable change_field(const AlgebraTable& A, const FieldSpec& target) {
    if (A.field() == target) return A;
    if (!A.field().is_rational()) {
        throw error("change_field: only rational tables can be transported");
    }
    const std::size_t d = A.dim();
    std::vector<std::vector<Vec>> sc(d, std::vector<Vec>(d, zero_vec(target, d)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                sc[i][j][l] = Scalar::of_rat(A.structure(i, j)[l].rat(), target);
            }
        }
    }
    return AlgebraTable(A.name() + " over " + target.str(), target,
                        std::vector<std::string>(A.basis_names()), std::move(sc));
}

}  // namespace dexsym
