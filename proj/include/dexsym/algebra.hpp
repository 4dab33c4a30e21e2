#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dexsym/linalg.hpp"

namespace dexsym {

/// Finite-dimensional algebra given by structure constants: sc(i,j) is the
/// coordinate vector of the product of basis elements i and j. Products not
/// listed when building from sparse data default to zero. Tables are
/// immutable after construction; dimension 0 is legal.
class AlgebraTable {
  public:
    AlgebraTable(std::string name, FieldSpec field, std::vector<std::string> basis_names,
                 std::vector<std::vector<Vec>> structure);

    struct SparseProduct {
        std::string left, right;
        std::vector<std::pair<Scalar, std::string>> value;
    };
    static AlgebraTable from_sparse(std::string name, FieldSpec field,
                                    std::vector<std::string> basis_names,
                                    const std::vector<SparseProduct>& products);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& structure(std::size_t i, std::size_t j) const { return sc_[i][j]; }
    std::optional<std::size_t> basis_index(std::string_view name) const;

    Vec zero() const { return zero_vec(field_, dim()); }
    Vec unit(std::size_t i) const { return unit_vec(field_, dim(), i); }
    /// Human-readable linear combination, e.g. "x - 2*z" or "0".
    std::string render(const Vec& v) const;

  private:
    std::string name_;
    FieldSpec field_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> sc_;
};

using Element = Vec;

/// Bilinear extension of the structure constants.
Element multiply(const AlgebraTable& A, const Element& a, const Element& b);
/// The right-nested triple product a(bc).
Element triple_right(const AlgebraTable& A, const Element& a, const Element& b, const Element& c);

/// True iff both u*e and e*u stay in I for every basis row u of I and every
/// basis element e (two-sided ideal test).
bool is_ideal(const AlgebraTable& A, const Subspace& I);

/// Quotient algebra A/I on the non-pivot coordinates of I's echelon basis,
/// together with the projection and a coset-representative section.
class QuotientAlgebra {
  public:
    QuotientAlgebra(AlgebraTable table, Subspace ideal, std::vector<std::size_t> coset_coords);
    const AlgebraTable& table() const { return table_; }
    const Subspace& ideal() const { return ideal_; }
    const std::vector<std::size_t>& coset_coords() const { return coset_coords_; }
    /// Projection A -> A/I (surjective algebra homomorphism).
    Vec project(const Vec& v) const;
    /// Coset-representative section A/I -> A; project(lift(u)) == u.
    Vec lift(const Vec& u) const;

  private:
    AlgebraTable table_;
    Subspace ideal_;
    std::vector<std::size_t> coset_coords_;
};

QuotientAlgebra quotient(const AlgebraTable& A, const Subspace& I);

/// Canonical span of all products u*v with u, v ranging over basis rows of
/// U and V; exact by bilinearity.
Subspace subspace_product(const AlgebraTable& A, const Subspace& U, const Subspace& V);

/// Block-diagonal sum; basis names get "_1"/"_2" suffixes.
AlgebraTable direct_sum(const AlgebraTable& A, const AlgebraTable& B);

/// Smallest multiplicatively closed subspace containing S.
Subspace close_under_product(const AlgebraTable& A, const Subspace& S);

/// The algebra induced on a multiplicatively closed subspace ([S,S] <= S,
/// checked). Basis rows of S become the new basis.
AlgebraTable restrict_to_subalgebra(const AlgebraTable& A, const Subspace& S);

/// Re-reads the table over another field (embedding each coefficient);
/// an error if some coefficient does not embed.
AlgebraTable change_field(const AlgebraTable& A, const FieldSpec& target);

}  // namespace dexsym
