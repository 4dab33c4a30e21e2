#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dexsym/scalar.hpp"

namespace dexsym {

/// Coordinate vector over a fixed field. All entries share one field; the
/// ambient dimension is carried by the owning structure (algebra, subspace).
using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

/// Subspace of F^n held as its unique reduced row echelon basis: unit
/// pivots in strictly increasing columns, pivot columns cleared, no zero
/// rows. Two subspaces are equal exactly when their bases are identical.
class Subspace {
  public:
    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    /// Canonical span of arbitrary rows; ragged rows are an error.
    static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating against the basis; zero iff v lies
    /// in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    /// Coefficients of v in the echelon basis (throws if v is outside).
    Vec coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const = default;
    std::string str() const;

  private:
    Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}
    void insert_reduced(Vec v);

    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;

    friend Subspace rref(const FieldSpec&, std::size_t, const std::vector<Vec>&);
};

/// Canonical reduced-row-echelon span; idempotent on a Subspace's basis.
Subspace rref(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& rows);

/// Canonical span of the union of two subspaces (ambient must agree).
Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vec& v);
bool subspace_eq(const Subspace& u, const Subspace& v);
bool subspace_leq(const Subspace& u, const Subspace& v);

}  // namespace dexsym
