#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dexsym/algebra.hpp"

namespace dexsym {

/// First failing basis tuple (lexicographic) with the two sides that differ.
struct IdentityViolation {
    std::vector<std::size_t> at;
    Vec lhs, rhs;
};

struct IdentityReport {
    std::string identity;
    bool holds = false;
    std::optional<IdentityViolation> violation;
};

/// c(i,j) == c(j,i) on all basis pairs.
IdentityReport is_commutative(const AlgebraTable& A);
/// x^2 = 0 in polarized form: c(i,i) == 0 and c(i,j) + c(j,i) == 0. The
/// squared form is what survives characteristic 2.
IdentityReport is_anticommutative(const AlgebraTable& A);
IdentityReport is_associative(const AlgebraTable& A);
/// (xy)z == -x(yz) on all basis triples.
IdentityReport is_antiassociative(const AlgebraTable& A);
/// [a,[b,c]] == [[a,b],c] - [[a,c],b].
IdentityReport is_right_leibniz(const AlgebraTable& A);
/// [a,[b,c]] == [[a,b],c] + [b,[a,c]].
IdentityReport is_left_leibniz(const AlgebraTable& A);
/// Anti-commutative plus the Jacobi identity.
IdentityReport is_lie(const AlgebraTable& A);
/// x(yz) + y(xz) == 0 on all basis triples; by trilinearity this is exact
/// for all elements.
IdentityReport dextral_identity(const AlgebraTable& A);
/// The six-term chain x(yz) = y(zx) = z(xy) = -x(zy) = -y(xz) = -z(yx).
IdentityReport cyclic_triple_relations(const AlgebraTable& A);
/// (xy)(zw) == x(y(zw)) on all basis quadruples.
IdentityReport right_nesting_identity(const AlgebraTable& A);

/// All of the above in a fixed order.
std::vector<IdentityReport> identity_suite(const AlgebraTable& A);

}  // namespace dexsym
