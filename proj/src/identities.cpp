#include "dexsym/identities.hpp"

namespace dexsym {

namespace {

IdentityReport pass(std::string id) {
    return IdentityReport{std::move(id), true, std::nullopt};
}

IdentityReport fail(std::string id, std::vector<std::size_t> at, Vec lhs, Vec rhs) {
    return IdentityReport{std::move(id), false,
                          IdentityViolation{std::move(at), std::move(lhs), std::move(rhs)}};
}

}  // namespace

IdentityReport is_commutative(const AlgebraTable& A) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = i + 1; j < A.dim(); ++j) {
            if (A.structure(i, j) != A.structure(j, i)) {
                return fail("commutative", {i, j}, A.structure(i, j), A.structure(j, i));
            }
        }
    }
    return pass("commutative");
}

IdentityReport is_anticommutative(const AlgebraTable& A) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (!vec_is_zero(A.structure(i, i))) {
            return fail("anticommutative", {i, i}, A.structure(i, i), A.zero());
        }
    }
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = i + 1; j < A.dim(); ++j) {
            if (!vec_is_zero(vec_add(A.structure(i, j), A.structure(j, i)))) {
                return fail("anticommutative", {i, j}, A.structure(i, j),
                            vec_neg(A.structure(j, i)));
            }
        }
    }
    return pass("anticommutative");
}

namespace {

IdentityReport check_triples(const AlgebraTable& A, const char* id,
                             Vec (*lhs)(const AlgebraTable&, std::size_t, std::size_t, std::size_t),
                             Vec (*rhs)(const AlgebraTable&, std::size_t, std::size_t, std::size_t)) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            for (std::size_t k = 0; k < A.dim(); ++k) {
                Vec l = lhs(A, i, j, k), r = rhs(A, i, j, k);
                if (l != r) return fail(id, {i, j, k}, std::move(l), std::move(r));
            }
        }
    }
    return pass(id);
}

Vec left_assoc(const AlgebraTable& A, std::size_t i, std::size_t j, std::size_t k) {
    return multiply(A, A.structure(i, j), A.unit(k));
}
Vec right_assoc(const AlgebraTable& A, std::size_t i, std::size_t j, std::size_t k) {
    return multiply(A, A.unit(i), A.structure(j, k));
}

}  // namespace

IdentityReport is_associative(const AlgebraTable& A) {
    return check_triples(A, "associative", left_assoc, right_assoc);
}

IdentityReport is_antiassociative(const AlgebraTable& A) {
    return check_triples(
        A, "antiassociative", left_assoc,
        [](const AlgebraTable& B, std::size_t i, std::size_t j, std::size_t k) {
            return vec_neg(right_assoc(B, i, j, k));
        });
}

IdentityReport is_right_leibniz(const AlgebraTable& A) {
    return check_triples(
        A, "right_leibniz", right_assoc,
        [](const AlgebraTable& B, std::size_t i, std::size_t j, std::size_t k) {
            return vec_sub(multiply(B, B.structure(i, j), B.unit(k)),
                           multiply(B, B.structure(i, k), B.unit(j)));
        });
}

IdentityReport is_left_leibniz(const AlgebraTable& A) {
    return check_triples(
        A, "left_leibniz", right_assoc,
        [](const AlgebraTable& B, std::size_t i, std::size_t j, std::size_t k) {
            return vec_add(multiply(B, B.structure(i, j), B.unit(k)),
                           multiply(B, B.unit(j), B.structure(i, k)));
        });
}

IdentityReport is_lie(const AlgebraTable& A) {
    IdentityReport ac = is_anticommutative(A);
    if (!ac.holds) return IdentityReport{"lie", false, ac.violation};
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            for (std::size_t k = 0; k < A.dim(); ++k) {
                Vec jac = vec_add(vec_add(multiply(A, A.unit(i), A.structure(j, k)),
                                          multiply(A, A.unit(j), A.structure(k, i))),
                                  multiply(A, A.unit(k), A.structure(i, j)));
                if (!vec_is_zero(jac)) return fail("lie", {i, j, k}, std::move(jac), A.zero());
            }
        }
    }
    return pass("lie");
}

IdentityReport dextral_identity(const AlgebraTable& A) {
    return check_triples(
        A, "dextral_identity",
        [](const AlgebraTable& B, std::size_t i, std::size_t j, std::size_t k) {
            return vec_add(multiply(B, B.unit(i), B.structure(j, k)),
                           multiply(B, B.unit(j), B.structure(i, k)));
        },
        [](const AlgebraTable& B, std::size_t, std::size_t, std::size_t) { return B.zero(); });
}

IdentityReport cyclic_triple_relations(const AlgebraTable& A) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            for (std::size_t k = 0; k < A.dim(); ++k) {
                Vec base = multiply(A, A.unit(i), A.structure(j, k));  // x(yz)
                const Vec plus[] = {
                    multiply(A, A.unit(j), A.structure(k, i)),  // y(zx)
                    multiply(A, A.unit(k), A.structure(i, j)),  // z(xy)
                };
                const Vec minus[] = {
                    multiply(A, A.unit(i), A.structure(k, j)),  // x(zy)
                    multiply(A, A.unit(j), A.structure(i, k)),  // y(xz)
                    multiply(A, A.unit(k), A.structure(j, i)),  // z(yx)
                };
                for (const Vec& v : plus) {
                    if (base != v) return fail("cyclic_triple_relations", {i, j, k}, base, v);
                }
                for (const Vec& v : minus) {
                    Vec nv = vec_neg(v);
                    if (base != nv) {
                        return fail("cyclic_triple_relations", {i, j, k}, base, std::move(nv));
                    }
                }
            }
        }
    }
    return pass("cyclic_triple_relations");
}

IdentityReport right_nesting_identity(const AlgebraTable& A) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            for (std::size_t k = 0; k < A.dim(); ++k) {
                for (std::size_t l = 0; l < A.dim(); ++l) {
                    Vec lhs = multiply(A, A.structure(i, j), A.structure(k, l));
                    Vec rhs =
                        multiply(A, A.unit(i), multiply(A, A.unit(j), A.structure(k, l)));
                    if (lhs != rhs) {
                        return fail("right_nesting_identity", {i, j, k, l}, std::move(lhs),
                                    std::move(rhs));
                    }
                }
            }
        }
    }
    return pass("right_nesting_identity");
}

std::vector<IdentityReport> identity_suite(const AlgebraTable& A) {
    return {is_commutative(A),   is_anticommutative(A),      is_associative(A),
            is_antiassociative(A), is_right_leibniz(A),      is_left_leibniz(A),
            is_lie(A),             dextral_identity(A),      cyclic_triple_relations(A),
            right_nesting_identity(A)};
}

}  // namespace dexsym
