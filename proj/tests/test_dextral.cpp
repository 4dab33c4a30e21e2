#include <doctest.h>

#include "dexsym/catalog.hpp"
#include "dexsym/dextral.hpp"
#include "dexsym/series.hpp"

using namespace dexsym;

namespace {

const FieldSpec Q = FieldSpec::rational();

// associative, non-commutative, dextral (a(bc) = b(ac) holds identically),
// but none of the proof tiers applies over the rationals
AlgebraTable shift_algebra(const FieldSpec& f = FieldSpec::rational()) {
    return AlgebraTable::from_sparse(
        "shift", f, {"e1", "e2"},
        {{"e1", "e1", {{Scalar::one(f), "e1"}}}, {"e1", "e2", {{Scalar::one(f), "e2"}}}});
}

}  // namespace

TEST_CASE("proved yes with the expected reasons") {
    DextralVerdict r1 = decide_dextral(catalog::default_instance("R1"));
    CHECK(r1.status == DextralStatus::ProvedYes);
    CHECK(*r1.reason == YesReason::AllTriplesZero);

    DextralVerdict g = decide_dextral(catalog::default_instance("gamma1"));
    CHECK(g.status == DextralStatus::ProvedYes);
    CHECK(*g.reason == YesReason::AllTriplesZero);

    DextralVerdict lie7 = decide_dextral(catalog::default_instance("lie7_char3"));
    CHECK(lie7.status == DextralStatus::ProvedYes);
    CHECK(*lie7.reason == YesReason::DextralIdentity);

    AlgebraTable zero_dim("nil", Q, {}, {});
    CHECK(decide_dextral(zero_dim).status == DextralStatus::ProvedYes);
}

TEST_CASE("structural sufficiency tier") {
    // commutative and associative, with nonzero triple products: e*e = e
    AlgebraTable unital = AlgebraTable::from_sparse("idem", Q, {"e"},
                                                    {{"e", "e", {{Scalar::one(Q), "e"}}}});
    DextralVerdict v = decide_dextral(unital);
    CHECK(v.status == DextralStatus::ProvedYes);
    CHECK(*v.reason == YesReason::StructuralSufficiency);
    CHECK(*v.sufficiency == SufficiencyCase::CommutativeAssociative);
}

TEST_CASE("proved no with the documented witnesses") {
    AlgebraTable n7 = catalog::default_instance("N7");
    DextralVerdict v = decide_dextral(n7);
    REQUIRE(v.status == DextralStatus::ProvedNo);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->a == n7.unit(1));  // y
    CHECK(v.witness->b == n7.unit(0));  // x
    CHECK(v.witness->c == n7.unit(0));  // x
    CHECK(vec_is_zero(v.witness->a_bc));
    CHECK(v.witness->b_ac == vec_neg(n7.unit(3)));  // [x,z] = -w
    CHECK(validate_witness(n7, *v.witness));

    AlgebraTable s2 = catalog::default_instance("S2");
    DextralVerdict vs = decide_dextral(s2);
    REQUIRE(vs.status == DextralStatus::ProvedNo);
    CHECK(vs.witness->a == s2.unit(0));
    CHECK(vs.witness->b == s2.unit(2));
    CHECK(vs.witness->c == s2.unit(2));
    CHECK(validate_witness(s2, *vs.witness));
}

TEST_CASE("witness validation rejects corrupted witnesses") {
    AlgebraTable n7 = catalog::default_instance("N7");
    Witness w = *decide_dextral(n7).witness;
    Witness bad = w;
    bad.b_ac = n7.zero();
    CHECK(!validate_witness(n7, bad));
    Witness swapped = w;
    std::swap(swapped.a, swapped.b);
    CHECK(!validate_witness(n7, swapped));
}

TEST_CASE("the coordinate scan finds witnesses beyond the basis patterns") {
    // e1e1 = e1e2 = -e1 - 2*e2, e2e1 = e1 + 2*e2, e2e2 = -2*e2: the first
    // refutation has a = -e1 - e2, b = -e2, c = -e1 - e2, where
    // bc = e1, a(bc) = 0 and b(ac) = e1 - 6*e2
    auto q = [](long n) { return Scalar::of_int(n, FieldSpec::rational()); };
    std::vector<std::vector<Vec>> sc{{{q(-1), q(-2)}, {q(-1), q(-2)}},
                                     {{q(1), q(2)}, {q(0), q(-2)}}};
    AlgebraTable A("scan-only", FieldSpec::rational(), {"e1", "e2"}, sc);
    REQUIRE(!is_right_leibniz(A).holds);
    DextralVerdict v = decide_dextral(A);
    REQUIRE(v.status == DextralStatus::ProvedNo);
    CHECK(v.witness->a == Vec{q(-1), q(-1)});
    CHECK(v.witness->b == Vec{q(0), q(-1)});
    CHECK(v.witness->c == Vec{q(-1), q(-1)});
    CHECK(v.witness->b_ac == Vec{q(1), q(-6)});
    CHECK(validate_witness(A, *v.witness));
}

TEST_CASE("the honest Unknown and its finite-field resolution") {
    DextralVerdict u = decide_dextral(shift_algebra());
    CHECK(u.status == DextralStatus::Unknown);

    // in characteristic 2 the tier-2 identity x(yz) + y(xz) = 0 holds
    // because a(bc) = b(ac) identically here
    DextralVerdict f2 = decide_dextral(shift_algebra(FieldSpec::prime(2)));
    CHECK(f2.status == DextralStatus::ProvedYes);
    CHECK(*f2.reason == YesReason::DextralIdentity);

    // over GF(3) no proof tier fires and no witness exists, so the decision
    // falls through to full enumeration
    DextralVerdict f3 = decide_dextral(shift_algebra(FieldSpec::prime(3)));
    CHECK(f3.status == DextralStatus::ProvedYes);
    CHECK(*f3.reason == YesReason::ExhaustiveEnumeration);
    CHECK(exhaustive_oracle(shift_algebra(FieldSpec::prime(3))).status ==
          DextralStatus::ProvedYes);
}

TEST_CASE("is_symmetric_ideal") {
    AlgebraTable n17 = catalog::default_instance("N17");
    CHECK(is_symmetric_ideal(n17, Subspace::full(Q, 4)).status == DextralStatus::ProvedYes);
    CHECK(is_symmetric_ideal(n17, Subspace::zero(Q, 4)).status ==
          decide_dextral(n17).status);
    // quotient by span{w} has the single product [x,y] = z
    CHECK(is_symmetric_ideal(n17, Subspace::span(Q, 4, {n17.unit(3)})).status ==
          DextralStatus::ProvedYes);

    // Lprime is not dextral; the zero ideal therefore is not symmetric, and
    // the lifted witness must validate modulo the ideal
    AlgebraTable lp = catalog::default_instance("Lprime");
    DextralVerdict v = is_symmetric_ideal(lp, Subspace::zero(Q, 3));
    REQUIRE(v.status == DextralStatus::ProvedNo);
    CHECK(validate_witness_mod(lp, Subspace::zero(Q, 3), *v.witness));
    CHECK(validate_witness(lp, *v.witness));

    CHECK_THROWS_AS(is_symmetric_ideal(lp, Subspace::span(Q, 3, {lp.unit(2)})), error);
}

TEST_CASE("witness lifting through a proper ideal") {
    AlgebraTable s2 = catalog::default_instance("S2");
    Subspace I = Subspace::span(Q, 4, {s2.unit(0)});  // span{x} is an ideal of S2
    REQUIRE(is_ideal(s2, I));
    DextralVerdict v = is_symmetric_ideal(s2, I);
    REQUIRE(v.status == DextralStatus::ProvedNo);
    CHECK(v.witness->a.size() == 4);  // lifted to the ambient algebra
    CHECK(validate_witness_mod(s2, I, *v.witness));
}

TEST_CASE("exhaustive oracle") {
    AlgebraTable g2 = catalog::instantiate("gamma1", {}, FieldSpec::prime(2));
    CHECK(exhaustive_oracle(g2).status == DextralStatus::ProvedYes);

    const FieldSpec F3 = FieldSpec::prime(3);
    AlgebraTable bad = AlgebraTable::from_sparse(
        "xz", F3, {"x", "z"},
        {{"x", "z", {{Scalar::one(F3), "x"}}}, {"z", "x", {{-Scalar::one(F3), "x"}}}});
    DextralVerdict v = exhaustive_oracle(bad);
    REQUIRE(v.status == DextralStatus::ProvedNo);
    CHECK(validate_witness(bad, *v.witness));

    AlgebraTable z5("zero", FieldSpec::prime(5), {"a"},
                    {{zero_vec(FieldSpec::prime(5), 1)}});
    CHECK(exhaustive_oracle(z5).status == DextralStatus::ProvedYes);

    CHECK_THROWS_AS(exhaustive_oracle(catalog::default_instance("gamma1")), error);
    AlgebraTable big = catalog::instantiate("N7", {}, FieldSpec::prime(5));
    CHECK_THROWS_AS(exhaustive_oracle(big, 1000), error);
}

TEST_CASE("oracle agreement on transported small tables") {
    for (const char* id : {"gamma1", "mu2", "mu5", "lnotr", "Lprime"}) {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            AlgebraTable A = catalog::instantiate(id, {}, FieldSpec::prime(p));
            CHECK(decide_dextral(A).status == exhaustive_oracle(A).status);
        }
    }
}

TEST_CASE("cb condition over GF(p)") {
    const FieldSpec F3 = FieldSpec::prime(3);
    AlgebraTable zero3("zero", F3, {"a", "b"},
                       std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, zero_vec(F3, 2))));
    CHECK(is_cb_algebra(zero3));

    AlgebraTable bad = AlgebraTable::from_sparse(
        "xz", F3, {"x", "z"},
        {{"x", "z", {{Scalar::one(F3), "x"}}}, {"z", "x", {{-Scalar::one(F3), "x"}}}});
    CHECK(!is_cb_algebra(bad));  // x*x = 0 but (x z) x = x*x... [z,[x,z]] route refutes

    CHECK(is_cb_algebra(catalog::default_instance("lie7_char3")));
    CHECK_THROWS_AS(is_cb_algebra(catalog::default_instance("gamma1")), error);
}

TEST_CASE("subalgebras of dextral algebras stay dextral") {
    AlgebraTable A = catalog::default_instance("R2");
    REQUIRE(decide_dextral(A).status == DextralStatus::ProvedYes);
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Subspace S = close_under_product(A, Subspace::span(Q, A.dim(), {A.unit(i)}));
        CHECK(decide_dextral(restrict_to_subalgebra(A, S)).status ==
              DextralStatus::ProvedYes);
    }
}

TEST_CASE("direct sums of dextral algebras stay dextral") {
    AlgebraTable a = catalog::default_instance("lnotr");
    AlgebraTable b = catalog::default_instance("R1");
    CHECK(decide_dextral(direct_sum(a, b)).status == DextralStatus::ProvedYes);
    AlgebraTable l7 = catalog::default_instance("lie7_char3");
    CHECK(decide_dextral(direct_sum(l7, l7)).status == DextralStatus::ProvedYes);
}

TEST_CASE("yes-verdict reasons re-validate by basis scan") {
    for (const auto& id : catalog::list()) {
        AlgebraTable A = catalog::default_instance(id);
        DextralVerdict v = decide_dextral(A);
        if (v.status != DextralStatus::ProvedYes) continue;
        if (*v.reason == YesReason::AllTriplesZero) {
            for (std::size_t i = 0; i < A.dim(); ++i) {
                for (std::size_t j = 0; j < A.dim(); ++j) {
                    for (std::size_t k = 0; k < A.dim(); ++k) {
                        CHECK(vec_is_zero(multiply(A, A.unit(i), A.structure(j, k))));
                    }
                }
            }
        } else if (*v.reason == YesReason::DextralIdentity) {
            CHECK(dextral_identity(A).holds);
        }
    }
}

TEST_CASE("on right Leibniz tables the verdict agrees with the identity") {
    // the tier-2 identity is equivalent to dextral symmetry for right
    // Leibniz algebras; observable across the whole catalog
    for (const auto& id : catalog::list()) {
        AlgebraTable A = catalog::default_instance(id);
        REQUIRE(is_right_leibniz(A).holds);
        CHECK((decide_dextral(A).status == DextralStatus::ProvedYes) ==
              dextral_identity(A).holds);
    }
}
