#include <doctest.h>

#include <algorithm>

#include "dexsym/catalog.hpp"
#include "dexsym/identities.hpp"
#include "dexsym/series.hpp"

using namespace dexsym;

TEST_CASE("listing and lookup") {
    const auto& ids = catalog::list();
    CHECK(ids.size() == 42);
    CHECK(ids[0] == "lnotr");
    CHECK(ids[1] == "Lprime");
    CHECK(std::find(ids.begin(), ids.end(), "N7") != ids.end());
    auto pos = [&](const char* id) {
        return std::find(ids.begin(), ids.end(), id) - ids.begin();
    };
    CHECK(pos("gamma1") < pos("mu1"));
    CHECK(pos("mu5") < pos("N1"));
    CHECK(pos("N22") < pos("R1"));
    CHECK(pos("S3") < pos("L1"));
    CHECK(pos("R5") < pos("towers_n"));

    CHECK(catalog::get("gamma1").basis({}).size() == 2);
    CHECK_THROWS_AS(catalog::get("nope"), error);
    CHECK_THROWS_AS(catalog::expected("nope"), error);
}

TEST_CASE("instantiate with parameters") {
    AlgebraTable a0 = catalog::instantiate("N20", {{"alpha", 0}});
    CHECK(a0.structure(1, 0) == a0.unit(3));  // [y,x] = 1*w at alpha = 0
    AlgebraTable a3 = catalog::instantiate("N20", {{"alpha", 3}});
    CHECK(a3.structure(1, 0) ==
          vec_scale(Scalar::of_int(-2, a3.field()), a3.unit(3)));  // (1+3)/(1-3) = -2
    CHECK_THROWS_AS(catalog::instantiate("N20", {{"alpha", 1}}), error);
    CHECK_THROWS_AS(catalog::instantiate("N4", {{"alpha", 2}}), error);
    CHECK_THROWS_AS(catalog::instantiate("gamma1", {{"alpha", 1}}), error);
}

TEST_CASE("the tower family scales with n") {
    AlgebraTable t5 = catalog::instantiate("towers_n", {{"n", 5}});
    REQUIRE(t5.dim() == 5);
    for (std::size_t i = 0; i + 1 < 5; ++i) {
        CHECK(t5.structure(i, 4) == t5.unit(i));
        CHECK(vec_is_zero(t5.structure(4, i)));
    }
    CHECK_THROWS_AS(catalog::instantiate("towers_n", {{"n", 1}}), error);
    CHECK_THROWS_AS(catalog::instantiate("towers_n", {{"n", mpq_class(3, 2)}}), error);
}

TEST_CASE("field requirements") {
    AlgebraTable lie7 = catalog::default_instance("lie7_char3");
    CHECK(lie7.field() == FieldSpec::prime(3));
    CHECK_THROWS_AS(catalog::instantiate("lie7_char3", {}, FieldSpec::rational()), error);
    CHECK_THROWS_AS(catalog::instantiate("lie7_char3", {}, FieldSpec::prime(5)), error);

    AlgebraTable g3 = catalog::instantiate("gamma1", {}, FieldSpec::prime(3));
    CHECK(g3.field() == FieldSpec::prime(3));
    // alpha = 1/5 gives the coefficient (1+1/5)/(1-1/5) = 3/2, which cannot
    // embed into GF(2)
    CHECK_THROWS_AS(catalog::instantiate("N20", {{"alpha", mpq_class(1, 5)}},
                                         FieldSpec::prime(2)),
                    error);
}

TEST_CASE("sample_params respects domains") {
    std::vector<mpq_class> base{-2, -1, 0, 1, 2};
    auto n20 = catalog::sample_params("N20", base);
    CHECK(n20.size() == 4);  // alpha = 1 excluded
    for (const auto& pm : n20) CHECK(pm.at("alpha") != 1);
    auto n4 = catalog::sample_params("N4", base);
    CHECK(n4.size() == 2);
    auto plain = catalog::sample_params("gamma1", base);
    CHECK(plain.size() == 1);
    CHECK(plain[0].empty());
    auto towers = catalog::sample_params("towers_n", base);
    for (const auto& pm : towers) CHECK(pm.at("n") >= 2);
}

TEST_CASE("expected property records") {
    CHECK(catalog::expected("R1").dextral);
    CHECK(!catalog::expected("S2").left_nilpotent);
    CHECK(!catalog::expected("L2").dextral);
    CHECK(catalog::expected("N7").witness_pattern ==
          std::array<std::size_t, 3>{1, 0, 0});
    CHECK(catalog::expected("R2").nilradical == "mu3");
    CHECK(catalog::expected("R4").nilradical == "mu1");
    CHECK(catalog::expected("L1").nilradical == "mu2");
}

TEST_CASE("every default instance is a right Leibniz algebra") {
    for (const auto& id : catalog::list()) {
        AlgebraTable A = catalog::default_instance(id);
        CHECK(is_right_leibniz(A).holds);
    }
}

TEST_CASE("computed properties match the expected records at sampled parameters") {
    std::vector<mpq_class> base{-2, -1, 0, 1, 2};
    for (const auto& id : catalog::list()) {
        const auto& exp = catalog::expected(id);
        for (const auto& pm : catalog::sample_params(id, base)) {
            AlgebraTable A = catalog::instantiate(id, pm);
            CHECK((decide_dextral(A).status == DextralStatus::ProvedYes) == exp.dextral);
            CHECK(is_solvable(A).holds == exp.solvable);
            CHECK(is_left_nilpotent(A).holds == exp.left_nilpotent);
            CHECK(is_right_nilpotent(A).holds == exp.right_nilpotent);
        }
    }
}

TEST_CASE("unknown parameter names are rejected") {
    CHECK_THROWS_AS(catalog::instantiate("mu3", {{"beta", 1}}), error);
}

TEST_CASE("instance names are deterministic") {
    CHECK(catalog::default_instance("gamma1").name() == "gamma1");
    CHECK(catalog::instantiate("mu3", {{"alpha", mpq_class(1, 2)}}).name() ==
          "mu3[alpha=1/2]");
}
