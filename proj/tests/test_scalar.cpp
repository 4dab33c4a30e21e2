#include <doctest.h>

#include <random>

#include "dexsym/scalar.hpp"

using namespace dexsym;

TEST_CASE("field construction") {
    CHECK(FieldSpec::rational().characteristic() == 0);
    CHECK(FieldSpec::prime(2).characteristic() == 2);
    CHECK(FieldSpec::prime(97).modulus() == 97);
    CHECK_THROWS_AS(FieldSpec::prime(1), error);
    CHECK_THROWS_AS(FieldSpec::prime(4), error);
    CHECK_THROWS_AS(FieldSpec::prime(91), error);  // 7 * 13
    CHECK(FieldSpec::rational().str() == "QQ");
    CHECK(FieldSpec::prime(5).str() == "GF(5)");
}

TEST_CASE("rational scalars are canonical") {
    const FieldSpec Q = FieldSpec::rational();
    Scalar a = Scalar::of_rat(mpq_class(2, 4), Q);
    CHECK(a.str() == "1/2");
    CHECK(Scalar::of_rat(mpq_class(-6, -4), Q).str() == "3/2");
    CHECK(Scalar::of_rat(mpq_class(6, -4), Q).str() == "-3/2");
    CHECK(Scalar::of_int(-7, Q).str() == "-7");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * Scalar::of_int(4, Q)).str() == "2");
    CHECK((Scalar::one(Q) / Scalar::of_int(-3, Q)).str() == "-1/3");
    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), error);
}

TEST_CASE("scalar parsing") {
    const FieldSpec Q = FieldSpec::rational();
    CHECK(Scalar::parse("3/6", Q).str() == "1/2");
    CHECK(Scalar::parse("-12", Q).str() == "-12");
    CHECK(Scalar::parse("0", Q).is_zero());
    CHECK_THROWS_AS(Scalar::parse("", Q), error);
    CHECK_THROWS_AS(Scalar::parse("1/0", Q), error);
    CHECK_THROWS_AS(Scalar::parse("1.5", Q), error);
    CHECK_THROWS_AS(Scalar::parse("a/b", Q), error);
    CHECK_THROWS_AS(Scalar::parse("1/-2", Q), error);
    CHECK_THROWS_AS(Scalar::parse("--2", Q), error);
}

TEST_CASE("prime field arithmetic") {
    const FieldSpec F5 = FieldSpec::prime(5);
    Scalar three = Scalar::of_int(3, F5);
    Scalar four = Scalar::of_int(-1, F5);
    CHECK(four.str() == "4");
    CHECK((three + three).str() == "1");
    CHECK((three * three).str() == "4");
    CHECK((-three).str() == "2");
    CHECK(three.inverse().str() == "2");
    CHECK((three / four).str() == "2");  // 4^{-1} = 4, and 3 * 4 = 12 = 2 mod 5
}

TEST_CASE("prime field division against multiplication") {
    const FieldSpec F7 = FieldSpec::prime(7);
    for (long a = 0; a < 7; ++a) {
        for (long b = 1; b < 7; ++b) {
            Scalar q = Scalar::of_int(a, F7) / Scalar::of_int(b, F7);
            CHECK(q * Scalar::of_int(b, F7) == Scalar::of_int(a, F7));
        }
    }
}

TEST_CASE("rational embedding into GF(p)") {
    const FieldSpec F3 = FieldSpec::prime(3);
    CHECK(Scalar::of_rat(mpq_class(1, 2), F3).str() == "2");  // 1/2 = 2 mod 3
    CHECK(Scalar::of_rat(mpq_class(4), F3).str() == "1");
    CHECK_THROWS_AS(Scalar::of_rat(mpq_class(1, 3), F3), error);
    CHECK_THROWS_AS(Scalar::of_rat(mpq_class(5, 6), F3), error);
}

TEST_CASE("field mismatch is an error") {
    Scalar q = Scalar::one(FieldSpec::rational());
    Scalar f = Scalar::one(FieldSpec::prime(3));
    CHECK_THROWS_AS(q + f, error);
    CHECK(q != f);
}

TEST_CASE("Fermat: a^p = a in GF(p) for p in {2,3,5}") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const FieldSpec F = FieldSpec::prime(p);
        for (unsigned long a = 0; a < p; ++a) {
            Scalar x = Scalar::of_int(static_cast<long>(a), F);
            Scalar power = Scalar::one(F);
            for (unsigned long k = 0; k < p; ++k) power *= x;
            CHECK(power == x);
        }
    }
}

TEST_CASE("rational arithmetic is exact on random fractions") {
    const FieldSpec Q = FieldSpec::rational();
    std::mt19937_64 rng(0xabcd);
    for (int t = 0; t < 200; ++t) {
        long an = static_cast<long>(rng() % 2001) - 1000;
        long ad = 1 + static_cast<long>(rng() % 999);
        long cn = static_cast<long>(rng() % 2001) - 1000;
        long cd = 1 + static_cast<long>(rng() % 999);
        Scalar a = Scalar::of_rat(mpq_class(an, ad), Q);
        Scalar c = Scalar::of_rat(mpq_class(cn, cd), Q);
        CHECK((a + c) - c == a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}
