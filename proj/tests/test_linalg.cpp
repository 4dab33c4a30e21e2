#include <doctest.h>

#include <random>

#include "dexsym/linalg.hpp"

using namespace dexsym;

namespace {

const FieldSpec Q = FieldSpec::rational();

Vec qvec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Scalar::of_int(x, Q));
    return v;
}

Vec fvec(std::initializer_list<long> xs, const FieldSpec& f) {
    Vec v;
    for (long x : xs) v.push_back(Scalar::of_int(x, f));
    return v;
}

}  // namespace

TEST_CASE("rref basics") {
    Subspace s = rref(Q, 2, {qvec({1, 1}), qvec({0, 1})});
    REQUIRE(s.dim() == 2);
    CHECK(s.basis()[0] == qvec({1, 0}));
    CHECK(s.basis()[1] == qvec({0, 1}));

    Subspace t = rref(Q, 2, {qvec({2, 4})});
    REQUIRE(t.dim() == 1);
    CHECK(t.basis()[0] == qvec({1, 2}));
}

TEST_CASE("rref over GF(3) drops dependent rows") {
    const FieldSpec F3 = FieldSpec::prime(3);
    Subspace s = rref(F3, 2, {fvec({1, 1}, F3), fvec({2, 2}, F3)});
    REQUIRE(s.dim() == 1);
    CHECK(s.basis()[0] == fvec({1, 1}, F3));
}

TEST_CASE("rref is idempotent and rejects ragged rows") {
    Subspace s = rref(Q, 3, {qvec({1, 2, 3}), qvec({0, 1, 1}), qvec({1, 3, 4})});
    Subspace again = rref(Q, 3, s.basis());
    CHECK(s == again);
    CHECK_THROWS_AS(rref(Q, 3, {qvec({1, 2})}), error);
}

TEST_CASE("subspace sum") {
    Subspace u = Subspace::span(Q, 3, {qvec({1, 0, 0})});
    Subspace v = Subspace::span(Q, 3, {qvec({0, 1, 0})});
    Subspace s = subspace_sum(u, v);
    CHECK(s.dim() == 2);
    CHECK(subspace_sum(u, u) == u);

    Subspace a = Subspace::span(Q, 3, {qvec({1, 1, 0})});
    Subspace b = Subspace::span(Q, 3, {qvec({0, 1, 1})});
    Subspace c = subspace_sum(a, b);
    CHECK(c.dim() == 2);
    CHECK(c.contains(qvec({1, 0, -1})));

    Subspace wrong = Subspace::span(Q, 2, {qvec({1, 0})});
    CHECK_THROWS_AS(subspace_sum(u, wrong), error);
}

TEST_CASE("membership, equality, inclusion") {
    Subspace e1 = Subspace::span(Q, 2, {qvec({1, 0})});
    CHECK(subspace_contains(e1, qvec({3, 0})));
    CHECK(!subspace_contains(e1, qvec({0, 1})));
    CHECK(subspace_eq(Subspace::span(Q, 2, {qvec({1, 2})}),
                      Subspace::span(Q, 2, {qvec({2, 4})})));
    Subspace e2 = Subspace::span(Q, 2, {qvec({0, 1})});
    CHECK(!subspace_leq(e1, e2));
    CHECK(subspace_leq(e1, Subspace::full(Q, 2)));
    CHECK(subspace_leq(Subspace::zero(Q, 2), e1));
}

TEST_CASE("coordinates in the echelon basis") {
    Subspace s = Subspace::span(Q, 3, {qvec({1, 0, 2}), qvec({0, 1, -1})});
    Vec v = vec_add(vec_scale(Scalar::of_int(3, Q), s.basis()[0]),
                    vec_scale(Scalar::of_int(-2, Q), s.basis()[1]));
    Vec coords = s.coordinates(v);
    REQUIRE(coords.size() == 2);
    CHECK(coords[0] == Scalar::of_int(3, Q));
    CHECK(coords[1] == Scalar::of_int(-2, Q));
    CHECK_THROWS_AS(s.coordinates(qvec({0, 0, 1})), error);
}

TEST_CASE("canonical form does not depend on the generating set") {
    std::mt19937_64 rng(0x11);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<Vec> rows;
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t r = 0; r < k; ++r) {
            Vec v = zero_vec(Q, n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = Scalar::of_int(static_cast<long>(rng() % 7) - 3, Q);
            }
            rows.push_back(std::move(v));
        }
        Subspace s = rref(Q, n, rows);

        // shuffle, rescale, and mix rows; the span is unchanged
        std::vector<Vec> mixed;
        for (std::size_t r = rows.size(); r-- > 0;) {
            Vec v = vec_scale(Scalar::of_int(1 + static_cast<long>(rng() % 3), Q), rows[r]);
            if (r > 0) v = vec_add(v, rows[r - 1]);
            mixed.push_back(std::move(v));
        }
        mixed.push_back(rows.front());
        Subspace s2 = rref(Q, n, mixed);
        CHECK(s == s2);
    }
}

TEST_CASE("eq is leq both ways on random subspaces") {
    const FieldSpec F5 = FieldSpec::prime(5);
    std::mt19937_64 rng(0x22);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 3;
        auto random_space = [&] {
            std::vector<Vec> rows;
            const std::size_t k = 1 + rng() % 2;
            for (std::size_t r = 0; r < k; ++r) {
                Vec v = zero_vec(F5, n);
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] = Scalar::of_int(static_cast<long>(rng() % 5), F5);
                }
                rows.push_back(std::move(v));
            }
            return rref(F5, n, rows);
        };
        Subspace u = random_space(), v = random_space();
        CHECK(subspace_eq(u, v) == (subspace_leq(u, v) && subspace_leq(v, u)));
    }
}

TEST_CASE("zero-dimensional ambient space") {
    Subspace z = Subspace::zero(Q, 0);
    CHECK(z.dim() == 0);
    CHECK(Subspace::full(Q, 0) == z);
    CHECK(z.contains(Vec{}));
}
