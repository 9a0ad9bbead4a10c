#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ringlab/classify.hpp"
#include "test_util.hpp"

using namespace ringlab;
using namespace ringlab::testutil;

TEST_CASE("classify_element examples") {
    auto z25 = make_zmod(25);
    auto r5 = classify_element(*z25, 5);
    CHECK(r5.nilpotent);
    CHECK(r5.nilpotency_index == 2u);
    CHECK_FALSE(r5.unit);
    CHECK_FALSE(r5.idempotent);
    CHECK(r5.two_idempotent);  // 5^2 = 0 = 5^4

    auto z4 = make_zmod(4);
    auto r2 = classify_element(*z4, 2);
    CHECK(r2.two_idempotent);
    CHECK_FALSE(r2.tripotent);

    auto r3 = classify_element(*z25, 3);
    CHECK(r3.unit);
    CHECK(r3.inverse == 17u);
    CHECK_FALSE(r3.nilpotent);
    CHECK_FALSE(r3.nilpotency_index.has_value());
}

TEST_CASE("enumerate_class examples") {
    auto z25 = make_zmod(25);
    CHECK(enumerate_class(*z25, ElementClass::nilpotents) == std::vector<u32>{0, 5, 10, 15, 20});
    CHECK(enumerate_class(*z25, ElementClass::tripotents) == std::vector<u32>{0, 1, 24});

    auto z4 = make_zmod(4);
    CHECK(enumerate_class(*z4, ElementClass::two_idempotents) == std::vector<u32>{0, 1, 2, 3});
}

TEST_CASE("zmod classes match the number-theoretic oracles") {
    for (u64 n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 20, 24, 25, 27, 30, 45, 49, 90}) {
        auto R = make_zmod(n);
        CHECK(enumerate_class(*R, ElementClass::nilpotents) == zmod_nilpotents_oracle(n));
        CHECK(enumerate_class(*R, ElementClass::units) == zmod_units_oracle(n));
        CHECK(jacobson_radical(*R) == zmod_jacobson_oracle(n));
    }
}

TEST_CASE("jacobson radical examples") {
    CHECK(jacobson_radical(*make_zmod(25)) == std::vector<u32>{0, 5, 10, 15, 20});
    CHECK(jacobson_radical(*make_zmod(6)) == std::vector<u32>{0});

    auto t2 = make_triangular_ring(2, make_zmod(2));
    const auto& mr = static_cast<const MatrixRingBase&>(*t2);
    u32 e12 = mr.from_entries({{0, 1}, {0, 0}});
    auto jac = jacobson_radical(*t2);
    CHECK(jac == std::vector<u32>{t2->zero(), e12});
}

TEST_CASE("jacobson radical is a nil two-sided ideal on the corpus") {
    for (const auto& R : small_corpus()) {
        auto jac = jacobson_radical(*R);
        std::vector<bool> in(R->size(), false);
        for (u32 x : jac) in[x] = true;
        for (u32 x : jac) {
            CHECK(is_nilpotent(*R, x));
            for (u32 y : jac) CHECK(in[R->add(x, y)]);
            for (u32 r = 0; r < R->size(); ++r) {
                CHECK(in[R->mul(r, x)]);
                CHECK(in[R->mul(x, r)]);
            }
        }
    }
}

TEST_CASE("is_local examples") {
    auto l25 = is_local(*make_zmod(25));
    CHECK(l25.local);
    CHECK(l25.residue_size == 5);
    CHECK(l25.residue_field);
    CHECK(l25.residue_field_in_235);

    CHECK_FALSE(is_local(*make_zmod(6)).local);

    auto l49 = is_local(*make_zmod(49));
    CHECK(l49.local);
    CHECK(l49.residue_size == 7);
    CHECK_FALSE(l49.residue_field_in_235);
}

TEST_CASE("ring_identities examples") {
    auto i30 = ring_identities(*make_zmod(30));
    CHECK(i30.reduced);
    CHECK(i30.x5_equals_x);
    CHECK(i30.quintic_identity);
    CHECK(i30.commutative);
    CHECK(i30.bounded_index == 1);

    CHECK(ring_identities(*make_zmod(8)).bounded_index == 3);
    CHECK_FALSE(ring_identities(*make_zmod(25)).x5_equals_x);
}

TEST_CASE("flag implications hold on every corpus element") {
    for (const auto& R : small_corpus()) {
        for (u32 a = 0; a < R->size(); ++a) {
            auto c = classify_element(*R, a);
            if (c.idempotent) CHECK(c.tripotent);
            if (c.tripotent) CHECK(c.two_idempotent);
            if (c.unipotent) CHECK(c.unit);
            if (c.nilpotent && c.idempotent) CHECK(a == R->zero());
            if (c.nilpotent && c.unit) CHECK(R->size() == 1);
            CHECK(c.nilpotent == c.nilpotency_index.has_value());
        }
    }
}

TEST_CASE("nilpotents are closed under addition in commutative rings") {
    for (const auto& R : small_corpus()) {
        if (!ring_identities(*R).commutative) continue;
        auto nil = enumerate_class(*R, ElementClass::nilpotents);
        std::vector<bool> in(R->size(), false);
        for (u32 x : nil) in[x] = true;
        for (u32 x : nil)
            for (u32 y : nil) CHECK(in[R->add(x, y)]);
    }
}

TEST_CASE("x^5 = x forces reducedness on the corpus") {
    for (const auto& R : small_corpus()) {
        auto ids = ring_identities(*R);
        if (ids.x5_equals_x) CHECK(ids.reduced);
    }
}

TEST_CASE("power-iteration unit test agrees with the inverse scan") {
    for (const auto& R : small_corpus()) {
        if (R->size() > 64) continue;
        for (u32 a = 0; a < R->size(); ++a)
            CHECK(is_unit_by_powers(*R, a) == inverse_of(*R, a).has_value());
    }
}

TEST_CASE("nilpotency index is least") {
    for (const auto& R : small_corpus()) {
        if (R->size() > 32) continue;
        for (u32 a = 0; a < R->size(); ++a) {
            auto idx = nilpotency_index(*R, a);
            if (!idx) continue;
            CHECK(R->pow(a, *idx) == R->zero());
            if (*idx > 1) CHECK(R->pow(a, *idx - 1) != R->zero());
        }
    }
}
