#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "ringlab/ring.hpp"
#include "test_util.hpp"

using namespace ringlab;
using namespace ringlab::testutil;

TEST_CASE("make_zmod basics") {
    auto z6 = make_zmod(6);
    CHECK(z6->size() == 6);
    CHECK(z6->zero() == 0);
    CHECK(z6->one() == 1);

    auto z25 = make_zmod(25);
    CHECK(z25->size() == 25);
    CHECK(z25->mul(5, 5) == 0);

    auto z1 = make_zmod(1);
    CHECK(z1->size() == 1);
    CHECK(z1->zero() == z1->one());

    CHECK_THROWS_AS(make_zmod(0), PreconditionError);
    CHECK_THROWS_AS(make_zmod(kDefaultCarrierCap + 1), SizeLimitError);
    CHECK(make_zmod(kDefaultCarrierCap + 1, kDefaultCarrierCap + 1)->size() ==
          kDefaultCarrierCap + 1);
}

TEST_CASE("make_product sizes and componentwise arithmetic") {
    auto p = make_product({make_zmod(2), make_zmod(3)});
    CHECK(p->size() == 6);

    auto single = make_product({make_zmod(2)});
    auto z2 = make_zmod(2);
    REQUIRE(single->size() == 2);
    for (u32 a = 0; a < 2; ++a)
        for (u32 b = 0; b < 2; ++b) {
            CHECK(single->add(a, b) == z2->add(a, b));
            CHECK(single->mul(a, b) == z2->mul(a, b));
        }

    auto triple = make_product({make_zmod(4), make_zmod(9), make_zmod(5)});
    CHECK(triple->size() == 180);

    CHECK_THROWS_AS(make_product({}), PreconditionError);
    CHECK_THROWS_AS(make_product({make_zmod(300), make_zmod(300)}), SizeLimitError);
}

TEST_CASE("matrix and triangular ring sizes") {
    CHECK(make_matrix_ring(2, make_zmod(2))->size() == 16);
    CHECK(make_matrix_ring(2, make_zmod(4))->size() == 256);
    CHECK(make_triangular_ring(2, make_zmod(2))->size() == 8);
    CHECK(make_triangular_ring(3, make_zmod(2))->size() == 64);
    CHECK(make_triangular_ring(2, make_zmod(4))->size() == 64);
    CHECK_THROWS_AS(make_matrix_ring(2, make_zmod(300)), SizeLimitError);
}

TEST_CASE("M1(Z7) has the arithmetic of Z7") {
    auto m1 = make_matrix_ring(1, make_zmod(7));
    auto z7 = make_zmod(7);
    REQUIRE(m1->size() == 7);
    for (u32 a = 0; a < 7; ++a)
        for (u32 b = 0; b < 7; ++b) {
            CHECK(m1->add(a, b) == z7->add(a, b));
            CHECK(m1->mul(a, b) == z7->mul(a, b));
        }
}

TEST_CASE("corner rings") {
    auto t2 = make_triangular_ring(2, make_zmod(2));
    const auto& mr = static_cast<const MatrixRingBase&>(*t2);
    u32 e = mr.from_entries({{1, 0}, {0, 0}});

    auto corner = make_corner(t2, e);
    REQUIRE(corner->size() == 2);
    // same arithmetic as Z2
    auto z2 = make_zmod(2);
    for (u32 a = 0; a < 2; ++a)
        for (u32 b = 0; b < 2; ++b) {
            CHECK(corner->add(a, b) == z2->add(a, b));
            CHECK(corner->mul(a, b) == z2->mul(a, b));
        }

    auto full = make_corner(t2, t2->one());
    CHECK(full->size() == t2->size());
    auto zero = make_corner(t2, t2->zero());
    CHECK(zero->size() == 1);

    u32 e12 = mr.from_entries({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(make_corner(t2, e12), PreconditionError);

    // noncommutative base: e M2(Z2) e at a rank-1 idempotent is Z2 again
    auto m2 = make_matrix_ring(2, make_zmod(2));
    const auto& m2r = static_cast<const MatrixRingBase&>(*m2);
    auto em = make_corner(m2, m2r.from_entries({{1, 0}, {0, 0}}));
    REQUIRE(em->size() == 2);
    CHECK(em->mul(em->one(), em->one()) == em->one());
    CHECK(em->add(em->one(), em->one()) == em->zero());
}

TEST_CASE("central quotients") {
    auto z90 = make_zmod(90);
    auto q = make_quotient_central(z90, {4});
    CHECK(q->size() == 2);  // 4 Z90 = 2 Z90

    auto q0 = make_quotient_central(z90, {0});
    CHECK(q0->size() == 90);
    auto q1 = make_quotient_central(z90, {1});
    CHECK(q1->size() == 1);

    auto t2 = make_triangular_ring(2, make_zmod(2));
    const auto& mr = static_cast<const MatrixRingBase&>(*t2);
    u32 e12 = mr.from_entries({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(make_quotient_central(t2, {e12}), PreconditionError);

    // projection is a surjective ring homomorphism
    const auto& qr = static_cast<const QuotientRing&>(*q);
    for (u32 x = 0; x < 90; ++x)
        for (u32 y = 0; y < 90; ++y) {
            CHECK(qr.project(z90->add(x, y)) == q->add(qr.project(x), qr.project(y)));
            CHECK(qr.project(z90->mul(x, y)) == q->mul(qr.project(x), qr.project(y)));
        }
    CHECK(qr.project(z90->one()) == q->one());
    std::vector<bool> hit(q->size(), false);
    for (u32 x = 0; x < 90; ++x) hit[qr.project(x)] = true;
    for (bool h : hit) CHECK(h);
}

TEST_CASE("generated subrings") {
    auto z25 = make_zmod(25);
    CHECK(subring_generated(z25, 2)->size() == 25);

    auto z6 = make_zmod(6);
    CHECK(subring_generated(z6, 0)->size() == 6);

    auto t2 = make_triangular_ring(2, make_zmod(2));
    const auto& mr = static_cast<const MatrixRingBase&>(*t2);
    u32 e12 = mr.from_entries({{0, 1}, {0, 0}});
    auto sub = subring_generated(t2, e12);
    REQUIRE(sub->size() == 4);
    const auto& sr = static_cast<const GeneratedSubring&>(*sub);
    u32 id = t2->one();
    CHECK(sr.contains_base(t2->zero()));
    CHECK(sr.contains_base(id));
    CHECK(sr.contains_base(e12));
    CHECK(sr.contains_base(t2->add(id, e12)));

    // closure and commutativity of Z[a]
    for (const auto& R : small_corpus()) {
        if (R->size() > 32) continue;
        for (u32 a = 0; a < R->size(); ++a) {
            auto members = subring_closure(*R, a);
            std::vector<bool> in(R->size(), false);
            for (u32 m : members) in[m] = true;
            CHECK(in[R->zero()]);
            CHECK(in[R->one()]);
            CHECK(in[a]);
            for (u32 x : members)
                for (u32 y : members) {
                    CHECK(in[R->add(x, y)]);
                    CHECK(in[R->mul(x, y)]);
                    CHECK(in[R->neg(x)]);
                    CHECK(R->mul(x, y) == R->mul(y, x));
                }
        }
    }
}

TEST_CASE("int_image") {
    auto z90 = make_zmod(90);
    u32 t = z90->int_image(30);
    CHECK(t == 30);
    CHECK(z90->mul(t, t) == 0);
    CHECK(z90->int_image(0) == z90->zero());
    CHECK(make_zmod(25)->int_image(27) == 2);
    CHECK(make_zmod(25)->int_image(-3) == 22);
}

TEST_CASE("element arithmetic handles") {
    auto z25 = make_zmod(25);
    Elem five = z25->elem(5);
    Elem seven = z25->elem(7);
    Elem twenty = z25->elem(20);
    CHECK(mul(five, five).index == 0);
    CHECK(add(seven, twenty).index == 2);
    CHECK(neg(z25->elem(0)) == z25->elem(0));
    CHECK(eq(five, z25->elem(5)));

    auto other = make_zmod(25);
    CHECK_FALSE(eq(five, other->elem(5)));  // distinct ring objects
    CHECK_THROWS_AS(add(five, other->elem(5)), UsageError);
    CHECK_THROWS_AS(z25->elem(25), UsageError);
}

TEST_CASE("ring axioms hold on every small corpus ring") {
    for (const auto& R : small_corpus()) {
        if (R->size() > 64) continue;
        CHECK_NOTHROW(check_ring_axioms(*R));
    }
    // derived constructions too
    auto z90 = make_zmod(90);
    CHECK_NOTHROW(check_ring_axioms(*make_quotient_central(z90, {4})));
    auto t2 = make_triangular_ring(2, make_zmod(2));
    const auto& mr = static_cast<const MatrixRingBase&>(*t2);
    CHECK_NOTHROW(check_ring_axioms(*make_corner(t2, mr.from_entries({{1, 0}, {0, 0}}))));
    CHECK_NOTHROW(check_ring_axioms(*subring_generated(t2, mr.from_entries({{0, 1}, {0, 0}}))));
}

TEST_CASE("memoized tables are consistent under concurrent reads") {
    auto m2 = make_matrix_ring(2, make_zmod(2));
    std::vector<u32> serial;
    for (u32 a = 0; a < m2->size(); ++a)
        for (u32 b = 0; b < m2->size(); ++b) serial.push_back(m2->mul(a, b));

    auto fresh = make_matrix_ring(2, make_zmod(2));
    std::vector<std::vector<u32>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            for (u32 a = 0; a < fresh->size(); ++a)
                for (u32 b = 0; b < fresh->size(); ++b)
                    results[t].push_back(fresh->mul(a, b));
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 4; ++t) CHECK(results[t] == serial);
}

TEST_CASE("expression text round-trips through the constructors") {
    CHECK(make_zmod(25)->expr_text() == "Z25");
    CHECK(make_triangular_ring(2, make_zmod(4))->expr_text() == "T2(Z4)");
    CHECK(make_matrix_ring(2, make_zmod(3))->expr_text() == "M2(Z3)");
    CHECK(make_product({make_zmod(2), make_zmod(9)})->expr_text() == "prod(Z2,Z9)");
    CHECK(make_quotient_central(make_zmod(90), {4})->expr_text() == "quot(Z90,4)");
}
