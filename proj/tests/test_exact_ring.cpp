#include <doctest.h>

#include <random>
#include <stdexcept>

#include "singline/schubert.hpp"
#include "support/gen.hpp"

using namespace singline;

TEST_CASE("scalars stay canonical") {
    Scalar x = Scalar(2) / 4;
    CHECK(x.get_num() == 1);
    CHECK(x.get_den() == 2);
    CHECK(to_ratio_string(Scalar(-6) / 4) == "-3/2");
    CHECK(to_ratio_string(Scalar(3)) == "3/1");
    CHECK(choose(2, 3) == 0);
    CHECK(choose(5, 3) == 10);
    CHECK_THROWS_AS(choose(-1, 2), std::domain_error);
}

TEST_CASE("basis degrees") {
    CHECK(degree(Schubert::One) == 0);
    CHECK(degree(Schubert::S1) == 1);
    CHECK(degree(Schubert::S11) == 2);
    CHECK(degree(Schubert::S2) == 2);
    CHECK(degree(Schubert::S21) == 3);
    CHECK(degree(Schubert::S22) == 4);
}

TEST_CASE("add") {
    CHECK(s1() + s1() == CohClass(Schubert::S1, 2));
    const CohClass p = s11() - Scalar(3, 7) * s21();
    CHECK(p + CohClass() == p);
    CHECK((s11() - s2()) / 2 + (s11() + s2()) / 2 == s11());
    CHECK(add(s2(), -s2()).is_zero());
}

TEST_CASE("scale") {
    CHECK(scale(0, s2()).is_zero());
    CHECK(scale(Scalar(1, 12), s22()).coefficient(Schubert::S22) == Scalar(1, 12));
    const Scalar phi = 2;
    CHECK(scale(3, phi * s1()) == CohClass(Schubert::S1, 6));
    CHECK_THROWS_AS(s1() / 0, std::domain_error);
}

TEST_CASE("multiplication table") {
    CHECK(s1() * s1() == s11() + s2());
    CHECK(s1() * s11() == s21());
    CHECK(s1() * s2() == s21());
    CHECK(s1() * s21() == s22());
    CHECK(s11() * s11() == s22());
    CHECK(s2() * s2() == s22());
    CHECK((s11() * s2()).is_zero());
    CHECK((s22() * s1()).is_zero());
    CHECK((s21() * s11()).is_zero());
}

TEST_CASE("square of ch(nu) - 2") {
    const CohClass a_plus_b = -s1() + (s11() - s2()) / 2 + s21() / 6;
    CHECK(a_plus_b * a_plus_b == s11() + s2() + s22() / 6);
}

TEST_CASE("coefficient_of") {
    CHECK(coefficient_of(s11() + s2(), Schubert::S2) == 1);
    CHECK(coefficient_of(CohClass(), Schubert::S22) == 0);
    const CohClass ab = s2() - s21() / 2 + s22() / 12;
    CHECK(coefficient_of(ab, Schubert::S21) == Scalar(-1, 2));
}

TEST_CASE("degree_component") {
    const CohClass ch_nu = CohClass::constant(2) - s1() + (s11() - s2()) / 2 + s21() / 6;
    CHECK(degree_component(ch_nu, 0) == CohClass::constant(2));
    CHECK(degree_component(ch_nu, 2) == (s11() - s2()) / 2);
    CHECK(degree_component(s1(), 3).is_zero());
    CHECK_THROWS_AS(degree_component(s1(), 5), std::out_of_range);
    CHECK_THROWS_AS(degree_component(s1(), -1), std::out_of_range);
}

TEST_CASE("ring axioms on the basis") {
    for (Schubert a : kBasis) {
        const CohClass ca(a);
        CHECK(one() * ca == ca);
        CHECK(ca * one() == ca);
        for (Schubert b : kBasis) {
            const CohClass cb(b);
            const CohClass ab = ca * cb;
            CHECK(ab == cb * ca);
            const int deg = degree(a) + degree(b);
            if (deg > kTopDegree) {
                CHECK(ab.is_zero());
            } else {
                CHECK(ab.is_homogeneous(deg));
            }
            for (Schubert c : kBasis) {
                CHECK((ab * CohClass(c)) == (ca * (cb * CohClass(c))));
            }
        }
    }
}

TEST_CASE("distributivity on random classes") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const CohClass p = testing::random_class(rng);
        const CohClass q = testing::random_class(rng);
        const CohClass r = testing::random_class(rng);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("perturbed table breaks associativity") {
    ProductTable broken = ProductTable::standard();
    ProductTable::Row top{};
    top[index(Schubert::S22)] = 1;
    broken.set_product(Schubert::S11, Schubert::S2, top);
    CHECK(mul(s11(), s2(), broken) == s22());
    CHECK(mul(mul(s1(), s1(), broken), s2(), broken) != mul(s1(), mul(s1(), s2(), broken), broken));
}

TEST_CASE("pow and printing") {
    CHECK(pow(s1(), 4) == CohClass(Schubert::S22, 2));
    CHECK(pow(s1(), 5).is_zero());
    CHECK(pow(s2(), 0) == one());
    CHECK(to_string(CohClass()) == "0");
    CHECK(to_string(CohClass::constant(2) - s1() + (s11() - s2()) / 2) == "2 - s1 + 1/2 s11 - 1/2 s2");
}
