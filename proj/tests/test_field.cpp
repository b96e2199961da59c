#include "doctest.h"

#include "cuboids/field.hpp"

#include <random>

using namespace cuboids;

namespace {

FieldElement fe(long a) { return FieldElement(Rat(a)); }

FieldElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rat c[4];
    for (auto& x : c) {
        x = Rat(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElement(c[0], c[1], c[2], c[3]);
}

} // namespace

TEST_CASE("basis relations") {
    FieldElement i = FieldElement::i();
    FieldElement s = FieldElement::sqrt2();
    CHECK(i * i == fe(-1));
    CHECK(s * s == fe(2));
    CHECK(i * s == FieldElement::i_sqrt2());
    CHECK(FieldElement::i_sqrt2() * FieldElement::i_sqrt2() == fe(-2));
}

TEST_CASE("field inverse examples") {
    CHECK(fe(2).inverse() == FieldElement(Rat(1, 2)));
    CHECK(FieldElement::i().inverse() == -FieldElement::i());
    // (1 + sqrt2)(sqrt2 - 1) = 1
    FieldElement x = fe(1) + FieldElement::sqrt2();
    CHECK(x.inverse() == FieldElement::sqrt2() - fe(1));
    CHECK_THROWS_AS(FieldElement().inverse(), std::domain_error);
}

TEST_CASE("field axioms on sampled triples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        FieldElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == fe(1));
    }
}

TEST_CASE("galois application examples") {
    GaloisElement conj_i{true, false};
    GaloisElement conj_s{false, true};
    CHECK(conj_i.apply(FieldElement::i()) == -FieldElement::i());
    CHECK(conj_s.apply(FieldElement::sqrt2()) == -FieldElement::sqrt2());
    // 3 + 2i - sqrt2 -> 3 - 2i - sqrt2 under i -> -i
    FieldElement x = fe(3) + fe(2) * FieldElement::i() - FieldElement::sqrt2();
    FieldElement y = fe(3) - fe(2) * FieldElement::i() - FieldElement::sqrt2();
    CHECK(conj_i.apply(x) == y);
}

TEST_CASE("galois elements form Z/2 x Z/2 of field automorphisms") {
    auto all = GaloisElement::all();
    std::mt19937 rng(777);
    for (const auto& g : all) {
        CHECK(g.compose(g).is_identity());
        for (int trial = 0; trial < 10; ++trial) {
            FieldElement a = random_element(rng), b = random_element(rng);
            CHECK(g.apply(a * b) == g.apply(a) * g.apply(b));
            CHECK(g.apply(a + b) == g.apply(a) + g.apply(b));
        }
        for (const auto& h : all) {
            FieldElement a = random_element(rng);
            CHECK(g.compose(h).apply(a) == g.apply(h.apply(a)));
        }
    }
}

TEST_CASE("fixed fields of the order-2 elements") {
    FieldElement i = FieldElement::i();
    FieldElement s = FieldElement::sqrt2();
    FieldElement is = FieldElement::i_sqrt2();
    GaloisElement ci{true, false}, cs{false, true}, cis{true, true};
    // conj_i fixes sqrt2, moves i and i*sqrt2
    CHECK(ci.apply(s) == s);
    CHECK(ci.apply(i) != i);
    CHECK(ci.apply(is) != is);
    // conj_sqrt2 fixes i
    CHECK(cs.apply(i) == i);
    CHECK(cs.apply(s) != s);
    // the composite fixes i*sqrt2
    CHECK(cis.apply(is) == is);
    CHECK(cis.apply(i) != i);
    // only Q is fixed by everything
    CHECK(fixed_field({ci, cs, cis}) == Subfield::Q);
    CHECK(fixed_field({ci}) == Subfield::Qsqrt2);
    CHECK(fixed_field({cs}) == Subfield::Qi);
    CHECK(fixed_field({cis}) == Subfield::Qisqrt2);
    CHECK(fixed_field({}) == Subfield::K);
}

TEST_CASE("rational square roots inside K") {
    CHECK(*fe(4).sqrt_rational() == fe(2));
    CHECK(*fe(-1).sqrt_rational() == FieldElement::i());
    CHECK(*fe(8).sqrt_rational() == fe(2) * FieldElement::sqrt2());
    CHECK(*fe(-2).sqrt_rational() == FieldElement::i_sqrt2());
    CHECK(*FieldElement(Rat(1, 2)).sqrt_rational() == FieldElement(Rat(1, 2)) * FieldElement::sqrt2());
    CHECK(!fe(3).sqrt_rational());
    CHECK(!(fe(1) + FieldElement::i()).sqrt_rational());
}
