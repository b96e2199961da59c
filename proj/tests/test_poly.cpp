#include "doctest.h"

#include "cuboids/poly.hpp"

#include <random>

using namespace cuboids;
using namespace cuboids::ring7;

namespace {

FieldElement fe(long a) { return FieldElement(Rat(a)); }

Poly sq(int v) { return var(v) * var(v); }

// the sigma substitution table: a3 -> -ic, c -> i a3, b1 -> -i b2, b2 -> i b1
std::vector<std::vector<FieldElement>> sigma_map() {
    std::vector<std::vector<FieldElement>> m(7, std::vector<FieldElement>(7));
    FieldElement i = FieldElement::i();
    m[A1][A1] = fe(1);
    m[A2][A2] = fe(1);
    m[A3][C] = -i;
    m[C][A3] = i;
    m[B1][B2] = -i;
    m[B2][B1] = i;
    m[B3][B3] = fe(1);
    return m;
}

} // namespace

TEST_CASE("substitution: sigma sends q1 to r2") {
    Poly q1 = sq(A1) + sq(B1) - sq(C);
    Poly r2 = sq(A1) + sq(A3) - sq(B2);
    CHECK(q1.substitute_linear(sigma_map()) == r2);
}

TEST_CASE("substitution: identity map fixes polynomials") {
    std::vector<std::vector<FieldElement>> id(7, std::vector<FieldElement>(7));
    for (int k = 0; k < 7; ++k) id[k][k] = fe(1);
    Poly p = sq(A1) + var(B2) * var(C) - sq(B3);
    CHECK(p.substitute_linear(id) == p);
}

TEST_CASE("substitution: sign change of b1 fixes q1") {
    std::vector<std::vector<FieldElement>> m(7, std::vector<FieldElement>(7));
    for (int k = 0; k < 7; ++k) m[k][k] = fe(1);
    m[B1][B1] = fe(-1);
    Poly q1 = sq(A1) + sq(B1) - sq(C);
    CHECK(q1.substitute_linear(m) == q1);
}

TEST_CASE("substitution respects composition") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<FieldElement>> m1(7, std::vector<FieldElement>(7));
        std::vector<std::vector<FieldElement>> m2(7, std::vector<FieldElement>(7));
        std::vector<std::vector<FieldElement>> prod(7, std::vector<FieldElement>(7));
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                m1[i][j] = fe(val(rng));
                m2[i][j] = fe(val(rng));
            }
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                for (int k = 0; k < 7; ++k) prod[i][j] += m1[i][k] * m2[k][j];
        Poly p = sq(A1) - var(A2) * var(B3) + sq(C);
        // p((m1 m2) x) = (p o m1)(m2 x)
        CHECK(p.substitute_linear(prod) == p.substitute_linear(m1).substitute_linear(m2));
    }
}

TEST_CASE("degree of a product adds for nonzero operands") {
    Poly p = sq(A1) + var(B1) * var(C);
    Poly q = var(A2) - var(B3);
    CHECK((p * q).degree() == p.degree() + q.degree());
    CHECK((p * Poly(7)).is_zero());
}

TEST_CASE("no zero coefficients are stored") {
    Poly p = var(A1) - var(A1);
    CHECK(p.is_zero());
    Poly q = sq(A1) + var(B1);
    Poly r = q - sq(A1);
    CHECK(r.terms().size() == 1);
}

TEST_CASE("partial derivatives and evaluation") {
    Poly q1 = sq(A1) + sq(B1) - sq(C);
    CHECK(q1.partial(A1) == var(A1).scaled(fe(2)));
    std::vector<FieldElement> pt = {fe(3), fe(0), fe(0), fe(4), fe(0), fe(0), fe(5)};
    CHECK(q1.evaluate(pt).is_zero());
}

TEST_CASE("galois conjugation is coefficient-wise") {
    Poly p = var(A1).scaled(FieldElement::i()) + var(B2).scaled(FieldElement::sqrt2());
    GaloisElement ci{true, false};
    Poly q = p.galois(ci);
    CHECK(q == var(A1).scaled(-FieldElement::i()) + var(B2).scaled(FieldElement::sqrt2()));
}

TEST_CASE("variable power stripping") {
    Poly p = var(A1) * var(A1) * var(B1) + var(A1) * var(A1) * var(A1);
    CHECK(p.strip_variable_power(A1) == 2);
    CHECK(p == var(B1) + var(A1));
}
