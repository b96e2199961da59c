#include "doctest.h"

#include "cuboids/linalg.hpp"

#include <random>

using namespace cuboids;

namespace {
FieldElement fe(long a) { return FieldElement(Rat(a)); }
}

TEST_CASE("identity solve") {
    KMat a = k_identity(3);
    KVec e1 = {fe(1), fe(0), fe(0)};
    auto r = linear_solve(a, {e1});
    CHECK(r.rank == 3);
    CHECK(r.consistent);
    CHECK(r.particular[0] == e1);
    CHECK(r.kernel.empty());
}

TEST_CASE("zero matrix") {
    KMat a(2, KVec(2));
    auto r = linear_solve(a, {KVec{fe(0), fe(0)}});
    CHECK(r.rank == 0);
    CHECK(r.consistent);
    CHECK(r.kernel.size() == 2);
}

TEST_CASE("kernel over K: (1, i)") {
    KMat a = {{fe(1), FieldElement::i()}};
    auto r = linear_solve(a);
    REQUIRE(r.kernel.size() == 1);
    // kernel spanned by (-i, 1): check a . v = 0 and proportionality
    const KVec& v = r.kernel[0];
    CHECK((v[0] * fe(1) + v[1] * FieldElement::i()).is_zero());
    KVec expect = {-FieldElement::i(), fe(1)};
    FieldElement ratio = v[1] / expect[1];
    CHECK(v[0] == expect[0] * ratio);
}

TEST_CASE("inconsistency is reported, not thrown") {
    KMat a = {{fe(1), fe(1)}, {fe(1), fe(1)}};
    auto r = linear_solve(a, {KVec{fe(0), fe(1)}});
    CHECK(!r.consistent);
    CHECK(!r.solvable[0]);
}

TEST_CASE("bareiss rank agrees with field gauss") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> which(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 3 + trial % 4, n = 2 + trial % 5;
        KMat a(m, KVec(n));
        for (auto& row : a)
            for (auto& x : row) {
                FieldElement units[4] = {fe(1), FieldElement::i(), FieldElement::sqrt2(),
                                         FieldElement::i_sqrt2()};
                x = fe(val(rng)) * units[which(rng)];
            }
        CHECK(bareiss_rank(a) == k_rank(a));
    }
}

TEST_CASE("rref is canonical for the row space") {
    KMat a = {{fe(2), fe(4), fe(0)}, {fe(1), fe(2), fe(1)}};
    KMat b = {{fe(1), fe(2), fe(1)}, {fe(3), fe(6), fe(1)}};
    CHECK(k_rref(a) == k_rref(b));
}

TEST_CASE("matrix inverse") {
    KMat a = {{fe(1), FieldElement::i()}, {fe(0), fe(2)}};
    KMat inv = k_inverse(a);
    CHECK(k_mul(a, inv) == k_identity(2));
    CHECK_THROWS(k_inverse(KMat(2, KVec(2))));
}
