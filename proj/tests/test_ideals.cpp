#include "doctest.h"

#include "cuboids/ideals.hpp"

using namespace cuboids;

namespace {

FieldElement fe(long a) { return FieldElement(Rat(a)); }

Poly v3(int k) { return Poly::variable(3, k); }
Poly v2(int k) { return Poly::variable(2, k); }

} // namespace

TEST_CASE("graded dimension: two quadrics, four reduced points") {
    // (x0^2 - x1^2, x0^2 - x2^2) in P^2
    std::vector<Poly> gens = {v3(0) * v3(0) - v3(1) * v3(1), v3(0) * v3(0) - v3(2) * v3(2)};
    CHECK(graded_dimension(gens, 5) == 4);
    CHECK(stabilized_projective_degree(gens) == 4);
}

TEST_CASE("graded dimension: one reduced point") {
    std::vector<Poly> gens = {v3(0), v3(1)};
    CHECK(graded_dimension(gens, 3) == 1);
    CHECK(stabilized_projective_degree(gens) == 1);
}

TEST_CASE("graded dimension: one point of multiplicity four") {
    // (x0 x2 - x1^2, x0 x2 - x1^2 + x2^2) = (x0 x2 - x1^2, x2^2)
    Poly f = v3(0) * v3(2) - v3(1) * v3(1);
    std::vector<Poly> gens = {f, f + v3(2) * v3(2)};
    CHECK(graded_dimension(gens, 6) == 4);
    CHECK(stabilized_projective_degree(gens) == 4);
}

TEST_CASE("graded dimension requires homogeneous input") {
    std::vector<Poly> gens = {v3(0) + Poly::constant(3, fe(1))};
    CHECK_THROWS_AS(graded_dimension(gens, 2), std::invalid_argument);
}

TEST_CASE("adding a generator never increases the dimension") {
    std::vector<Poly> gens = {v3(0) * v3(1) - v3(2) * v3(2)};
    std::vector<Poly> more = gens;
    more.push_back(v3(0) * v3(0) - v3(1) * v3(2));
    for (int d = 1; d <= 6; ++d)
        CHECK(graded_dimension(more, d) <= graded_dimension(gens, d));
}

TEST_CASE("local length basics") {
    CHECK(local_length({v2(0), v2(1)}) == 1);
    CHECK(local_length({v2(0) * v2(0), v2(1)}) == 2);
    CHECK(local_length({v2(0) * v2(0), v2(0) * v2(1), v2(1) * v2(1)}) == 3);
}

TEST_CASE("local length: tangent parabolas") {
    // (y - x^2, y + x^2) = (y, x^2): length 2 at the origin
    Poly x = v2(0), y = v2(1);
    CHECK(local_length({y - x * x, y + x * x}) == 2);
    // unit at the origin
    CHECK(local_length({y + Poly::constant(2, fe(1)), x}) == 0);
}

TEST_CASE("local length: non-isolated point fails to stabilize") {
    CHECK_THROWS(local_length({v2(0) * v2(1)}));
    CHECK_THROWS(local_length({}));
}

TEST_CASE("stabilized degree equals the sum of local lengths") {
    // (x0^2 - x1^2, x0^2 - x2^2): four smooth points, each of local length 1
    std::vector<Poly> gens = {v3(0) * v3(0) - v3(1) * v3(1), v3(0) * v3(0) - v3(2) * v3(2)};
    CHECK(stabilized_projective_degree(gens) == 4);
    // chart x0 = 1, centered at (x1, x2) = (1, 1)
    Poly x1 = v2(0), x2 = v2(1);
    Poly one = Poly::constant(2, fe(1));
    std::vector<Poly> at_point = {one - (x1 + one) * (x1 + one), one - (x2 + one) * (x2 + one)};
    CHECK(local_length(at_point) == 1);

    // (x0 x2 - x1^2, x2^2): a single point [1:0:0] of length 4
    Poly f = v3(0) * v3(2) - v3(1) * v3(1);
    std::vector<Poly> fat = {f, v3(2) * v3(2)};
    CHECK(stabilized_projective_degree(fat) == 4);
    std::vector<Poly> local = {x2 - x1 * x1, x2 * x2};
    CHECK(local_length(local) == 4);
}

TEST_CASE("hilbert numbers of a plane conic") {
    std::vector<Poly> gens = {v3(0) * v3(0) + v3(1) * v3(1) - v3(2) * v3(2)};
    auto n = hilbert_curve_numbers(gens);
    CHECK(n.degree == 2);
    CHECK(n.arithmetic_genus == 0);
}

TEST_CASE("empty scheme has degree zero") {
    std::vector<Poly> gens = {v3(0), v3(1), v3(2)};
    CHECK(stabilized_projective_degree(gens) == 0);
    // single variable with x^2: also empty
    std::vector<Poly> gens2 = {Poly::variable(1, 0) * Poly::variable(1, 0)};
    CHECK(stabilized_projective_degree(gens2) == 0);
}

TEST_CASE("quadratic form matrices") {
    Poly q = v3(0) * v3(0) + v3(1) * v3(2);
    KMat m = quadratic_form_matrix(q);
    CHECK(m[0][0] == fe(1));
    CHECK(m[1][2] == FieldElement(Rat(1, 2)));
    CHECK(m[2][1] == FieldElement(Rat(1, 2)));
    CHECK(k_rank(m) == 3);
}
