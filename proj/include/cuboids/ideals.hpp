#pragma once

#include "cuboids/linalg.hpp"
#include "cuboids/poly.hpp"

#include <vector>

namespace cuboids {

std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_below_degree(int nvars, int bound);

struct EliminationResult {
    std::vector<Poly> gens;   // generators in the reduced ring
    int nvars = 0;
    bool unit_ideal = false;  // a nonzero constant appeared
};

// Repeatedly use degree<=1 generators to substitute away variables.  This is
// an isomorphism of the ambient (graded or local) ring, so dimensions and
// lengths are unchanged; it keeps the elimination matrices small.  In
// local_at_origin mode a linear generator with nonzero constant term is a
// unit of the local ring and flags the ideal as the unit ideal instead of
// being substituted (that substitution would move the origin).
EliminationResult eliminate_linear(std::vector<Poly> gens, bool local_at_origin = false);

// dim over K of the degree-d part of R/(gens); all generators homogeneous
int graded_dimension(const std::vector<Poly>& gens, int d);

// Stabilized value of graded_dimension: the degree of the zero-dimensional
// projective scheme cut out by `gens`.  Throws if the values have not
// stabilized by `cap` (a positive-dimensional scheme, e.g. a shared curve
// component).
int stabilized_projective_degree(const std::vector<Poly>& gens, int cap = 12);

// Length of the local ring at the origin modulo (gens): the stabilized value
// of dim K[x]/(gens + m^N).  Throws when no stabilization occurs by n_max.
int local_length(const std::vector<Poly>& gens, int n_max = 10);

struct CurveNumbers {
    int degree = 0;
    int arithmetic_genus = 0;
};

// degree and arithmetic genus of a one-dimensional projective scheme from
// its Hilbert function, h(d) = degree*d + (1 - p_a) for large d
CurveNumbers hilbert_curve_numbers(const std::vector<Poly>& gens, int cap = 14);

// symmetric matrix of a homogeneous quadratic form
KMat quadratic_form_matrix(const Poly& q);

} // namespace cuboids
