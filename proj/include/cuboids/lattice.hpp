#pragma once

#include "cuboids/intmat.hpp"

namespace cuboids {

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// inertia of a symmetric integer matrix by exact rational congruence
// diagonalization (no floating point)
Signature signature_of(const IntMat& g);

/**
 * The Picard lattice presented by the 140x140 intersection matrix: a basis
 * of the rank-64 quotient of Z^140 by the radical, its Gram matrix, and the
 * coordinates of every catalog class in that basis.
 */
struct PicardLattice {
    IntMat basis_expr;    // 64x140: basis vectors as combinations of catalog classes
    IntMat coords;        // 140x64: catalog class -> basis coordinates
    IntMat gram64;        // 64x64 pairing in the chosen basis
    Int discriminant;
    Signature signature;
    int rank = 0;
};

PicardLattice build_picard_lattice(const IntMat& gram140);

// gcd of the coordinates is 1; throws on the zero vector
bool is_primitive(const std::vector<Int>& v);

// x.x even for all x, equivalently every diagonal entry even; throws on
// asymmetric input
bool is_even(const IntMat& g);

struct LllResult {
    IntMat gram;        // transform * input * transform^T
    IntMat transform;   // unimodular
};

// Lovasz-reduced basis with parameter 3/4 for a positive-definite Gram
// matrix, using the all-integer Gram-Schmidt recurrences; throws on
// non-definite input
LllResult lll_reduce(const IntMat& gram);

} // namespace cuboids
