#pragma once

#include "cuboids/numeric.hpp"

#include <vector>

namespace cuboids {

using IntMat = std::vector<std::vector<Int>>;

IntMat imat_zero(int rows, int cols);
IntMat imat_identity(int n);
IntMat imat_mul(const IntMat& a, const IntMat& b);
IntMat imat_transpose(const IntMat& a);
bool imat_equal(const IntMat& a, const IntMat& b);

int imat_rank(const IntMat& a);            // fraction-free elimination over Z
Int imat_determinant(const IntMat& a);     // exact signed determinant (Bareiss)

// inverse of a matrix with determinant +-1; throws otherwise
IntMat imat_inverse_unimodular(const IntMat& a);

struct SnfResult {
    IntMat s;                  // diagonal, invariant factors with divisibility chain
    IntMat u, v;               // unimodular, u * a * v = s
    std::vector<Int> factors;  // the min(m,n) diagonal entries, zeros included
    int rank = 0;              // number of nonzero factors
};

// Smith normal form.  Pivot selection: smallest nonzero absolute value with
// row-major tiebreak, for deterministic output and modest entry growth.
SnfResult snf(const IntMat& a);

// basis of { v : a * v = 0 }, one vector per row; the basis spans a
// saturated (primitive) sublattice since it comes from a unimodular V
IntMat kernel_basis(const IntMat& a);

} // namespace cuboids
