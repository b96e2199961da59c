#pragma once

#include "cuboids/field.hpp"

#include <vector>

namespace cuboids {

using KVec = std::vector<FieldElement>;
using KMat = std::vector<KVec>;

KMat k_identity(int n);
KMat k_mul(const KMat& a, const KMat& b);
KVec k_mat_vec(const KMat& a, const KVec& v);
KMat k_inverse(const KMat& a);   // throws on singular input

struct LinearSolveResult {
    int rank = 0;
    bool consistent = true;                 // false if any rhs is unsolvable
    std::vector<KVec> particular;           // one solution per rhs when consistent
    std::vector<bool> solvable;             // per-rhs consistency
    std::vector<KVec> kernel;               // basis of the right kernel of A
};

// exact fraction-free style elimination over K; rhs columns are optional
LinearSolveResult linear_solve(const KMat& a, const std::vector<KVec>& rhs = {});

int k_rank(const KMat& a);

// reduced row echelon form over K, rows normalized to leading coefficient 1,
// zero rows discarded; canonical for a given row space
KMat k_rref(const KMat& a);

// Fraction-free rank of a (typically large, sparse) matrix over K.  Rows are
// scaled into Z[i,sqrt2] and eliminated Bareiss-style; all divisions are
// exact by the Sylvester identity.
int bareiss_rank(const KMat& a);

} // namespace cuboids
