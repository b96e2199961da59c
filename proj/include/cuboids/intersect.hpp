#pragma once

#include "cuboids/intmat.hpp"
#include "cuboids/surface.hpp"

#include <tuple>

namespace cuboids {

enum class EntryProvenance : char { Adjunction = 'a', Disjoint = 'd', Engine = 'e', ExceptionalPair = 'x' };

struct GramMatrix {
    IntMat entries;                                   // symmetric 140x140
    std::vector<std::vector<char>> provenance;        // EntryProvenance per entry
    std::vector<std::tuple<int, int, int>> tangential_node_pairs;  // (curve, curve, node) with equal tangents
};

// -2 for exceptional curves, 2 p_a - 2 - degree otherwise
int self_intersection(const CurveRecord& curve);

// total length of the ambient intersection scheme of two distinct
// non-exceptional catalog curves
int scheme_degree(const CurveRecord& a, const CurveRecord& b);

// length of the intersection scheme localized at a node both curves pass through
int node_local_length(const Catalog& catalog, const CurveRecord& a, const CurveRecord& b,
                      const NodeRecord& p);

// local intersection of the strict transforms above a shared node; zero when
// the tangent directions at the node differ
int blowup_contribution(const Catalog& catalog, const CurveRecord& a, const CurveRecord& b,
                        const NodeRecord& p);

// pairing of a strict transform with the exceptional curve over p
int exceptional_intersection(const SurfaceModel& model, const Catalog& catalog,
                             const CurveRecord& curve, const NodeRecord& p);

// pairing of two distinct catalog classes on the resolved surface
int strict_transform_intersection(const SurfaceModel& model, const Catalog& catalog,
                                  const CurveRecord& a, const CurveRecord& b);

// the full 140x140 intersection matrix; `jobs` parallelizes the pair loop
// without changing any output byte
GramMatrix gram_matrix(const SurfaceModel& model, const Catalog& catalog, int jobs = 1);

// coefficients of the pulled-back hyperplane class in the 140 catalog
// classes; `which` indexes {a1, a2, a3, c}
std::vector<Int> hyperplane_class_vector(const Catalog& catalog, const GramMatrix& gram, int which);

// the canonical class vector (the a1 pullback), after verifying K.K = 16,
// K.E = 0, K.C = deg C and that all four hyperplane pullbacks agree in the
// quotient lattice
std::vector<Int> canonical_class_vector(const Catalog& catalog, const GramMatrix& gram);

} // namespace cuboids
