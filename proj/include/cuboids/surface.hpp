#pragma once

#include "cuboids/ideals.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cuboids {

/**
 * The quadrics cutting the cuboid surface in P^6 and the six rank-3 forms
 * among them.  Variable order is a1, a2, a3, b1, b2, b3, c throughout.
 */
struct SurfaceModel {
    Poly q1, q2, q3, q4;
    std::vector<Poly> equations;                   // {q1, q2, q3, q4}
    std::vector<Poly> rank3;                       // {q1, q2, q3, r1, r2, r3}
    std::vector<std::string> rank3_names;          // {"Q1",...,"R3"}
    std::vector<std::array<int, 3>> rank3_active;  // variables of each rank-3 form
};

SurfaceModel build_surface_model();

struct NodeRecord {
    int id = -1;
    std::vector<FieldElement> coords;   // 7 projective coordinates, first nonzero = 1
    int source_quadric = -1;            // index into SurfaceModel::rank3
    Subfield field = Subfield::K;
    std::array<int, 4> galois_orbit{};  // node id under each of the four Galois elements
};

// Solves the six restricted systems exactly and returns the 48 nodes in
// canonical order (family index, then lexicographic coordinates).  Throws
// if the count or a Jacobian rank check fails.
std::vector<NodeRecord> compute_singular_points(const SurfaceModel& model);

enum class CurveKind { Exceptional, Conic, GenusOneB, GenusOneAA };

std::string curve_kind_name(CurveKind k);

struct CurveRecord {
    int id = -1;
    CurveKind kind = CurveKind::Exceptional;
    int node_of_exceptional = -1;        // for Exceptional records
    std::vector<Poly> span;              // canonical RREF linear forms (empty for Exceptional)
    std::vector<Poly> quadrics;          // monic defining quadrics modulo the span
    int degree = 0;                      // 0 / 2 / 4
    int arithmetic_genus = 0;            // 0 or 1
    std::vector<int> node_ids;           // incident nodes, ascending
    Subfield field = Subfield::K;
    std::string hyperplane_tag;          // "a1", "c", "b2", "a1=+a2", "a3=-ic", ...
    std::vector<int> sign_vector;
};

struct Catalog {
    std::vector<CurveRecord> curves;     // canonical order, ids 0..139
    std::vector<NodeRecord> nodes;
    std::map<std::string, int> span_index;   // canonical span key -> curve id
    std::map<std::string, int> node_index;   // coordinate key -> node id

    const CurveRecord& curve(int id) const { return curves[id]; }
    int size() const { return (int)curves.size(); }
};

std::string node_key(const std::vector<FieldElement>& normalized_coords);
std::string span_key(const std::vector<Poly>& rref_span);

// Builds the 140-curve catalog (48 exceptional, 32 conics, 12 + 48 genus-one)
// with verified membership, smoothness, degree, genus, incidence and fields
// of definition.  Throws on any consistency failure.
Catalog build_curve_catalog(const SurfaceModel& model, const std::vector<NodeRecord>& nodes);

Subfield field_of_definition(const CurveRecord& curve, const Catalog& catalog);

struct SectionComponent {
    int curve_id;
    int multiplicity;
};

struct SectionDecomposition {
    std::vector<SectionComponent> components;
    int section_degree = 0;   // degree of the one-dimensional section scheme
};

// Decomposes the hyperplane section of the surface into catalog curves.
// h must be a coordinate hyperplane or one of the twelve catalog
// hyperplanes; anything else raises an unsupported-hyperplane error.
SectionDecomposition hyperplane_section_decomposition(const SurfaceModel& model,
                                                      const Catalog& catalog,
                                                      const Poly& h);

// the twelve genus-one hyperplanes a_j = e a_{j+1}, a_j = e i c in canonical order
std::vector<Poly> catalog_hyperplanes();

// normalize projective coordinates so the first nonzero entry is 1
std::vector<FieldElement> normalize_point(std::vector<FieldElement> coords);

// Of the eight reference points [0, 1, e1, 0, e2 i, e3 i, 0], how many lie
// on the surface.  Kept as a reported diagnostic: the recomputed Q1 family
// is [0, 1, e1 i, 0, e2 i, e3, 0] instead.
int reference_q1_points_on_surface(const SurfaceModel& model);

} // namespace cuboids
