#include "cuboids/intersect.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace cuboids {

using namespace ring7;

namespace {

// affine chart of P^6 centered at a normalized point: the unit coordinate is
// frozen to 1, the others become translated affine variables
struct Chart {
    int chart_var = -1;
    std::array<int, 7> affine_index{};   // old var -> 0..5 (chart_var unused)
    std::vector<FieldElement> origin;    // affine coordinates of the center (all zero after translation)
    std::vector<Poly> images;            // substitution images, 7 polys in 6 vars

    explicit Chart(const std::vector<FieldElement>& point) {
        for (int v = 0; v < NVARS; ++v)
            if (!point[v].is_zero()) { chart_var = v; break; }
        if (chart_var < 0 || point[chart_var] != FieldElement(Rat(1)))
            throw std::invalid_argument("Chart: point must be normalized");
        int idx = 0;
        for (int v = 0; v < NVARS; ++v) {
            if (v == chart_var) continue;
            affine_index[v] = idx++;
        }
        for (int v = 0; v < NVARS; ++v) {
            if (v == chart_var) {
                images.push_back(Poly::constant(6, FieldElement(Rat(1))));
            } else {
                Poly img = Poly::variable(6, affine_index[v]);
                img.add_term(Monomial(6, 0), point[v]);
                images.push_back(img);
            }
        }
    }

    Poly to_affine(const Poly& f) const { return f.substitute(images); }
};

std::vector<Poly> curve_generators(const CurveRecord& c) {
    std::vector<Poly> g = c.span;
    g.insert(g.end(), c.quadrics.begin(), c.quadrics.end());
    return g;
}

std::vector<Poly> affine_curve_gens(const Chart& chart, const CurveRecord& c) {
    std::vector<Poly> out;
    for (const Poly& f : curve_generators(c)) {
        Poly a = chart.to_affine(f);
        if (!a.is_zero()) out.push_back(a);
    }
    return out;
}

// tangent line of a smooth curve at the chart origin: the kernel of the
// Jacobian of its affine generators, normalized so the first nonzero
// coordinate is 1
KVec tangent_at_origin(const std::vector<Poly>& affine_gens) {
    KMat rows;
    for (const Poly& g : affine_gens) {
        KVec row(6);
        bool nonzero = false;
        for (int v = 0; v < 6; ++v) {
            Monomial m(6, 0);
            m[v] = 1;
            row[v] = g.coeff(m);
            if (!row[v].is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    auto sol = linear_solve(rows);
    if (sol.kernel.size() != 1)
        throw std::runtime_error("tangent_at_origin: curve is not smooth at the point");
    KVec t = sol.kernel[0];
    for (int v = 0; v < 6; ++v) {
        if (!t[v].is_zero()) {
            FieldElement inv = t[v].inverse();
            for (FieldElement& x : t) x = x * inv;
            return t;
        }
    }
    throw std::logic_error("tangent_at_origin: zero tangent vector");
}

// Blow up the affine chart at its origin, in the coordinate chart aligned
// with `tangent` (variable 0 is the exceptional parameter t).
struct BlowupChart {
    int k = -1;                          // affine variable serving as t
    std::array<int, 6> slot{};           // affine var -> blowup var (k -> 0)
    std::vector<Poly> images;            // 6 polys in 6 vars
    std::vector<FieldElement> center;    // u-coordinates of the tangent point on t=0

    explicit BlowupChart(const KVec& tangent) {
        for (int v = 0; v < 6; ++v)
            if (!tangent[v].is_zero()) { k = v; break; }
        if (k < 0) throw std::invalid_argument("BlowupChart: zero tangent");
        slot[k] = 0;
        int next = 1;
        for (int v = 0; v < 6; ++v)
            if (v != k) slot[v] = next++;
        Poly t = Poly::variable(6, 0);
        for (int v = 0; v < 6; ++v)
            images.push_back(v == k ? t : t * Poly::variable(6, slot[v]));
        center.assign(6, FieldElement());
        FieldElement inv = tangent[k].inverse();
        for (int v = 0; v < 6; ++v)
            if (v != k) center[slot[v]] = tangent[v] * inv;
        // center[0] = 0: the point lies on the exceptional divisor t = 0
    }

    // strict transform: substitute, then strip the maximal t power
    Poly strict(const Poly& f) const {
        Poly g = f.substitute(images);
        g.strip_variable_power(0);
        return g;
    }

    // translate the tangent point to the origin
    Poly recenter(const Poly& f) const {
        std::vector<Poly> tr;
        for (int v = 0; v < 6; ++v) {
            Poly img = Poly::variable(6, v);
            img.add_term(Monomial(6, 0), center[v]);
            tr.push_back(img);
        }
        return f.substitute(tr);
    }
};

// Bounded saturation by t with constant coefficients: adjoin quotients of
// K-combinations of the generators that are divisible by t.  The adapted
// generator sets used here are already saturated; the rounds are a guard.
std::vector<Poly> t_saturate(std::vector<Poly> gens, int max_rounds = 8) {
    auto span_rank = [](const std::vector<Poly>& polys) {
        std::set<Monomial, GrlexLess> monos;
        for (const Poly& p : polys)
            for (const auto& [m, c] : p.terms()) monos.insert(m);
        KMat rows;
        for (const Poly& p : polys) {
            KVec row;
            for (const Monomial& m : monos) row.push_back(p.coeff(m));
            rows.push_back(std::move(row));
        }
        return k_rank(rows);
    };
    for (int round = 0; round < max_rounds; ++round) {
        // kernel of the coefficient matrix restricted to t-free monomials
        std::set<Monomial, GrlexLess> tfree;
        for (const Poly& p : gens)
            for (const auto& [m, c] : p.terms())
                if (m[0] == 0) tfree.insert(m);
        KMat rows;
        for (const Poly& p : gens) {
            KVec row;
            for (const Monomial& m : tfree) row.push_back(p.coeff(m));
            rows.push_back(std::move(row));
        }
        auto sol = linear_solve(rows);
        bool added = false;
        int base_rank = span_rank(gens);
        for (const KVec& lam : sol.kernel) {
            Poly combo(6);
            for (size_t i = 0; i < gens.size(); ++i)
                combo += gens[i].scaled(lam[i]);
            if (combo.is_zero()) continue;
            combo.strip_variable_power(0);
            std::vector<Poly> test = gens;
            test.push_back(combo);
            if (span_rank(test) > base_rank) {
                gens.push_back(combo);
                base_rank += 1;
                added = true;
            }
        }
        if (!added) return gens;
    }
    throw std::runtime_error("t_saturate: saturation did not terminate within the round bound");
}

// adapted generators of the surface ideal at a node: the rank-3 form of the
// node family (vanishing linear part) plus three independent quadrics
std::vector<Poly> adapted_surface_gens(const SurfaceModel& model, const NodeRecord& p) {
    std::vector<Poly> gens;
    gens.push_back(model.rank3[p.source_quadric]);
    if (p.source_quadric <= 2) {
        for (int j = 0; j < 4; ++j)
            if (j != p.source_quadric) gens.push_back(model.equations[j]);
    } else {
        gens.push_back(model.q1);
        gens.push_back(model.q2);
        gens.push_back(model.q3);
    }
    return gens;
}

} // namespace

int self_intersection(const CurveRecord& curve) {
    if (curve.kind == CurveKind::Exceptional) return -2;
    return 2 * curve.arithmetic_genus - 2 - curve.degree;
}

int scheme_degree(const CurveRecord& a, const CurveRecord& b) {
    if (a.id == b.id)
        throw std::invalid_argument("scheme_degree: curves must be distinct");
    if (a.kind == CurveKind::Exceptional || b.kind == CurveKind::Exceptional)
        throw std::invalid_argument("scheme_degree: exceptional records have no ambient scheme");
    std::vector<Poly> gens = curve_generators(a);
    for (const Poly& g : curve_generators(b)) gens.push_back(g);
    return stabilized_projective_degree(gens);
}

int node_local_length(const Catalog& catalog, const CurveRecord& a, const CurveRecord& b,
                      const NodeRecord& p) {
    auto incident = [&](const CurveRecord& c) {
        return std::find(c.node_ids.begin(), c.node_ids.end(), p.id) != c.node_ids.end();
    };
    if (!incident(a) || !incident(b))
        throw std::invalid_argument("node_local_length: node must lie on both curves");
    Chart chart(p.coords);
    std::vector<Poly> gens = affine_curve_gens(chart, a);
    std::vector<Poly> gens_b = affine_curve_gens(chart, b);
    gens.insert(gens.end(), gens_b.begin(), gens_b.end());
    return local_length(gens);
}

int blowup_contribution(const Catalog& catalog, const CurveRecord& a, const CurveRecord& b,
                        const NodeRecord& p) {
    if (a.id == b.id)
        throw std::invalid_argument("blowup_contribution: curves must be distinct");
    auto incident = [&](const CurveRecord& c) {
        return std::find(c.node_ids.begin(), c.node_ids.end(), p.id) != c.node_ids.end();
    };
    if (!incident(a) || !incident(b))
        throw std::invalid_argument("blowup_contribution: node must lie on both curves");
    Chart chart(p.coords);
    auto ga = affine_curve_gens(chart, a);
    auto gb = affine_curve_gens(chart, b);
    KVec ta = tangent_at_origin(ga);
    KVec tb = tangent_at_origin(gb);
    if (ta != tb) return 0;
    BlowupChart bl(ta);
    std::vector<Poly> sa, sb;
    for (const Poly& g : ga) sa.push_back(bl.strict(g));
    for (const Poly& g : gb) sb.push_back(bl.strict(g));
    sa = t_saturate(std::move(sa));
    sb = t_saturate(std::move(sb));
    std::vector<Poly> combined;
    for (const Poly& g : sa) combined.push_back(bl.recenter(g));
    for (const Poly& g : sb) combined.push_back(bl.recenter(g));
    return local_length(combined);
}

int exceptional_intersection(const SurfaceModel& model, const Catalog& catalog,
                             const CurveRecord& curve, const NodeRecord& p) {
    if (curve.kind == CurveKind::Exceptional)
        throw std::invalid_argument("exceptional_intersection: curve must be non-exceptional");
    if (std::find(curve.node_ids.begin(), curve.node_ids.end(), p.id) == curve.node_ids.end())
        return 0;
    Chart chart(p.coords);
    auto gc = affine_curve_gens(chart, curve);
    KVec tangent = tangent_at_origin(gc);
    BlowupChart bl(tangent);
    std::vector<Poly> strict_curve, strict_surface;
    for (const Poly& g : gc) strict_curve.push_back(bl.strict(g));
    for (const Poly& q : adapted_surface_gens(model, p)) {
        Poly aq = chart.to_affine(q);
        if (!aq.is_zero()) strict_surface.push_back(bl.strict(aq));
    }
    strict_curve = t_saturate(std::move(strict_curve));
    strict_surface = t_saturate(std::move(strict_surface));
    std::vector<Poly> combined;
    for (const Poly& g : strict_curve) combined.push_back(bl.recenter(g));
    for (const Poly& g : strict_surface) combined.push_back(bl.recenter(g));
    combined.push_back(Poly::variable(6, 0));   // the exceptional divisor t = 0
    return local_length(combined);
}

int strict_transform_intersection(const SurfaceModel& model, const Catalog& catalog,
                                  const CurveRecord& a, const CurveRecord& b) {
    if (a.id == b.id)
        throw std::invalid_argument("strict_transform_intersection: curves must be distinct");
    if (a.kind == CurveKind::Exceptional && b.kind == CurveKind::Exceptional) return 0;
    if (a.kind == CurveKind::Exceptional)
        return exceptional_intersection(model, catalog, b, catalog.nodes[a.node_of_exceptional]);
    if (b.kind == CurveKind::Exceptional)
        return exceptional_intersection(model, catalog, a, catalog.nodes[b.node_of_exceptional]);
    int total = scheme_degree(a, b);
    std::vector<int> shared;
    for (int n : a.node_ids)
        if (std::find(b.node_ids.begin(), b.node_ids.end(), n) != b.node_ids.end())
            shared.push_back(n);
    for (int n : shared) {
        total -= node_local_length(catalog, a, b, catalog.nodes[n]);
        total += blowup_contribution(catalog, a, b, catalog.nodes[n]);
    }
    return total;
}

GramMatrix gram_matrix(const SurfaceModel& model, const Catalog& catalog, int jobs) {
    int n = catalog.size();
    GramMatrix gm;
    gm.entries = imat_zero(n, n);
    gm.provenance.assign(n, std::vector<char>(n, (char)EntryProvenance::Disjoint));

    for (int i = 0; i < n; ++i) {
        gm.entries[i][i] = self_intersection(catalog.curve(i));
        gm.provenance[i][i] = (char)EntryProvenance::Adjunction;
    }

    struct Result {
        int i, j;
        long value;
        char prov;
        std::vector<std::tuple<int, int, int>> tangential;
    };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    auto compute_pair = [&](int i, int j) -> Result {
        const CurveRecord& a = catalog.curve(i);
        const CurveRecord& b = catalog.curve(j);
        Result r{i, j, 0, (char)EntryProvenance::Disjoint, {}};
        if (a.kind == CurveKind::Exceptional && b.kind == CurveKind::Exceptional) {
            r.value = 0;
            r.prov = (char)EntryProvenance::ExceptionalPair;
            return r;
        }
        if (a.kind == CurveKind::Exceptional || b.kind == CurveKind::Exceptional) {
            const CurveRecord& curve = a.kind == CurveKind::Exceptional ? b : a;
            const NodeRecord& p =
                catalog.nodes[(a.kind == CurveKind::Exceptional ? a : b).node_of_exceptional];
            r.value = exceptional_intersection(model, catalog, curve, p);
            r.prov = r.value == 0 ? (char)EntryProvenance::Disjoint
                                  : (char)EntryProvenance::ExceptionalPair;
            return r;
        }
        int total = scheme_degree(a, b);
        if (total == 0) {
            r.value = 0;
            r.prov = (char)EntryProvenance::Disjoint;
            return r;
        }
        std::vector<int> shared;
        for (int nd : a.node_ids)
            if (std::find(b.node_ids.begin(), b.node_ids.end(), nd) != b.node_ids.end())
                shared.push_back(nd);
        long value = total;
        for (int nd : shared) {
            value -= node_local_length(catalog, a, b, catalog.nodes[nd]);
            int beta = blowup_contribution(catalog, a, b, catalog.nodes[nd]);
            if (beta > 0) r.tangential.emplace_back(i, j, nd);
            value += beta;
        }
        r.value = value;
        r.prov = (char)EntryProvenance::Engine;
        return r;
    };

    jobs = std::max(1, jobs);
    std::vector<Result> results(pairs.size());
    if (jobs == 1) {
        for (size_t k = 0; k < pairs.size(); ++k)
            results[k] = compute_pair(pairs[k].first, pairs[k].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= pairs.size()) break;
                results[k] = compute_pair(pairs[k].first, pairs[k].second);
            }
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (const Result& r : results) {
        gm.entries[r.i][r.j] = r.value;
        gm.entries[r.j][r.i] = r.value;
        gm.provenance[r.i][r.j] = r.prov;
        gm.provenance[r.j][r.i] = r.prov;
        for (const auto& t : r.tangential) gm.tangential_node_pairs.push_back(t);
    }
    std::sort(gm.tangential_node_pairs.begin(), gm.tangential_node_pairs.end());
    return gm;
}

std::vector<Int> hyperplane_class_vector(const Catalog& catalog, const GramMatrix& gram, int which) {
    static const char* tags[4] = {"a1", "a2", "a3", "c"};
    if (which < 0 || which > 3)
        throw std::invalid_argument("hyperplane_class_vector: index must select a1, a2, a3 or c");
    int hv = which == 3 ? C : which;   // variable index of the hyperplane
    int n = catalog.size();
    std::vector<Int> v(n, Int(0));
    std::vector<int> conics;
    for (const CurveRecord& c : catalog.curves)
        if (c.kind == CurveKind::Conic && c.hyperplane_tag == tags[which]) {
            v[c.id] = 1;
            conics.push_back(c.id);
        }
    if (conics.size() != 8)
        throw std::logic_error("hyperplane_class_vector: hyperplane does not carry 8 conics");
    for (const NodeRecord& p : catalog.nodes) {
        if (!p.coords[hv].is_zero()) continue;
        Int s = 0;
        for (int cid : conics) s += gram.entries[cid][p.id];
        if (s % 2 != 0)
            throw std::runtime_error("hyperplane_class_vector: odd exceptional pairing sum");
        v[p.id] = s / 2;   // multiplicity from (b*H).E_p = 0 with E_p^2 = -2
    }
    return v;
}

namespace {

Int pair_with(const IntMat& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += x[i] * g[i][j] * y[j];
    }
    return s;
}

} // namespace

std::vector<Int> canonical_class_vector(const Catalog& catalog, const GramMatrix& gram) {
    int n = catalog.size();
    std::vector<std::vector<Int>> hs;
    for (int w = 0; w < 4; ++w) hs.push_back(hyperplane_class_vector(catalog, gram, w));
    const std::vector<Int>& k = hs[0];

    for (int w = 0; w < 4; ++w) {
        // pullback meets every exceptional curve trivially
        for (const NodeRecord& p : catalog.nodes) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += hs[w][j] * gram.entries[j][p.id];
            if (s != 0)
                throw std::runtime_error("canonical_class_vector: pullback pairs with an exceptional curve");
        }
        // H.x = deg x for every catalog class
        for (const CurveRecord& c : catalog.curves) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += hs[w][j] * gram.entries[j][c.id];
            if (s != c.degree)
                throw std::runtime_error("canonical_class_vector: H.C != deg C");
        }
        if (pair_with(gram.entries, hs[w], hs[w]) != 16)
            throw std::runtime_error("canonical_class_vector: H.H != 16");
    }
    // the four pullbacks agree in the quotient lattice: differences pair to zero
    for (int w = 1; w < 4; ++w) {
        std::vector<Int> diff(n);
        for (int j = 0; j < n; ++j) diff[j] = hs[w][j] - k[j];
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s += diff[j] * gram.entries[j][i];
            if (s != 0)
                throw std::runtime_error("canonical_class_vector: hyperplane classes disagree in the lattice");
        }
    }
    return k;
}

} // namespace cuboids
