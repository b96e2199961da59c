#include "cuboids/surface.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cuboids {

using namespace ring7;

namespace {

Poly sq(int v) { return var(v) * var(v); }

FieldElement fe(long n) { return FieldElement(Rat(n)); }

} // namespace

SurfaceModel build_surface_model() {
    SurfaceModel m;
    m.q1 = sq(A1) + sq(B1) - sq(C);
    m.q2 = sq(A2) + sq(B2) - sq(C);
    m.q3 = sq(A3) + sq(B3) - sq(C);
    m.q4 = sq(A1) + sq(A2) + sq(A3) - sq(C);
    m.equations = {m.q1, m.q2, m.q3, m.q4};
    Poly r1 = m.q4 - m.q1;   // a2^2 + a3^2 - b1^2
    Poly r2 = m.q4 - m.q2;   // a1^2 + a3^2 - b2^2
    Poly r3 = m.q4 - m.q3;   // a1^2 + a2^2 - b3^2
    m.rank3 = {m.q1, m.q2, m.q3, r1, r2, r3};
    m.rank3_names = {"Q1", "Q2", "Q3", "R1", "R2", "R3"};
    m.rank3_active = {{{A1, B1, C}}, {{A2, B2, C}}, {{A3, B3, C}},
                      {{A2, A3, B1}}, {{A1, A3, B2}}, {{A1, A2, B3}}};
    for (size_t k = 0; k < m.rank3.size(); ++k) {
        if (k_rank(quadratic_form_matrix(m.rank3[k])) != 3)
            throw std::logic_error("build_surface_model: " + m.rank3_names[k] + " is not rank 3");
        for (int v : m.rank3_active[k])
            if (!m.rank3[k].uses_variable(v))
                throw std::logic_error("build_surface_model: active variable mismatch");
    }
    if (k_rank(quadratic_form_matrix(m.q4)) != 4)
        throw std::logic_error("build_surface_model: q4 is not rank 4");
    return m;
}

std::vector<FieldElement> normalize_point(std::vector<FieldElement> coords) {
    for (const FieldElement& c : coords) {
        if (!c.is_zero()) {
            FieldElement inv = c.inverse();
            for (FieldElement& x : coords) x = x * inv;
            return coords;
        }
    }
    throw std::invalid_argument("normalize_point: zero vector is not projective");
}

std::string node_key(const std::vector<FieldElement>& coords) {
    std::ostringstream os;
    for (const FieldElement& c : coords) os << c.str() << "|";
    return os.str();
}

std::string span_key(const std::vector<Poly>& rref_span) {
    std::ostringstream os;
    for (const Poly& f : rref_span) os << f.str() << "|";
    return os.str();
}

namespace {

// All projective solutions over K of a system of diagonal quadrics
// (every equation of the form sum_i alpha_i x_i^2 = 0).  The systems coming
// from the six node families are rigid: each branch is forced one square
// root at a time.  Throws if a root leaves K or a variable stays free.
class DiagonalSystemSolver {
public:
    DiagonalSystemSolver(std::vector<Poly> eqs, std::vector<int> zeroed)
        : eqs_(std::move(eqs)), zeroed_(std::move(zeroed)) {}

    std::vector<std::vector<FieldElement>> solve() {
        std::vector<std::vector<FieldElement>> out;
        std::vector<int> live;
        std::vector<bool> is_zeroed(NVARS, false);
        for (int v : zeroed_) is_zeroed[v] = true;
        for (int v = 0; v < NVARS; ++v)
            if (!is_zeroed[v]) live.push_back(v);
        for (size_t lead = 0; lead < live.size(); ++lead) {
            std::vector<std::optional<FieldElement>> assign(NVARS);
            for (int v : zeroed_) assign[v] = FieldElement();
            for (size_t k = 0; k < lead; ++k) assign[live[k]] = FieldElement();
            assign[live[lead]] = fe(1);
            dfs(assign, out);
        }
        return out;
    }

private:
    void dfs(std::vector<std::optional<FieldElement>>& assign,
             std::vector<std::vector<FieldElement>>& out) {
        // find an equation with at most one unassigned variable
        int unassigned_total = 0;
        for (int v = 0; v < NVARS; ++v)
            if (!assign[v]) ++unassigned_total;
        if (unassigned_total == 0) {
            std::vector<FieldElement> pt(NVARS);
            for (int v = 0; v < NVARS; ++v) pt[v] = *assign[v];
            for (const Poly& e : eqs_)
                if (!e.evaluate(pt).is_zero()) return;
            out.push_back(std::move(pt));
            return;
        }
        for (const Poly& e : eqs_) {
            FieldElement constant;
            FieldElement coef;
            int unknown = -1;
            bool usable = true;
            for (const auto& [m, c] : e.terms()) {
                int v = -1;
                for (int k = 0; k < NVARS; ++k)
                    if (m[k] != 0) { v = k; break; }
                if (v < 0) { constant += c; continue; }
                if (m[v] != 2 || monomial_degree(m) != 2)
                    throw std::logic_error("diagonal solver: non-diagonal equation");
                if (assign[v]) {
                    constant += c * (*assign[v]) * (*assign[v]);
                } else if (unknown < 0 || unknown == v) {
                    unknown = v;
                    coef += c;
                } else {
                    usable = false;
                    break;
                }
            }
            if (!usable) continue;
            if (unknown < 0) {
                if (!constant.is_zero()) return;   // contradiction on this branch
                continue;
            }
            if (coef.is_zero()) {
                if (!constant.is_zero()) return;
                continue;
            }
            FieldElement rhs = -(constant / coef);
            auto root = rhs.sqrt_rational();
            if (!root)
                throw std::runtime_error("diagonal solver: square root outside Q(i,sqrt2)");
            assign[unknown] = *root;
            dfs(assign, out);
            if (!root->is_zero()) {
                assign[unknown] = -(*root);
                dfs(assign, out);
            }
            assign[unknown].reset();
            return;
        }
        throw std::runtime_error("diagonal solver: system is not rigid (free variable remains)");
    }

    std::vector<Poly> eqs_;
    std::vector<int> zeroed_;
};

int jacobian_rank_at(const SurfaceModel& model, const std::vector<FieldElement>& pt) {
    KMat jac(model.equations.size(), KVec(NVARS));
    for (size_t r = 0; r < model.equations.size(); ++r)
        for (int v = 0; v < NVARS; ++v)
            jac[r][v] = model.equations[r].partial(v).evaluate(pt);
    return k_rank(jac);
}

Subfield point_field(const std::vector<FieldElement>& coords) {
    std::vector<GaloisElement> stab;
    for (const GaloisElement& g : GaloisElement::all()) {
        if (g.is_identity()) continue;
        std::vector<FieldElement> img(coords.size());
        for (size_t k = 0; k < coords.size(); ++k) img[k] = g.apply(coords[k]);
        if (normalize_point(img) == coords) stab.push_back(g);
    }
    return fixed_field(stab);
}

} // namespace

std::vector<NodeRecord> compute_singular_points(const SurfaceModel& model) {
    std::vector<NodeRecord> nodes;
    for (size_t fam = 0; fam < model.rank3.size(); ++fam) {
        std::vector<int> zeroed(model.rank3_active[fam].begin(), model.rank3_active[fam].end());
        std::vector<Poly> eqs;
        std::vector<Poly> images;
        for (int v = 0; v < NVARS; ++v) {
            bool z = std::find(zeroed.begin(), zeroed.end(), v) != zeroed.end();
            images.push_back(z ? Poly(NVARS) : var(v));
        }
        for (const Poly& q : model.equations) eqs.push_back(q.substitute(images));
        DiagonalSystemSolver solver(eqs, zeroed);
        auto pts = solver.solve();
        if (pts.size() != 8)
            throw std::runtime_error("compute_singular_points: family " + model.rank3_names[fam] +
                                     " has " + std::to_string(pts.size()) + " points, expected 8");
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            for (size_t k = 0; k < a.size(); ++k) {
                int c = a[k].compare(b[k]);
                if (c != 0) return c < 0;
            }
            return false;
        });
        for (auto& pt : pts) {
            NodeRecord n;
            n.coords = normalize_point(pt);
            n.source_quadric = (int)fam;
            for (const Poly& q : model.equations)
                if (!q.evaluate(n.coords).is_zero())
                    throw std::logic_error("compute_singular_points: point misses the surface");
            if (jacobian_rank_at(model, n.coords) != 3)
                throw std::runtime_error("compute_singular_points: Jacobian rank is not 3 at a node");
            n.field = point_field(n.coords);
            nodes.push_back(std::move(n));
        }
    }
    if (nodes.size() != 48)
        throw std::runtime_error("compute_singular_points: expected 48 nodes, found " +
                                 std::to_string(nodes.size()));
    std::map<std::string, int> seen;
    for (size_t k = 0; k < nodes.size(); ++k) {
        nodes[k].id = (int)k;
        std::string key = node_key(nodes[k].coords);
        if (seen.count(key))
            throw std::logic_error("compute_singular_points: duplicate node");
        seen[key] = (int)k;
    }
    for (NodeRecord& n : nodes) {
        auto gs = GaloisElement::all();
        for (size_t gi = 0; gi < gs.size(); ++gi) {
            std::vector<FieldElement> img(n.coords.size());
            for (size_t k = 0; k < n.coords.size(); ++k) img[k] = gs[gi].apply(n.coords[k]);
            auto it = seen.find(node_key(normalize_point(img)));
            if (it == seen.end())
                throw std::logic_error("compute_singular_points: Galois image is not a node");
            n.galois_orbit[gi] = it->second;
        }
    }
    return nodes;
}

std::string curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Exceptional: return "Exceptional";
        case CurveKind::Conic: return "Conic";
        case CurveKind::GenusOneB: return "GenusOneB";
        case CurveKind::GenusOneAA: return "GenusOneAA";
    }
    return "?";
}

namespace {

// canonical RREF of a list of linear forms, returned as monic polynomials
std::vector<Poly> rref_span(const std::vector<Poly>& forms) {
    KMat m;
    for (const Poly& f : forms) {
        if (f.degree() > 1) throw std::invalid_argument("rref_span: nonlinear form");
        KVec row(NVARS);
        for (int v = 0; v < NVARS; ++v) {
            Monomial mv(NVARS, 0);
            mv[v] = 1;
            row[v] = f.coeff(mv);
        }
        m.push_back(std::move(row));
    }
    KMat r = k_rref(m);
    std::vector<Poly> out;
    for (const KVec& row : r) {
        Poly f(NVARS);
        for (int v = 0; v < NVARS; ++v) {
            Monomial mv(NVARS, 0);
            mv[v] = 1;
            f.add_term(mv, row[v]);
        }
        out.push_back(f);
    }
    return out;
}

// substitution images that solve the span's leading variables
std::vector<Poly> span_solver_images(const std::vector<Poly>& span) {
    std::vector<Poly> images;
    for (int v = 0; v < NVARS; ++v) images.push_back(var(v));
    for (const Poly& f : span) {
        int lead = -1;
        for (int v = 0; v < NVARS && lead < 0; ++v) {
            Monomial mv(NVARS, 0);
            mv[v] = 1;
            if (!f.coeff(mv).is_zero()) lead = v;
        }
        Monomial mlead(NVARS, 0);
        mlead[lead] = 1;
        Poly rest = f;
        rest.add_term(mlead, -f.coeff(mlead));
        images[lead] = rest.scaled(-(f.coeff(mlead).inverse()));
    }
    return images;
}

std::vector<Poly> reduce_surface_to_span(const SurfaceModel& model, const std::vector<Poly>& span) {
    auto images = span_solver_images(span);
    std::vector<Poly> reduced;
    for (const Poly& q : model.equations) {
        Poly s = q.substitute(images);
        if (!s.is_zero()) reduced.push_back(s.monic());
    }
    // dedupe up to scalar
    std::sort(reduced.begin(), reduced.end(),
              [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    // drop K-linear dependents (a repeated quadric in disguise)
    std::vector<Poly> out;
    for (const Poly& q : reduced) {
        std::vector<Poly> test = out;
        test.push_back(q);
        // coefficient matrix rank over K
        std::set<Monomial, GrlexLess> monos;
        for (const Poly& p : test)
            for (const auto& [m, c] : p.terms()) monos.insert(m);
        KMat coef;
        for (const Poly& p : test) {
            KVec row;
            for (const Monomial& m : monos) row.push_back(p.coeff(m));
            coef.push_back(std::move(row));
        }
        if (k_rank(coef) == (int)test.size()) out.push_back(q);
    }
    return out;
}

void verify_curve_smooth(const CurveRecord& c) {
    // singular locus of the complete intersection must be projectively empty
    std::vector<Poly> gens = c.span;
    gens.insert(gens.end(), c.quadrics.begin(), c.quadrics.end());
    std::vector<Poly> sing = gens;
    if (c.quadrics.size() == 1) {
        for (int v = 0; v < NVARS; ++v) {
            Poly p = c.quadrics[0].partial(v);
            if (!p.is_zero()) sing.push_back(p);
        }
        // gradient must vanish only together with the span directions: add
        // span partials as full Jacobian minors via the span, handled by the
        // span forms already present in `sing`
    } else {
        // 2x2 minors of the Jacobian of the two quadrics
        const Poly& f = c.quadrics[0];
        const Poly& g = c.quadrics[1];
        for (int u = 0; u < NVARS; ++u)
            for (int v = u + 1; v < NVARS; ++v) {
                Poly minor = f.partial(u) * g.partial(v) - f.partial(v) * g.partial(u);
                if (!minor.is_zero()) sing.push_back(minor);
            }
    }
    if (stabilized_projective_degree(sing) != 0)
        throw std::runtime_error("build_curve_catalog: curve fails the smoothness check");
}

} // namespace

Catalog build_curve_catalog(const SurfaceModel& model, const std::vector<NodeRecord>& nodes) {
    if (nodes.size() != 48)
        throw std::invalid_argument("build_curve_catalog: need the 48 nodes");
    Catalog cat;
    cat.nodes = nodes;

    // 48 exceptional curves, one per node in node order
    for (const NodeRecord& n : nodes) {
        CurveRecord c;
        c.kind = CurveKind::Exceptional;
        c.node_of_exceptional = n.id;
        c.degree = 0;
        c.arithmetic_genus = 0;
        c.node_ids = {n.id};
        c.field = n.field;
        c.hyperplane_tag = "E" + std::to_string(n.id);
        cat.curves.push_back(std::move(c));
    }

    const FieldElement I = FieldElement::i();
    const FieldElement S2 = FieldElement::sqrt2();

    auto lin = [&](int v) { return var(v); };
    auto minus = [&](int v, const FieldElement& coef, int w) {
        return var(v) - Poly::variable(NVARS, w).scaled(coef);
    };

    std::vector<std::pair<std::string, std::function<std::vector<Poly>(int, int, int)>>> conic_families = {
        {"a1", [&](int e1, int e2, int e3) {
             return std::vector<Poly>{lin(A1), minus(B1, fe(e1), C), minus(B2, fe(e2), A3), minus(B3, fe(e3), A2)};
         }},
        {"a2", [&](int e1, int e2, int e3) {
             return std::vector<Poly>{lin(A2), minus(B2, fe(e1), C), minus(B1, fe(e2), A3), minus(B3, fe(e3), A1)};
         }},
        {"a3", [&](int e1, int e2, int e3) {
             return std::vector<Poly>{lin(A3), minus(B3, fe(e1), C), minus(B1, fe(e2), A2), minus(B2, fe(e3), A1)};
         }},
        {"c", [&](int e1, int e2, int e3) {
             return std::vector<Poly>{lin(C), minus(B1, fe(e1) * I, A1), minus(B2, fe(e2) * I, A2), minus(B3, fe(e3) * I, A3)};
         }},
    };
    for (auto& [tag, builder] : conic_families) {
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                for (int e3 : {1, -1}) {
                    CurveRecord c;
                    c.kind = CurveKind::Conic;
                    c.hyperplane_tag = tag;
                    c.sign_vector = {e1, e2, e3};
                    c.span = rref_span(builder(e1, e2, e3));
                    cat.curves.push_back(std::move(c));
                }
    }

    std::vector<std::pair<std::string, std::function<std::vector<Poly>(int, int)>>> b_families = {
        {"b1", [&](int e1, int e2) {
             return std::vector<Poly>{lin(B1), minus(A1, fe(e1), C), minus(A3, fe(e2) * I, A2)};
         }},
        {"b2", [&](int e1, int e2) {
             return std::vector<Poly>{lin(B2), minus(A2, fe(e1), C), minus(A1, fe(e2) * I, A3)};
         }},
        {"b3", [&](int e1, int e2) {
             return std::vector<Poly>{lin(B3), minus(A3, fe(e1), C), minus(A1, fe(e2) * I, A2)};
         }},
    };
    for (auto& [tag, builder] : b_families) {
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                CurveRecord c;
                c.kind = CurveKind::GenusOneB;
                c.hyperplane_tag = tag;
                c.sign_vector = {e1, e2};
                c.span = rref_span(builder(e1, e2));
                cat.curves.push_back(std::move(c));
            }
    }

    struct AaFamily {
        std::string tag_base;
        std::function<std::vector<Poly>(int, int, int)> builder;
    };
    std::vector<AaFamily> aa_families = {
        {"a1=a2", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A1, fe(e), A2), minus(B2, fe(e2), B1), minus(B3, fe(e3) * S2, A1)};
         }},
        {"a2=a3", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A2, fe(e), A3), minus(B3, fe(e2), B2), minus(B1, fe(e3) * S2, A2)};
         }},
        {"a3=a1", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A3, fe(e), A1), minus(B1, fe(e2), B3), minus(B2, fe(e3) * S2, A3)};
         }},
        {"a1=ic", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A1, fe(e) * I, C), minus(B1, fe(e2) * S2, C), minus(B3, fe(e3) * I, B2)};
         }},
        {"a2=ic", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A2, fe(e) * I, C), minus(B2, fe(e2) * S2, C), minus(B3, fe(e3) * I, B1)};
         }},
        {"a3=ic", [&](int e, int e2, int e3) {
             return std::vector<Poly>{minus(A3, fe(e) * I, C), minus(B3, fe(e2) * S2, C), minus(B2, fe(e3) * I, B1)};
         }},
    };
    for (auto& fam : aa_families) {
        for (int e : {1, -1}) {
            for (int e2 : {1, -1})
                for (int e3 : {1, -1}) {
                    CurveRecord c;
                    c.kind = CurveKind::GenusOneAA;
                    c.hyperplane_tag = fam.tag_base;
                    c.hyperplane_tag.insert(3, e > 0 ? "+" : "-");
                    c.sign_vector = {e, e2, e3};
                    c.span = rref_span(fam.builder(e, e2, e3));
                    cat.curves.push_back(std::move(c));
                }
        }
    }

    if (cat.curves.size() != 140)
        throw std::logic_error("build_curve_catalog: expected 140 records");

    // complete and verify the non-exceptional records
    for (CurveRecord& c : cat.curves) {
        if (c.kind == CurveKind::Exceptional) continue;
        c.quadrics = reduce_surface_to_span(model, c.span);
        size_t expected = c.kind == CurveKind::Conic ? 1 : 2;
        if (c.quadrics.size() != expected)
            throw std::runtime_error("build_curve_catalog: unexpected quadric count for " + c.hyperplane_tag);

        std::vector<Poly> gens = c.span;
        gens.insert(gens.end(), c.quadrics.begin(), c.quadrics.end());
        CurveNumbers nums = hilbert_curve_numbers(gens);
        c.degree = nums.degree;
        c.arithmetic_genus = nums.arithmetic_genus;
        int want_deg = c.kind == CurveKind::Conic ? 2 : 4;
        int want_genus = c.kind == CurveKind::Conic ? 0 : 1;
        if (c.degree != want_deg || c.arithmetic_genus != want_genus)
            throw std::runtime_error("build_curve_catalog: degree/genus check failed for " + c.hyperplane_tag);

        verify_curve_smooth(c);

        for (const NodeRecord& n : cat.nodes) {
            bool on = true;
            for (const Poly& f : c.span)
                if (!f.evaluate(n.coords).is_zero()) { on = false; break; }
            if (on)
                for (const Poly& q : c.quadrics)
                    if (!q.evaluate(n.coords).is_zero()) { on = false; break; }
            if (on) c.node_ids.push_back(n.id);
        }
    }

    for (size_t k = 0; k < cat.curves.size(); ++k) cat.curves[k].id = (int)k;

    for (const CurveRecord& c : cat.curves) {
        if (c.kind == CurveKind::Exceptional) {
            cat.node_index[node_key(cat.nodes[c.node_of_exceptional].coords)] = c.node_of_exceptional;
            continue;
        }
        std::string key = span_key(c.span);
        if (cat.span_index.count(key))
            throw std::logic_error("build_curve_catalog: two curves share a span");
        cat.span_index[key] = c.id;
    }

    for (CurveRecord& c : cat.curves) {
        if (c.kind != CurveKind::Exceptional) c.field = field_of_definition(c, cat);
    }

    int n_conic = 0, n_b = 0, n_aa = 0, n_e = 0;
    for (const CurveRecord& c : cat.curves) {
        switch (c.kind) {
            case CurveKind::Exceptional: ++n_e; break;
            case CurveKind::Conic: ++n_conic; break;
            case CurveKind::GenusOneB: ++n_b; break;
            case CurveKind::GenusOneAA: ++n_aa; break;
        }
    }
    if (n_e != 48 || n_conic != 32 || n_b != 12 || n_aa != 48)
        throw std::runtime_error("build_curve_catalog: family counts are off");

    return cat;
}

Subfield field_of_definition(const CurveRecord& curve, const Catalog& catalog) {
    if (curve.kind == CurveKind::Exceptional)
        return catalog.nodes[curve.node_of_exceptional].field;
    std::vector<GaloisElement> stab;
    for (const GaloisElement& g : GaloisElement::all()) {
        if (g.is_identity()) continue;
        std::vector<Poly> span_img;
        for (const Poly& f : curve.span) span_img.push_back(f.galois(g));
        if (span_key(rref_span(span_img)) != span_key(curve.span)) continue;
        std::vector<std::string> quads, quads_img;
        for (const Poly& q : curve.quadrics) quads.push_back(q.str());
        for (const Poly& q : curve.quadrics) quads_img.push_back(q.galois(g).monic().str());
        std::sort(quads.begin(), quads.end());
        std::sort(quads_img.begin(), quads_img.end());
        if (quads == quads_img) stab.push_back(g);
    }
    return fixed_field(stab);
}

std::vector<Poly> catalog_hyperplanes() {
    const FieldElement I = FieldElement::i();
    std::vector<Poly> out;
    auto minus = [&](int v, const FieldElement& coef, int w) {
        return var(v) - Poly::variable(NVARS, w).scaled(coef);
    };
    for (auto [j, jn] : {std::pair{A1, A2}, {A2, A3}, {A3, A1}})
        for (int e : {1, -1}) out.push_back(minus(j, fe(e), jn));
    for (int j : {A1, A2, A3})
        for (int e : {1, -1}) out.push_back(minus(j, fe(e) * I, C));
    return out;
}

SectionDecomposition hyperplane_section_decomposition(const SurfaceModel& model,
                                                      const Catalog& catalog,
                                                      const Poly& h) {
    Poly hn = h.monic();
    bool supported = false;
    for (int v = 0; v < NVARS; ++v)
        if (hn == var(v)) supported = true;
    for (const Poly& p : catalog_hyperplanes())
        if (hn == p.monic()) supported = true;
    if (!supported)
        throw std::invalid_argument("hyperplane_section_decomposition: unsupported hyperplane");

    SectionDecomposition dec;
    std::vector<Poly> section = model.equations;
    section.push_back(hn);
    dec.section_degree = hilbert_curve_numbers(section).degree;

    for (const CurveRecord& c : catalog.curves) {
        if (c.kind == CurveKind::Exceptional) continue;
        std::vector<Poly> with_h = c.span;
        with_h.push_back(hn);
        KMat rows;
        for (const Poly& f : with_h) {
            KVec row(NVARS);
            for (int v = 0; v < NVARS; ++v) {
                Monomial mv(NVARS, 0);
                mv[v] = 1;
                row[v] = f.coeff(mv);
            }
            rows.push_back(std::move(row));
        }
        if (k_rank(rows) == (int)c.span.size())
            dec.components.push_back(SectionComponent{c.id, 1});
    }

    int total = 0;
    for (const SectionComponent& comp : dec.components)
        total += comp.multiplicity * catalog.curves[comp.curve_id].degree;
    if (total != dec.section_degree)
        throw std::runtime_error("hyperplane_section_decomposition: components do not exhaust the section");
    return dec;
}

int reference_q1_points_on_surface(const SurfaceModel& model) {
    const FieldElement I = FieldElement::i();
    int count = 0;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (int e3 : {1, -1}) {
                std::vector<FieldElement> pt = {fe(0), fe(1), fe(e1), fe(0), fe(e2) * I, fe(e3) * I, fe(0)};
                bool on = true;
                for (const Poly& q : model.equations)
                    if (!q.evaluate(pt).is_zero()) on = false;
                if (on) ++count;
            }
    return count;
}

} // namespace cuboids
