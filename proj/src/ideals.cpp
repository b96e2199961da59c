#include "cuboids/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cuboids {

namespace {

void enumerate_monomials(int nvars, int d, int pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(nvars, d - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial cur(nvars, 0);
    enumerate_monomials(nvars, d, 0, cur, out);
    return out;
}

std::vector<Monomial> monomials_below_degree(int nvars, int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d < bound; ++d) {
        auto md = monomials_of_degree(nvars, d);
        out.insert(out.end(), md.begin(), md.end());
    }
    return out;
}

EliminationResult eliminate_linear(std::vector<Poly> gens, bool local_at_origin) {
    EliminationResult res;
    int nvars = gens.empty() ? 0 : gens[0].nvars();
    while (true) {
        int pick = -1;
        for (size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].is_zero()) continue;
            if (gens[g].degree() == 0) {
                res.unit_ideal = true;
                res.nvars = nvars;
                return res;
            }
            if (gens[g].degree() == 1) {
                if (local_at_origin && !gens[g].coeff(Monomial(nvars, 0)).is_zero()) {
                    res.unit_ideal = true;
                    res.nvars = nvars;
                    return res;
                }
                pick = (int)g;
                break;
            }
        }
        if (pick < 0) break;
        Poly lin = gens[pick];
        // leading variable: smallest index with nonzero coefficient
        int var = -1;
        FieldElement coef;
        for (int v = 0; v < nvars && var < 0; ++v) {
            Monomial m(nvars, 0);
            m[v] = 1;
            FieldElement c = lin.coeff(m);
            if (!c.is_zero()) { var = v; coef = c; }
        }
        if (var < 0) throw std::logic_error("eliminate_linear: degree-1 generator without variables");
        // var = -(lin - coef*var)/coef
        Monomial mv(nvars, 0);
        mv[var] = 1;
        Poly rest = lin;
        rest.add_term(mv, -coef);
        Poly image = rest.scaled(-(coef.inverse()));
        std::vector<Poly> images;
        images.reserve(nvars);
        for (int v = 0; v < nvars; ++v)
            images.push_back(v == var ? image : Poly::variable(nvars, v));
        std::vector<Poly> next;
        for (size_t g = 0; g < gens.size(); ++g) {
            if ((int)g == pick) continue;
            Poly s = gens[g].substitute(images);
            if (!s.is_zero()) next.push_back(s.drop_variables({var}));
        }
        gens = std::move(next);
        --nvars;
        // re-expand ring: drop_variables already reduced each poly to nvars
    }
    // drop zero generators
    std::vector<Poly> keep;
    for (auto& g : gens)
        if (!g.is_zero()) keep.push_back(g);
    res.gens = std::move(keep);
    res.nvars = nvars;
    return res;
}

namespace {

int graded_dimension_reduced(const std::vector<Poly>& gens, int nvars, int d) {
    auto monos = monomials_of_degree(nvars, d);
    if (monos.empty()) return 0;
    std::map<Monomial, int, GrlexLess> index;
    for (size_t k = 0; k < monos.size(); ++k) index[monos[k]] = (int)k;
    KMat rows;
    for (const Poly& g : gens) {
        int dg = g.degree();
        if (dg < 0 || dg > d) continue;
        for (const Monomial& f : monomials_of_degree(nvars, d - dg)) {
            KVec row(monos.size());
            for (const auto& [m, c] : g.terms()) {
                Monomial prod(nvars);
                for (int k = 0; k < nvars; ++k) prod[k] = m[k] + f[k];
                row[index[prod]] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    return (int)monos.size() - bareiss_rank(rows);
}

} // namespace

int graded_dimension(const std::vector<Poly>& gens, int d) {
    for (const Poly& g : gens)
        if (!g.is_homogeneous())
            throw std::invalid_argument("graded_dimension: generators must be homogeneous");
    EliminationResult e = eliminate_linear(gens);
    if (e.unit_ideal) return 0;
    return graded_dimension_reduced(e.gens, e.nvars, d);
}

int stabilized_projective_degree(const std::vector<Poly>& gens, int cap) {
    EliminationResult e = eliminate_linear(gens);
    if (e.unit_ideal) return 0;
    if (e.nvars == 0) return 0;   // the linear forms alone have no projective zero
    int d0 = 2;
    for (const Poly& g : e.gens) d0 = std::max(d0, g.degree());
    int prev = graded_dimension_reduced(e.gens, e.nvars, d0);
    for (int d = d0 + 1; d <= cap; ++d) {
        int cur = graded_dimension_reduced(e.gens, e.nvars, d);
        if (cur == prev) {
            int next = graded_dimension_reduced(e.gens, e.nvars, d + 1);
            if (next != cur)
                throw std::runtime_error("stabilized_projective_degree: non-monotone Hilbert function");
            return cur;
        }
        prev = cur;
    }
    throw std::runtime_error("stabilized_projective_degree: no stabilization below the degree cap");
}

int local_length(const std::vector<Poly>& gens_in, int n_max) {
    EliminationResult e = eliminate_linear(gens_in, /*local_at_origin=*/true);
    if (e.unit_ideal) return 0;
    if (e.nvars == 0) return 1;
    for (const Poly& g : e.gens) {
        Monomial zero(e.nvars, 0);
        if (!g.coeff(zero).is_zero()) return 0;   // unit in the local ring
    }
    if (e.gens.empty())
        throw std::runtime_error("local_length: zero ideal is not isolated at the origin");

    int prev = -1;
    for (int bound = 1; bound <= n_max; ++bound) {
        auto monos = monomials_below_degree(e.nvars, bound);
        std::map<Monomial, int, GrlexLess> index;
        for (size_t k = 0; k < monos.size(); ++k) index[monos[k]] = (int)k;
        KMat rows;
        for (const Poly& g : e.gens) {
            int lo = g.low_degree();
            for (int fd = 0; fd + lo < bound; ++fd) {
                for (const Monomial& f : monomials_of_degree(e.nvars, fd)) {
                    KVec row(monos.size());
                    bool nonzero = false;
                    for (const auto& [m, c] : g.terms()) {
                        Monomial prod(e.nvars);
                        int dsum = 0;
                        for (int k = 0; k < e.nvars; ++k) {
                            prod[k] = m[k] + f[k];
                            dsum += prod[k];
                        }
                        if (dsum >= bound) continue;   // lands in m^N, truncated
                        row[index[prod]] = c;
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        int cur = (int)monos.size() - bareiss_rank(rows);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw std::runtime_error("local_length: no stabilization within n_max (point may not be isolated)");
}

CurveNumbers hilbert_curve_numbers(const std::vector<Poly>& gens, int cap) {
    EliminationResult e = eliminate_linear(gens);
    if (e.unit_ideal) throw std::runtime_error("hilbert_curve_numbers: unit ideal");
    int d0 = 2;
    for (const Poly& g : e.gens) d0 = std::max(d0, g.degree());
    std::vector<int> h;
    int first_d = d0;
    h.push_back(graded_dimension_reduced(e.gens, e.nvars, d0));
    for (int d = d0 + 1; d <= cap; ++d) {
        h.push_back(graded_dimension_reduced(e.gens, e.nvars, d));
        size_t n = h.size();
        if (n >= 3) {
            int diff1 = h[n - 2] - h[n - 3];
            int diff2 = h[n - 1] - h[n - 2];
            if (diff1 == diff2) {
                CurveNumbers cn;
                cn.degree = diff2;
                cn.arithmetic_genus = 1 - (h[n - 1] - cn.degree * d);
                (void)first_d;
                return cn;
            }
        }
    }
    throw std::runtime_error("hilbert_curve_numbers: Hilbert function not linear below the cap");
}

KMat quadratic_form_matrix(const Poly& q) {
    int n = q.nvars();
    KMat m(n, KVec(n));
    FieldElement half(Rat(1, 2));
    for (const auto& [mono, c] : q.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < n; ++k) {
            if (mono[k] == 2) { i = j = k; }
            else if (mono[k] == 1) { (i < 0 ? i : j) = k; }
        }
        if (monomial_degree(mono) != 2)
            throw std::invalid_argument("quadratic_form_matrix: form must be homogeneous of degree 2");
        if (i == j) {
            m[i][i] = c;
        } else {
            m[i][j] = half * c;
            m[j][i] = m[i][j];
        }
    }
    return m;
}

} // namespace cuboids
