#include "cuboids/intmat.hpp"

#include <stdexcept>

namespace cuboids {

IntMat imat_zero(int rows, int cols) {
    return IntMat(rows, std::vector<Int>(cols, Int(0)));
}

IntMat imat_identity(int n) {
    IntMat m = imat_zero(n, n);
    for (int k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

IntMat imat_mul(const IntMat& a, const IntMat& b) {
    int n = a.size(), p = b.size(), q = p ? (int)b[0].size() : 0;
    IntMat r = imat_zero(n, q);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < q; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntMat imat_transpose(const IntMat& a) {
    int n = a.size(), m = n ? (int)a[0].size() : 0;
    IntMat r = imat_zero(m, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool imat_equal(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

// fraction-free elimination; returns rank, and the determinant for square
// full-rank input through `det` when non-null
int bareiss_z(IntMat w, Int* det) {
    int m = w.size(), n = m ? (int)w[0].size() : 0;
    Int prev = 1;
    int rank = 0;
    int sign = 1;
    for (int col = 0; col < n && rank < m; ++col) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
            if (w[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != rank) {
            std::swap(w[pr], w[rank]);
            sign = -sign;
        }
        const Int pivot = w[rank][col];
        for (int r = rank + 1; r < m; ++r) {
            const Int f = w[r][col];
            for (int j = col + 1; j < n; ++j) {
                Int t = pivot * w[r][j] - f * w[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[r][j] = t;
            }
            w[r][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    if (det) {
        if (m != n || rank < n) *det = 0;
        else *det = sign * prev;
    }
    return rank;
}

} // namespace

int imat_rank(const IntMat& a) { return bareiss_z(a, nullptr); }

Int imat_determinant(const IntMat& a) {
    if (a.empty()) return Int(1);
    Int d;
    bareiss_z(a, &d);
    return d;
}

IntMat imat_inverse_unimodular(const IntMat& a) {
    int n = a.size();
    // rational Gauss-Jordan, then integrality check
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
        w[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = col; r < n; ++r)
            if (w[r][col] != 0) { pr = r; break; }
        if (pr < 0) throw std::domain_error("imat_inverse_unimodular: singular matrix");
        std::swap(w[pr], w[col]);
        Rat inv = 1 / w[col][col];
        for (int j = 0; j < 2 * n; ++j) w[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || w[r][col] == 0) continue;
            Rat f = w[r][col];
            for (int j = 0; j < 2 * n; ++j) w[r][j] -= f * w[col][j];
        }
    }
    IntMat out = imat_zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (w[i][n + j].get_den() != 1)
                throw std::domain_error("imat_inverse_unimodular: inverse is not integral");
            out[i][j] = w[i][n + j].get_num();
        }
    return out;
}

SnfResult snf(const IntMat& a) {
    int m = a.size(), n = m ? (int)a[0].size() : 0;
    SnfResult res;
    res.s = a;
    res.u = imat_identity(m);
    res.v = imat_identity(n);
    IntMat& s = res.s;
    IntMat& u = res.u;
    IntMat& v = res.v;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(s[i], s[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(s[r][i], s[r][j]);
        for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto add_row = [&](int dst, int src, const Int& f) {   // row_dst += f * row_src
        if (f == 0) return;
        for (int j = 0; j < n; ++j) s[dst][j] += f * s[src][j];
        for (int j = 0; j < m; ++j) u[dst][j] += f * u[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < m; ++r) s[r][dst] += f * s[r][src];
        for (int r = 0; r < n; ++r) v[r][dst] += f * v[r][src];
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) s[i][j] = -s[i][j];
        for (int j = 0; j < m; ++j) u[i][j] = -u[i][j];
    };

    int t = 0;
    int lim = std::min(m, n);
    for (; t < lim; ++t) {
        // smallest nonzero |entry| in the trailing block, row-major tiebreak
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (s[i][j] == 0) continue;
                if (pi < 0 || cmp(abs(s[i][j]), abs(s[pi][pj])) < 0) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (s[i][t] == 0) continue;
                Int q = floor_div(s[i][t], s[t][t]);
                add_row(i, t, -q);
                if (s[i][t] != 0) {
                    // remainder became the smaller pivot
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (s[t][j] == 0) continue;
                Int q = floor_div(s[t][j], s[t][t]);
                add_col(j, t, -q);
                if (s[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if (s[t][t] < 0) negate_row(t);

        // enforce the divisibility chain
        bool redo = true;
        while (redo) {
            redo = false;
            for (int i = t + 1; i < m && !redo; ++i)
                for (int j = t + 1; j < n && !redo; ++j) {
                    if (s[i][j] % s[t][t] != 0) {
                        add_row(t, i, Int(1));
                        // re-clean row t
                        bool c2 = false;
                        while (!c2) {
                            c2 = true;
                            for (int jj = t + 1; jj < n; ++jj) {
                                if (s[t][jj] == 0) continue;
                                Int q = floor_div(s[t][jj], s[t][t]);
                                add_col(jj, t, -q);
                                if (s[t][jj] != 0) {
                                    swap_cols(t, jj);
                                    c2 = false;
                                }
                            }
                            for (int ii = t + 1; ii < m; ++ii) {
                                if (s[ii][t] == 0) continue;
                                Int q = floor_div(s[ii][t], s[t][t]);
                                add_row(ii, t, -q);
                                if (s[ii][t] != 0) {
                                    swap_rows(t, ii);
                                    c2 = false;
                                }
                            }
                        }
                        if (s[t][t] < 0) negate_row(t);
                        redo = true;
                    }
                }
        }
    }

    res.rank = t;
    res.factors.resize(lim);
    for (int k = 0; k < lim; ++k) res.factors[k] = s[k][k];
    return res;
}

IntMat kernel_basis(const IntMat& a) {
    int n = a.empty() ? 0 : (int)a[0].size();
    SnfResult r = snf(a);
    IntMat out;
    for (int j = r.rank; j < n; ++j) {
        std::vector<Int> col(n);
        for (int i = 0; i < n; ++i) col[i] = r.v[i][j];
        out.push_back(std::move(col));
    }
    return out;
}

} // namespace cuboids
