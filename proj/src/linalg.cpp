#include "cuboids/linalg.hpp"

#include <array>
#include <stdexcept>

namespace cuboids {

KMat k_identity(int n) {
    KMat m(n, KVec(n));
    for (int k = 0; k < n; ++k) m[k][k] = FieldElement(Rat(1));
    return m;
}

KMat k_mul(const KMat& a, const KMat& b) {
    int n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    KMat r(n, KVec(q));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < q; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

KVec k_mat_vec(const KMat& a, const KVec& v) {
    KVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
    return r;
}

LinearSolveResult linear_solve(const KMat& a_in, const std::vector<KVec>& rhs) {
    int m = a_in.size();
    int n = m ? (int)a_in[0].size() : 0;
    int nr = rhs.size();
    // augmented working copy
    KMat w = a_in;
    std::vector<KVec> b = rhs;

    std::vector<int> pivot_col;
    std::vector<int> pivot_row;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (!w[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(w[pr], w[row]);
        for (int t = 0; t < nr; ++t) std::swap(b[t][pr], b[t][row]);
        FieldElement inv = w[row][col].inverse();
        for (int j = col; j < n; ++j) w[row][j] *= inv;
        for (int t = 0; t < nr; ++t) b[t][row] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || w[r][col].is_zero()) continue;
            FieldElement f = w[r][col];
            for (int j = col; j < n; ++j) w[r][j] -= f * w[row][j];
            for (int t = 0; t < nr; ++t) b[t][r] -= f * b[t][row];
        }
        pivot_col.push_back(col);
        pivot_row.push_back(row);
        ++row;
    }

    LinearSolveResult res;
    res.rank = row;
    res.solvable.assign(nr, true);
    for (int t = 0; t < nr; ++t) {
        for (int r = row; r < m; ++r)
            if (!b[t][r].is_zero()) res.solvable[t] = false;
        if (!res.solvable[t]) res.consistent = false;
        KVec x(n);
        if (res.solvable[t])
            for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[t][pivot_row[k]];
        res.particular.push_back(std::move(x));
    }

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        KVec v(n);
        v[free] = FieldElement(Rat(1));
        for (size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -w[pivot_row[k]][free];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

int k_rank(const KMat& a) { return linear_solve(a).rank; }

KMat k_rref(const KMat& a) {
    int m = a.size();
    int n = m ? (int)a[0].size() : 0;
    KMat w = a;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (!w[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(w[pr], w[row]);
        FieldElement inv = w[row][col].inverse();
        for (int j = 0; j < n; ++j) w[row][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || w[r][col].is_zero()) continue;
            FieldElement f = w[r][col];
            for (int j = 0; j < n; ++j) w[r][j] -= f * w[row][j];
        }
        ++row;
    }
    w.resize(row, KVec(n));
    return w;
}

KMat k_inverse(const KMat& a) {
    int n = a.size();
    std::vector<KVec> rhs;
    KMat id = k_identity(n);
    for (int k = 0; k < n; ++k) {
        KVec e(n);
        for (int r = 0; r < n; ++r) e[r] = id[r][k];
        rhs.push_back(e);
    }
    auto sol = linear_solve(a, rhs);
    if (sol.rank != n) throw std::domain_error("k_inverse: singular matrix");
    KMat inv(n, KVec(n));
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) inv[r][k] = sol.particular[k][r];
    return inv;
}

namespace {

// element of Z[i, sqrt2] as integer coordinates on {1, i, sqrt2, i*sqrt2}
struct OElem {
    std::array<Int, 4> c;
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

OElem o_mul(const OElem& a, const OElem& b) {
    OElem r;
    r.c[0] = a.c[0] * b.c[0] - a.c[1] * b.c[1] + 2 * a.c[2] * b.c[2] - 2 * a.c[3] * b.c[3];
    r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + 2 * a.c[2] * b.c[3] + 2 * a.c[3] * b.c[2];
    r.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] - a.c[1] * b.c[3] - a.c[3] * b.c[1];
    r.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + a.c[1] * b.c[2] + a.c[2] * b.c[1];
    return r;
}

OElem o_sub(const OElem& a, const OElem& b) {
    OElem r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

// exact division a / b: multiply by the three conjugates of b, then divide
// by the rational norm; exactness is guaranteed by the caller (Bareiss)
OElem o_div_exact(const OElem& a, const OElem& b) {
    OElem ci{{b.c[0], -b.c[1], b.c[2], -b.c[3]}};
    OElem num = o_mul(a, ci);
    OElem w = o_mul(b, ci);                        // in Z[sqrt2]
    OElem ws{{w.c[0], w.c[1], -w.c[2], -w.c[3]}};
    num = o_mul(num, ws);
    OElem norm = o_mul(w, ws);                     // rational
    const Int& n0 = norm.c[0];
    OElem r;
    for (int k = 0; k < 4; ++k) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.c[k].get_mpz_t(), n0.get_mpz_t());
        if (rem != 0) throw std::logic_error("bareiss: inexact division");
        r.c[k] = q;
    }
    return r;
}

} // namespace

int bareiss_rank(const KMat& a) {
    int m = a.size();
    int n = m ? (int)a[0].size() : 0;
    if (m == 0 || n == 0) return 0;
    std::vector<std::vector<OElem>> w(m, std::vector<OElem>(n));
    for (int i = 0; i < m; ++i) {
        Int lcm = 1;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < 4; ++k)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][j].coord(k).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < 4; ++k) {
                Rat scaled = a[i][j].coord(k) * Rat(lcm);
                w[i][j].c[k] = scaled.get_num();
            }
    }
    OElem prev{{Int(1), Int(0), Int(0), Int(0)}};
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
            if (!w[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(w[pr], w[rank]);
        const OElem pivot = w[rank][col];
        for (int r = rank + 1; r < m; ++r) {
            if (w[r][col].is_zero()) {
                for (int j = col + 1; j < n; ++j)
                    if (!w[r][j].is_zero())
                        w[r][j] = o_div_exact(o_mul(pivot, w[r][j]), prev);
                continue;
            }
            const OElem f = w[r][col];
            for (int j = col + 1; j < n; ++j) {
                OElem t = o_sub(o_mul(pivot, w[r][j]), o_mul(f, w[rank][j]));
                w[r][j] = t.is_zero() ? t : o_div_exact(t, prev);
            }
            w[r][col] = OElem{{Int(0), Int(0), Int(0), Int(0)}};
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace cuboids
