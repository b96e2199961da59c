#include "cuboids/lattice.hpp"

#include <stdexcept>

namespace cuboids {

Signature signature_of(const IntMat& g) {
    int n = g.size();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (g[i][j] != g[j][i]) throw std::invalid_argument("signature_of: matrix not symmetric");
            w[i][j] = Rat(g[i][j]);
        }
    Signature sig;
    for (int t = 0; t < n; ++t) {
        if (w[t][t] == 0) {
            int r = -1;
            for (int k = t + 1; k < n; ++k)
                if (w[k][k] != 0) { r = k; break; }
            if (r >= 0) {
                std::swap(w[t], w[r]);
                for (int k = 0; k < n; ++k) std::swap(w[k][t], w[k][r]);
            } else {
                // all trailing diagonal zero; hyperbolic fix via an off-diagonal entry
                int oi = -1, oj = -1;
                for (int i = t; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (w[i][j] != 0) { oi = i; oj = j; break; }
                if (oi < 0) {
                    sig.zero += n - t;
                    return sig;
                }
                for (int k = 0; k < n; ++k) w[oi][k] += w[oj][k];
                for (int k = 0; k < n; ++k) w[k][oi] += w[k][oj];
                std::swap(w[t], w[oi]);
                for (int k = 0; k < n; ++k) std::swap(w[k][t], w[k][oi]);
            }
        }
        if (w[t][t] > 0) sig.positive++;
        else sig.negative++;
        for (int r = t + 1; r < n; ++r) {
            if (w[r][t] == 0) continue;
            Rat f = w[r][t] / w[t][t];
            for (int k = 0; k < n; ++k) w[r][k] -= f * w[t][k];
            for (int k = 0; k < n; ++k) w[k][r] -= f * w[k][t];
        }
    }
    return sig;
}

PicardLattice build_picard_lattice(const IntMat& gram140) {
    int n = gram140.size();
    IntMat rad = kernel_basis(gram140);          // rows span the radical
    int rank = n - (int)rad.size();
    if (rank != 64)
        throw std::runtime_error("build_picard_lattice: intersection matrix rank is not 64");

    SnfResult s = snf(rad);
    for (const Int& f : s.factors)
        if (f != 1)
            throw std::logic_error("build_picard_lattice: radical basis is not saturated");

    // x -> x*V maps the radical onto Z^r x 0; the last `rank` V-columns give
    // class coordinates, the matching rows of V^-1 a basis of the quotient
    int r = (int)rad.size();
    IntMat vinv = imat_inverse_unimodular(s.v);
    PicardLattice pic;
    pic.rank = rank;
    pic.coords = imat_zero(n, rank);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j) pic.coords[i][j] = s.v[i][r + j];
    pic.basis_expr = imat_zero(rank, n);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < n; ++j) pic.basis_expr[i][j] = vinv[r + i][j];

    pic.gram64 = imat_mul(imat_mul(pic.basis_expr, gram140), imat_transpose(pic.basis_expr));
    IntMat check = imat_mul(imat_mul(pic.coords, pic.gram64), imat_transpose(pic.coords));
    if (!imat_equal(check, gram140))
        throw std::logic_error("build_picard_lattice: coordinate round-trip failed");

    pic.discriminant = imat_determinant(pic.gram64);
    pic.signature = signature_of(pic.gram64);
    return pic;
}

bool is_primitive(const std::vector<Int>& v) {
    Int g = gcd_of(v);
    if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
    return g == 1;
}

bool is_even(const IntMat& g) {
    int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g[i][j] != g[j][i]) throw std::invalid_argument("is_even: matrix not symmetric");
    for (int i = 0; i < n; ++i)
        if (g[i][i] % 2 != 0) return false;
    return true;
}

LllResult lll_reduce(const IntMat& gram) {
    int n = gram.size();
    LllResult res;
    res.transform = imat_identity(n);
    if (n == 0) {
        res.gram = gram;
        return res;
    }
    // all-integer Gram-Schmidt data, 1-based to match the classical recurrences
    std::vector<Int> d(n + 1);
    d[0] = 1;
    std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1, Int(0)));

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            Int u = gram[i - 1][j - 1];
            for (int k = 1; k < j; ++k) {
                Int t = d[k] * u - lam[i][k] * lam[j][k];
                mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d[k - 1].get_mpz_t());
            }
            if (j < i) lam[i][j] = u;
            else {
                d[i] = u;
                if (d[i] <= 0) throw std::domain_error("lll_reduce: gram matrix is not positive definite");
            }
        }
    }

    auto red = [&](int k, int l) {
        Int two_lam = 2 * lam[k][l];
        if (cmp(abs(two_lam), d[l]) <= 0) return;
        // nearest integer to lam[k][l] / d[l]
        Int q = floor_div(two_lam + d[l], 2 * d[l]);
        for (int j = 0; j < n; ++j) res.transform[k - 1][j] -= q * res.transform[l - 1][j];
        lam[k][l] -= q * d[l];
        for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    auto swap_step = [&](int k) {
        std::swap(res.transform[k - 1], res.transform[k - 2]);
        for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lam_p = lam[k][k - 1];
        Int b = d[k - 2] * d[k] + lam_p * lam_p;
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d[k - 1].get_mpz_t());
        for (int i = k + 1; i <= n; ++i) {
            Int t = lam[i][k];
            Int x = d[k] * lam[i][k - 1] - lam_p * t;
            mpz_divexact(lam[i][k].get_mpz_t(), x.get_mpz_t(), d[k - 1].get_mpz_t());
            Int y = b * t + lam_p * lam[i][k];
            mpz_divexact(lam[i][k - 1].get_mpz_t(), y.get_mpz_t(), d[k].get_mpz_t());
        }
        d[k - 1] = b;
    };

    int k = 2;
    while (k <= n) {
        red(k, k - 1);
        // Lovasz with delta = 3/4: 4 d[k] d[k-2] < 3 d[k-1]^2 - 4 lam^2
        if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_step(k);
            k = std::max(2, k - 1);
        } else {
            for (int l = k - 2; l >= 1; --l) red(k, l);
            ++k;
        }
    }

    res.gram = imat_mul(imat_mul(res.transform, gram), imat_transpose(res.transform));
    return res;
}

} // namespace cuboids
