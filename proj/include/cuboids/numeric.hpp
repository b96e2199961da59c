#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cuboids {

using Int = mpz_class;
using Rat = mpq_class;

// floor(a / b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceil(a / b) for b != 0
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(sqrt(a)) for a >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// sqrt(r) over Q when r is a perfect square of a rational
inline std::optional<Rat> rational_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Rat s(isqrt(num), isqrt(den));
    s.canonicalize();
    return s;
}

inline Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// FNV-1a, used to key cached artifacts to the catalog they came from
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t h);

} // namespace cuboids
