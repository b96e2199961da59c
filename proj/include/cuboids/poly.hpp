#pragma once

#include "cuboids/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace cuboids {

// Exponent vector.  The ambient ring uses the documented variable order
// a1, a2, a3, b1, b2, b3, c (indices 0..6); all canonical orderings and
// cached artifacts depend on it.
using Monomial = std::vector<int>;

// graded lexicographic: compare total degree first, then exponents left to right
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);

/**
 * Multivariate polynomial over K with sparse term storage.  Zero
 * coefficients are never stored.
 */
class Poly {
public:
    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly variable(int nvars, int index);
    static Poly constant(int nvars, const FieldElement& c);

    int nvars() const { return nvars_; }
    const std::map<Monomial, FieldElement, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const;         // -1 for the zero polynomial
    int low_degree() const;     // smallest term degree, -1 for zero
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const FieldElement& c);
    FieldElement coeff(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Poly scaled(const FieldElement& c) const;

    // substitute variable j by images[j]; all images share a common ring
    Poly substitute(const std::vector<Poly>& images) const;

    // p(map . x): substitute variable j by the linear form sum_k map[j][k] x_k
    Poly substitute_linear(const std::vector<std::vector<FieldElement>>& map) const;

    Poly partial(int var) const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    // coefficient-wise Galois conjugation
    Poly galois(const GaloisElement& g) const;

    // divide every term by t^k where t is variable `var` and k is the
    // minimal exponent of `var`; returns the exponent removed
    int strip_variable_power(int var);

    // remove variables listed in `drop` (which must not occur in any term)
    Poly drop_variables(const std::vector<int>& drop) const;

    bool uses_variable(int var) const;

    // scale so the leading (grlex-largest) coefficient is 1
    Poly monic() const;

    std::string str() const;   // stable serialization, terms in descending grlex order

private:
    int nvars_;
    std::map<Monomial, FieldElement, GrlexLess> terms_;
};

// convenience builders for the 7-variable ambient ring of P^6
namespace ring7 {
constexpr int A1 = 0, A2 = 1, A3 = 2, B1 = 3, B2 = 4, B3 = 5, C = 6, NVARS = 7;
Poly var(int index);
extern const char* const names[7];
} // namespace ring7

} // namespace cuboids
