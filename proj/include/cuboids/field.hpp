#pragma once

#include "cuboids/numeric.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace cuboids {

/**
 * An element of the degree-4 number field K = Q(i, sqrt2), stored as exact
 * rational coordinates on the basis {1, i, sqrt2, i*sqrt2}.  The field is a
 * single Q-algebra with a fixed multiplication table rather than a tower, so
 * arithmetic and the Galois action are uniform.
 */
class FieldElement {
public:
    FieldElement() : c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
    FieldElement(const Rat& rational) : c_{rational, Rat(0), Rat(0), Rat(0)} {}
    FieldElement(long rational) : c_{Rat(rational), Rat(0), Rat(0), Rat(0)} {}
    FieldElement(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3)
        : c_{c0, c1, c2, c3} {}

    static FieldElement i() { return FieldElement(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static FieldElement sqrt2() { return FieldElement(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static FieldElement i_sqrt2() { return FieldElement(Rat(0), Rat(0), Rat(0), Rat(1)); }

    const Rat& coord(int k) const { return c_[k]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rat& rational_part() const { return c_[0]; }

    FieldElement operator-() const {
        return FieldElement(-c_[0], -c_[1], -c_[2], -c_[3]);
    }
    FieldElement operator+(const FieldElement& o) const {
        return FieldElement(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
    }
    FieldElement operator-(const FieldElement& o) const {
        return FieldElement(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
    }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement& operator+=(const FieldElement& o) { *this = *this + o; return *this; }
    FieldElement& operator-=(const FieldElement& o) { *this = *this - o; return *this; }
    FieldElement& operator*=(const FieldElement& o) { *this = *this * o; return *this; }

    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // total order on K via the coordinate 4-tuple; used only for canonical sorting
    int compare(const FieldElement& o) const;

    FieldElement inverse() const;

    // sqrt within K of a *rational* element: handles r = q^2 * u with
    // u in {1, -1, 2, -2}, which is exactly what the node systems produce.
    std::optional<FieldElement> sqrt_rational() const;

    std::string str() const;

private:
    std::array<Rat, 4> c_;
};

inline FieldElement operator*(const Rat& a, const FieldElement& x) { return FieldElement(a) * x; }

/**
 * One of the four elements of Gal(K/Q) ~ Z/2 x Z/2, recorded by its effect
 * on i and sqrt2.
 */
struct GaloisElement {
    bool flip_i = false;
    bool flip_sqrt2 = false;

    FieldElement apply(const FieldElement& x) const {
        Rat si(flip_i ? -1 : 1), ss(flip_sqrt2 ? -1 : 1);
        return FieldElement(x.coord(0), si * x.coord(1), ss * x.coord(2), si * ss * x.coord(3));
    }

    GaloisElement compose(const GaloisElement& o) const {
        return GaloisElement{flip_i != o.flip_i, flip_sqrt2 != o.flip_sqrt2};
    }

    bool is_identity() const { return !flip_i && !flip_sqrt2; }

    bool operator==(const GaloisElement& o) const {
        return flip_i == o.flip_i && flip_sqrt2 == o.flip_sqrt2;
    }

    static std::array<GaloisElement, 4> all() {
        return {GaloisElement{false, false}, GaloisElement{true, false},
                GaloisElement{false, true}, GaloisElement{true, true}};
    }
};

// Subfields of K, as fixed fields of subgroups of the Galois group.
enum class Subfield { Q, Qi, Qsqrt2, Qisqrt2, K };

std::string subfield_name(Subfield f);

// fixed field of the subgroup of Gal(K/Q) given by its nontrivial elements
Subfield fixed_field(const std::vector<GaloisElement>& stabilizer);

} // namespace cuboids
