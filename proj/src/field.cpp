#include "cuboids/field.hpp"

#include <sstream>

namespace cuboids {

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15; k >= 0; --k) {
        s[k] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    // basis products: i*i = -1, s*s = 2, (is)*(is) = -2, i*s = is, i*(is) = -s, s*(is) = 2i
    const Rat &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    const Rat &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
    Rat r0 = a0 * b0 - a1 * b1 + 2 * a2 * b2 - 2 * a3 * b3;
    Rat r1 = a0 * b1 + a1 * b0 + 2 * a2 * b3 + 2 * a3 * b2;
    Rat r2 = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
    Rat r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    return FieldElement(r0, r1, r2, r3);
}

int FieldElement::compare(const FieldElement& o) const {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(c_[k], o.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: division by zero");
    GaloisElement conj_i{true, false};
    GaloisElement conj_s{false, true};
    // w = x * conj_i(x) lies in Q(sqrt2); N = w * conj_s(w) lies in Q
    FieldElement xbar = conj_i.apply(*this);
    FieldElement w = *this * xbar;
    FieldElement wbar = conj_s.apply(w);
    FieldElement norm = w * wbar;
    if (!norm.is_rational() || norm.rational_part() == 0)
        throw std::logic_error("FieldElement: norm computation failed");
    Rat n_inv = Rat(1) / norm.rational_part();
    return FieldElement(n_inv) * xbar * wbar;
}

std::optional<FieldElement> FieldElement::sqrt_rational() const {
    if (!is_rational()) return std::nullopt;
    const Rat& r = c_[0];
    if (r == 0) return FieldElement();
    struct Case { Rat unit; FieldElement root_unit; };
    const Case cases[4] = {
        {Rat(1), FieldElement(Rat(1))},
        {Rat(-1), FieldElement::i()},
        {Rat(2), FieldElement::sqrt2()},
        {Rat(-2), FieldElement::i_sqrt2()},
    };
    for (const Case& c : cases) {
        auto q = rational_sqrt(r / c.unit);
        if (q) return FieldElement(*q) * c.root_unit;
    }
    return std::nullopt;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << c_[0].get_str() << "," << c_[1].get_str() << ","
       << c_[2].get_str() << "," << c_[3].get_str();
    return os.str();
}

std::string subfield_name(Subfield f) {
    switch (f) {
        case Subfield::Q: return "Q";
        case Subfield::Qi: return "Q(i)";
        case Subfield::Qsqrt2: return "Q(sqrt2)";
        case Subfield::Qisqrt2: return "Q(i*sqrt2)";
        case Subfield::K: return "Q(i,sqrt2)";
    }
    return "?";
}

Subfield fixed_field(const std::vector<GaloisElement>& stabilizer) {
    bool has_ci = false, has_cs = false, has_cis = false;
    for (const GaloisElement& g : stabilizer) {
        if (g.flip_i && !g.flip_sqrt2) has_ci = true;
        if (!g.flip_i && g.flip_sqrt2) has_cs = true;
        if (g.flip_i && g.flip_sqrt2) has_cis = true;
    }
    int n = (has_ci ? 1 : 0) + (has_cs ? 1 : 0) + (has_cis ? 1 : 0);
    if (n >= 2) return Subfield::Q;     // stabilizer is the whole group
    if (has_ci) return Subfield::Qsqrt2;
    if (has_cs) return Subfield::Qi;
    if (has_cis) return Subfield::Qisqrt2;
    return Subfield::K;
}

} // namespace cuboids
