#include "cuboids/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cuboids {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = FieldElement(Rat(1));
    return p;
}

Poly Poly::constant(int nvars, const FieldElement& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

int Poly::low_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || degree() == low_degree();
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement() : it->second;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mismatched rings");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mismatched rings");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int k = 0; k < nvars_; ++k) m[k] = ma[k] + mb[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const FieldElement& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_[m] = coef * c;
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if ((int)images.size() != nvars_) throw std::invalid_argument("Poly: substitution arity");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    Poly r(out_vars);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(out_vars, c);
        for (int k = 0; k < nvars_; ++k)
            for (int e = 0; e < m[k]; ++e) term = term * images[k];
        r += term;
    }
    return r;
}

Poly Poly::substitute_linear(const std::vector<std::vector<FieldElement>>& map) const {
    if ((int)map.size() != nvars_) throw std::invalid_argument("Poly: map must be square of the variable count");
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (int j = 0; j < nvars_; ++j) {
        if ((int)map[j].size() != nvars_) throw std::invalid_argument("Poly: map must be square of the variable count");
        Poly img(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            Monomial m(nvars_, 0);
            m[k] = 1;
            img.add_term(m, map[j][k]);
        }
        images.push_back(img);
    }
    return substitute(images);
}

Poly Poly::partial(int var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, FieldElement(Rat(m[var])) * c);
    }
    return r;
}

FieldElement Poly::evaluate(const std::vector<FieldElement>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("Poly: evaluation arity");
    FieldElement acc;
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (int k = 0; k < nvars_; ++k)
            for (int e = 0; e < m[k]; ++e) t *= point[k];
        acc += t;
    }
    return acc;
}

Poly Poly::galois(const GaloisElement& g) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = g.apply(c);
    return r;
}

int Poly::strip_variable_power(int var) {
    if (terms_.empty()) return 0;
    int k = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_) k = std::min(k, m[var]);
    if (k == 0) return 0;
    std::map<Monomial, FieldElement, GrlexLess> out;
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n[var] -= k;
        out[n] = c;
    }
    terms_ = std::move(out);
    return k;
}

Poly Poly::drop_variables(const std::vector<int>& drop) const {
    std::vector<bool> gone(nvars_, false);
    for (int v : drop) gone[v] = true;
    std::vector<int> keep;
    for (int k = 0; k < nvars_; ++k)
        if (!gone[k]) keep.push_back(k);
    Poly r((int)keep.size());
    for (const auto& [m, c] : terms_) {
        Monomial n(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) n[j] = m[keep[j]];
        for (int v : drop)
            if (m[v] != 0) throw std::logic_error("Poly: dropping a live variable");
        r.terms_[n] = c;
    }
    return r;
}

bool Poly::uses_variable(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] != 0) return true;
    return false;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.rbegin()->second.inverse());
}

std::string Poly::str() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << ";";
        first = false;
        for (int k = 0; k < nvars_; ++k) {
            if (k) os << ".";
            os << it->first[k];
        }
        os << ":" << it->second.str();
    }
    os << "]";
    return os.str();
}

namespace ring7 {
const char* const names[7] = {"a1", "a2", "a3", "b1", "b2", "b3", "c"};
Poly var(int index) { return Poly::variable(NVARS, index); }
} // namespace ring7

} // namespace cuboids
