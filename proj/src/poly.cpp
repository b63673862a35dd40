#include "nilcomm/poly.hpp"

#include <stdexcept>

namespace nilcomm {

MultivarPoly::MultivarPoly(const Rat& constant) {
    add_term({0, 0, 0, 0}, constant);
}

MultivarPoly MultivarPoly::var(int index) {
    if (index < 0 || index > 3) throw std::invalid_argument("MultivarPoly: variable index");
    MultivarPoly p;
    Monomial m{0, 0, 0, 0};
    m[index] = 1;
    p.add_term(m, Rat(1));
    return p;
}

void MultivarPoly::add_term(const Monomial& m, const Rat& c) {
    if (sgn(c) == 0) return;
    Rat canon = c;
    canon.canonicalize();  // guards against non-canonical two-argument constructions
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
        coeffs_.emplace(m, canon);
        return;
    }
    it->second += canon;
    if (sgn(it->second) == 0) coeffs_.erase(it);
}

MultivarPoly MultivarPoly::operator+(const MultivarPoly& o) const {
    MultivarPoly r = *this;
    for (const auto& [m, c] : o.coeffs_) r.add_term(m, c);
    return r;
}

MultivarPoly MultivarPoly::operator-(const MultivarPoly& o) const {
    MultivarPoly r = *this;
    for (const auto& [m, c] : o.coeffs_) r.add_term(m, -c);
    return r;
}

MultivarPoly MultivarPoly::operator-() const {
    MultivarPoly r;
    for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
    return r;
}

MultivarPoly MultivarPoly::operator*(const MultivarPoly& o) const {
    MultivarPoly r;
    for (const auto& [m1, c1] : coeffs_)
        for (const auto& [m2, c2] : o.coeffs_) {
            Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
            r.add_term(m, c1 * c2);
        }
    return r;
}

MultivarPoly MultivarPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultivarPoly::pow: negative exponent");
    MultivarPoly r{Rat(1)};
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool MultivarPoly::is_constant() const {
    for (const auto& [m, c] : coeffs_)
        if (m != Monomial{0, 0, 0, 0}) return false;
    return true;
}

Rat MultivarPoly::constant_term() const {
    auto it = coeffs_.find({0, 0, 0, 0});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

MultivarPoly MultivarPoly::substitute(int index, const Rat& value) const {
    MultivarPoly r;
    for (const auto& [m, c] : coeffs_) {
        Rat coeff = c;
        for (int e = 0; e < m[index]; ++e) coeff *= value;
        Monomial reduced = m;
        reduced[index] = 0;
        r.add_term(reduced, coeff);
    }
    return r;
}

Rat MultivarPoly::evaluate(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    const std::array<Rat, 4> vals{a, b, c, d};
    Rat total(0);
    for (const auto& [m, coeff] : coeffs_) {
        Rat term = coeff;
        for (int v = 0; v < 4; ++v)
            for (int e = 0; e < m[v]; ++e) term *= vals[v];
        total += term;
    }
    return total;
}

std::string MultivarPoly::str() const {
    if (coeffs_.empty()) return "0";
    static const char* names[4] = {"a", "b", "c", "d"};
    std::string s;
    for (const auto& [m, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += rat_str(c);
        for (int v = 0; v < 4; ++v) {
            if (m[v] == 0) continue;
            s += std::string("*") + names[v];
            if (m[v] > 1) s += "^" + std::to_string(m[v]);
        }
    }
    return s;
}

}  // namespace nilcomm
