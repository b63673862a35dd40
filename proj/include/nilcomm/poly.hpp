#pragma once

#include <array>
#include <map>
#include <string>

#include "nilcomm/field.hpp"

namespace nilcomm {

/// Sparse polynomial with exact rational coefficients in the four variables
/// a, b, c, d. Equality is coefficient-wise on the canonical form (zero
/// coefficients are never stored).
class MultivarPoly {
public:
    using Monomial = std::array<int, 4>;  // exponents of a, b, c, d

    MultivarPoly() = default;
    explicit MultivarPoly(const Rat& constant);

    static MultivarPoly var(int index);  // 0 -> a, 1 -> b, 2 -> c, 3 -> d
    static MultivarPoly a() { return var(0); }
    static MultivarPoly b() { return var(1); }
    static MultivarPoly c() { return var(2); }
    static MultivarPoly d() { return var(3); }

    MultivarPoly operator+(const MultivarPoly&) const;
    MultivarPoly operator-(const MultivarPoly&) const;
    MultivarPoly operator*(const MultivarPoly&) const;
    MultivarPoly operator-() const;
    MultivarPoly pow(int e) const;

    friend MultivarPoly operator*(const Rat& c, const MultivarPoly& p) {
        return MultivarPoly(c) * p;
    }
    friend MultivarPoly operator+(const Rat& c, const MultivarPoly& p) {
        return MultivarPoly(c) + p;
    }
    friend MultivarPoly operator-(const Rat& c, const MultivarPoly& p) {
        return MultivarPoly(c) - p;
    }
    friend MultivarPoly operator+(const MultivarPoly& p, const Rat& c) {
        return p + MultivarPoly(c);
    }
    friend MultivarPoly operator-(const MultivarPoly& p, const Rat& c) {
        return p - MultivarPoly(c);
    }

    bool operator==(const MultivarPoly&) const = default;
    bool is_zero() const { return coeffs_.empty(); }

    /// True iff the polynomial has no dependence on any variable.
    bool is_constant() const;
    Rat constant_term() const;

    /// Fixes one variable to a rational value.
    MultivarPoly substitute(int index, const Rat& value) const;

    Rat evaluate(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> coeffs_;
};

inline MultivarPoly sq(const MultivarPoly& p) { return p * p; }

}  // namespace nilcomm
