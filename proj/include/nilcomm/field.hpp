#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcomm {

using Rat = mpq_class;
using Int = mpz_class;

/// Canonical string form of a rational: "n" when integral, "n/d" otherwise.
inline std::string rat_str(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_prime_u64(std::uint64_t n);

/// The field of rational numbers; elements are GMP rationals.
struct RationalField {
    using Elem = Rat;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long v) { return Elem(v); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return Elem(1) / a;
    }

    bool operator==(const RationalField&) const = default;
};

/// The prime field F_p for a prime p < 2^31; elements are reduced residues.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime < 2^31");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        return static_cast<Elem>(m);
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return pow_mod(a, p_ - 2);
    }

    Elem pow_mod(Elem base, std::uint64_t exp) const {
        Elem result = one();
        base %= p_;
        while (exp) {
            if (exp & 1) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// Runtime tag selecting the base field of a computation.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec: p must be prime");
        return FieldSpec{Kind::prime, p};
    }

    /// Accepts "q" for the rationals and "p:<prime>" for F_p.
    static FieldSpec parse(const std::string& s);
    std::string str() const;
};

}  // namespace nilcomm
