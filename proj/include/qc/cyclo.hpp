#pragma once

#include "qc/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace qc {

// Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z a primitive 5th root of unity,
// printed with the symbol `e`. Stored as integer numerators over one positive
// common denominator, kept coprime.
class Cyclo {
public:
    Cyclo() : den_(1) {}
    Cyclo(long n) : den_(1) { num_[0] = n; }  // NOLINT(implicit)
    Cyclo(const Integer& n) : den_(1) { num_[0] = n; }  // NOLINT(implicit)
    Cyclo(const Rational& r);  // NOLINT(implicit)
    explicit Cyclo(const std::array<Rational, 4>& c);

    static Cyclo zeta();
    // z^k for any integer k
    static Cyclo zeta_pow(long k);

    Rational coeff(int i) const {
        Rational r(num_[i], den_);
        r.canonicalize();
        return r;
    }
    const Integer& num(int i) const { return num_[i]; }
    const Integer& den() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return num_[1] == 0 && num_[2] == 0 && num_[3] == 0; }

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& b);
    Cyclo& operator-=(const Cyclo& b);
    Cyclo& operator*=(const Cyclo& b);
    Cyclo& operator/=(const Cyclo& b) { return *this *= b.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    // Throws std::domain_error on zero.
    Cyclo inverse() const;
    // Automorphism z -> z^k, gcd(k,5)=1.
    Cyclo galois(int k) const;
    // Product of the four conjugates (a rational number).
    Rational norm() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    // Total order used for canonical sorting only (no field meaning).
    friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

    std::string str() const;
    std::size_t hash() const;

private:
    void normalize();
    std::array<Integer, 4> num_;
    Integer den_;
};

inline bool is_zero(const Cyclo& a) { return a.is_zero(); }
inline Cyclo inverse(const Cyclo& a) { return a.inverse(); }
inline std::string to_string(const Cyclo& a) { return a.str(); }
std::ostream& operator<<(std::ostream& os, const Cyclo& a);

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational inverse(const Rational& a) { return 1 / a; }

// The real element e^3+e^2, a root of t^2+t-1.
Cyclo golden_alpha();

}  // namespace qc
