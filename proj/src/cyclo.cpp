#include "qc/cyclo.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qc {

namespace {

using QPoly = std::vector<Rational>;  // low degree first

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lc = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lc;
        std::size_t s = a.size() - b.size();
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
    trim(q);
}

}  // namespace

Cyclo::Cyclo(const Rational& r) {
    Rational q(r);
    q.canonicalize();
    den_ = q.get_den();
    num_[0] = q.get_num();
}

Cyclo::Cyclo(const std::array<Rational, 4>& c) : den_(1) {
    for (const auto& x : c) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), x.get_den_mpz_t());
    for (int i = 0; i < 4; ++i) num_[i] = c[i].get_num() * (den_ / c[i].get_den());
    normalize();
}

Cyclo Cyclo::zeta() {
    Cyclo z;
    z.num_[1] = 1;
    return z;
}

Cyclo Cyclo::zeta_pow(long k) {
    k %= 5;
    if (k < 0) k += 5;
    Cyclo z;
    if (k == 4) {
        for (auto& n : z.num_) n = -1;
    } else {
        z.num_[k] = 1;
    }
    return z;
}

void Cyclo::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& n : num_) {
        if (g == 1) return;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (auto& n : num_) n /= g;
    }
}

bool Cyclo::is_zero() const { return num_[0] == 0 && num_[1] == 0 && num_[2] == 0 && num_[3] == 0; }

bool Cyclo::is_one() const { return is_rational() && num_[0] == den_; }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& b) {
    if (den_ == b.den_) {
        for (int i = 0; i < 4; ++i) num_[i] += b.num_[i];
    } else {
        for (int i = 0; i < 4; ++i) num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& b) {
    if (den_ == b.den_) {
        for (int i = 0; i < 4; ++i) num_[i] -= b.num_[i];
    } else {
        for (int i = 0; i < 4; ++i) num_[i] = num_[i] * b.den_ - b.num_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.is_rational() && b.is_rational()) {
        Cyclo r;
        r.num_[0] = a.num_[0] * b.num_[0];
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    std::array<Integer, 7> c;
    for (int i = 0; i < 4; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.num_[j] == 0) continue;
            c[i + j] += a.num_[i] * b.num_[j];
        }
    }
    // z^5 = 1, z^6 = z, z^4 = -(1+z+z^2+z^3)
    c[0] += c[5];
    c[1] += c[6];
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.num_[i] = c[i] - c[4];
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& b) { return *this = *this * b; }

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(e)");
    if (is_rational()) {
        Rational q(den_, num_[0]);
        q.canonicalize();
        return Cyclo(q);
    }
    // extended Euclid on (a, Phi5): track s with s*a = r (mod Phi5)
    QPoly r0 = {1, 1, 1, 1, 1};
    QPoly r1;
    for (int i = 0; i < 4; ++i) r1.push_back(coeff(i));
    trim(r1);
    QPoly s0 = {}, s1 = {Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi5 is irreducible
    std::array<Rational, 4> out;
    for (std::size_t i = 0; i < s1.size() && i < 4; ++i) out[i] = s1[i] / r1[0];
    return Cyclo(out);
}

Cyclo Cyclo::galois(int k) const {
    k %= 5;
    if (k < 0) k += 5;
    if (k == 0) throw std::invalid_argument("galois_map needs k coprime to 5");
    std::array<Integer, 5> c;
    for (int i = 0; i < 4; ++i) c[(i * k) % 5] += num_[i];
    Cyclo r;
    for (int i = 0; i < 4; ++i) r.num_[i] = c[i] - c[4];
    r.den_ = den_;
    r.normalize();
    return r;
}

Rational Cyclo::norm() const {
    Cyclo p = *this * galois(2) * galois(3) * galois(4);
    return p.coeff(0);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
    for (int i = 0; i < 4; ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i < 4; ++i) {
        Rational c = coeff(i);
        if (sgn(c) == 0) continue;
        std::string mag = to_string(Rational(abs(c)));
        std::string sym = i == 0 ? "" : (i == 1 ? "e" : "e^" + std::to_string(i));
        std::string term;
        if (i == 0) term = mag;
        else if (abs(c) == 1) term = sym;
        else term = mag + "*" + sym;
        if (sgn(c) < 0) out += "-";
        else if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

std::size_t Cyclo::hash() const {
    std::size_t h = std::hash<std::string>{}(den_.get_str(16));
    for (const auto& n : num_) h = h * 1000003u ^ std::hash<std::string>{}(n.get_str(16));
    return h;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& a) { return os << a.str(); }

Cyclo golden_alpha() { return Cyclo::zeta_pow(3) + Cyclo::zeta_pow(2); }

}  // namespace qc
