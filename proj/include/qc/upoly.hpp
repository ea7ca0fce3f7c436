#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qc {

// Dense univariate polynomial, coefficients low degree first. K must provide
// field operations and free functions is_zero(K) and inverse(K).
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    UPoly(const K& constant) {  // NOLINT(implicit)
        if (!is_zero(constant)) c_.push_back(constant);
    }

    // t - r
    static UPoly linear_root(const K& r) { return UPoly(std::vector<K>{-r, K(1)}); }
    static UPoly monomial(const K& c, std::size_t k) {
        std::vector<K> v(k + 1, K(0));
        v[k] = c;
        return UPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const K& lc() const { return c_.back(); }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    UPoly scaled(const K& s) const {
        std::vector<K> c = c_;
        for (auto& x : c) x = x * s;
        return UPoly(std::move(c));
    }

    K operator()(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    // Horner evaluation at an element of a larger ring T constructible from K.
    template <class T>
    T eval_as(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> c(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    UPoly monic() const {
        if (c_.empty()) return {};
        return scaled(inverse(lc()));
    }

    // a = q*b + r with deg r < deg b
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
        if (b.c_.empty()) throw std::domain_error("polynomial division by zero");
        std::vector<K> rem = a.c_;
        std::vector<K> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, K(0));
        K inv_lc = inverse(b.lc());
        while (rem.size() >= b.c_.size()) {
            K c = rem.back() * inv_lc;
            std::size_t s = rem.size() - b.c_.size();
            quo[s] = c;
            for (std::size_t i = 0; i + 1 < b.c_.size(); ++i) rem[s + i] = rem[s + i] - c * b.c_[i];
            rem.pop_back();
            while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
        }
        q = UPoly(std::move(quo));
        r = UPoly(std::move(rem));
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) {
        UPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) {
        UPoly q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    template <class Fmt>
    std::string str(const std::string& var, Fmt fmt) const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero(c_[i])) continue;
            if (!out.empty()) out += "+";
            out += "(" + fmt(c_[i]) + ")";
            if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    std::vector<K> c_;
};

// Monic gcd by the Euclidean algorithm.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero_poly()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns g = gcd(a,b) monic and s,t with s*a + t*b = g.
template <class K>
UPoly<K> ext_gcd(const UPoly<K>& a, const UPoly<K>& b, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero_poly()) {
        UPoly<K> q, r;
        UPoly<K>::divmod(r0, r1, q, r);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) {
        s = s0;
        t = t0;
        return r0;
    }
    K inv = inverse(r0.lc());
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
    if (f.degree() <= 0) return f.monic();
    UPoly<K> g = gcd(f, f.derivative());
    return (f / g).monic();
}

}  // namespace qc
