#pragma once

#include "qc/cyclo.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qc {

constexpr int kMaxVars = 16;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    static Mono var(int i, int power = 1) {
        Mono m;
        m.e[i] = static_cast<std::uint8_t>(power);
        m.deg = static_cast<std::uint16_t>(power);
        return m;
    }
    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono c;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = a.e[i] + b.e[i];
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            c.e[i] = static_cast<std::uint8_t>(s);
        }
        c.deg = static_cast<std::uint16_t>(a.deg + b.deg);
        return c;
    }
    // a | b
    friend bool divides(const Mono& a, const Mono& b) {
        if (a.deg > b.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }
    // b / a, assuming a | b
    friend Mono quotient(const Mono& b, const Mono& a) {
        Mono c;
        for (int i = 0; i < kMaxVars; ++i) c.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
        c.deg = static_cast<std::uint16_t>(b.deg - a.deg);
        return c;
    }
    friend Mono lcm(const Mono& a, const Mono& b) {
        Mono c;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            c.e[i] = std::max(a.e[i], b.e[i]);
            d += c.e[i];
        }
        c.deg = static_cast<std::uint16_t>(d);
        return c;
    }
    friend bool coprime(const Mono& a, const Mono& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    bool is_one() const { return deg == 0; }
};

enum class Order { DegRevLex, Lex, Block };

class Ring {
public:
    Ring(std::vector<std::string> names, Order order = Order::DegRevLex, int block = 0);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& n) const;  // -1 if absent
    Order order() const { return order_; }
    int block() const { return block_; }

    // <0, 0, >0 as a is smaller, equal, larger than b
    int cmp(const Mono& a, const Mono& b) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ && a.order_ == b.order_ && a.block_ == b.block_;
    }

private:
    std::vector<std::string> names_;
    Order order_;
    int block_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, Order order = Order::DegRevLex, int block = 0);
// x, y, z, w with degrevlex
RingPtr standard_ring();

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

template <class K>
class Poly {
public:
    using Term = std::pair<Mono, K>;

    Poly() = default;
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}
    Poly(RingPtr r, const K& c) : ring_(std::move(r)) {
        if (!is_zero(c)) t_.emplace_back(Mono{}, c);
    }
    static Poly var(RingPtr r, int i) {
        Poly p(std::move(r));
        p.t_.emplace_back(Mono::var(i), K(1));
        return p;
    }
    static Poly term(RingPtr r, const Mono& m, const K& c) {
        Poly p(std::move(r));
        if (!is_zero(c)) p.t_.emplace_back(m, c);
        return p;
    }
    // terms need not be sorted or combined
    static Poly from_terms(RingPtr r, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero_poly() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Mono& lm() const { return t_.front().first; }
    const K& lc() const { return t_.front().second; }
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max<int>(d, m.deg);
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& [m, c] : t_)
            if (m.deg != t_.front().first.deg) return false;
        return true;
    }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    K constant_term() const {
        for (const auto& [m, c] : t_)
            if (m.is_one()) return c;
        return K(0);
    }
    K coeff(const Mono& m) const {
        for (const auto& [mm, c] : t_)
            if (mm == m) return c;
        return K(0);
    }
    bool uses_var(int i) const {
        for (const auto& [m, c] : t_)
            if (m.e[i]) return true;
        return false;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const K& s) const {
        if (is_zero(s)) return Poly(ring_);
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = c * s;
        return r;
    }
    // c * m * this
    Poly mono_mul(const Mono& m, const K& s) const {
        if (is_zero(s)) return Poly(ring_);
        Poly r(ring_);
        r.t_.reserve(t_.size());
        for (const auto& [mm, c] : t_) r.t_.emplace_back(mm * m, c * s);
        return r;
    }
    Poly monic() const {
        if (t_.empty()) return *this;
        return scaled(inverse(lc()));
    }
    Poly pow(int k) const {
        Poly r(ring_, K(1)), b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    // low-level access for reduction loops; callers keep the term order
    void pop_lead() { t_.erase(t_.begin()); }
    void push_back_term(const Mono& m, const K& c) { t_.emplace_back(m, c); }

    // re-sort under another ring with the same variables (e.g. another order)
    Poly in_ring(RingPtr r) const {
        return from_terms(std::move(r), t_);
    }

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract);
    static Poly mul(const Poly& a, const Poly& b);
    RingPtr ring_;
    std::vector<Term> t_;
};

template <class K>
Poly<K> Poly<K>::from_terms(RingPtr r, std::vector<Term> terms) {
    const Ring& R = *r;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return R.cmp(a.first, b.first) > 0; });
    Poly p(std::move(r));
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first) {
            p.t_.back().second = p.t_.back().second + t.second;
            if (is_zero(p.t_.back().second)) p.t_.pop_back();
        } else if (!is_zero(t.second)) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

template <class K>
Poly<K> Poly<K>::merge(const Poly& a, const Poly& b, bool subtract) {
    const RingPtr& rp = a.ring_ ? a.ring_ : b.ring_;
    Poly r(rp);
    if (!rp) return r;
    const Ring& R = *rp;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
        int c;
        if (i == a.t_.size()) c = -1;
        else if (j == b.t_.size()) c = 1;
        else c = R.cmp(a.t_[i].first, b.t_[j].first);
        if (c > 0) {
            r.t_.push_back(a.t_[i++]);
        } else if (c < 0) {
            r.t_.emplace_back(b.t_[j].first, subtract ? K(-b.t_[j].second) : b.t_[j].second);
            ++j;
        } else {
            K s = subtract ? K(a.t_[i].second - b.t_[j].second) : K(a.t_[i].second + b.t_[j].second);
            if (!is_zero(s)) r.t_.emplace_back(a.t_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
Poly<K> Poly<K>::mul(const Poly& a, const Poly& b) {
    const RingPtr& rp = a.ring_ ? a.ring_ : b.ring_;
    if (a.t_.empty() || b.t_.empty()) return Poly(rp);
    if (a.t_.size() < b.t_.size()) return mul(b, a);
    if (b.t_.size() == 1) return a.mono_mul(b.t_[0].first, b.t_[0].second);
    std::vector<Term> all;
    all.reserve(a.t_.size() * b.t_.size());
    for (const auto& [m, c] : b.t_)
        for (const auto& [mm, cc] : a.t_) all.emplace_back(mm * m, cc * c);
    return from_terms(rp, std::move(all));
}

// ---- calculus and substitution ----

template <class K>
Poly<K> partial(const Poly<K>& p, int var) {
    std::vector<typename Poly<K>::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (!m.e[var]) continue;
        Mono q = m;
        q.e[var]--;
        q.deg--;
        out.emplace_back(q, c * K(static_cast<long>(m.e[var])));
    }
    return Poly<K>::from_terms(p.ring(), std::move(out));
}

template <class K>
std::vector<Poly<K>> jacobian(const Poly<K>& p) {
    std::vector<Poly<K>> j;
    for (int i = 0; i < p.ring()->nvars(); ++i) j.push_back(partial(p, i));
    return j;
}

template <class K>
using PolyMatrix = std::vector<std::vector<Poly<K>>>;

template <class K>
PolyMatrix<K> hessian(const Poly<K>& p) {
    auto J = jacobian(p);
    int n = p.ring()->nvars();
    PolyMatrix<K> H(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H[i].push_back(partial(J[i], j));
    return H;
}

// Evaluates p at vals (T constructible from K); vals.size() == nvars.
template <class K, class T>
T evaluate(const Poly<K>& p, const std::vector<T>& vals) {
    const int n = p.ring()->nvars();
    std::vector<std::vector<T>> pw(n);
    for (int i = 0; i < n; ++i) pw[i].push_back(T(1));
    T acc(0);
    for (const auto& [m, c] : p.terms()) {
        T t(c);
        for (int i = 0; i < n; ++i) {
            int e = m.e[i];
            if (!e) continue;
            while (static_cast<int>(pw[i].size()) <= e) pw[i].push_back(pw[i].back() * vals[i]);
            t = t * pw[i][e];
        }
        acc = acc + t;
    }
    return acc;
}

// Substitutes images[i] (polynomials over ring `target`) for variable i.
template <class K>
Poly<K> substitute(const Poly<K>& p, const std::vector<Poly<K>>& images, const RingPtr& target) {
    const int n = p.ring()->nvars();
    std::vector<std::vector<Poly<K>>> pw(n);
    for (int i = 0; i < n; ++i) pw[i].push_back(Poly<K>(target, K(1)));
    Poly<K> acc(target);
    for (const auto& [m, c] : p.terms()) {
        Poly<K> t(target, c);
        for (int i = 0; i < n; ++i) {
            int e = m.e[i];
            if (!e) continue;
            while (static_cast<int>(pw[i].size()) <= e) pw[i].push_back(pw[i].back() * images[i]);
            t = t * pw[i][e];
        }
        acc += t;
    }
    return acc;
}

// Renames variables: variable i of p becomes variable map[i] of target
// (map[i] < 0 requires variable i to be unused).
template <class K>
Poly<K> remap(const Poly<K>& p, const std::vector<int>& map, const RingPtr& target) {
    std::vector<typename Poly<K>::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Mono q;
        for (int i = 0; i < p.ring()->nvars(); ++i) {
            if (!m.e[i]) continue;
            if (map[i] < 0) throw std::invalid_argument("remap drops a used variable");
            q.e[map[i]] = static_cast<std::uint8_t>(q.e[map[i]] + m.e[i]);
        }
        q.deg = m.deg;
        out.emplace_back(q, c);
    }
    return Poly<K>::from_terms(target, std::move(out));
}

template <class K2, class K, class F>
Poly<K2> map_coeffs(const Poly<K>& p, F f, const RingPtr& target = nullptr) {
    std::vector<typename Poly<K2>::Term> out;
    for (const auto& [m, c] : p.terms()) out.emplace_back(m, f(c));
    return Poly<K2>::from_terms(target ? target : p.ring(), std::move(out));
}

// Ring of the remaining variables after setting variable `chart` to 1.
RingPtr chart_ring(const RingPtr& r, int chart);

template <class K>
Poly<K> dehomogenize(const Poly<K>& p, int chart, const RingPtr& target) {
    std::vector<typename Poly<K>::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Mono q;
        int k = 0;
        for (int i = 0; i < p.ring()->nvars(); ++i) {
            if (i == chart) continue;
            q.e[k++] = m.e[i];
        }
        q.deg = static_cast<std::uint16_t>(m.deg - m.e[chart]);
        out.emplace_back(q, c);
    }
    return Poly<K>::from_terms(target, std::move(out));
}

template <class K>
Poly<K> dehomogenize(const Poly<K>& p, int chart) {
    return dehomogenize(p, chart, chart_ring(p.ring(), chart));
}

// Homogenizes an affine chart polynomial back into `full`, inserting the
// chart variable at index chart to total degree d.
template <class K>
Poly<K> homogenize(const Poly<K>& p, int chart, int d, const RingPtr& full) {
    std::vector<typename Poly<K>::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Mono q;
        int k = 0;
        for (int i = 0; i < full->nvars(); ++i) {
            if (i == chart) continue;
            q.e[i] = m.e[k++];
        }
        if (m.deg > d) throw std::invalid_argument("homogenize: degree too small");
        q.e[chart] = static_cast<std::uint8_t>(d - m.deg);
        q.deg = static_cast<std::uint16_t>(d);
        out.emplace_back(q, c);
    }
    return Poly<K>::from_terms(full, std::move(out));
}

// Linear form sum c_i x_i: returns coefficients.
template <class K>
std::vector<K> linear_coeffs(const Poly<K>& l) {
    std::vector<K> c(l.ring()->nvars(), K(0));
    for (const auto& [m, v] : l.terms()) {
        if (m.deg != 1) throw std::invalid_argument("not a linear form");
        for (int i = 0; i < l.ring()->nvars(); ++i)
            if (m.e[i]) c[i] = v;
    }
    return c;
}

template <class K>
Poly<K> linear_form(const RingPtr& r, const std::vector<K>& c) {
    Poly<K> l(r);
    for (int i = 0; i < r->nvars(); ++i) l += Poly<K>::term(r, Mono::var(i), c[i]);
    return l;
}

// Index of the variable solved for when restricting to a plane: the first
// variable with nonzero coefficient.
template <class K>
int plane_solved_var(const Poly<K>& plane) {
    auto c = linear_coeffs(plane);
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (!is_zero(c[i])) return i;
    throw std::invalid_argument("plane is the zero form");
}

// Substitutes the solved variable of the plane; the result does not involve it.
template <class K>
Poly<K> restrict_to_plane(const Poly<K>& p, const Poly<K>& plane) {
    const RingPtr& r = p.ring();
    auto c = linear_coeffs(plane);
    int j = plane_solved_var(plane);
    K inv = inverse(c[j]);
    std::vector<Poly<K>> img;
    for (int i = 0; i < r->nvars(); ++i) {
        if (i != j) {
            img.push_back(Poly<K>::var(r, i));
            continue;
        }
        Poly<K> s(r);
        for (int k = 0; k < r->nvars(); ++k)
            if (k != j) s -= Poly<K>::term(r, Mono::var(k), c[k] * inv);
        img.push_back(s);
    }
    return substitute(p, img, r);
}

// ---- determinants and minors ----

template <class T>
T det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det of empty matrix");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T acc = m[0][0] - m[0][0];
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        T d = m[0][j] * det(sub);
        acc = (j % 2) ? acc - d : acc + d;
    }
    return acc;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

// k x k minors, ordered by row subset (lex) then column subset (lex).
template <class T>
std::vector<T> minors(const std::vector<std::vector<T>>& m, int k) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (k < 1 || k > std::min(rows, cols)) throw std::invalid_argument("minor order out of range");
    std::vector<T> out;
    auto rs = k_subsets(rows, k), cs = k_subsets(cols, k);
    for (const auto& r : rs)
        for (const auto& c : cs) {
            std::vector<std::vector<T>> sub(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i].push_back(m[r[i]][c[j]]);
            out.push_back(det(sub));
        }
    return out;
}

template <class K, class T>
std::vector<std::vector<T>> evaluate_matrix(const PolyMatrix<K>& m, const std::vector<T>& pt) {
    std::vector<std::vector<T>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) out[i].push_back(evaluate(e, pt));
    return out;
}

// All monomials of degree d in n variables, in decreasing order for `r`.
std::vector<Mono> monomials_of_degree(const RingPtr& r, int d);

}  // namespace qc
