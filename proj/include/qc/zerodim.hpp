#pragma once

#include "qc/groebner.hpp"
#include "qc/linalg.hpp"
#include "qc/tower.hpp"
#include "qc/upoly.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

class NotZeroDimensional : public std::runtime_error {
public:
    NotZeroDimensional(int var, const std::string& name)
        : std::runtime_error("not zero-dimensional: no pure power of '" + name + "' among leading terms"),
          witness(var) {}
    int witness;
};

template <class K>
class ZeroDimScheme {
public:
    GroebnerBasis<K> gb;
    std::vector<Mono> std_monos;  // increasing in the term order; std_monos[0] = 1
    int degree = 0;

    const RingPtr& ring() const { return gb.ring; }

    std::vector<K> coords(const Poly<K>& f) const {
        Poly<K> r = normal_form(f, gb);
        std::vector<K> v(std_monos.size(), K(0));
        for (const auto& [m, c] : r.terms()) v[index_.at(m.e)] = c;
        return v;
    }
    Poly<K> from_coords(const std::vector<K>& v) const {
        std::vector<typename Poly<K>::Term> t;
        for (std::size_t i = 0; i < v.size(); ++i) t.emplace_back(std_monos[i], v[i]);
        return Poly<K>::from_terms(ring(), std::move(t));
    }
    // column j = coordinates of f * b_j
    Mat<K> mult_matrix(const Poly<K>& f) const {
        const std::size_t n = std_monos.size();
        Mat<K> M = zero_mat<K>(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            auto v = coords(f.mono_mul(std_monos[j], K(1)));
            for (std::size_t i = 0; i < n; ++i) M[i][j] = v[i];
        }
        return M;
    }
    std::vector<K> one() const {
        std::vector<K> v(std_monos.size(), K(0));
        if (!v.empty()) v[0] = K(1);
        return v;
    }
    // Minimal polynomial of f in the quotient algebra (monic).
    UPoly<K> minpoly(const Poly<K>& f) const {
        if (degree == 0) return UPoly<K>(K(1));
        Mat<K> M = mult_matrix(f);
        DependencyFinder<K> dep(std_monos.size());
        std::vector<K> v = one();
        while (!dep.add(v)) v = mat_vec(M, v);
        return UPoly<K>(dep.relation());
    }
    // dim of the localization A[1/f]: the stable rank of powers of M_f.
    int localized_degree(const Poly<K>& f) const {
        if (degree == 0) return 0;
        Mat<K> M = mult_matrix(f);
        Mat<K> P = M;
        std::size_t r = rank(P);
        while (true) {
            if (r == 0) return 0;
            P = mat_mul(P, M);
            std::size_t r2 = rank(P);
            if (r2 == r) return static_cast<int>(r);
            r = r2;
        }
    }

    void build_index() {
        index_.clear();
        for (std::size_t i = 0; i < std_monos.size(); ++i) index_[std_monos[i].e] = i;
    }

private:
    std::map<std::array<std::uint8_t, kMaxVars>, std::size_t> index_;
};

template <class K>
ZeroDimScheme<K> zero_dim_analyze(const GroebnerBasis<K>& gb) {
    ZeroDimScheme<K> s;
    s.gb = gb;
    const Ring& R = *gb.ring;
    if (gb.is_unit()) {
        s.degree = 0;
        s.build_index();
        return s;
    }
    for (int i = 0; i < R.nvars(); ++i) {
        bool found = false;
        for (const auto& g : gb.basis) {
            const Mono& m = g.lm();
            if (m.e[i] && m.e[i] == m.deg) {
                found = true;
                break;
            }
        }
        if (!found) throw NotZeroDimensional(i, R.name(i));
    }
    std::vector<Mono> todo{Mono{}}, out;
    std::map<std::array<std::uint8_t, kMaxVars>, bool> seen{{Mono{}.e, true}};
    while (!todo.empty()) {
        Mono m = todo.back();
        todo.pop_back();
        out.push_back(m);
        for (int i = 0; i < R.nvars(); ++i) {
            Mono n = m * Mono::var(i);
            if (seen.count(n.e)) continue;
            seen[n.e] = true;
            bool standard = true;
            for (const auto& g : gb.basis)
                if (divides(g.lm(), n)) {
                    standard = false;
                    break;
                }
            if (standard) todo.push_back(n);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return R.cmp(a, b) < 0; });
    s.std_monos = std::move(out);
    s.degree = static_cast<int>(s.std_monos.size());
    s.build_index();
    return s;
}

// Seidenberg: adjoin the squarefree part of each coordinate's minimal polynomial.
template <class K>
GroebnerBasis<K> radical_zero_dim(const ZeroDimScheme<K>& s) {
    if (s.degree == 0) return s.gb;
    std::vector<Poly<K>> gens = s.gb.basis;
    bool added = false;
    const RingPtr& r = s.ring();
    for (int i = 0; i < r->nvars(); ++i) {
        UPoly<K> m = s.minpoly(Poly<K>::var(r, i));
        UPoly<K> q = squarefree_part(m);
        if (q.degree() == m.degree()) continue;
        Poly<K> p(r);
        for (std::size_t k = 0; k < q.coeffs().size(); ++k)
            p += Poly<K>::term(r, Mono::var(i, static_cast<int>(k)), q.coeffs()[k]);
        gens.push_back(p);
        added = true;
    }
    if (!added) return s.gb;
    return buchberger(gens, r);
}

// Shape position of a radical zero-dimensional scheme: a separating linear
// form t = sum c_i x_i, its minimal polynomial g (degree = scheme degree),
// and x_i = h_i(t) modulo g.
template <class K>
struct ShapeForm {
    std::vector<K> t_coeffs;
    UPoly<K> g;
    std::vector<UPoly<K>> h;
    int attempts = 0;
};

template <class K>
ShapeForm<K> shape_position(const ZeroDimScheme<K>& s, std::uint64_t seed, int max_tries = 32) {
    const RingPtr& r = s.ring();
    const int n = r->nvars();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<K> c(n, K(0));
        c[n - 1] = K(1);
        if (attempt > 0)
            for (int i = 0; i + 1 < n; ++i) c[i] = K(static_cast<long>(dist(rng)));
        Poly<K> t = linear_form(r, c);
        UPoly<K> g = s.minpoly(t);
        if (g.degree() != s.degree) continue;
        const std::size_t d = s.std_monos.size();
        Mat<K> Mt = s.mult_matrix(t);
        Mat<K> V = zero_mat<K>(d, d);
        std::vector<K> v = s.one();
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i) V[i][j] = v[i];
            v = mat_vec(Mt, v);
        }
        Mat<K> B = zero_mat<K>(d, n);
        for (int k = 0; k < n; ++k) {
            auto xc = s.coords(Poly<K>::var(r, k));
            for (std::size_t i = 0; i < d; ++i) B[i][k] = xc[i];
        }
        Mat<K> H = solve(V, B);
        ShapeForm<K> out;
        out.t_coeffs = c;
        out.g = g;
        out.attempts = attempt + 1;
        for (int k = 0; k < n; ++k) {
            std::vector<K> hk(d, K(0));
            for (std::size_t i = 0; i < d; ++i) hk[i] = H[i][k];
            out.h.push_back(UPoly<K>(hk));
        }
        return out;
    }
    throw std::runtime_error("failed to reach shape position after " + std::to_string(max_tries) +
                             " random linear changes");
}

}  // namespace qc
