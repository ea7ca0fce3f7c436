#pragma once

#include "qc/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace qc {

template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly<K>> basis;  // reduced, monic, sorted by increasing leading monomial
    // statistics for transcripts
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;

    bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

namespace detail {

template <class K>
const Poly<K>* find_reducer(const std::vector<const Poly<K>*>& G, const Mono& m) {
    for (const Poly<K>* g : G)
        if (divides(g->lm(), m)) return g;
    return nullptr;
}

// Full reduction of f modulo monic polynomials in G.
template <class K>
Poly<K> reduce(Poly<K> p, const std::vector<const Poly<K>*>& G) {
    Poly<K> r(p.ring());
    while (!p.is_zero_poly()) {
        const Mono m = p.lm();
        const Poly<K>* g = find_reducer(G, m);
        if (!g) {
            r.push_back_term(m, p.lc());
            p.pop_lead();
            continue;
        }
        K c = p.lc();
        p = p - g->mono_mul(quotient(m, g->lm()), c);
    }
    return r;
}

}  // namespace detail

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    std::vector<const Poly<K>*> G;
    for (const auto& g : gb.basis) G.push_back(&g);
    return detail::reduce(f, G);
}

template <class K>
bool is_member(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    return normal_form(f, gb).is_zero_poly();
}

// Buchberger's algorithm with the Gebauer-Moeller update (both Buchberger
// criteria) and sugar-degree pair selection. Output is the reduced basis.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& gens, RingPtr ring = nullptr) {
    struct Pair {
        std::size_t i, j;
        Mono lcm;
        int sugar;
    };
    GroebnerBasis<K> out;
    if (!ring) {
        for (const auto& g : gens)
            if (g.ring()) {
                ring = g.ring();
                break;
            }
    }
    out.ring = ring;
    std::vector<Poly<K>> store;
    std::vector<int> sugar;
    std::vector<bool> active;
    std::vector<Pair> pairs;
    const Ring& R = *ring;

    auto reducers = [&]() {
        std::vector<const Poly<K>*> G;
        for (std::size_t k = 0; k < store.size(); ++k)
            if (active[k]) G.push_back(&store[k]);
        return G;
    };

    auto update = [&](Poly<K> h, int s) {
        const std::size_t hn = store.size();
        store.push_back(std::move(h));
        sugar.push_back(s);
        active.push_back(true);
        const Mono hm = store[hn].lm();
        // candidate pairs (h, g)
        std::vector<Pair> C;
        for (std::size_t k = 0; k < hn; ++k) {
            if (!active[k]) continue;
            const Mono& gm = store[k].lm();
            Mono l = lcm(hm, gm);
            int sg = std::max<int>(s + l.deg - hm.deg, sugar[k] + l.deg - gm.deg);
            C.push_back({k, hn, l, sg});
        }
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            bool cop = coprime(hm, store[C[a].i].lm());
            bool dominated = false;
            if (!cop) {
                for (std::size_t b = a + 1; b < C.size() && !dominated; ++b)
                    if (divides(C[b].lcm, C[a].lcm)) dominated = true;
                for (const auto& d : D)
                    if (!dominated && divides(d.lcm, C[a].lcm)) dominated = true;
            }
            if (!dominated) D.push_back(C[a]);
        }
        std::vector<Pair> E;
        for (const auto& d : D)
            if (!coprime(hm, store[d.i].lm())) E.push_back(d);
        std::vector<Pair> kept;
        for (const auto& p : pairs) {
            bool drop = divides(hm, p.lcm) && !(lcm(store[p.i].lm(), hm) == p.lcm) &&
                        !(lcm(store[p.j].lm(), hm) == p.lcm);
            if (!drop) kept.push_back(p);
        }
        pairs = std::move(kept);
        pairs.insert(pairs.end(), E.begin(), E.end());
        for (std::size_t k = 0; k < hn; ++k)
            if (active[k] && divides(hm, store[k].lm())) active[k] = false;
    };

    for (const auto& g : gens) {
        if (g.is_zero_poly()) continue;
        Poly<K> h = detail::reduce(g.in_ring(ring), reducers());
        if (h.is_zero_poly()) continue;
        update(h.monic(), h.degree());
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = R.cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
        });
        Pair p = *best;
        pairs.erase(best);
        ++out.pairs_processed;
        const Poly<K>& f = store[p.i];
        const Poly<K>& g = store[p.j];
        Poly<K> s = f.mono_mul(quotient(p.lcm, f.lm()), K(1)) - g.mono_mul(quotient(p.lcm, g.lm()), K(1));
        Poly<K> h = detail::reduce(std::move(s), reducers());
        if (h.is_zero_poly()) {
            ++out.zero_reductions;
            continue;
        }
        h = h.monic();
        if (h.is_constant()) {
            out.basis = {Poly<K>(ring, K(1))};
            return out;
        }
        update(std::move(h), p.sugar);
    }

    // interreduce the active (minimal) set
    std::vector<Poly<K>> G;
    for (std::size_t k = 0; k < store.size(); ++k)
        if (active[k]) G.push_back(store[k]);
    std::sort(G.begin(), G.end(), [&](const Poly<K>& a, const Poly<K>& b) { return R.cmp(a.lm(), b.lm()) < 0; });
    for (std::size_t k = 0; k < G.size(); ++k) {
        std::vector<const Poly<K>*> others;
        for (std::size_t l = 0; l < G.size(); ++l)
            if (l != k) others.push_back(&G[l]);
        Poly<K> head = Poly<K>::term(ring, G[k].lm(), G[k].lc());
        Poly<K> tail = G[k] - head;
        G[k] = head + detail::reduce(std::move(tail), others);
    }
    out.basis = std::move(G);
    return out;
}

// S-polynomial of two monic polynomials.
template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g) {
    Mono l = lcm(f.lm(), g.lm());
    return f.mono_mul(quotient(l, f.lm()), inverse(f.lc())) - g.mono_mul(quotient(l, g.lm()), inverse(g.lc()));
}

// Checks the Groebner contract: every S-polynomial reduces to zero.
template <class K>
bool satisfies_s_criterion(const GroebnerBasis<K>& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
            if (!normal_form(s_poly(gb.basis[i], gb.basis[j]), gb).is_zero_poly()) return false;
    return true;
}

template <class K>
bool is_reduced(const GroebnerBasis<K>& gb) {
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        if (!(gb.basis[i].lc() == K(1))) return false;
        for (std::size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : gb.basis[i].terms())
                if (divides(gb.basis[j].lm(), m)) return false;
        }
    }
    return true;
}

}  // namespace qc
