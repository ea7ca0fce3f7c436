#include "qc/zfive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qc {

int weight_residue(const Mono& m, int k) {
    int r = k * m.deg + m.e[1] + 2 * m.e[2] + 3 * m.e[3];
    return ((r % 5) + 5) % 5;
}

std::vector<Mono> invariant_basis(int d, int k, const RingPtr& r) {
    std::vector<Mono> out;
    for (const auto& m : monomials_of_degree(r, d))
        if (weight_residue(m, k) == 0) out.push_back(m);
    return out;
}

Poly<Cyclo> invariant_combination(const std::vector<Mono>& basis, const std::vector<Cyclo>& coeffs,
                                  const RingPtr& r) {
    std::vector<Poly<Cyclo>::Term> t;
    for (std::size_t i = 0; i < basis.size(); ++i) t.emplace_back(basis[i], coeffs[i]);
    return Poly<Cyclo>::from_terms(r, std::move(t));
}

Poly<Cyclo> act_on_poly(const Poly<Cyclo>& F, int k) {
    std::vector<Poly<Cyclo>::Term> t;
    for (const auto& [m, c] : F.terms()) t.emplace_back(m, c * Cyclo::zeta_pow(weight_residue(m, k)));
    return Poly<Cyclo>::from_terms(F.ring(), std::move(t));
}

bool is_invariant(const Poly<Cyclo>& F, int k) {
    for (const auto& [m, c] : F.terms())
        if (weight_residue(m, k) != 0) return false;
    return true;
}

int semi_invariant_residue(const Poly<Cyclo>& F, int k) {
    int r = -1;
    for (const auto& [m, c] : F.terms()) {
        int s = weight_residue(m, k);
        if (r >= 0 && s != r) return -1;
        r = s;
    }
    return r < 0 ? 0 : r;
}

std::vector<RatPoint> orbit(const RatPoint& p) {
    std::vector<RatPoint> out{p};
    RatPoint q = act_on_point(p);
    while (!(q == p)) {
        out.push_back(q);
        q = act_on_point(q);
    }
    return out;
}

namespace {

std::pair<int, std::size_t> simplicity(const RatPoint& p) {
    int irr = 0;
    std::size_t bits = 0;
    for (const auto& x : p.c) {
        if (!x.is_rational()) ++irr;
        for (int i = 0; i < 4; ++i) bits += mpz_sizeinbase(x.num(i).get_mpz_t(), 2);
        bits += mpz_sizeinbase(x.den().get_mpz_t(), 2);
    }
    return {irr, bits};
}

}  // namespace

std::vector<Orbit> group_orbits(const std::vector<RatPoint>& points) {
    std::set<RatPoint> all(points.begin(), points.end()), used;
    std::vector<Orbit> out;
    for (const auto& p : points) {
        if (used.count(p)) continue;
        auto orb = orbit(p);
        for (const auto& q : orb) {
            if (!all.count(q)) throw std::runtime_error("point set is not closed under the action: " + q.str());
            used.insert(q);
        }
        auto best = std::min_element(orb.begin(), orb.end(), [](const RatPoint& a, const RatPoint& b) {
            auto sa = simplicity(a), sb = simplicity(b);
            if (sa != sb) return sa < sb;
            return a < b;
        });
        Orbit o;
        o.points = orbit(*best);
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) {
        if (a.points.size() != b.points.size()) return a.points.size() > b.points.size();
        auto sa = simplicity(a.rep()), sb = simplicity(b.rep());
        if (sa != sb) return sa < sb;
        return a.rep() < b.rep();
    });
    return out;
}

RatPoint coordinate_point(int i) {
    std::vector<Cyclo> c(4, Cyclo(0));
    c[i] = Cyclo(1);
    return RatPoint(c);
}

FreeActionVerdict free_action_check(const Poly<Cyclo>& F) {
    FreeActionVerdict v;
    for (int i = 0; i < 4; ++i) {
        if (evaluate(F, coordinate_point(i).c).is_zero()) {
            v.free = false;
            v.offending.push_back(i);
        }
    }
    return v;
}

}  // namespace qc
