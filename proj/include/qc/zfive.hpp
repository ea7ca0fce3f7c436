#pragma once

#include "qc/point.hpp"
#include "qc/poly.hpp"

#include <string>
#include <vector>

namespace qc {

// a_k : (x,y,z,w) -> e^k (x, e y, e^2 z, e^3 w)
int weight_residue(const Mono& m, int k);
std::vector<Mono> invariant_basis(int d, int k, const RingPtr& r = standard_ring());
// polynomials spanned by the invariant monomials with these coefficients
Poly<Cyclo> invariant_combination(const std::vector<Mono>& basis, const std::vector<Cyclo>& coeffs,
                                  const RingPtr& r = standard_ring());

// F o a_k
Poly<Cyclo> act_on_poly(const Poly<Cyclo>& F, int k);
bool is_invariant(const Poly<Cyclo>& F, int k);
// residue r with F o a_k = e^r F, or -1 if F is not semi-invariant
int semi_invariant_residue(const Poly<Cyclo>& F, int k);

template <class K>
ProjPoint<K> act_on_point(const ProjPoint<K>& p, int times = 1) {
    std::vector<K> c = p.c;
    for (int i = 0; i < 4; ++i) c[i] = c[i] * K(Cyclo::zeta_pow(static_cast<long>(i) * times));
    return ProjPoint<K>(std::move(c));
}

std::vector<RatPoint> orbit(const RatPoint& p);

struct Orbit {
    std::vector<RatPoint> points;  // representative first, then a(rep), a^2(rep), ...
    const RatPoint& rep() const { return points.front(); }
};

// Partitions points into orbits (closed sets required); orbits sorted by
// size descending then representative. Throws if the set is not closed.
std::vector<Orbit> group_orbits(const std::vector<RatPoint>& points);

RatPoint coordinate_point(int i);

struct FreeActionVerdict {
    bool free = true;
    std::vector<int> offending;  // indices i of coordinate points on F
};
FreeActionVerdict free_action_check(const Poly<Cyclo>& F);

}  // namespace qc
