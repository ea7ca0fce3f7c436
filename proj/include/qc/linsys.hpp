#pragma once

#include "qc/point.hpp"
#include "qc/poly.hpp"
#include "qc/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qc {

// order 1: the surface passes through p; order 2: p is a singular point
// (all four partials vanish, F(p) = 0 then follows by Euler).
struct Condition {
    ProjPoint<ExtElem> p;
    int order = 2;
};

Condition double_point(const RatPoint& p);
std::vector<Condition> double_points(const std::vector<RatPoint>& pts);

struct LinearSystem {
    int degree = 0;
    int action = -1;  // -1: no invariance constraint
    std::vector<Mono> monos;
    std::vector<Condition> conditions;
    std::vector<Poly<Cyclo>> basis;
    std::size_t rows = 0;  // condition rows over Q(e)

    std::size_t dimension() const { return basis.size(); }
};

// Kernel of the condition matrix on degree-d (a_k-invariant when k >= 0)
// polynomials. Tower points contribute one row per tower coordinate.
LinearSystem conditioned_system(int d, int k, const std::vector<Condition>& conditions,
                                const RingPtr& r = standard_ring());

// Re-evaluates every imposed derivative at every condition point.
bool satisfies_conditions(const Poly<Cyclo>& F, const std::vector<Condition>& conditions);

// Coefficients c with P = sum c_i basis_i, if P lies in the span.
std::optional<std::vector<Cyclo>> span_coordinates(const Poly<Cyclo>& P, const std::vector<Poly<Cyclo>>& basis);
// P = c Q for some nonzero c
bool proportional(const Poly<Cyclo>& P, const Poly<Cyclo>& Q);

struct CommonRoots {
    std::string status;  // "ok", "no common root", "residual factor of degree > 1"
    UPoly<Cyclo> gcd;
    std::vector<Cyclo> roots;
    UPoly<Cyclo> residual;
    std::size_t constraints = 0;
};

// Roots in Q(e) of the gcd of the nonzero constraints (gcd chain plus linear peeling).
CommonRoots common_roots(const std::vector<UPoly<Cyclo>>& constraints, std::uint64_t seed = 1);

// Order-3 Hessian minors of L1 + b L2 at every point, as polynomials in b,
// split into Q(e)-components over the point towers.
std::vector<UPoly<Cyclo>> cusp_constraints(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2,
                                           const std::vector<ProjPoint<ExtElem>>& points);
CommonRoots impose_cusps(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2,
                         const std::vector<ProjPoint<ExtElem>>& points, std::uint64_t seed = 1);
CommonRoots impose_cusps(const Poly<Cyclo>& L1, const Poly<Cyclo>& L2, const std::vector<RatPoint>& points,
                         std::uint64_t seed = 1);

// A candidate solution of the quartic search: coefficients on
// invariant_basis(4, 0) and the two remaining orbit representatives; the
// fixed representative is (1:1:1:1).
struct ScAssignment {
    std::vector<Cyclo> coeffs;
    RatPoint X, A;
};

struct ScGroup {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ScVerdict {
    std::vector<ScGroup> groups;
    bool pass() const {
        for (const auto& g : groups)
            if (!g.pass) return false;
        return !groups.empty();
    }
};

ScVerdict verify_sc_membership(const ScAssignment& a);

// Generators of the search scheme in unknowns a1..a7, X,Y,Z (W = 1),
// A,B,C (D = 1) and a Rabinowitsch variable s for ordinariness at (1:1:1:1)
// with respect to the minor `minor_index` of the Hessian.
struct SearchScheme {
    RingPtr ring;
    std::vector<Poly<Cyclo>> generators;
    int minor_index = 0;
};
SearchScheme build_search_scheme(int minor_index = 0);
// value substitution a -> coefficients, points -> coordinates, s -> 1/minor
std::vector<Cyclo> specialize_search(const SearchScheme& S, const ScAssignment& a);

struct KummerReport {
    std::size_t dimension = 0;
    bool contains_candidate = false;
    // singular point counts of members checked (the whole system when it is a single member)
    std::vector<int> member_points;
    bool dimension_settles = false;  // system is the single candidate up to scalar
    bool sixteen_nodal_member = false;
};

KummerReport kummer_check(const std::vector<RatPoint>& cusps, const Poly<Cyclo>& candidate);

}  // namespace qc
