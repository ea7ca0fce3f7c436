#pragma once

#include "qc/point.hpp"
#include "qc/poly.hpp"
#include "qc/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qc {

// Exact square root of a homogeneous polynomial up to scalar: c monic with
// c^2 = p.monic(), if it exists.
std::optional<Poly<Cyclo>> poly_sqrt(const Poly<Cyclo>& p);

// Plane through three points, as a monic linear form (nullopt if collinear).
std::optional<Poly<Cyclo>> plane_through(const RatPoint& a, const RatPoint& b, const RatPoint& c);
bool on_plane(const Poly<Cyclo>& plane, const RatPoint& p);

struct Trope {
    Poly<Cyclo> plane;  // monic linear form
    Poly<Cyclo> conic;  // restriction of Q to the plane = scalar * conic^2
    Cyclo scalar;
    std::vector<std::size_t> nodes;  // indices into the node list
    bool through_fixed = false;
    bool invariant = false;  // plane mapped to itself by the action
};

struct TropeCensus {
    std::vector<Trope> tropes;
    std::size_t candidates = 0;       // distinct planes through >= 6 nodes
    std::size_t square_failures = 0;  // candidates whose restriction is not a square
    // indices into tropes
    std::vector<std::size_t> invariant_through_fixed, through_fixed, not_through_fixed;
};

// Candidate planes come from node triples; kept when they carry at least 6
// nodes and the restriction of Q is a perfect square.
TropeCensus find_tropes(const Poly<Cyclo>& Q, const std::vector<RatPoint>& nodes,
                        const std::optional<RatPoint>& fixed = std::nullopt);

// Orbits of planes under the action, each listed as a_0-images of its first member.
std::vector<std::vector<Poly<Cyclo>>> plane_orbits(const std::vector<Poly<Cyclo>>& planes);

struct CurveOnSurface {
    std::string label;
    Poly<Cyclo> plane;
    Poly<Cyclo> eq;  // the surface itself for a full plane section, else the plane curve
    int degree = 0;
    int genus = 0;   // arithmetic genus as a plane curve
    bool full_section = false;
};

CurveOnSurface plane_section(const std::string& label, const Poly<Cyclo>& S, const Poly<Cyclo>& plane);
CurveOnSurface trope_conic(const std::string& label, const Trope& t);
// eq of the surface vanishes on the curve
bool curve_on_surface(const Poly<Cyclo>& S, const CurveOnSurface& C);

struct IntersectionReport {
    bool no_common_factor = false;
    std::vector<bool> contained;  // per conic
    int conic_degree_total = 0;
    int expected_degree = 0;       // deg S * deg Q
    bool exact = false;            // all contained and degrees account for the whole cycle
};

// Checks that S and Q meet exactly along the given trope conics.
IntersectionReport intersect_surfaces(const Poly<Cyclo>& S, const Poly<Cyclo>& Q, const std::vector<Trope>& conics,
                                      std::uint64_t seed = 1);

struct CurveIncidence {
    int mult = 0;              // multiplicity of the curve at the cusp
    int with_a = 0, with_a2 = 0;  // strict transform . A, strict transform . A'
};

// Single point blow-up of an A2 point: the exceptional conic is the pair of
// lines A, A' through the node direction v0, {lambda_A = 0} and {lambda_A2 = 0}.
struct CuspResolution {
    RatPoint cusp;
    int chart = 0;
    std::vector<int> vars;       // projective index of each local coordinate
    std::vector<Cyclo> v0;       // kernel of the tangent cone
    Cyclo disc;                  // lines defined over Q(e)(sqrt disc)
    TowerPtr tower;              // null when sqrt(disc) lies in Q(e)
    std::vector<ExtElem> lambda_a, lambda_a2;
    bool smooth = false;         // strict transform smooth along the exceptional curve
    std::vector<CurveIncidence> curves;
    std::vector<std::string> transcript;
};

CuspResolution resolve_cusp(const Poly<Cyclo>& S, const RatPoint& cusp, const std::vector<CurveOnSurface>& curves);
// Moves the labelled lines to a^times(cusp), checks they are the tangent-cone
// components there and recomputes the incidences.
CuspResolution transport_resolution(const Poly<Cyclo>& S, const CuspResolution& r, int times,
                                    const std::vector<CurveOnSurface>& curves);

// multiplicity m of C at p and order of the direction d as a root of its tangent cone
std::pair<int, int> tangent_multiplicity(const CurveOnSurface& C, const RatPoint& p, const std::vector<ExtElem>& d);

// Self-intersection of the strict transform on the resolved surface, by
// adjunction with K = hyperplane class and one blow-up per cusp on C.
int self_intersection(const CurveOnSurface& C, const std::vector<RatPoint>& cusps);
// Intersection of two strict transforms of curves in distinct planes.
int strict_intersection(const CurveOnSurface& C1, const CurveOnSurface& C2, const std::vector<RatPoint>& cusps);

}  // namespace qc
