#pragma once

#include "qc/rational.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace qc {

using IMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Pairings on the cover, summed over group orbits; dividing by the group
// order gives the quotient intersection numbers.
struct LatticeInput {
    int cusp_orbits = 0;
    std::vector<std::string> class_names;
    // [class][cusp orbit]: sum over members and over all cusps of the orbit
    std::vector<std::vector<long long>> orbit_sum_a, orbit_sum_a2;
    // [class][class]: (sum of members) . (sum of members)
    std::vector<std::vector<long long>> orbit_sum_t;
    std::vector<long long> class_k_degree;  // K . class on the quotient (= degree of a member)
    int group_order = 5;
};

struct IntersectionLattice {
    std::vector<std::string> labels;
    IMat matrix;
    std::vector<long long> k_degree;  // K . label
    long long k_square = 1;
    std::vector<std::string> assumptions;
};

class NonIntegral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> default_assumptions();

// Labels A1, A1', A2, A2', ..., then the classes. Throws NonIntegral when an
// orbit sum is not divisible by the group order.
IntersectionLattice assemble(const LatticeInput& in);

Integer determinant(const IMat& m);
std::size_t int_rank(const IMat& m);
// Primitive basis of the integer kernel (saturated), in Hermite form with
// first nonzero entry of each vector positive.
std::vector<IVec> nullspace_int(const IMat& m);

// Relabelling of a lattice with cusp pairs and classes: permutation of the
// cusp orbits, per-pair swaps, permutation of the classes.
struct Labelling {
    std::vector<int> cusp_perm;   // new orbit i takes old orbit cusp_perm[i]
    std::vector<bool> swap;       // per new orbit
    std::vector<int> class_perm;  // new class c takes old class class_perm[c]
    std::vector<int> index_map(int cusps, int classes) const;  // new index -> old index
    std::string str(int cusps, int classes) const;
};

IMat relabel(const IMat& m, const Labelling& L, int cusps);
IVec relabel(const IVec& v, const Labelling& L, int cusps);

struct LabelMatch {
    Labelling labelling;
    std::size_t mismatches = 0;  // entries differing after relabelling (upper triangle)
    std::vector<std::pair<int, int>> differing;
    bool equal() const { return mismatches == 0; }
};
// Best labelling of m against target (fewest differing entries).
LabelMatch match_up_to_relabelling(const IMat& m, const IMat& target, int cusps);

struct DivisibilityCertificate {
    bool ok = false;
    std::string failure;
    IVec v;                       // in the lattice labels
    std::vector<bool> swaps;      // per cusp pair
    bool class_swap = false;      // first two classes exchanged
    IVec residues;                // v mod 3 in the swapped labelling, in [0,3)
    IVec pattern;                 // (2,1,...,2,1,0,...,0)
    IVec w;                       // (v' - pattern) / 3
    std::string relation_v;       // v . D = t
    std::string relation;         // sum 2A+A' = 3L, original labels
    std::string l_expression;     // L = 2t - W
    long long k_dot_v = 0;
    bool numerically_trivial = false;  // K.D_v = 0, D_v^2 = 0 and K^2 > 0 (Hodge index)
    std::vector<std::string> assumptions;
    std::vector<std::string> transcript;
};

DivisibilityCertificate divisibility_certificate(const IntersectionLattice& lat, const IVec& v, int cusps);

// Searches the nullspace modulo 3 (all 3^k residue combinations of the basis,
// k <= 12) for a vector with the divisibility pattern, then certifies a
// primitive integer lift. Fewest nonzero coefficients first.
DivisibilityCertificate certify_from_nullspace(const IntersectionLattice& lat, const std::vector<IVec>& basis,
                                               int cusps);

// The matrix and nullspace generator displayed with the construction.
IMat reference_matrix();
IVec reference_nullvector();

std::string vec_str(const IVec& v);

}  // namespace qc
