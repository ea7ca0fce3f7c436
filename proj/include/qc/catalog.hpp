#pragma once

#include "qc/point.hpp"
#include "qc/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qc {

// Published equations, kept exactly as printed (line breaks removed).
extern const char* const kNewQuarticText;
extern const char* const kNewQuinticText;

// power sum x^i+y^i+z^i+w^i+t^i with t = -(x+y+z+w)
Poly<Cyclo> eliminated_power_sum(int i, const RingPtr& r = standard_ring());

using Frame = std::array<std::array<Cyclo, 4>, 4>;

// Coordinates X_k = sum_i M[k][i] x_i diagonalizing the cyclic permutation
// (x,y,z,w,t) -> (y,z,w,t,x), ordered so that it becomes a power of a_0.
Frame cyclic_frame();
Frame cyclic_frame_inverse();
// F written in the new coordinates
Poly<Cyclo> to_frame(const Poly<Cyclo>& F, const Frame& inverse);
RatPoint frame_point(const Frame& M, const RatPoint& p);

struct CatalogEntry {
    std::string name;
    int degree = 0;
    Poly<Cyclo> F;
    std::string source;  // text the polynomial was built from
    std::optional<Frame> frame;  // set when the Z5 symmetry is not the diagonal one
};

std::vector<std::string> catalog_names();
std::optional<CatalogEntry> catalog_lookup(const std::string& name);
CatalogEntry catalog_get(const std::string& name);  // throws std::out_of_range

}  // namespace qc
