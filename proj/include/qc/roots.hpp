#pragma once

#include "qc/cyclo.hpp"
#include "qc/upoly.hpp"

#include <cstdint>
#include <vector>

namespace qc {

// Roots in Q(e) of a univariate polynomial over Q(e), each listed once.
// Works modulo an inert prime (Q(e) tensor F_p is the field F_{p^4}): roots
// over F_{p^4}, Hensel lifting, rational reconstruction of the four
// coordinates, exact verification.
std::vector<Cyclo> cyclo_roots(const UPoly<Cyclo>& g, std::uint64_t seed = 1);

struct Peeled {
    std::vector<Cyclo> roots;
    UPoly<Cyclo> residual;  // g / prod (t - root), monic
};

// Splits off all linear factors of a squarefree g.
Peeled peel_linear_factors(const UPoly<Cyclo>& g, std::uint64_t seed = 1);

}  // namespace qc
