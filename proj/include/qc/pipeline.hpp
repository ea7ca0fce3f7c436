#pragma once

#include "qc/catalog.hpp"
#include "qc/lattice.hpp"
#include "qc/singcert.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qc {

using nlohmann::json;

struct RunOptions {
    std::uint64_t seed = 20240605;
    int chart = -1;   // restrict singular-scheme work to one chart
    int action = 0;   // a_k
    Log log;          // progress, one line per stage
};

struct Stage {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    json body;
    std::vector<Stage> stages;
    std::vector<std::string> transcript;
    bool pass = false;
    json to_json(bool with_transcript) const;
};

// Input error: exit code 2 at the command line.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Catalog name, or a file holding one polynomial in the shared text grammar.
CatalogEntry load_surface(const std::string& name_or_path);

// Restriction to random lines: a non-reduced F never passes; a reduced F
// fails only on unlucky lines, so up to three are tried.
bool squarefree_check(const Poly<Cyclo>& F, std::uint64_t seed);

json to_json(const SingularityCertificate& c);
json to_json(const DivisibilityCertificate& c);
json to_json(const IMat& m);
json to_json(const IVec& v);

// Singularities, orbits and free action. For entries with a frame the
// action is the cyclic permutation of the five symmetric coordinates.
Report surface_report(const CatalogEntry& e, const RunOptions& opt = {});

// The quartic -> invariant quintic system -> cusp imposition chain, ending
// with proportionality to the catalog quintic. `quartic` replaces the
// catalog quartic (test fixtures).
Report reproduce_construction(const RunOptions& opt = {},
                              const std::optional<Poly<Cyclo>>& quartic = std::nullopt,
                              bool search = false);

// Tropes of the quartic through the cusps -> curve classes -> resolutions ->
// quotient lattice -> divisibility certificate.
Report divisibility(const CatalogEntry& e, const RunOptions& opt = {});

// (d, k) -> number of a_k-invariant monomials of degree d.
Report invariant_basis_table(int max_degree);

}  // namespace qc
