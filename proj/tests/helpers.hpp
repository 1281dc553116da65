#pragma once

#include <string>
#include <utility>
#include <vector>

#include "engstrom/fpoly.hpp"
#include "engstrom/lattice.hpp"
#include "engstrom/signvectors.hpp"

namespace engstrom::testing {

// Chain counting by explicit recursive enumeration with no memoization; the
// independent oracle for the lattice module's chain-count polynomials.
FPolynomial brute_chain_fpoly(const Lattice& lattice);
FPolynomial brute_chain_fpoly_below(const Lattice& lattice, int p);
FPolynomial brute_open_star_fpoly(const Lattice& lattice, int p);

// Covectors of a generic central line arrangement in the plane, computed
// exactly from integer normals: the origin, the 2k ray directions, and one
// representative direction inside each sector.
CovectorSet line_arrangement_covectors(const std::vector<std::pair<long, long>>& normals);

std::string fixtures_dir();
std::string fixture_path(const std::string& name);

}  // namespace engstrom::testing
