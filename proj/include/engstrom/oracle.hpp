#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "engstrom/formulas.hpp"
#include "engstrom/lattice.hpp"

namespace engstrom {

// Canonical label of one cell of T_X M: a chain p_1 < ... < p_k in the
// lattice together with a join cell of X^{*crk(p_k)}, written per coordinate
// as -1 (absent) or a cell id of X. Not all coordinates may be absent.
struct CellLabel {
    std::vector<int> chain;     // lattice element indices, ascending
    std::vector<int> joincell;  // length crk(max chain element)
    int dim = 0;

    std::string str(const Lattice& lattice, const std::vector<int>& cell_dims) const;
};

enum class OracleMode { Star, Naive };

struct OracleBudget {
    std::size_t max_lattice = 5000;
    std::size_t max_labels = 10'000'000;
};

struct OracleResult {
    FPolynomial fpoly;
    std::vector<CellLabel> census;  // star mode only, when requested
    std::vector<int> cell_dims;     // dimension of each cell id of X
};

// Brute-force cell enumeration of T_X M straight from the homotopy-colimit
// construction. Star mode lists one canonical label per cell (chains with a
// fixed maximum crossed with join cells); naive mode enumerates every
// component's product cells and quotients with union-find. Both agree with
// each other and with engstrom_fpoly. Throws BudgetError when the label or
// lattice budget is exceeded.
OracleResult enumerate_cells(const Lattice& lattice, const ComplexSummary& x, OracleMode mode,
                             const OracleBudget& budget = {}, bool with_census = false);

}  // namespace engstrom
