#include "engstrom/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace engstrom {

namespace {

// Cells of X listed by id, ids ordered by dimension. X enters only through
// how many cells it has in each dimension.
std::vector<int> cell_dims_of(const ComplexSummary& x, const OracleBudget& budget) {
    std::vector<int> dims;
    BigInt total = 0;
    for (int d = 0; d + 1 <= x.fpoly.degree(); ++d) total += x.fpoly.coeff(d + 1);
    if (total > budget.max_labels)
        throw BudgetError("indexing complex has " + total.str() + " cells, over the label budget");
    for (int d = 0; d + 1 <= x.fpoly.degree(); ++d) {
        long count = x.fpoly.coeff(d + 1).convert_to<long>();
        for (long i = 0; i < count; ++i) dims.push_back(d);
    }
    return dims;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

void bump(std::vector<BigInt>& coeffs, int t_exponent) {
    if (static_cast<int>(coeffs.size()) <= t_exponent)
        coeffs.resize(static_cast<std::size_t>(t_exponent) + 1, BigInt(0));
    coeffs[static_cast<std::size_t>(t_exponent)] += 1;
}

// All nonempty chains in the down-set of p, ascending element order.
std::vector<std::vector<int>> chains_in_downset(const Lattice& lattice, int p) {
    std::vector<std::vector<int>> chains;
    std::vector<int> current;
    auto descend = [&](auto&& self, int below) -> void {
        for (int q = 0; q < lattice.size(); ++q) {
            if (!lattice.less(q, below)) continue;
            current.push_back(q);
            chains.push_back({current.rbegin(), current.rend()});
            self(self, q);
            current.pop_back();
        }
    };
    for (int m = 0; m < lattice.size(); ++m) {
        if (!lattice.leq(m, p)) continue;
        current.assign(1, m);
        chains.push_back(current);
        descend(descend, m);
    }
    return chains;
}

}  // namespace

std::string CellLabel::str(const Lattice& lattice, const std::vector<int>& cell_dims) const {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out += '<';
        out += lattice.element_str(chain[i]);
    }
    out += " [";
    for (std::size_t i = 0; i < joincell.size(); ++i) {
        if (i) out += ',';
        if (joincell[i] < 0) {
            out += '.';
        } else {
            out += 'c' + std::to_string(joincell[i]) + ":d" +
                   std::to_string(cell_dims[static_cast<std::size_t>(joincell[i])]);
        }
    }
    out += "] dim=" + std::to_string(dim);
    return out;
}

OracleResult enumerate_cells(const Lattice& lattice, const ComplexSummary& x, OracleMode mode,
                             const OracleBudget& budget, bool with_census) {
    GeometricReport geo = lattice.check_geometric();
    if (!geo.pass()) throw std::invalid_argument("lattice is not geometric: " + geo.str());
    if (static_cast<std::size_t>(lattice.size()) > budget.max_lattice)
        throw BudgetError("lattice has " + std::to_string(lattice.size()) +
                          " elements, over the budget of " + std::to_string(budget.max_lattice));
    ComplexSummary::from_fpoly(x.fpoly);

    OracleResult result;
    result.cell_dims = cell_dims_of(x, budget);
    const std::vector<int>& dims = result.cell_dims;
    std::size_t ncells = dims.size();
    std::size_t labels_seen = 0;
    auto charge = [&](std::size_t count) {
        labels_seen += count;
        if (labels_seen > budget.max_labels)
            throw BudgetError("cell enumeration exceeds the label budget of " +
                              std::to_string(budget.max_labels));
    };

    std::vector<BigInt> coeffs{BigInt(1)};  // the empty face

    if (mode == OracleMode::Star) {
        // One canonical label per cell: a chain with fixed maximum p crossed
        // with a nonempty join cell of X^{*crk(p)}.
        std::vector<int> tuple;
        std::vector<int> chain;  // descending during DFS
        for (int p = 0; p < lattice.size(); ++p) {
            int crk = lattice.corank(p);
            if (crk == 0) continue;
            tuple.assign(static_cast<std::size_t>(crk), -1);

            auto emit = [&](int join_dim_plus) {
                charge(1);
                int k = static_cast<int>(chain.size());
                int dim = (k - 1) + join_dim_plus - 1;
                bump(coeffs, dim + 1);
                if (with_census) {
                    CellLabel label;
                    label.chain.assign(chain.rbegin(), chain.rend());
                    label.joincell = tuple;
                    label.dim = dim;
                    result.census.push_back(std::move(label));
                }
            };
            // join_dim_plus accumulates sum of (cell dim + 1) over the
            // coordinates already chosen.
            auto fill = [&](auto&& self, int coord, int join_dim_plus, bool any) -> void {
                if (coord == crk) {
                    if (any) emit(join_dim_plus);
                    return;
                }
                tuple[static_cast<std::size_t>(coord)] = -1;
                self(self, coord + 1, join_dim_plus, any);
                for (std::size_t c = 0; c < ncells; ++c) {
                    tuple[static_cast<std::size_t>(coord)] = static_cast<int>(c);
                    self(self, coord + 1, join_dim_plus + dims[c] + 1, true);
                }
                tuple[static_cast<std::size_t>(coord)] = -1;
            };
            auto chains = [&](auto&& self, int below) -> void {
                fill(fill, 0, 0, false);
                for (int q = 0; q < lattice.size(); ++q) {
                    if (!lattice.less(q, below)) continue;
                    chain.push_back(q);
                    self(self, q);
                    chain.pop_back();
                }
            };
            chain.assign(1, p);
            chains(chains, p);
        }
        result.fpoly = FPolynomial::from_coeffs(std::move(coeffs));
        return result;
    }

    // Naive mode: every component Delta(L_{<=p}) x X^{*crk(p)} contributes all
    // its product cells; the diagram identifications are applied with
    // union-find and equivalence classes are counted. Join cells are encoded
    // in mixed radix (0 = absent), so the embedding of X^{*crk(p)} into
    // X^{*crk(q)} for q <= p preserves the encoded value.
    int count = lattice.size();
    std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(count));
    std::vector<std::map<std::vector<int>, int>> chain_index(static_cast<std::size_t>(count));
    std::vector<std::size_t> tuple_count(static_cast<std::size_t>(count), 0);
    std::vector<std::size_t> offset(static_cast<std::size_t>(count) + 1, 0);

    for (int p = 0; p < count; ++p) {
        chains[static_cast<std::size_t>(p)] = chains_in_downset(lattice, p);
        auto& index = chain_index[static_cast<std::size_t>(p)];
        for (std::size_t i = 0; i < chains[static_cast<std::size_t>(p)].size(); ++i)
            index[chains[static_cast<std::size_t>(p)][i]] = static_cast<int>(i);
        std::size_t t = 1;
        bool overflow = false;
        for (int i = 0; i < lattice.corank(p); ++i) {
            if (t > budget.max_labels) overflow = true;
            if (!overflow) t *= ncells + 1;
        }
        if (overflow || t > budget.max_labels + 1)
            throw BudgetError("join-cell space exceeds the label budget");
        tuple_count[static_cast<std::size_t>(p)] = t - 1;  // all-absent excluded
        charge(chains[static_cast<std::size_t>(p)].size() * (t - 1));
        offset[static_cast<std::size_t>(p) + 1] =
            offset[static_cast<std::size_t>(p)] +
            chains[static_cast<std::size_t>(p)].size() * (t - 1);
    }

    std::size_t total_labels = offset[static_cast<std::size_t>(count)];
    UnionFind uf(total_labels);

    for (int p = 0; p < count; ++p) {
        std::size_t tc_p = tuple_count[static_cast<std::size_t>(p)];
        if (tc_p == 0) continue;
        const auto& plist = chains[static_cast<std::size_t>(p)];
        for (std::size_t ci = 0; ci < plist.size(); ++ci) {
            int max_elem = plist[ci].back();
            if (max_elem == p) continue;
            for (int q : lattice.lower_covers(p)) {
                if (!lattice.leq(max_elem, q)) continue;
                int cj = chain_index[static_cast<std::size_t>(q)].at(plist[ci]);
                std::size_t tc_q = tuple_count[static_cast<std::size_t>(q)];
                for (std::size_t v = 1; v <= tc_p; ++v) {
                    std::size_t a = offset[static_cast<std::size_t>(p)] + ci * tc_p + (v - 1);
                    std::size_t b = offset[static_cast<std::size_t>(q)] +
                                    static_cast<std::size_t>(cj) * tc_q + (v - 1);
                    uf.unite(a, b);
                }
            }
        }
    }

    for (std::size_t id = 0; id < total_labels; ++id) {
        if (uf.find(id) != id) continue;
        int p = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), id) -
                                 offset.begin()) -
                1;
        std::size_t local = id - offset[static_cast<std::size_t>(p)];
        std::size_t tc = tuple_count[static_cast<std::size_t>(p)];
        std::size_t ci = local / tc;
        std::size_t v = local % tc + 1;
        int k = static_cast<int>(chains[static_cast<std::size_t>(p)][ci].size());
        int join_dim_plus = 0;
        for (std::size_t digitpos = 0; v != 0; v /= ncells + 1, ++digitpos) {
            std::size_t digit = v % (ncells + 1);
            if (digit != 0) join_dim_plus += dims[digit - 1] + 1;
        }
        bump(coeffs, (k - 1) + join_dim_plus - 1 + 1);
    }

    result.fpoly = FPolynomial::from_coeffs(std::move(coeffs));
    return result;
}

}  // namespace engstrom
