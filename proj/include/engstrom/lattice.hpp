#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engstrom/bigint.hpp"
#include "engstrom/fpoly.hpp"
#include "engstrom/matroid.hpp"

namespace engstrom {

struct GeometricReport {
    enum class Result { Pass, NotGraded, NotSemimodular, NotAtomistic };

    Result result = Result::Pass;
    std::string message;
    int witness_p = -1;
    int witness_q = -1;

    bool pass() const { return result == Result::Pass; }
    std::string property_name() const;
    std::string str() const;
};

// A finite bounded graded poset, normally the lattice of flats of a matroid.
// Construction is single-writer; afterwards the object is immutable and all
// queries are safe concurrently (the Moebius and chain-count memos fill
// idempotently under a lock).
class Lattice {
public:
    static Lattice from_matroid(const Matroid& m);
    // Arbitrary poset from strict relations (transitive closure is taken).
    // Used for diagnostics and validator tests; such posets may fail
    // check_geometric.
    static Lattice from_less_pairs(int count, const std::vector<std::pair<int, int>>& less);

    int size() const { return static_cast<int>(up_.size()); }
    bool leq(int p, int q) const { return up_[p][q >> 6] >> (q & 63) & 1; }
    bool less(int p, int q) const { return p != q && leq(p, q); }

    int bottom() const;  // throws std::logic_error unless a unique minimum exists
    int top() const;
    int rank_of(int p) const { return rank_[p]; }
    int corank(int p) const { return rank_[top()] - rank_[p]; }
    int rank() const { return rank_[top()]; }

    const std::vector<int>& upper_covers(int p) const { return upper_covers_[p]; }
    const std::vector<int>& lower_covers(int p) const { return lower_covers_[p]; }
    std::vector<std::pair<int, int>> hasse_edges() const;  // (lower, upper)

    // Ground-set labels when built from a matroid; ground_size() == 0 onwise.
    int ground_size() const { return ground_n_; }
    Subset flat(int p) const { return flats_.empty() ? Subset{0} : flats_[p]; }
    int index_of_flat(Subset f) const;  // -1 when absent
    std::string element_str(int p) const;

    // mu(p,q) of the incidence algebra; requires p <= q.
    BigInt moebius(int p, int q) const;

    // Chain-count polynomial: coeff(k) = number of k-element chains, plus the
    // empty chain at t^0. Optionally restricted to the down-set L_{<=p}.
    FPolynomial order_complex_fpoly(std::optional<int> below = std::nullopt) const;

    // f-polynomial of the open star of p in Delta(L_{<=p}): coeff(k) = number
    // of k-element chains of L_{<=p} containing p, coeff(0) = 1.
    FPolynomial open_star_fpoly(int p) const;

    GeometricReport check_geometric() const;  // result cached per lattice

private:
    Lattice() = default;
    void finish_build();  // covers, ranks, topo order, minima/maxima
    const std::vector<FPolynomial>& chain_polys() const;
    const std::vector<BigInt>& moebius_row(int p) const;

    std::vector<std::vector<std::uint64_t>> up_;    // up_[p] bitset over q: p <= q
    std::vector<std::vector<std::uint64_t>> down_;  // transpose
    std::vector<int> rank_;
    std::vector<int> topo_;  // indices in a linear extension (rank ascending)
    std::vector<std::vector<int>> upper_covers_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<int> minimal_, maximal_;

    int ground_n_ = 0;
    std::vector<Subset> flats_;

    struct Memo {
        std::mutex mutex;
        std::vector<std::vector<BigInt>> moebius_rows;
        std::vector<FPolynomial> chain_polys;  // chains with maximum p
        std::optional<GeometricReport> geometric;
    };
    std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

Lattice build_lattice_of_flats(const Matroid& m);

}  // namespace engstrom
