#include "engstrom/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace engstrom {

namespace {

int row_words(int m) { return (m + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& row, int j) { row[j >> 6] |= std::uint64_t{1} << (j & 63); }

bool get_bit(const std::vector<std::uint64_t>& row, int j) {
    return row[j >> 6] >> (j & 63) & 1;
}

}  // namespace

std::string GeometricReport::property_name() const {
    switch (result) {
        case Result::Pass: return "pass";
        case Result::NotGraded: return "graded";
        case Result::NotSemimodular: return "semimodular";
        case Result::NotAtomistic: return "atomistic";
    }
    return "?";
}

std::string GeometricReport::str() const {
    if (pass()) return "lattice is geometric (graded, semimodular, atomistic)";
    std::string out = "property '" + property_name() + "' violated";
    if (witness_p >= 0) {
        out += ", witness #" + std::to_string(witness_p);
        if (witness_q >= 0) out += ", #" + std::to_string(witness_q);
    }
    if (!message.empty()) out += ": " + message;
    return out;
}

Lattice Lattice::from_matroid(const Matroid& m) {
    Lattice lat;
    lat.ground_n_ = m.ground_size();
    lat.flats_ = m.flats();  // canonical order: a linear extension of inclusion
    int count = static_cast<int>(lat.flats_.size());
    lat.up_.assign(count, std::vector<std::uint64_t>(row_words(count), 0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (is_subset_of(lat.flats_[i], lat.flats_[j])) set_bit(lat.up_[i], j);
    lat.finish_build();
    return lat;
}

Lattice Lattice::from_less_pairs(int count, const std::vector<std::pair<int, int>>& less) {
    if (count < 0) throw std::invalid_argument("element count must be nonnegative");
    Lattice lat;
    lat.up_.assign(count, std::vector<std::uint64_t>(row_words(std::max(count, 1)), 0));
    for (auto [a, b] : less) {
        if (a < 0 || a >= count || b < 0 || b >= count || a == b)
            throw std::invalid_argument("bad relation pair");
        set_bit(lat.up_[a], b);
    }
    // Warshall closure over the reachability rows.
    for (int k = 0; k < count; ++k)
        for (int i = 0; i < count; ++i)
            if (get_bit(lat.up_[i], k))
                for (std::size_t w = 0; w < lat.up_[i].size(); ++w) lat.up_[i][w] |= lat.up_[k][w];
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j)
            if (i != j && get_bit(lat.up_[i], j) && get_bit(lat.up_[j], i))
                throw std::invalid_argument("relation contains a cycle");
        set_bit(lat.up_[i], i);
    }
    lat.finish_build();
    return lat;
}

void Lattice::finish_build() {
    int count = size();
    down_.assign(count, std::vector<std::uint64_t>(row_words(std::max(count, 1)), 0));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            if (leq(i, j)) set_bit(down_[j], i);

    // Order by strict-down-set size: a linear extension of the order.
    std::vector<int> below_count(count, 0);
    for (int j = 0; j < count; ++j) {
        int c = 0;
        for (int i = 0; i < count; ++i)
            if (i != j && leq(i, j)) ++c;
        below_count[j] = c;
    }
    topo_.resize(count);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](int a, int b) { return below_count[a] < below_count[b]; });

    rank_.assign(count, 0);
    for (int p : topo_)
        for (int q = 0; q < count; ++q)
            if (q != p && leq(q, p)) rank_[p] = std::max(rank_[p], rank_[q] + 1);

    // Upper covers of p are the minimal elements of its strict up-set:
    // sweep in rank order, absorbing the up-set of each cover found.
    upper_covers_.assign(count, {});
    lower_covers_.assign(count, {});
    std::vector<std::uint64_t> dominated(row_words(std::max(count, 1)));
    for (int p = 0; p < count; ++p) {
        std::fill(dominated.begin(), dominated.end(), 0);
        for (int q : topo_) {
            if (q == p || !leq(p, q) || get_bit(dominated, q)) continue;
            upper_covers_[p].push_back(q);
            lower_covers_[q].push_back(p);
            for (std::size_t w = 0; w < dominated.size(); ++w) dominated[w] |= up_[q][w];
        }
        std::sort(upper_covers_[p].begin(), upper_covers_[p].end());
    }
    for (int q = 0; q < count; ++q) std::sort(lower_covers_[q].begin(), lower_covers_[q].end());

    minimal_.clear();
    maximal_.clear();
    for (int p = 0; p < count; ++p) {
        if (lower_covers_[p].empty()) minimal_.push_back(p);
        if (upper_covers_[p].empty()) maximal_.push_back(p);
    }
}

int Lattice::bottom() const {
    if (minimal_.size() != 1) throw std::logic_error("poset has no unique minimum");
    return minimal_[0];
}

int Lattice::top() const {
    if (maximal_.size() != 1) throw std::logic_error("poset has no unique maximum");
    return maximal_[0];
}

std::vector<std::pair<int, int>> Lattice::hasse_edges() const {
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < size(); ++p)
        for (int q : upper_covers_[p]) edges.emplace_back(p, q);
    std::sort(edges.begin(), edges.end());
    return edges;
}

int Lattice::index_of_flat(Subset f) const {
    auto it = std::lower_bound(flats_.begin(), flats_.end(), f, canonical_less);
    if (it == flats_.end() || *it != f) return -1;
    return static_cast<int>(it - flats_.begin());
}

std::string Lattice::element_str(int p) const {
    if (!flats_.empty()) return subset_str(flats_[static_cast<std::size_t>(p)]);
    return "#" + std::to_string(p);
}

const std::vector<BigInt>& Lattice::moebius_row(int p) const {
    std::lock_guard lock(memo_->mutex);
    if (memo_->moebius_rows.empty()) memo_->moebius_rows.resize(static_cast<std::size_t>(size()));
    auto& row = memo_->moebius_rows[static_cast<std::size_t>(p)];
    if (row.empty() && size() > 0) {
        row.assign(static_cast<std::size_t>(size()), BigInt(0));
        for (int q : topo_) {
            if (!leq(p, q)) continue;
            if (q == p) {
                row[static_cast<std::size_t>(q)] = 1;
                continue;
            }
            BigInt sum = 0;
            for (int z = 0; z < size(); ++z)
                if (z != q && leq(p, z) && leq(z, q)) sum += row[static_cast<std::size_t>(z)];
            row[static_cast<std::size_t>(q)] = -sum;
        }
    }
    return row;
}

BigInt Lattice::moebius(int p, int q) const {
    if (p < 0 || q < 0 || p >= size() || q >= size())
        throw std::invalid_argument("element index out of range");
    if (!leq(p, q)) throw std::invalid_argument("moebius(p,q) requires p <= q");
    return moebius_row(p)[static_cast<std::size_t>(q)];
}

// chain_polys()[p]: coeff(k) = number of k-element chains whose maximum is p.
const std::vector<FPolynomial>& Lattice::chain_polys() const {
    std::lock_guard lock(memo_->mutex);
    if (memo_->chain_polys.empty() && size() > 0) {
        std::vector<FPolynomial> g(static_cast<std::size_t>(size()));
        const FPolynomial t = FPolynomial::point().minus_empty();
        for (int p : topo_) {
            FPolynomial below = FPolynomial::one();  // the empty chain
            for (int q = 0; q < size(); ++q)
                if (q != p && leq(q, p)) below = below + g[static_cast<std::size_t>(q)];
            g[static_cast<std::size_t>(p)] = t * below;
        }
        memo_->chain_polys = std::move(g);
    }
    return memo_->chain_polys;
}

FPolynomial Lattice::order_complex_fpoly(std::optional<int> below) const {
    if (below && (*below < 0 || *below >= size()))
        throw std::invalid_argument("element index out of range");
    const auto& g = chain_polys();
    FPolynomial sum = FPolynomial::one();
    for (int p = 0; p < size(); ++p)
        if (!below || leq(p, *below)) sum = sum + g[static_cast<std::size_t>(p)];
    return sum;
}

FPolynomial Lattice::open_star_fpoly(int p) const {
    if (p < 0 || p >= size()) throw std::invalid_argument("element index out of range");
    // Chains of L_{<=p} containing p are exactly the chains with maximum p.
    return FPolynomial::one() + chain_polys()[static_cast<std::size_t>(p)];
}

GeometricReport Lattice::check_geometric() const {
    {
        std::lock_guard lock(memo_->mutex);
        if (memo_->geometric) return *memo_->geometric;
    }
    GeometricReport rep = [this] {
        GeometricReport r;
        auto fail = [&r](GeometricReport::Result res, std::string msg, int p, int q = -1) {
            r.result = res;
            r.message = std::move(msg);
            r.witness_p = p;
            r.witness_q = q;
            return r;
        };
        int count = size();
        if (count == 0)
            return fail(GeometricReport::Result::NotGraded, "empty poset", -1);
        if (minimal_.size() != 1)
            return fail(GeometricReport::Result::NotGraded,
                        "no unique minimum: " + element_str(minimal_[0]) + " and " +
                            element_str(minimal_[1]) + " are both minimal",
                        minimal_[0], minimal_[1]);
        if (maximal_.size() != 1)
            return fail(GeometricReport::Result::NotGraded,
                        "no unique maximum: " + element_str(maximal_[0]) + " and " +
                            element_str(maximal_[1]) + " are both maximal",
                        maximal_[0], maximal_[1]);
        for (int p = 0; p < count; ++p)
            for (int q : upper_covers_[p])
                if (rank_[q] != rank_[p] + 1)
                    return fail(GeometricReport::Result::NotGraded,
                                "cover " + element_str(p) + " < " + element_str(q) +
                                    " skips a rank level",
                                p, q);

        // Meets, joins, and the semimodular inequality. The meet exists iff
        // the common-lower-bound set has a maximum; gradedness was already
        // established, so the max-rank candidate is the only possible one.
        std::size_t words = up_[0].size();
        std::vector<std::uint64_t> common(words);
        auto bound = [&](int p, int q, bool lower) -> int {
            for (std::size_t w = 0; w < words; ++w)
                common[w] = lower ? (down_[static_cast<std::size_t>(p)][w] &
                                     down_[static_cast<std::size_t>(q)][w])
                                  : (up_[static_cast<std::size_t>(p)][w] &
                                     up_[static_cast<std::size_t>(q)][w]);
            int best = -1;
            for (int z = 0; z < count; ++z)
                if (get_bit(common, z) &&
                    (best < 0 || (lower ? rank_[z] > rank_[best] : rank_[z] < rank_[best])))
                    best = z;
            if (best < 0) return -1;
            const auto& closure = lower ? down_[static_cast<std::size_t>(best)]
                                        : up_[static_cast<std::size_t>(best)];
            for (std::size_t w = 0; w < words; ++w)
                if (common[w] & ~closure[w]) return -1;
            return best;
        };
        for (int p = 0; p < count; ++p)
            for (int q = p; q < count; ++q) {
                int m = bound(p, q, true);
                int j = bound(p, q, false);
                if (m < 0 || j < 0)
                    return fail(GeometricReport::Result::NotSemimodular,
                                "pair " + element_str(p) + ", " + element_str(q) +
                                    " has no unique " + (m < 0 ? "meet" : "join") +
                                    " (not a lattice)",
                                p, q);
                if (rank_[p] + rank_[q] < rank_[m] + rank_[j])
                    return fail(GeometricReport::Result::NotSemimodular,
                                "rk(" + element_str(p) + ") + rk(" + element_str(q) +
                                    ") < rk(meet) + rk(join)",
                                p, q);
            }

        // Atomistic: p must be the least upper bound of the atoms below it,
        // i.e. every common upper bound of those atoms lies above p.
        int bot = minimal_[0];
        std::vector<std::uint64_t> upper(words);
        for (int p = 0; p < count; ++p) {
            std::fill(upper.begin(), upper.end(), ~std::uint64_t{0});
            for (int a : upper_covers_[bot])
                if (leq(a, p))
                    for (std::size_t w = 0; w < words; ++w)
                        upper[w] &= up_[static_cast<std::size_t>(a)][w];
            for (int u = 0; u < count; ++u)
                if (get_bit(upper, u) && !leq(p, u))
                    return fail(GeometricReport::Result::NotAtomistic,
                                element_str(p) + " is not the join of the atoms below it", p, u);
        }
        return r;
    }();
    std::lock_guard lock(memo_->mutex);
    if (!memo_->geometric) memo_->geometric = rep;
    return *memo_->geometric;
}

Lattice build_lattice_of_flats(const Matroid& m) { return Lattice::from_matroid(m); }

}  // namespace engstrom
