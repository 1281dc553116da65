#include "engstrom/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "engstrom/combinatorics.hpp"

namespace engstrom {

namespace {

std::string set_list_str(const std::vector<std::vector<int>>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ", ";
        out += '{';
        for (std::size_t j = 0; j < sets[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(sets[i][j]);
        }
        out += '}';
    }
    return out;
}

// All masks over n bits with exactly k bits set, ascending (Gosper's hack).
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k == 0) {
        fn(Subset{0});
        return;
    }
    if (k > n) return;
    if (k == n) {
        fn(full_set(n));
        return;
    }
    Subset v = (Subset{1} << k) - 1;
    Subset limit = full_set(n);
    while (v <= limit) {
        fn(v);
        Subset t = v | (v - 1);
        if (t == ~Subset{0}) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

}  // namespace

std::string FlatAxiomReport::axiom_name() const {
    switch (result) {
        case Result::Pass: return "pass";
        case Result::InputError: return "input";
        case Result::F1: return "F1";
        case Result::F2: return "F2";
        case Result::F3: return "F3";
    }
    return "?";
}

std::string FlatAxiomReport::str() const {
    if (pass()) return "flat axioms hold";
    std::string out = result == Result::InputError ? "input error" : axiom_name() + " violated";
    if (!witnesses.empty()) out += ", witnesses " + set_list_str(witnesses);
    if (!message.empty()) out += ": " + message;
    return out;
}

FlatAxiomReport validate_flat_axioms(int n, const std::vector<std::vector<int>>& candidate) {
    FlatAxiomReport rep;
    auto fail = [&rep](FlatAxiomReport::Result r, std::string msg,
                       std::vector<std::vector<int>> wit = {}, int elem = 0) {
        rep.result = r;
        rep.message = std::move(msg);
        rep.witnesses = std::move(wit);
        rep.witness_element = elem;
        return rep;
    };

    if (n < 0 || n > kMaxGroundSize)
        return fail(FlatAxiomReport::Result::InputError,
                    "ground-set size must be between 0 and 64, got " + std::to_string(n));
    if (candidate.empty())
        return fail(FlatAxiomReport::Result::InputError, "flat family must be nonempty");

    std::vector<Subset> family;
    for (const auto& set : candidate) {
        for (int e : set)
            if (e < 1 || e > n)
                return fail(FlatAxiomReport::Result::InputError,
                            "element " + std::to_string(e) + " outside ground set 1.." +
                                std::to_string(n),
                            {set}, e);
        Subset s = 0;
        for (int e : set) s = with_element(s, e);
        family.push_back(s);
    }
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());

    auto as_list = [](Subset s) { return subset_elements(s); };
    std::unordered_set<Subset> members(family.begin(), family.end());

    // (F1) the ground set is a flat.
    if (!members.count(full_set(n)))
        return fail(FlatAxiomReport::Result::F1,
                    "the ground set " + subset_str(full_set(n)) + " is not in the family");

    // (F2) closure under pairwise intersection.
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            Subset meet = family[i] & family[j];
            if (!members.count(meet))
                return fail(FlatAxiomReport::Result::F2,
                            "intersection " + subset_str(meet) + " of " + subset_str(family[i]) +
                                " and " + subset_str(family[j]) + " is not in the family",
                            {as_list(family[i]), as_list(family[j])});
        }

    // (F3) minimal flats above X partition E \ X.
    for (Subset x : family) {
        std::vector<Subset> minimal_above;
        for (Subset y : family) {
            if (!(x != y && is_subset_of(x, y))) continue;
            bool minimal = true;
            for (Subset z : family)
                if (z != x && z != y && is_subset_of(x, z) && is_subset_of(z, y)) {
                    minimal = false;
                    break;
                }
            if (minimal) minimal_above.push_back(y);
        }
        for (int e : subset_elements(full_set(n) & ~x)) {
            std::vector<Subset> covering;
            for (Subset y : minimal_above)
                if (contains(y, e)) covering.push_back(y);
            if (covering.empty())
                return fail(FlatAxiomReport::Result::F3,
                            "element " + std::to_string(e) + " is in no minimal flat above " +
                                subset_str(x),
                            {as_list(x)}, e);
            if (covering.size() > 1)
                return fail(FlatAxiomReport::Result::F3,
                            "element " + std::to_string(e) + " lies in two minimal flats above " +
                                subset_str(x),
                            {as_list(x), as_list(covering[0]), as_list(covering[1])}, e);
        }
    }
    return rep;
}

Matroid::Matroid(int n, std::vector<Subset> flats) : n_(n), flats_(std::move(flats)) {
    std::sort(flats_.begin(), flats_.end(), canonical_less);
    flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
    // Canonical order sorts by cardinality, a linear extension of inclusion,
    // so one forward pass computes longest chains from the minimum flat.
    flat_rank_.assign(flats_.size(), 0);
    for (std::size_t j = 1; j < flats_.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (is_subset_of(flats_[i], flats_[j]) && flats_[i] != flats_[j])
                flat_rank_[j] = std::max(flat_rank_[j], flat_rank_[i] + 1);
    rank_ = flats_.empty() ? 0 : flat_rank_.back();
}

Matroid Matroid::from_flats(int n, const std::vector<std::vector<int>>& flats) {
    FlatAxiomReport rep = validate_flat_axioms(n, flats);
    if (!rep.pass()) throw AxiomError(rep);
    std::vector<Subset> masks;
    masks.reserve(flats.size());
    for (const auto& f : flats) {
        Subset s = 0;
        for (int e : f) s = with_element(s, e);
        masks.push_back(s);
    }
    return Matroid(n, std::move(masks));
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground-set size must be between 0 and 64");
    if (n > 20) throw BudgetError("bases conversion enumerates 2^n subsets; n > 20 unsupported");
    if (bases.empty()) throw std::invalid_argument("basis family must be nonempty");

    std::vector<Subset> basis_masks;
    for (const auto& b : bases) basis_masks.push_back(subset_from_elements(b, n));
    int r = subset_size(basis_masks[0]);
    for (Subset b : basis_masks)
        if (subset_size(b) != r)
            throw std::invalid_argument("bases must all have the same cardinality");

    auto rank_of = [&](Subset s) {
        int best = 0;
        for (Subset b : basis_masks) best = std::max(best, subset_size(s & b));
        return best;
    };

    // Flats are the rank-maximal subsets: adjoining any outside element
    // raises rank.
    std::vector<std::vector<int>> flat_lists;
    Subset all = full_set(n);
    for (Subset s = 0;; ++s) {
        int rs = rank_of(s);
        bool flat = true;
        for (int e : subset_elements(all & ~s))
            if (rank_of(with_element(s, e)) == rs) {
                flat = false;
                break;
            }
        if (flat) flat_lists.push_back(subset_elements(s));
        if (s == all) break;
    }
    return from_flats(n, flat_lists);  // rejects non-matroid input
}

Matroid Matroid::uniform(int r, int n, std::size_t max_flats) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground-set size must be between 0 and 64");
    if (r < 0 || r > n) throw std::invalid_argument("uniform matroid requires 0 <= r <= n");

    BigInt count = 1;
    for (int i = 0; i < r; ++i) count += binomial(n, i);
    if (count > max_flats)
        throw BudgetError("uniform(" + std::to_string(r) + "," + std::to_string(n) + ") has " +
                          count.str() + " flats, above the explicit-storage cap of " +
                          std::to_string(max_flats));

    std::vector<Subset> flats;
    flats.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < r; ++i) for_each_k_subset(n, i, [&](Subset s) { flats.push_back(s); });
    flats.push_back(full_set(n));
    return Matroid(n, std::move(flats));
}

Matroid Matroid::fano() {
    std::vector<std::vector<int>> flats = {{}};
    for (int e = 1; e <= 7; ++e) flats.push_back({e});
    flats.insert(flats.end(), {{1, 2, 3},
                               {1, 4, 5},
                               {1, 6, 7},
                               {2, 4, 6},
                               {2, 5, 7},
                               {3, 4, 7},
                               {3, 5, 6}});
    flats.push_back({1, 2, 3, 4, 5, 6, 7});
    return from_flats(7, flats);
}

bool Matroid::is_flat(Subset s) const {
    return std::binary_search(flats_.begin(), flats_.end(), s, canonical_less);
}

Subset Matroid::closure(Subset s) const {
    if (!is_subset_of(s, full_set(n_)))
        throw std::invalid_argument("subset has elements outside the ground set");
    Subset acc = full_set(n_);
    for (Subset f : flats_)
        if (is_subset_of(s, f)) acc &= f;
    return acc;
}

int Matroid::rank_of(Subset s) const {
    Subset cl = closure(s);
    auto it = std::lower_bound(flats_.begin(), flats_.end(), cl, canonical_less);
    return flat_rank_[static_cast<std::size_t>(it - flats_.begin())];
}

std::vector<std::vector<int>> Matroid::flats_as_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(flats_.size());
    for (Subset f : flats_) out.push_back(subset_elements(f));
    return out;
}

}  // namespace engstrom
