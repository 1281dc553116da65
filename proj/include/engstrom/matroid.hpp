#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "engstrom/subset.hpp"

namespace engstrom {

// Outcome of checking a candidate flat family against the flat axioms.
// InputError (elements outside 1..n, empty family) is distinct from an
// axiom failure.
struct FlatAxiomReport {
    enum class Result { Pass, InputError, F1, F2, F3 };

    Result result = Result::Pass;
    std::string message;
    std::vector<std::vector<int>> witnesses;  // offending sets, sorted
    int witness_element = 0;                  // element involved (F3, range errors)

    bool pass() const { return result == Result::Pass; }
    std::string axiom_name() const;
    std::string str() const;
};

FlatAxiomReport validate_flat_axioms(int n, const std::vector<std::vector<int>>& candidate);

struct AxiomError : std::runtime_error {
    explicit AxiomError(const FlatAxiomReport& r) : std::runtime_error(r.str()), report(r) {}
    FlatAxiomReport report;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matroid on ground set {1..n}, stored by its family of flats in canonical
// order (cardinality, then lexicographic). Rank of a flat is its lattice
// rank (longest chain from the minimum flat), never its cardinality, so
// loops and parallel elements need no special cases.
class Matroid {
public:
    // Validates the family; throws AxiomError / std::invalid_argument.
    static Matroid from_flats(int n, const std::vector<std::vector<int>>& flats);
    // Derives rank from the basis family and extracts the flats; the derived
    // family is validated, so non-matroid input is rejected.
    static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);
    // Flats = {E} u {S : |S| < r}. Throws std::invalid_argument if r > n,
    // BudgetError if the explicit family would exceed max_flats.
    static Matroid uniform(int r, int n, std::size_t max_flats = kDefaultMaxFlats);
    // The rank-3 matroid of the 7-point projective plane, lines
    // {123,145,167,246,257,347,356}.
    static Matroid fano();

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<Subset>& flats() const { return flats_; }
    int flat_rank(std::size_t index) const { return flat_rank_[index]; }
    bool is_flat(Subset s) const;

    Subset closure(Subset s) const;
    int rank_of(Subset s) const;

    // Sorted element lists in canonical family order (interchange form).
    std::vector<std::vector<int>> flats_as_lists() const;

    static constexpr std::size_t kDefaultMaxFlats = 1u << 16;

private:
    Matroid(int n, std::vector<Subset> flats);

    int n_ = 0;
    int rank_ = 0;
    std::vector<Subset> flats_;     // canonical order; flats_[0] is the minimum
    std::vector<int> flat_rank_;    // lattice rank per flat
};

}  // namespace engstrom
