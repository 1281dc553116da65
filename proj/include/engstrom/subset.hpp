#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace engstrom {

// Subsets of a ground set {1..n}, n <= 64. Bit e-1 represents element e.
using Subset = std::uint64_t;

constexpr int kMaxGroundSize = 64;

constexpr Subset full_set(int n) {
    return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr bool contains(Subset s, int e) { return (s >> (e - 1)) & 1; }

constexpr Subset with_element(Subset s, int e) { return s | (Subset{1} << (e - 1)); }

constexpr bool is_subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr int subset_size(Subset s) { return std::popcount(s); }

std::vector<int> subset_elements(Subset s);

// Throws std::invalid_argument on elements outside 1..n or duplicates.
Subset subset_from_elements(std::span<const int> elems, int n);

// Canonical order on subsets: by cardinality, then lexicographically on the
// sorted element lists. Used everywhere flats are stored or reported.
bool canonical_less(Subset a, Subset b);

std::string subset_str(Subset s);  // "{1,2,3}", "{}" for the empty set

}  // namespace engstrom
