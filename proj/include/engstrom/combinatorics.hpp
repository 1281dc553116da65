#pragma once

#include <vector>

#include "engstrom/bigint.hpp"

namespace engstrom {

// Exact integer tables: Stirling numbers of the second kind, ordered Bell
// (Fubini) numbers, factorials, binomials. Tables grow on demand.
class CombinatoricsTables {
public:
    // S(n,k), partitions of an n-set into k nonempty blocks.
    const BigInt& stirling2(int n, int k);
    // F_i = sum_k k! S(i,k), ordered set partitions of an i-set.
    const BigInt& ordered_bell(int i);
    const BigInt& factorial(int k);
    // C(n,k) for arbitrary n >= 0 via the multiplicative formula (exact).
    BigInt binomial(long long n, int k) const;

private:
    void grow_stirling(int n);
    std::vector<std::vector<BigInt>> s2_;  // s2_[n][k]
    std::vector<BigInt> bell_;
    std::vector<BigInt> fact_;
    BigInt zero_;
};

// Convenience wrappers over a thread-local table.
BigInt stirling2(int n, int k);
BigInt ordered_bell(int i);
BigInt factorial(int k);
BigInt binomial(long long n, int k);

}  // namespace engstrom
