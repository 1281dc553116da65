#include "engstrom/combinatorics.hpp"

#include <stdexcept>

namespace engstrom {

void CombinatoricsTables::grow_stirling(int n) {
    if (s2_.empty()) s2_.push_back({BigInt(1)});  // S(0,0) = 1
    auto prev = [this](int m, int k) -> BigInt {
        const auto& row = s2_[static_cast<std::size_t>(m)];
        return k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
    };
    while (static_cast<int>(s2_.size()) <= n) {
        int m = static_cast<int>(s2_.size());
        std::vector<BigInt> row(static_cast<std::size_t>(m) + 1, BigInt(0));
        for (int k = 1; k <= m; ++k)
            row[static_cast<std::size_t>(k)] = k * prev(m - 1, k) + prev(m - 1, k - 1);
        s2_.push_back(std::move(row));
    }
}

// Out-of-range k reads as 0 so the recurrence needs no edge cases.
const BigInt& CombinatoricsTables::stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2 requires n,k >= 0");
    grow_stirling(n);
    if (k >= static_cast<int>(s2_[static_cast<std::size_t>(n)].size())) return zero_;
    return s2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& CombinatoricsTables::ordered_bell(int i) {
    if (i < 0) throw std::invalid_argument("ordered_bell requires i >= 0");
    while (static_cast<int>(bell_.size()) <= i) {
        int m = static_cast<int>(bell_.size());
        BigInt f = 0;
        for (int k = 0; k <= m; ++k) f += factorial(k) * stirling2(m, k);
        bell_.push_back(std::move(f));
    }
    return bell_[static_cast<std::size_t>(i)];
}

const BigInt& CombinatoricsTables::factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial requires k >= 0");
    if (fact_.empty()) fact_.push_back(BigInt(1));
    while (static_cast<int>(fact_.size()) <= k)
        fact_.push_back(fact_.back() * static_cast<int>(fact_.size()));
    return fact_[static_cast<std::size_t>(k)];
}

BigInt CombinatoricsTables::binomial(long long n, int k) const {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial requires n,k >= 0");
    if (k > n) return 0;
    BigInt res = 1;
    for (int i = 1; i <= k; ++i) {
        res *= BigInt(n - k + i);
        res /= i;  // exact at every step
    }
    return res;
}

BigInt stirling2(int n, int k) {
    thread_local CombinatoricsTables t;
    return t.stirling2(n, k);
}

BigInt ordered_bell(int i) {
    thread_local CombinatoricsTables t;
    return t.ordered_bell(i);
}

BigInt factorial(int k) {
    thread_local CombinatoricsTables t;
    return t.factorial(k);
}

BigInt binomial(long long n, int k) {
    CombinatoricsTables t;
    return t.binomial(n, k);
}

}  // namespace engstrom
