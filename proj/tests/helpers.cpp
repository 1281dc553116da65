#include "helpers.hpp"

#include <algorithm>
#include <stdexcept>

namespace engstrom::testing {

namespace {

void extend_chains(const Lattice& lattice, std::vector<int>& chain,
                   const std::vector<int>& scope, std::vector<BigInt>& counts) {
    std::size_t k = chain.size();
    if (counts.size() <= k) counts.resize(k + 1, BigInt(0));
    counts[k] += 1;
    for (int q : scope) {
        if (!chain.empty() && !lattice.less(chain.back(), q)) continue;
        chain.push_back(q);
        extend_chains(lattice, chain, scope, counts);
        chain.pop_back();
    }
}

std::vector<BigInt> chain_counts(const Lattice& lattice, const std::vector<int>& scope) {
    std::vector<BigInt> counts{BigInt(0)};
    std::vector<int> chain;
    extend_chains(lattice, chain, scope, counts);  // counts the empty chain at t^0
    return counts;
}

}  // namespace

FPolynomial brute_chain_fpoly(const Lattice& lattice) {
    std::vector<int> scope(static_cast<std::size_t>(lattice.size()));
    for (int p = 0; p < lattice.size(); ++p) scope[static_cast<std::size_t>(p)] = p;
    return FPolynomial::from_coeffs(chain_counts(lattice, scope));
}

FPolynomial brute_chain_fpoly_below(const Lattice& lattice, int p) {
    std::vector<int> scope;
    for (int q = 0; q < lattice.size(); ++q)
        if (lattice.leq(q, p)) scope.push_back(q);
    return FPolynomial::from_coeffs(chain_counts(lattice, scope));
}

FPolynomial brute_open_star_fpoly(const Lattice& lattice, int p) {
    std::vector<int> scope;
    for (int q = 0; q < lattice.size(); ++q)
        if (lattice.leq(q, p)) scope.push_back(q);
    std::vector<BigInt> counts{BigInt(1)};
    std::vector<int> chain;
    // Enumerate every chain of L_{<=p} and keep those containing p. Chains
    // are built in increasing lattice order, so p can only appear last.
    auto visit = [&](auto&& self) -> void {
        if (!chain.empty() && chain.back() == p) {
            if (counts.size() <= chain.size()) counts.resize(chain.size() + 1, BigInt(0));
            counts[chain.size()] += 1;
        }
        for (int q : scope) {
            if (!chain.empty() && !lattice.less(chain.back(), q)) continue;
            chain.push_back(q);
            self(self);
            chain.pop_back();
        }
    };
    visit(visit);
    return FPolynomial::from_coeffs(std::move(counts));
}

CovectorSet line_arrangement_covectors(const std::vector<std::pair<long, long>>& normals) {
    using Vec = std::pair<long, long>;
    auto cross = [](Vec a, Vec b) { return a.first * b.second - a.second * b.first; };
    auto half = [](Vec v) { return v.second > 0 || (v.second == 0 && v.first > 0) ? 0 : 1; };

    std::vector<Vec> dirs;
    for (auto [a, b] : normals) {
        dirs.emplace_back(-b, a);
        dirs.emplace_back(b, -a);
    }
    std::sort(dirs.begin(), dirs.end(), [&](Vec u, Vec v) {
        if (half(u) != half(v)) return half(u) < half(v);
        return cross(u, v) > 0;
    });

    std::vector<Vec> points{{0, 0}};
    points.insert(points.end(), dirs.begin(), dirs.end());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        Vec a = dirs[i], b = dirs[(i + 1) % dirs.size()];
        points.emplace_back(a.first + b.first, a.second + b.second);
    }

    std::vector<SignVector> vecs;
    for (Vec x : points) {
        std::string s;
        for (auto [a, b] : normals) {
            long v = a * x.first + b * x.second;
            s += v > 0 ? '+' : v < 0 ? '-' : '0';
        }
        vecs.push_back(SignVector::parse(s));
    }
    return CovectorSet(static_cast<int>(normals.size()), std::move(vecs));
}

std::string fixtures_dir() { return ENGSTROM_FIXTURES_DIR; }

std::string fixture_path(const std::string& name) { return fixtures_dir() + "/" + name; }

}  // namespace engstrom::testing
