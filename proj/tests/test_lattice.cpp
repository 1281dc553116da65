#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "engstrom/lattice.hpp"
#include "helpers.hpp"

using namespace engstrom;
using namespace engstrom::testing;

namespace {

FPolynomial poly(std::vector<long> c) {
    std::vector<BigInt> coeffs(c.begin(), c.end());
    return FPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace

TEST_CASE("lattice of flats of U_{2,3}") {
    Lattice l = build_lattice_of_flats(Matroid::uniform(2, 3));
    CHECK(l.size() == 5);
    CHECK(l.rank() == 2);
    std::vector<int> ranks;
    for (int p = 0; p < l.size(); ++p) ranks.push_back(l.rank_of(p));
    CHECK(ranks == std::vector<int>{0, 1, 1, 1, 2});
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 4);
    CHECK(l.hasse_edges().size() == 6);
}

TEST_CASE("two-element chain for U_{1,n}") {
    for (int n : {1, 3, 6}) {
        Lattice l = build_lattice_of_flats(Matroid::uniform(1, n));
        CHECK(l.size() == 2);
        CHECK(l.rank() == 1);
    }
}

TEST_CASE("order complex polynomials match brute-force chain enumeration") {
    Lattice u23 = build_lattice_of_flats(Matroid::uniform(2, 3));
    CHECK(u23.order_complex_fpoly() == poly({1, 5, 7, 3}));
    CHECK(u23.order_complex_fpoly() == brute_chain_fpoly(u23));

    Lattice fano = build_lattice_of_flats(Matroid::fano());
    CHECK(fano.order_complex_fpoly() == brute_chain_fpoly(fano));
    for (int p = 0; p < fano.size(); ++p)
        CHECK(fano.order_complex_fpoly(p) == brute_chain_fpoly_below(fano, p));
}

TEST_CASE("restricted order complex of a two-element chain and an antichain") {
    Lattice chain2 = Lattice::from_less_pairs(2, {{0, 1}});
    CHECK(chain2.order_complex_fpoly() == poly({1, 2, 1}));
    Lattice antichain = Lattice::from_less_pairs(4, {});
    CHECK(antichain.order_complex_fpoly() == poly({1, 4}));
}

TEST_CASE("open stars") {
    Lattice fano = build_lattice_of_flats(Matroid::fano());
    for (int p = 0; p < fano.size(); ++p) {
        switch (fano.rank_of(p)) {
            case 0: CHECK(fano.open_star_fpoly(p) == poly({1, 1})); break;
            case 1: CHECK(fano.open_star_fpoly(p) == poly({1, 1, 1})); break;
            case 2: CHECK(fano.open_star_fpoly(p) == poly({1, 1, 4, 3})); break;
            case 3: break;
        }
        CHECK(fano.open_star_fpoly(p) == brute_open_star_fpoly(fano, p));
    }

    Lattice b2 = build_lattice_of_flats(Matroid::uniform(2, 2));
    CHECK(b2.open_star_fpoly(b2.top()) == poly({1, 1, 3, 2}));
    CHECK(b2.open_star_fpoly(b2.bottom()) == poly({1, 1}));
}

TEST_CASE("star-partition identity") {
    auto check_identity = [](const Lattice& l) {
        FPolynomial sum = FPolynomial::one();
        for (int p = 0; p < l.size(); ++p)
            sum = sum + l.open_star_fpoly(p).minus_empty();
        CHECK(sum == l.order_complex_fpoly());
        CHECK(sum == brute_chain_fpoly(l));
    };
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= std::min(n, 4); ++r)
            check_identity(build_lattice_of_flats(Matroid::uniform(r, n)));
    check_identity(build_lattice_of_flats(Matroid::fano()));
}

TEST_CASE("moebius values") {
    // Boolean lattices: mu(0,1) = (-1)^n.
    for (int n = 1; n <= 5; ++n) {
        Lattice bn = build_lattice_of_flats(Matroid::uniform(n, n));
        CHECK(bn.moebius(bn.bottom(), bn.top()) == (n % 2 ? -1 : 1));
    }
    Lattice u23 = build_lattice_of_flats(Matroid::uniform(2, 3));
    CHECK(u23.moebius(u23.bottom(), u23.top()) == 2);
    for (int p = 0; p < u23.size(); ++p) CHECK(u23.moebius(p, p) == 1);
    CHECK_THROWS_AS(u23.moebius(u23.top(), u23.bottom()), std::invalid_argument);

    Lattice fano = build_lattice_of_flats(Matroid::fano());
    CHECK(fano.moebius(fano.bottom(), fano.top()) == -8);

    // Defining recurrence: sum_{p<=z<=q} mu(p,z) = 0 for p < q.
    for (int p = 0; p < fano.size(); ++p)
        for (int q = 0; q < fano.size(); ++q) {
            if (!fano.less(p, q)) continue;
            BigInt sum = 0;
            for (int z = 0; z < fano.size(); ++z)
                if (fano.leq(p, z) && fano.leq(z, q)) sum += fano.moebius(p, z);
            CHECK(sum == 0);
        }
}

TEST_CASE("moebius is isomorphism invariant across Fano labelings") {
    Matroid fano = Matroid::fano();
    // Relabel by the cycle e -> e+1 (mod 7).
    std::vector<std::vector<int>> relabeled;
    for (auto& flat : fano.flats_as_lists()) {
        std::vector<int> f;
        for (int e : flat) f.push_back(e % 7 + 1);
        std::sort(f.begin(), f.end());
        relabeled.push_back(f);
    }
    Lattice a = build_lattice_of_flats(fano);
    Lattice b = build_lattice_of_flats(Matroid::from_flats(7, relabeled));
    CHECK(a.moebius(a.bottom(), a.top()) == b.moebius(b.bottom(), b.top()));

    auto row_sums = [](const Lattice& l) {
        std::vector<BigInt> sums;
        for (int p = 0; p < l.size(); ++p) {
            BigInt s = 0;
            for (int q = 0; q < l.size(); ++q)
                if (l.leq(p, q)) s += abs(l.moebius(p, q));
            sums.push_back(s);
        }
        std::sort(sums.begin(), sums.end());
        return sums;
    };
    CHECK(row_sums(a) == row_sums(b));
}

TEST_CASE("geometric checks pass on lattices of flats") {
    CHECK(build_lattice_of_flats(Matroid::uniform(3, 5)).check_geometric().pass());
    CHECK(build_lattice_of_flats(Matroid::fano()).check_geometric().pass());
    CHECK(build_lattice_of_flats(Matroid::uniform(0, 2)).check_geometric().pass());
}

TEST_CASE("geometric check rejects an unbounded poset") {
    // 0 < a < 1, 0 < b < 1, plus c covering only a: two maximal elements.
    Lattice l = Lattice::from_less_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}});
    GeometricReport rep = l.check_geometric();
    CHECK_FALSE(rep.pass());
    CHECK(rep.result == GeometricReport::Result::NotGraded);
}

TEST_CASE("geometric check rejects a non-semimodular hexagon") {
    // 0 < a < c < 1 and 0 < b < d < 1.
    Lattice l = Lattice::from_less_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
    GeometricReport rep = l.check_geometric();
    CHECK_FALSE(rep.pass());
    CHECK(rep.result == GeometricReport::Result::NotSemimodular);
    CHECK(((rep.witness_p == 1 && rep.witness_q == 2) ||
           (rep.witness_p == 2 && rep.witness_q == 1)));
}

TEST_CASE("geometric check rejects a non-atomistic chain") {
    Lattice l = Lattice::from_less_pairs(3, {{0, 1}, {1, 2}});
    GeometricReport rep = l.check_geometric();
    CHECK_FALSE(rep.pass());
    CHECK(rep.result == GeometricReport::Result::NotAtomistic);
    CHECK(rep.witness_p == 2);
}

TEST_CASE("relation cycles are rejected") {
    CHECK_THROWS_AS(Lattice::from_less_pairs(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("concurrent queries fill the memo tables idempotently") {
    Lattice fano = build_lattice_of_flats(Matroid::fano());
    BigInt expected_mu = fano.moebius(fano.bottom(), fano.top());
    FPolynomial expected_star = fano.open_star_fpoly(fano.top());

    Lattice fresh = build_lattice_of_flats(Matroid::fano());
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&] {
            for (int rep = 0; rep < 20; ++rep) {
                if (fresh.moebius(fresh.bottom(), fresh.top()) != expected_mu) ++mismatches;
                if (!(fresh.open_star_fpoly(fresh.top()) == expected_star)) ++mismatches;
                if (!fresh.check_geometric().pass()) ++mismatches;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}
