#pragma once

#include <string>

#include "engstrom/bigint.hpp"
#include "engstrom/combinatorics.hpp"
#include "engstrom/fpoly.hpp"
#include "engstrom/lattice.hpp"

namespace engstrom {

// The indexing complex X of an Engström representation. Only cell counts per
// dimension matter, so X is carried as its f-polynomial; it must be nonempty
// (at least one vertex).
struct ComplexSummary {
    FPolynomial fpoly;

    static ComplexSummary from_fpoly(FPolynomial f);  // validates
    static ComplexSummary point() { return {FPolynomial::point()}; }
    static ComplexSummary sphere0() { return {FPolynomial::sphere0()}; }
    static ComplexSummary edge();               // 1 + 2t + t^2
    static ComplexSummary triangle_boundary();  // 1 + 3t + 3t^2
};

// f(T_X M; t) = 1 + sum_p (f(openstar(p)) - 1) (f(X)^{crk(p)} - 1) / t over
// the lattice of flats. Requires a geometric lattice and nonempty X.
FPolynomial engstrom_fpoly(const Lattice& lattice, const ComplexSummary& x);

// Closed form for uniform matroids:
// 1 + sum_i C(n,i) * scriptF_i(t) * (f(X)^{r-i} - 1).
FPolynomial uniform_engstrom_fpoly(int r, long long n, const ComplexSummary& x);

// scriptF_i(t) = sum_{k=0..i} k! S(i+1,k+1) t^k, the open-star polynomial of
// the top of B_i with the empty face stripped and shifted down once.
FPolynomial script_F(int i);

// Total faces of T_{S^0} U_{r,n}: 1 + sum_i C(n,i)(2F_i - 0^i)(3^{r-i}-1).
BigInt uniform_total_s0(int r, long long n);

// Variant using the two-cells-per-dimension sphere: (3^{r-i}-1) -> 2(r-i).
BigInt uniform_total_s0_altcells(int r, long long n);

// sum_k k! S(i+1,k+1) == 2 F_i - 0^i, exactly.
bool bell_identity_check(int i);

// Folkman-Lawrence face polynomial from the lattice alone:
// sum over all p <= q of |mu(p,q)| t^{crk(p)}. Defined for any geometric
// lattice; it counts covectors only when the matroid is orientable.
FPolynomial fl_fpoly(const Lattice& lattice);

// Closed form 1 + 2 sum_{i<r} sum_{k<r-i} C(n,i) C(n-i-1,k); requires r >= 2
// (ranks 0 and 1 are handled by fl_fpoly on the explicit two-element chain).
BigInt uniform_fl_total(int r, long long n);

// rho(U_{r,n}) = Engström total / FL total, exact. Requires r >= 2.
BigRat rho(int r, long long n);
// lim_n rho(U_{r,n}) = F_{r-1} / 2^{r-2}. Requires r >= 1.
BigRat rho_limit(int r);

enum class GrowthKind { Engstrom, FolkmanLawrence, EngstromAltCells };

struct GrowthReport {
    int degree = 0;
    BigRat leading;
    BigRat expected_leading;
    bool matches = false;
    RationalPolynomial poly;
};

// Samples the chosen total at n = r..2r+1, interpolates a degree r-1
// polynomial in n exactly, and compares the leading coefficient with
// 4 F_{r-1}/(r-1)! (Engström, both cell structures) or 2^r/(r-1)! (FL).
// A failed fit propagates as FitError.
GrowthReport growth_analysis(int r, GrowthKind which);

// Barthélemy's estimate F_i ~ i! / (2 (ln 2)^{i+1}).
double bell_approx(int i);

struct ApproxRatioReport {
    int r = 0;
    BigInt bell_exact;        // F_{r-1}
    double bell_estimate = 0;
    double bell_rel_error = 0;
    BigRat rho_lim;
    double rho_lim_estimate = 0;  // (r-1)! / (ln 2 * (ln 4)^{r-1})
    double rho_lim_rel_error = 0;
};

ApproxRatioReport approx_ratio_report(int r);

}  // namespace engstrom
