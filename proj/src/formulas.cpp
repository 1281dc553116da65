#include "engstrom/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace engstrom {

namespace {

FPolynomial scale(const FPolynomial& f, const BigInt& c) {
    std::vector<BigInt> coeffs = f.coeffs();
    for (BigInt& x : coeffs) x *= c;
    return FPolynomial::from_coeffs(std::move(coeffs));
}

void require_geometric(const Lattice& lattice) {
    GeometricReport rep = lattice.check_geometric();
    if (!rep.pass()) throw std::invalid_argument("lattice is not geometric: " + rep.str());
}

BigInt pow_int(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// 0^i with the 0^0 = 1 convention.
BigInt zero_pow(int i) { return i == 0 ? 1 : 0; }

}  // namespace

ComplexSummary ComplexSummary::from_fpoly(FPolynomial f) {
    if (!f.has_empty_face())
        throw std::invalid_argument("indexing complex must contain the empty face");
    if (f.coeff(1) < 1)
        throw std::invalid_argument("indexing complex must be nonempty (at least one vertex)");
    return ComplexSummary{std::move(f)};
}

ComplexSummary ComplexSummary::edge() {
    return {FPolynomial::from_coeffs({BigInt(1), BigInt(2), BigInt(1)})};
}

ComplexSummary ComplexSummary::triangle_boundary() {
    return {FPolynomial::from_coeffs({BigInt(1), BigInt(3), BigInt(3)})};
}

FPolynomial engstrom_fpoly(const Lattice& lattice, const ComplexSummary& x) {
    require_geometric(lattice);
    ComplexSummary::from_fpoly(x.fpoly);  // revalidate: nonempty with empty face
    FPolynomial result = FPolynomial::one();
    for (int p = 0; p < lattice.size(); ++p) {
        int crk = lattice.corank(p);
        if (crk == 0) continue;  // the summand at the top is zero
        FPolynomial stars = lattice.open_star_fpoly(p).minus_empty().shift_down();
        FPolynomial cells = x.fpoly.join_power(static_cast<unsigned>(crk)).minus_empty();
        result = result + stars * cells;
    }
    return result;
}

FPolynomial script_F(int i) {
    if (i < 0) throw std::invalid_argument("script_F requires i >= 0");
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(i) + 1);
    for (int k = 0; k <= i; ++k) coeffs.push_back(factorial(k) * stirling2(i + 1, k + 1));
    return FPolynomial::from_coeffs(std::move(coeffs));
}

FPolynomial uniform_engstrom_fpoly(int r, long long n, const ComplexSummary& x) {
    if (r < 0 || n < 0 || r > n)
        throw std::invalid_argument("uniform matroid requires 0 <= r <= n");
    ComplexSummary::from_fpoly(x.fpoly);
    FPolynomial result = FPolynomial::one();
    for (int i = 0; i < r; ++i) {
        FPolynomial cells = x.fpoly.join_power(static_cast<unsigned>(r - i)).minus_empty();
        result = result + scale(script_F(i) * cells, binomial(n, i));
    }
    return result;
}

BigInt uniform_total_s0(int r, long long n) {
    if (r < 0 || n < 0 || r > n)
        throw std::invalid_argument("uniform matroid requires 0 <= r <= n");
    BigInt total = 1;
    for (int i = 0; i <= r; ++i)
        total += binomial(n, i) * (2 * ordered_bell(i) - zero_pow(i)) * (pow_int(3, r - i) - 1);
    return total;
}

BigInt uniform_total_s0_altcells(int r, long long n) {
    if (r < 0 || n < 0 || r > n)
        throw std::invalid_argument("uniform matroid requires 0 <= r <= n");
    BigInt total = 1;
    for (int i = 0; i <= r; ++i)
        total += binomial(n, i) * (2 * ordered_bell(i) - zero_pow(i)) * (2 * (r - i));
    return total;
}

bool bell_identity_check(int i) {
    if (i < 0) throw std::invalid_argument("bell_identity_check requires i >= 0");
    BigInt lhs = 0;
    for (int k = 0; k <= i; ++k) lhs += factorial(k) * stirling2(i + 1, k + 1);
    return lhs == 2 * ordered_bell(i) - zero_pow(i);
}

FPolynomial fl_fpoly(const Lattice& lattice) {
    require_geometric(lattice);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(lattice.rank()) + 1, BigInt(0));
    for (int p = 0; p < lattice.size(); ++p) {
        BigInt row = 0;
        for (int q = 0; q < lattice.size(); ++q)
            if (lattice.leq(p, q)) row += abs(lattice.moebius(p, q));
        coeffs[static_cast<std::size_t>(lattice.corank(p))] += row;
    }
    return FPolynomial::from_coeffs(std::move(coeffs));
}

BigInt uniform_fl_total(int r, long long n) {
    if (r < 2) throw std::invalid_argument("uniform_fl_total requires rank >= 2");
    if (n < r) throw std::invalid_argument("uniform matroid requires r <= n");
    BigInt sum = 0;
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r - i; ++k) sum += binomial(n, i) * binomial(n - i - 1, k);
    return 1 + 2 * sum;
}

BigRat rho(int r, long long n) {
    if (r < 2) throw std::invalid_argument("rho requires rank >= 2");
    return BigRat(uniform_total_s0(r, n), uniform_fl_total(r, n));
}

BigRat rho_limit(int r) {
    if (r < 1) throw std::invalid_argument("rho_limit requires rank >= 1");
    if (r == 1) return BigRat(2 * ordered_bell(0));  // F_0 / 2^{-1}
    BigInt denom = 1;
    denom <<= (r - 2);
    return BigRat(ordered_bell(r - 1), denom);
}

GrowthReport growth_analysis(int r, GrowthKind which) {
    if (r < 1) throw std::invalid_argument("growth_analysis requires rank >= 1");
    auto sample = [&](long long n) -> BigInt {
        switch (which) {
            case GrowthKind::Engstrom: return uniform_total_s0(r, n);
            case GrowthKind::EngstromAltCells: return uniform_total_s0_altcells(r, n);
            case GrowthKind::FolkmanLawrence:
                if (r >= 2) return uniform_fl_total(r, n);
                return fl_fpoly(Lattice::from_matroid(Matroid::uniform(r, static_cast<int>(n))))
                    .total();
        }
        throw std::logic_error("unknown growth kind");
    };

    std::vector<std::pair<BigInt, BigInt>> samples;
    for (long long n = r; n <= 2 * r + 1; ++n) samples.emplace_back(BigInt(n), sample(n));

    GrowthReport report;
    report.poly = fit_polynomial_in_n(samples, r - 1);
    report.degree = report.poly.degree();
    report.leading = report.poly.leading();
    report.expected_leading =
        which == GrowthKind::FolkmanLawrence
            ? BigRat(pow_int(2, r), factorial(r - 1))
            : BigRat(4 * ordered_bell(r - 1), factorial(r - 1));
    report.matches = report.degree == r - 1 && report.leading == report.expected_leading;
    return report;
}

double bell_approx(int i) {
    if (i < 0) throw std::invalid_argument("bell_approx requires i >= 0");
    double fact = factorial(i).convert_to<double>();
    return fact / (2.0 * std::pow(std::log(2.0), i + 1));
}

ApproxRatioReport approx_ratio_report(int r) {
    if (r < 1) throw std::invalid_argument("approx_ratio_report requires rank >= 1");
    ApproxRatioReport rep;
    rep.r = r;
    rep.bell_exact = ordered_bell(r - 1);
    rep.bell_estimate = bell_approx(r - 1);
    rep.bell_rel_error = std::abs(rep.bell_estimate / rep.bell_exact.convert_to<double>() - 1.0);
    rep.rho_lim = rho_limit(r);
    rep.rho_lim_estimate = factorial(r - 1).convert_to<double>() /
                           (std::log(2.0) * std::pow(std::log(4.0), r - 1));
    rep.rho_lim_rel_error =
        std::abs(rep.rho_lim_estimate / rep.rho_lim.convert_to<double>() - 1.0);
    return rep;
}

}  // namespace engstrom
