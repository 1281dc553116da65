#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "engstrom/bigint.hpp"

namespace engstrom {

// f-polynomial of a finite CW complex: coeff(i) counts the (i-1)-dimensional
// faces, so coeff(0) is 0 or 1 for absence/presence of the empty face. All
// coefficients are exact nonnegative big integers.
class FPolynomial {
public:
    FPolynomial() = default;  // the zero polynomial (no faces at all)

    // Validates: every coefficient >= 0 and coeff(0) <= 1.
    static FPolynomial from_coeffs(std::vector<BigInt> coeffs);

    static FPolynomial one();      // empty complex: only the empty face
    static FPolynomial point();    // 1 + t
    static FPolynomial sphere0();  // 1 + 2t

    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool has_empty_face() const { return !c_.empty() && c_[0] == 1; }

    // f(Delta * Gamma) = f * g. Requires the empty face on both sides.
    FPolynomial join(const FPolynomial& g) const;
    // f(Delta x Gamma) = (f-1)(g-1)/t + 1.
    FPolynomial product(const FPolynomial& g) const;
    // f(Delta ⊔ Gamma) = f + g - 1.
    FPolynomial disjoint_union(const FPolynomial& g) const;
    // c-fold join power; f^0 = 1.
    FPolynomial join_power(unsigned c) const;

    BigInt total() const;  // f(1): total face count including the empty face

    // f - 1: drops the empty face. Requires coeff(0) == 1.
    FPolynomial minus_empty() const;
    // f / t: shifts all coefficients down one slot. Requires coeff(0) == 0.
    FPolynomial shift_down() const;

    friend FPolynomial operator+(const FPolynomial& a, const FPolynomial& b);
    friend FPolynomial operator*(const FPolynomial& a, const FPolynomial& b);
    bool operator==(const FPolynomial&) const = default;

    std::vector<std::string> coeff_strings() const;
    std::string str() const;  // "1 + 48t + 124t^2 + 78t^3"

private:
    explicit FPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
    void trim();

    std::vector<BigInt> c_;
};

// Polynomial in n with exact rational coefficients, normalized (no trailing
// zero coefficients; the zero polynomial keeps a single 0).
struct RationalPolynomial {
    std::vector<BigRat> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigRat leading() const { return coeffs.empty() ? BigRat(0) : coeffs.back(); }
    BigRat eval(const BigRat& x) const;
    std::string str(const std::string& var = "n") const;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact Lagrange interpolation through the first degree_bound+1 samples; the
// remaining samples (at least one) are verified exactly. Throws FitError when
// a verification sample disagrees, std::invalid_argument on bad input.
RationalPolynomial fit_polynomial_in_n(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                       int degree_bound);

}  // namespace engstrom
