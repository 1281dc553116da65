#include "engstrom/fpoly.hpp"

#include <stdexcept>

namespace engstrom {

void FPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FPolynomial FPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
    for (const BigInt& c : coeffs)
        if (c < 0) throw std::invalid_argument("f-polynomial coefficients must be nonnegative");
    if (!coeffs.empty() && coeffs[0] > 1)
        throw std::invalid_argument("coefficient of t^0 must be 0 or 1 (the empty face)");
    return FPolynomial(std::move(coeffs));
}

FPolynomial FPolynomial::one() { return FPolynomial({BigInt(1)}); }
FPolynomial FPolynomial::point() { return FPolynomial({BigInt(1), BigInt(1)}); }
FPolynomial FPolynomial::sphere0() { return FPolynomial({BigInt(1), BigInt(2)}); }

FPolynomial operator+(const FPolynomial& a, const FPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return FPolynomial(std::move(c));
}

FPolynomial operator*(const FPolynomial& a, const FPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return FPolynomial{};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return FPolynomial(std::move(c));
}

FPolynomial FPolynomial::join(const FPolynomial& g) const {
    if (!has_empty_face() || !g.has_empty_face())
        throw std::invalid_argument("join requires the empty face on both factors");
    return *this * g;
}

FPolynomial FPolynomial::product(const FPolynomial& g) const {
    if (!has_empty_face() || !g.has_empty_face())
        throw std::invalid_argument("product requires the empty face on both factors");
    FPolynomial p = (minus_empty() * g.minus_empty()).shift_down();
    return p + one();
}

FPolynomial FPolynomial::disjoint_union(const FPolynomial& g) const {
    if (!has_empty_face() || !g.has_empty_face())
        throw std::invalid_argument("disjoint_union requires the empty face on both parts");
    FPolynomial sum = *this + g;
    sum.c_[0] -= 1;
    return sum;
}

FPolynomial FPolynomial::join_power(unsigned c) const {
    if (!has_empty_face()) throw std::invalid_argument("join_power requires the empty face");
    FPolynomial acc = one();
    for (unsigned i = 0; i < c; ++i) acc = acc * *this;
    return acc;
}

BigInt FPolynomial::total() const {
    BigInt t = 0;
    for (const BigInt& c : c_) t += c;
    return t;
}

FPolynomial FPolynomial::minus_empty() const {
    if (!has_empty_face()) throw std::invalid_argument("minus_empty requires coeff(0) == 1");
    FPolynomial f = *this;
    f.c_[0] = 0;
    f.trim();
    return f;
}

FPolynomial FPolynomial::shift_down() const {
    if (!c_.empty() && c_[0] != 0)
        throw std::invalid_argument("shift_down requires a zero constant term");
    if (c_.empty()) return {};
    return FPolynomial(std::vector<BigInt>(c_.begin() + 1, c_.end()));
}

std::vector<std::string> FPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const BigInt& c : c_) out.push_back(c.str());
    return out;
}

std::string FPolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c_[i].str();
            continue;
        }
        if (c_[i] != 1) out += c_[i].str();
        out += 't';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

BigRat RationalPolynomial::eval(const BigRat& x) const {
    BigRat y = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) y = y * x + *it;
    return y;
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0 && degree() > 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        BigRat a = out.empty() ? c : BigRat(abs(numerator(c)), denominator(c));
        std::string cs = to_fraction(a);
        if (denominator(a) == 1) cs = numerator(a).str();
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

RationalPolynomial fit_polynomial_in_n(const std::vector<std::pair<BigInt, BigInt>>& samples,
                                       int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    std::size_t need = static_cast<std::size_t>(degree_bound) + 2;
    if (samples.size() < need)
        throw std::invalid_argument("need at least degree_bound + 2 samples (fit plus verify)");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("sample points must be distinct");

    auto polymul = [](const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
        std::vector<BigRat> c(a.size() + b.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };

    std::size_t k = static_cast<std::size_t>(degree_bound) + 1;
    std::vector<BigRat> total(k, BigRat(0));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<BigRat> term{BigRat(1)};
        BigRat den = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            term = polymul(term, {BigRat(-samples[j].first), BigRat(1)});
            den *= BigRat(samples[i].first - samples[j].first);
        }
        BigRat scale = BigRat(samples[i].second) / den;
        for (std::size_t d = 0; d < term.size(); ++d) total[d] += term[d] * scale;
    }

    RationalPolynomial poly{std::move(total)};
    while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();

    for (std::size_t i = k; i < samples.size(); ++i) {
        BigRat got = poly.eval(BigRat(samples[i].first));
        if (got != BigRat(samples[i].second))
            throw FitError("not a polynomial of degree <= " + std::to_string(degree_bound) +
                           ": sample at n=" + samples[i].first.str() + " gave " +
                           samples[i].second.str() + ", interpolant gives " + to_fraction(got));
    }
    return poly;
}

}  // namespace engstrom
