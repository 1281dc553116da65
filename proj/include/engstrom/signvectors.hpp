#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "engstrom/lattice.hpp"
#include "engstrom/subset.hpp"

namespace engstrom {

// A vector in {+,0,-}^{1..n}, stored as two disjoint bitmasks.
class SignVector {
public:
    SignVector(int n, Subset plus, Subset minus);
    static SignVector zero(int n) { return SignVector(n, 0, 0); }
    // Parses a string over '+', '-', '0'; position i is element i+1.
    static SignVector parse(std::string_view s);

    int size() const { return n_; }
    int sign(int e) const;  // +1, 0, -1

    SignVector compose(const SignVector& y) const;  // X o Y
    SignVector negate() const;
    Subset zero_set() const { return full_set(n_) & ~(plus_ | minus_); }
    Subset support() const { return plus_ | minus_; }
    Subset separation_set(const SignVector& y) const;  // S(X,Y)

    std::string str() const;

    auto operator<=>(const SignVector&) const = default;

private:
    int n_;
    Subset plus_, minus_;
};

// A deduplicated set of sign vectors over a common ground set, kept in the
// lexicographic order of their '+'/'-'/'0' strings so validation reports are
// deterministic.
class CovectorSet {
public:
    CovectorSet(int n, std::vector<SignVector> vectors);
    // One sign string per line; blank lines ignored.
    static CovectorSet parse(std::string_view text);

    int ground_size() const { return n_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<SignVector>& vectors() const { return vectors_; }
    bool contains(const SignVector& v) const;

    std::string str() const;  // one line per vector, canonical order

private:
    int n_;
    std::vector<SignVector> vectors_;
};

struct CovectorAxiomReport {
    enum class Result { Pass, L0, L1, L2, L3 };

    Result result = Result::Pass;
    std::string message;
    std::vector<std::string> witnesses;  // offending vectors as sign strings
    int witness_element = 0;             // the e of an (L3) failure

    bool pass() const { return result == Result::Pass; }
    std::string axiom_name() const;
    std::string str() const;
};

// Checks (L0) zero present, (L1) closure under negation, (L2) closure under
// composition, (L3) elimination. Brute force over all pairs; the first
// failure in canonical order is reported.
CovectorAxiomReport validate_covector_axioms(const CovectorSet& c);

// The lattice of zero sets {z(X) : X in C} ordered by inclusion. Throws
// AxiomError when the zero-set family violates the flat axioms, which
// signals corrupt covector input.
Lattice underlying_lattice(const CovectorSet& c);

}  // namespace engstrom
