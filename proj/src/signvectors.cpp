#include "engstrom/signvectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace engstrom {

SignVector::SignVector(int n, Subset plus, Subset minus) : n_(n), plus_(plus), minus_(minus) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("sign vector length must be between 0 and 64");
    if ((plus_ | minus_) & ~full_set(n_)) throw std::invalid_argument("entries beyond length");
    if (plus_ & minus_) throw std::invalid_argument("an entry cannot be both + and -");
}

SignVector SignVector::parse(std::string_view s) {
    Subset plus = 0, minus = 0;
    if (s.size() > kMaxGroundSize) throw std::invalid_argument("sign vector longer than 64");
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '+': plus |= Subset{1} << i; break;
            case '-': minus |= Subset{1} << i; break;
            case '0': break;
            default:
                throw std::invalid_argument("bad sign character '" + std::string(1, s[i]) + "'");
        }
    }
    return SignVector(static_cast<int>(s.size()), plus, minus);
}

int SignVector::sign(int e) const {
    if (e < 1 || e > n_) throw std::invalid_argument("element outside ground set");
    if (contains(plus_, e)) return 1;
    if (contains(minus_, e)) return -1;
    return 0;
}

SignVector SignVector::compose(const SignVector& y) const {
    if (n_ != y.n_) throw std::invalid_argument("sign vectors over different ground sets");
    Subset sup = support();
    return SignVector(n_, plus_ | (y.plus_ & ~sup), minus_ | (y.minus_ & ~sup));
}

SignVector SignVector::negate() const { return SignVector(n_, minus_, plus_); }

Subset SignVector::separation_set(const SignVector& y) const {
    if (n_ != y.n_) throw std::invalid_argument("sign vectors over different ground sets");
    return (plus_ & y.minus_) | (minus_ & y.plus_);
}

std::string SignVector::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int e = 1; e <= n_; ++e) {
        if (contains(plus_, e)) s[static_cast<std::size_t>(e - 1)] = '+';
        if (contains(minus_, e)) s[static_cast<std::size_t>(e - 1)] = '-';
    }
    return s;
}

CovectorSet::CovectorSet(int n, std::vector<SignVector> vectors)
    : n_(n), vectors_(std::move(vectors)) {
    for (const SignVector& v : vectors_)
        if (v.size() != n_) throw std::invalid_argument("covector length differs from ground set");
    std::sort(vectors_.begin(), vectors_.end(),
              [](const SignVector& a, const SignVector& b) { return a.str() < b.str(); });
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

CovectorSet CovectorSet::parse(std::string_view text) {
    std::vector<SignVector> vecs;
    int n = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty()) continue;
        SignVector v = SignVector::parse(line);
        if (n < 0) n = v.size();
        if (v.size() != n) throw std::invalid_argument("covector lines have differing lengths");
        vecs.push_back(v);
    }
    if (n < 0) throw std::invalid_argument("covector file contains no sign vectors");
    return CovectorSet(n, std::move(vecs));
}

bool CovectorSet::contains(const SignVector& v) const {
    return std::binary_search(
        vectors_.begin(), vectors_.end(), v,
        [](const SignVector& a, const SignVector& b) { return a.str() < b.str(); });
}

std::string CovectorSet::str() const {
    std::string out;
    for (const SignVector& v : vectors_) {
        out += v.str();
        out += '\n';
    }
    return out;
}

std::string CovectorAxiomReport::axiom_name() const {
    switch (result) {
        case Result::Pass: return "pass";
        case Result::L0: return "L0";
        case Result::L1: return "L1";
        case Result::L2: return "L2";
        case Result::L3: return "L3";
    }
    return "?";
}

std::string CovectorAxiomReport::str() const {
    if (pass()) return "covector axioms hold";
    std::string out = axiom_name() + " violated";
    if (!witnesses.empty()) {
        out += ", witnesses ";
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            if (i) out += ", ";
            out += witnesses[i];
        }
    }
    if (!message.empty()) out += ": " + message;
    return out;
}

CovectorAxiomReport validate_covector_axioms(const CovectorSet& c) {
    CovectorAxiomReport rep;
    auto fail = [&rep](CovectorAxiomReport::Result r, std::string msg,
                       std::vector<std::string> wit, int elem = 0) {
        rep.result = r;
        rep.message = std::move(msg);
        rep.witnesses = std::move(wit);
        rep.witness_element = elem;
        return rep;
    };

    const auto& vecs = c.vectors();
    if (!c.contains(SignVector::zero(c.ground_size())))
        return fail(CovectorAxiomReport::Result::L0, "the zero vector is missing", {});
    for (const SignVector& x : vecs)
        if (!c.contains(x.negate()))
            return fail(CovectorAxiomReport::Result::L1,
                        "negation " + x.negate().str() + " of " + x.str() + " is missing",
                        {x.str()});
    for (const SignVector& x : vecs)
        for (const SignVector& y : vecs) {
            SignVector xy = x.compose(y);
            if (!c.contains(xy))
                return fail(CovectorAxiomReport::Result::L2,
                            "composition " + xy.str() + " of " + x.str() + " and " + y.str() +
                                " is missing",
                            {x.str(), y.str()});
        }
    for (const SignVector& x : vecs)
        for (const SignVector& y : vecs) {
            Subset sep = x.separation_set(y);
            SignVector xy = x.compose(y);
            for (int e : subset_elements(sep)) {
                bool found = false;
                for (const SignVector& z : vecs) {
                    if (z.sign(e) != 0) continue;
                    bool agrees = true;
                    for (int f = 1; f <= c.ground_size(); ++f)
                        if (!contains(sep, f) && z.sign(f) != xy.sign(f)) {
                            agrees = false;
                            break;
                        }
                    if (agrees) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    return fail(CovectorAxiomReport::Result::L3,
                                "no Z eliminating element " + std::to_string(e) + " between " +
                                    x.str() + " and " + y.str(),
                                {x.str(), y.str()}, e);
            }
        }
    return rep;
}

Lattice underlying_lattice(const CovectorSet& c) {
    std::vector<Subset> zero_sets;
    for (const SignVector& v : c.vectors()) zero_sets.push_back(v.zero_set());
    std::sort(zero_sets.begin(), zero_sets.end(), canonical_less);
    zero_sets.erase(std::unique(zero_sets.begin(), zero_sets.end()), zero_sets.end());

    std::vector<std::vector<int>> family;
    family.reserve(zero_sets.size());
    for (Subset s : zero_sets) family.push_back(subset_elements(s));
    Matroid m = Matroid::from_flats(c.ground_size(), family);  // AxiomError on corrupt input
    return Lattice::from_matroid(m);
}

}  // namespace engstrom
