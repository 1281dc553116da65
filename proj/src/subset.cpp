#include "engstrom/subset.hpp"

#include <stdexcept>

namespace engstrom {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(subset_size(s)));
    while (s) {
        int bit = std::countr_zero(s);
        out.push_back(bit + 1);
        s &= s - 1;
    }
    return out;
}

Subset subset_from_elements(std::span<const int> elems, int n) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw std::invalid_argument("element " + std::to_string(e) +
                                        " outside ground set 1.." + std::to_string(n));
        Subset bit = Subset{1} << (e - 1);
        if (s & bit) throw std::invalid_argument("duplicate element " + std::to_string(e));
        s |= bit;
    }
    return s;
}

bool canonical_less(Subset a, Subset b) {
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb) return sa < sb;
    if (a == b) return false;
    // The set owning the smallest differing element comes first.
    Subset diff = a ^ b;
    return (diff & -diff) & a;
}

std::string subset_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace engstrom
