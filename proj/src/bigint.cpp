#include "engstrom/bigint.hpp"

namespace engstrom {

std::string rat_to_decimal(const BigRat& r, int frac_digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rem = num % den;
    std::string out = sign + whole.str();
    if (frac_digits <= 0) return out;
    out += '.';
    for (int i = 0; i < frac_digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    return out;
}

}  // namespace engstrom
