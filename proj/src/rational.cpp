#include "grl/rational.hpp"
#include "grl/error.hpp"

#include <cmath>
#include <limits>

namespace grl {

Rational exact_rational(double x) {
    if (!std::isfinite(x)) fail("PreconditionFailed", "cannot convert a non-finite value to a rational");
    int e = 0;
    const double m = std::frexp(x, &e);
    // m * 2^53 is an integer
    const auto mant = static_cast<long long>(std::ldexp(m, 53));
    Rational r(mant);
    e -= 53;
    boost::multiprecision::cpp_int p = 1;
    p <<= std::abs(e);
    return e >= 0 ? r * Rational(p) : r / Rational(p);
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail("PreconditionFailed", "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational d = parse_rational(s.substr(slash + 1));
        if (d == 0) fail("PreconditionFailed", "zero denominator in '" + s + "'");
        return parse_rational(s.substr(0, slash)) / d;
    }
    std::string mant = s;
    long long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = std::stoll(s.substr(epos + 1));
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
    boost::multiprecision::cpp_int digits = 0;
    bool any = false;
    for (; i < mant.size(); ++i) {
        const char ch = mant[i];
        if (ch == '.') {
            for (++i; i < mant.size(); ++i) {
                if (mant[i] < '0' || mant[i] > '9') fail("PreconditionFailed", "bad number '" + s + "'");
                digits = digits * 10 + (mant[i] - '0');
                --exp10;
                any = true;
            }
            break;
        }
        if (ch < '0' || ch > '9') fail("PreconditionFailed", "bad number '" + s + "'");
        digits = digits * 10 + (ch - '0');
        any = true;
    }
    if (!any) fail("PreconditionFailed", "bad number '" + s + "'");
    boost::multiprecision::cpp_int p10 = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                    static_cast<unsigned>(std::abs(exp10)));
    Rational r = exp10 >= 0 ? Rational(digits * p10) : Rational(digits) / Rational(p10);
    return neg ? -r : r;
}

} // namespace grl
