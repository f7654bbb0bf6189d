#include "diaconf/rat.hpp"

#include <cctype>

namespace diaconf {

Rat parse_rat(const std::string& s) {
    // shape check first: [-]digits[/digits]
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw input_error("not a rational: \"" + s + "\"");
    if (i < s.size()) {
        if (s[i] != '/') throw input_error("not a rational: \"" + s + "\" (floats are not accepted; write 1/2, not 0.5)");
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) throw input_error("not a rational: \"" + s + "\"");
    }
    Rat r(s);
    if (denominator(r) == 0) throw input_error("zero denominator in \"" + s + "\"");
    mpq_canonicalize(r.backend().data());
    return r;
}

std::string rat_str(const Rat& r) { return r.str(); }

Rat binomial(long n, long k) {
    if (k < 0) return Rat(0);
    Rat num(1);
    for (long i = 0; i < k; ++i) num *= Rat(n - i);
    return num / Rat(factorial(k));
}

Int factorial(long n) {
    Int f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace diaconf
