#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace diaconf {

// Exact arithmetic over Q. GMP keeps values canonical (reduced, positive
// denominator) as long as they are constructed through arithmetic; parsing
// goes through parse_rat which canonicalizes explicitly.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Accepts "p" or "p/q" with optional leading '-', digits only.
// Rejects everything else (decimal points in particular) and q = 0.
Rat parse_rat(const std::string& s);

// "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

// Falling-factorial binomial: C(n,k) = n(n-1)...(n-k+1)/k!, valid for
// negative n as well.
Rat binomial(long n, long k);

Int factorial(long n);

}  // namespace diaconf
