#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "diaconf/rat.hpp"

namespace diaconf {

// The global indeterminate list, in its fixed order T < L < M < x < t.
// L and M are the ASCII names of lambda and mu.
enum class Sym : int { T = 0, L = 1, M = 2, x = 3, t = 4 };
inline constexpr int kNumSyms = 5;

const char* sym_name(Sym s);
std::optional<Sym> sym_from_name(const std::string& name);

using ExpVec = std::array<int, kNumSyms>;

// Sparse multivariate polynomial over Q in the five global indeterminates.
// Invariant: no zero coefficients are stored.
class Poly {
  public:
    Poly() = default;
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(const Rat& c);

    static Poly var(Sym s, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the coefficient of the all-zero exponent vector).
    Rat constant_term() const;

    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    void add_term(const ExpVec& e, const Rat& c);

    int degree(Sym s) const;
    bool depends_on(Sym s) const { return degree(s) > 0; }
    // Coefficient of s^k, as a polynomial in the remaining indeterminates.
    Poly coeff_of(Sym s, int k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(int e) const;

    // Simultaneous substitution; indeterminates absent from the map stay fixed.
    Poly substitute(const std::map<Sym, Poly>& bindings) const;

    std::string str() const;

  private:
    std::map<ExpVec, Rat> terms_;
};

// Parses the grammar used throughout the CLI formats:
//   poly  ::= ['-'] term (('+'|'-') term)*
//   term  ::= factor ('*' factor)*
//   factor::= rational | symbol ['^' int]
// e.g. "T^2 + 2*T*L + L^2", "-1/2*M".
Poly parse_poly(const std::string& s);

}  // namespace diaconf
