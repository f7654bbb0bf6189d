#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diaconf/algebra.hpp"
#include "diaconf/poly.hpp"

namespace diaconf {

// Element of a conformal algebra: one coefficient polynomial per module
// slot. Table algebras keep one slot per generator with polynomials in T;
// the closed-form algebras (Weyl, the no-unit example) also use x.
struct ConfElement {
    std::vector<Poly> comp;

    ConfElement() = default;
    explicit ConfElement(int slots) : comp(slots) {}

    int slots() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;

    ConfElement& operator+=(const ConfElement& o);
    ConfElement& operator-=(const ConfElement& o);
    friend ConfElement operator+(ConfElement a, const ConfElement& b) { return a += b; }
    friend ConfElement operator-(ConfElement a, const ConfElement& b) { return a -= b; }
    friend ConfElement operator*(const Poly& h, ConfElement e);
    friend ConfElement operator*(const Rat& c, ConfElement e) { return Poly(c) * std::move(e); }
    friend ConfElement operator-(ConfElement e) { return Rat(-1) * std::move(e); }
    friend bool operator==(const ConfElement& a, const ConfElement& b) { return a.comp == b.comp; }

    std::string str(const std::vector<std::string>& slot_names) const;
};

// Value of a lambda-product: polynomial in the product variable with
// ConfElement coefficients, stored with that variable inside the slot
// polynomials.
struct LambdaValue {
    std::vector<Poly> comp;

    LambdaValue() = default;
    explicit LambdaValue(int slots) : comp(slots) {}

    int slots() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;
    int lambda_degree(Sym lam = Sym::L) const;
    // Coefficient of lam^k as an element.
    ConfElement coeff(Sym lam, int k) const;
    // s-th product extraction: s! times the coefficient of lam^s.
    ConfElement nth_product(int s, Sym lam = Sym::L) const;
    ConfElement at_zero(Sym lam = Sym::L) const { return coeff(lam, 0); }
    ConfElement substituted(Sym lam, const Poly& value) const;

    LambdaValue& operator+=(const LambdaValue& o);
    LambdaValue& operator-=(const LambdaValue& o);
    friend LambdaValue operator+(LambdaValue a, const LambdaValue& b) { return a += b; }
    friend LambdaValue operator-(LambdaValue a, const LambdaValue& b) { return a -= b; }
    friend LambdaValue operator*(const Poly& h, LambdaValue v);
    friend bool operator==(const LambdaValue& a, const LambdaValue& b) { return a.comp == b.comp; }

    std::string str(const std::vector<std::string>& slot_names) const;
};

// Finitely generated free H-module with a lambda-product table, or one of
// the closed-form algebras whose elements are exact polynomials.
class ConformalAlgebra {
  public:
    enum class Kind { Table, Weyl, NoUnit, Minus };

    static ConformalAlgebra make_table(std::string name, std::vector<std::string> generators);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int slots() const;
    // Slot labels for printing: generator names, or {f} / {f, w}.
    std::vector<std::string> slot_names() const;
    const std::vector<std::string>& generators() const { return generators_; }

    // Table access (Table kind only). Entries absent from the map are zero.
    void set_entry(int i, int j, LambdaValue v);
    const std::map<std::pair<int, int>, LambdaValue>& entries() const { return table_; }

    ConfElement zero_element() const { return ConfElement(slots()); }
    // i-th generator as an element (Table kind).
    ConfElement generator_element(int i) const;
    // Finite module-generator family: all generators for table algebras,
    // x^k up to the bound (plus w) for the closed-form ones.
    std::vector<ConfElement> module_generators(int x_degree_bound) const;
    std::vector<std::string> module_generator_names(int x_degree_bound) const;

    const ConformalAlgebra& base() const { return *base_; }

    friend ConformalAlgebra weyl();
    friend ConformalAlgebra no_unit_example();
    friend ConformalAlgebra minus_functor(const ConformalAlgebra& c, int bound);

  private:
    Kind kind_ = Kind::Table;
    std::string name_;
    std::vector<std::string> generators_;
    std::map<std::pair<int, int>, LambdaValue> table_;
    std::shared_ptr<const ConformalAlgebra> base_;
};

// The lambda-product extended from the table (or closed form) by
// k-bilinearity and sesquilinearity: (T a)_λ b = -λ (a_λ b) and
// a_λ (T b) = (T + λ)(a_λ b). The product variable is lam; any other
// lambda symbol occurring in the operands is treated as a scalar.
LambdaValue lambda_product(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b, Sym lam = Sym::L);

// a |- b = (a_λ b)|_{λ=0} and a -| b = (a_λ b)|_{λ=-T}.
ConfElement conf_vdash(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b);
ConfElement conf_dashv(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b);

// (a_λ b)_{λ+μ} c = a_λ (b_μ c) on module-generator triples; the bound
// caps the x-degree of the generators probed for closed-form algebras.
CheckResult check_conformal_associativity(const ConformalAlgebra& c, int bound = 3);
// Skew-symmetry [a_λ b] = -[b_{-T-λ} a] and the conformal Jacobi identity.
CheckResult check_conformal_lie(const ConformalAlgebra& c, int bound = 3);

ConformalAlgebra current(const Algebra& a);
ConformalAlgebra virasoro();
ConformalAlgebra weyl();
ConformalAlgebra no_unit_example();
// Differential current algebra over a nilpotent derivation:
// (1 x a)_λ (1 x b) = sum_k λ^k/k! x a d^k(b). Throws when d is not a
// nilpotent derivation of a.
ConformalAlgebra diffcur(const Algebra& a, const QMatrix& derivation);
// [x_λ y] = (x_λ y) - (y_{-T-λ} x); requires associativity at the bound.
ConformalAlgebra minus_functor(const ConformalAlgebra& c, int bound = 3);

// (e_λ g)|_{λ=0} = g on module generators and e_λ e = e. The bound caps
// the generator filtration for closed-form algebras (auto when < 0).
bool is_conformal_unit(const ConformalAlgebra& c, const ConfElement& e, int bound = -1);

// Solves the linear system (e_λ g)|_{λ=0} = g over unknown e of T-degree
// (and x-degree) at most degree_bound. Returns a solution or nullopt when
// the bounded system is infeasible.
std::optional<ConfElement> find_left_unit(const ConformalAlgebra& c, int degree_bound);

// One term of a coefficient-algebra product: power of t and an element.
struct CoeffTerm {
    long power = 0;
    ConfElement elem;
};

// (t^m x a)(t^n x b) = sum_s C(m,s) t^{m+n-s} x (a_(s) b).
std::vector<CoeffTerm> coeff_product(const ConformalAlgebra& c, long m, const ConfElement& a, long n, const ConfElement& b);

struct MaterializedDialgebra {
    Dialgebra dialgebra;
    std::vector<std::string> labels;
    std::vector<ConfElement> elements;
};

// Materializes C^(0) on the filtration of T-degree <= t_bound (and
// x-degree <= x_bound for closed-form algebras). Throws, naming the
// violating pair, when the filtration is not closed under the products.
MaterializedDialgebra zero_functor(const ConformalAlgebra& c, int t_bound, int x_bound = 0);

}  // namespace diaconf
