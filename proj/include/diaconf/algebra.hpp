#pragma once

#include <string>
#include <vector>

#include "diaconf/linalg.hpp"
#include "diaconf/magma.hpp"

namespace diaconf {

// Outcome of an identity check, with a witness when it fails.
struct CheckResult {
    bool ok = true;
    std::string witness;
    explicit operator bool() const { return ok; }
};

// Finite-dimensional algebra with one bilinear product, given by exact
// structure constants. Zero products are not materialized.
class Algebra {
  public:
    Algebra() = default;
    explicit Algebra(std::vector<std::string> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    int basis_index(const std::string& name) const;  // -1 when absent

    void set_product(int i, int j, QVec v);
    void add_structure_constant(int i, int j, int k, const Rat& c);
    // Stored product of basis elements; nullptr encodes zero.
    const QVec* product_ptr(int i, int j) const;
    QVec product_basis(int i, int j) const;
    QVec product(const QVec& x, const QVec& y) const;
    QMatrix left_mul(const QVec& x) const;
    QMatrix right_mul(const QVec& x) const;

    friend bool operator==(const Algebra& a, const Algebra& b);

  private:
    std::vector<std::string> basis_;
    std::vector<QVec> table_;  // row-major (i * dim + j); empty = zero
};

enum class Op { Vdash, Dashv };  // |- and -| products of a dialgebra

// Two bilinear products on a common basis.
class Dialgebra {
  public:
    Dialgebra() = default;
    explicit Dialgebra(std::vector<std::string> basis);

    int dim() const { return vdash_.dim(); }
    const std::vector<std::string>& basis() const { return vdash_.basis(); }

    Algebra& table(Op op) { return op == Op::Vdash ? vdash_ : dashv_; }
    const Algebra& table(Op op) const { return op == Op::Vdash ? vdash_ : dashv_; }
    QVec product(Op op, const QVec& x, const QVec& y) const { return table(op).product(x, y); }
    QVec product_basis(Op op, int i, int j) const { return table(op).product_basis(i, j); }

    friend bool operator==(const Dialgebra& a, const Dialgebra& b) {
        return a.vdash_ == b.vdash_ && a.dashv_ == b.dashv_;
    }

  private:
    Algebra vdash_, dashv_;
};

// A single-product algebra seen as the dialgebra with |- = -| = product.
Dialgebra as_dialgebra(const Algebra& a);
// Leibniz bracket to dialgebra: x |- y = [x,y], x -| y = -[y,x].
Dialgebra leibniz_as_dialgebra(const Algebra& l);
// Di-Jordan product to dialgebra: x |- y = x o y, x -| y = y o x.
Dialgebra di_jordan_as_dialgebra(const Algebra& j);

// --- identity checks on basis tuples -------------------------------------

CheckResult is_associative(const Algebra& a);
CheckResult is_commutative(const Algebra& a);
CheckResult is_anticommutative(const Algebra& a);
CheckResult is_lie(const Algebra& a);
CheckResult is_leibniz(const Algebra& a);
// Non-multilinear identities (Jordan, di-Jordan) are checked on generic
// elements with symbolic scalar coordinates, which is exact over Q.
CheckResult is_jordan(const Algebra& a);
CheckResult is_di_jordan(const Algebra& a);

// x -| (y |- z) = x -| (y -| z), (x -| y) |- z = (x |- y) |- z.
CheckResult check_zero_identities(const Dialgebra& d);
CheckResult is_diassociative(const Dialgebra& d);

// Evaluates a polylinear (di)algebra identity on all basis tuples.
CheckResult satisfies_identity(const Algebra& a, const TreePoly& f);
CheckResult satisfies_identity(const Dialgebra& d, const TreePoly& f);

// --- D0, bar, hat ----------------------------------------------------------

// span{ a |- b - a -| b }; requires the 0-identities (the ideal property
// is asserted on basis pairs).
Subspace d_zero_ideal(const Dialgebra& d);

struct BarQuotient {
    Algebra algebra;
    QMatrix projection;               // dim(bar) x dim(D)
    std::vector<int> representatives; // basis indices of D representing bar
};

BarQuotient bar_quotient(const Dialgebra& d);

// Split null extension bar D + D with (x̄+a)(ȳ+b) = x̄ȳ + x|-b + a-|y and
// D D = 0. Basis order: bar representatives, then D.
Algebra hat_extension(const Dialgebra& d);

// Theorem-2.2-style membership: 0-identities hold and hat D satisfies
// every axiom (axioms must be polylinear and uncolored).
CheckResult is_di_variety(const Dialgebra& d, const std::vector<TreePoly>& axioms);

// [a,b] = a |- b - b -| a  /  a o b = a |- b + b -| a.
Algebra minus_product(const Dialgebra& d);
Algebra plus_product(const Dialgebra& d);

QMatrix left_multiplication(const Algebra& a, const QVec& x);
QMatrix left_multiplication(const Dialgebra& d, Op op, const QVec& x);

// --- series and Engel -------------------------------------------------------

enum class SeriesKind { LowerCentral, Derived, Penico };

struct SeriesReport {
    SeriesKind kind = SeriesKind::LowerCentral;
    std::vector<Subspace> terms;  // X1 = whole algebra, then the chain
    int stabilized_at = 0;        // first index k with X_{k+1} = X_k
    bool reaches_zero = false;
};

SeriesReport series(const Algebra& a, SeriesKind kind);
// Penico is defined for single-product algebras only.
SeriesReport series(const Dialgebra& d, SeriesKind kind);

bool is_nilpotent_matrix(const QMatrix& m);

struct EngelReport {
    bool all_left_mults_nilpotent = false;
    std::string non_nilpotent_witness;
    bool nilpotent = false;
    bool engel_consistent = false;  // not (premise true and conclusion false)
    SeriesReport lcs;
};

// Engel data for a Leibniz algebra: nilpotency of the operators [x,.]
// for basis x against nilpotency of the algebra itself.
EngelReport engel_verdict(const Algebra& l);

}  // namespace diaconf
