#pragma once

#include <string>
#include <vector>

#include "diaconf/linalg.hpp"
#include "diaconf/magma.hpp"

namespace diaconf {

// Full char-0 polarization of a homogeneous identity: every repeated
// variable is replaced by a sum of fresh ones and the polylinear
// component is extracted. Variables are renumbered to x1..xn. The result
// is equivalent to the input over Q; substituting the original variables
// back recovers it up to the product of the multiplicity factorials.
TreePoly linearize(const TreePoly& f);

// The translation map on polylinear polynomials: recolors every monomial
// around the leaf labeled x_k. A node is colored |> when that leaf lies
// strictly to the right of the node's left subtree, <| otherwise.
TreePoly psi(const TreePoly& f, int k);

// {psi_k(f) : f in axioms, k = 1..deg f}.
std::vector<TreePoly> di_identities(const std::vector<TreePoly>& axioms);

struct CenterDecomposition {
    std::vector<TreePoly> parts;  // parts[k-1] = f_k with psi_k(f_k) summing to g
    TreePoly residual;            // monomials whose coloring matches no center
};

// Inverts psi on a colored polynomial: each monomial's coloring determines
// a unique center leaf when the monomial is a psi-image.
CenterDecomposition decompose_by_center(const TreePoly& g);

// Span of all degree-n multilinear consequences of the axioms inside the
// multilinear basis (colored when the axioms are): one-variable
// substitutions x -> x*new / new*x, outer multiplications by a new
// variable, iterated up to degree n, then symmetrized over S_n.
// Axioms of degree > n are ignored.
Subspace consequence_space(const std::vector<TreePoly>& axioms, int n, bool colored);

// Guard shared by the enumerative operations.
void check_degree_guard(int n);

// Matrix of the expansion of uncolored multilinear monomials through
// x o y = x |> y + y <| x into the free diassociative multilinear basis
// of n * n! normal forms (word, center position). Entries are
// nonnegative integers; every row sums to 2^(n-1).
QMatrix expansion_matrix(int n);

struct SIdentityReport {
    int degree = 0;
    int special_identity_dim = 0;    // dim K, kernel of the expansion map
    int consequence_dim = 0;         // dim C, di-Jordan consequences
    int meet_dim = 0;                // dim (K intersect C)
    bool consequences_are_special = false;  // C subset of K, a sanity cross-check
    bool no_s_identities = false;           // K subset of C
};

// Desk-scale s-identity search for di-Jordan algebras at degree n.
// force lifts the default n <= 4 guard.
SIdentityReport s_identity_space(int n, bool force = false);

// Uncolored axiom sets for the varieties handled by the translation and
// membership machinery. Associativity and Lie are polylinear; Jordan and
// di-Jordan are returned raw (linearize before use as polylinear input).
std::vector<TreePoly> associative_axioms();
std::vector<TreePoly> lie_axioms();
std::vector<TreePoly> jordan_axioms();
std::vector<TreePoly> di_jordan_axioms();

// Colored defining identities of diassociative algebras: the two
// 0-identities together with the translations of associativity.
std::vector<TreePoly> diassociative_axioms();

}  // namespace diaconf
