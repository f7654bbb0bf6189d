#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diaconf/linalg.hpp"
#include "diaconf/rat.hpp"

namespace diaconf {

// Color of an internal node of a dialgebra monomial.
enum class Color : int { None = 0, Vdash = 1, Dashv = 2 };

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

// Planar binary tree: leaves carry 1-based variable indices, internal
// nodes an optional color. Immutable, shared structurally.
struct TreeNode {
    int var = 0;
    Color color = Color::None;
    Tree left, right;
    bool is_leaf() const { return !left; }
};

Tree leaf(int var);
Tree node(const Tree& l, const Tree& r, Color c = Color::None);

int tree_degree(const Tree& t);
bool tree_is_colored(const Tree& t);
// Total order: leaves before nodes, then by variable / children / color.
int tree_compare(const Tree& a, const Tree& b);
// "(x1 (x2 x3))"; colored nodes print their operation: "(x1 |> x2)".
std::string tree_str(const Tree& t);
Tree parse_tree(const std::string& s);

// Applies sigma to variable labels: i -> sigma[i-1].
Tree tree_relabel(const Tree& t, const std::vector<int>& sigma);
Tree tree_strip_colors(const Tree& t);

struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const { return tree_compare(a, b) < 0; }
};

// Q-linear combination of tree monomials. No zero coefficients stored.
class TreePoly {
  public:
    TreePoly() = default;
    static TreePoly mono(const Tree& t, const Rat& c = Rat(1));

    const std::map<Tree, Rat, TreeLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Tree& t, const Rat& c);

    TreePoly operator-() const;
    TreePoly& operator+=(const TreePoly& o);
    TreePoly& operator-=(const TreePoly& o);
    friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
    friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
    TreePoly& operator*=(const Rat& c);
    friend TreePoly operator*(const Rat& c, TreePoly p) { return p *= c; }
    friend bool operator==(const TreePoly& a, const TreePoly& b);

    // Degree of the monomials; requires all terms to agree (throws otherwise).
    int degree() const;
    // Every monomial has the same degree n and uses each of x1..xn once.
    bool is_polylinear() const;
    bool is_colored() const;

    std::string str() const;

  private:
    std::map<Tree, Rat, TreeLess> terms_;
};

TreePoly relabel(const TreePoly& p, const std::vector<int>& sigma);

// Fixed enumeration of the degree-n multilinear monomial basis:
// shapes in recursive order (left subtree size ascending), variable
// assignments in lexicographic order, colorings in preorder binary order.
struct MultilinearBasis {
    int degree = 0;
    bool colored = false;
    std::vector<Tree> monomials;
    std::map<Tree, int, TreeLess> index;

    static MultilinearBasis make(int degree, bool colored);
    QVec coords(const TreePoly& p) const;
    int size() const { return static_cast<int>(monomials.size()); }
};

// Number of uncolored multilinear monomials: Catalan(n-1) * n!.
long multilinear_count(int n);
long catalan(int n);

// Evaluates a monomial in any structure providing a (colored) product.
template <class E, class Prod>
E eval_tree(const Tree& t, const std::vector<E>& vars, const Prod& prod) {
    if (t->is_leaf()) return vars[t->var - 1];
    return prod(t->color, eval_tree(t->left, vars, prod), eval_tree(t->right, vars, prod));
}

// Sum of c * eval(monomial); E must support E+E and Rat*E via the callables.
template <class E, class Prod, class Axpy>
void eval_poly(const TreePoly& p, const std::vector<E>& vars, const Prod& prod, const Axpy& axpy) {
    for (const auto& [t, c] : p.terms()) axpy(c, eval_tree(t, vars, prod));
}

}  // namespace diaconf
