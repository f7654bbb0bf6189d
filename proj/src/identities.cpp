#include "diaconf/identities.hpp"

#include <algorithm>
#include <map>

namespace diaconf {

namespace {

std::vector<int> leaf_vars(const Tree& t) {
    std::vector<int> out;
    auto walk = [&](auto&& self, const Tree& u) -> void {
        if (u->is_leaf()) {
            out.push_back(u->var);
            return;
        }
        self(self, u->left);
        self(self, u->right);
    };
    walk(walk, t);
    return out;
}

Tree relabel_by_position(const Tree& t, const std::vector<int>& labels, int& pos) {
    if (t->is_leaf()) return leaf(labels[pos++]);
    Tree l = relabel_by_position(t->left, labels, pos);
    Tree r = relabel_by_position(t->right, labels, pos);
    return node(l, r, t->color);
}

}  // namespace

TreePoly linearize(const TreePoly& f) {
    if (f.is_zero()) return f;

    // multidegree: variable index -> multiplicity, common to all monomials
    std::map<int, int> multidegree;
    bool first = true;
    for (const auto& [t, c] : f.terms()) {
        std::map<int, int> d;
        for (int v : leaf_vars(t)) ++d[v];
        if (first) {
            multidegree = d;
            first = false;
        } else if (d != multidegree) {
            throw input_error("linearize: input is not homogeneous");
        }
    }

    // fresh index block per original variable, in increasing variable order
    std::map<int, std::vector<int>> fresh;
    int next = 1;
    for (const auto& [v, mult] : multidegree) {
        auto& block = fresh[v];
        for (int i = 0; i < mult; ++i) block.push_back(next++);
    }

    TreePoly out;
    for (const auto& [t, c] : f.terms()) {
        std::vector<int> vars = leaf_vars(t);
        const int n = static_cast<int>(vars.size());
        // occurrences of each variable, in planar order
        std::map<int, std::vector<int>> occ;
        for (int i = 0; i < n; ++i) occ[vars[i]].push_back(i);

        // all assignments = product over variables of permutations of its block
        std::vector<int> labels(n);
        std::vector<std::pair<const std::vector<int>*, std::vector<int>>> perms;
        for (auto& [v, positions] : occ) perms.push_back({&positions, fresh[v]});
        auto emit = [&](auto&& self, std::size_t i) -> void {
            if (i == perms.size()) {
                int pos = 0;
                out.add(relabel_by_position(t, labels, pos), c);
                return;
            }
            auto& [positions, block] = perms[i];
            std::vector<int> b = block;
            std::sort(b.begin(), b.end());
            do {
                for (std::size_t j = 0; j < positions->size(); ++j) labels[(*positions)[j]] = b[j];
                self(self, i + 1);
            } while (std::next_permutation(b.begin(), b.end()));
        };
        emit(emit, 0);
    }
    return out;
}

namespace {

// Colors t around the leaf at planar position target (1-based); lo is the
// position of t's leftmost leaf, hi returns its rightmost.
Tree psi_color(const Tree& t, int lo, int& hi, int target) {
    if (t->is_leaf()) {
        hi = lo;
        return t;
    }
    int lhi = 0, rhi = 0;
    Tree l = psi_color(t->left, lo, lhi, target);
    Tree r = psi_color(t->right, lhi + 1, rhi, target);
    hi = rhi;
    return node(l, r, target > lhi ? Color::Vdash : Color::Dashv);
}

Tree psi_tree(const Tree& t, int var) {
    std::vector<int> vars = leaf_vars(t);
    int target = -1;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) target = static_cast<int>(i) + 1;
    if (target < 0) throw input_error("psi: monomial has no variable x" + std::to_string(var));
    int hi = 0;
    return psi_color(t, 1, hi, target);
}

}  // namespace

TreePoly psi(const TreePoly& f, int k) {
    if (!f.is_polylinear()) throw input_error("psi: input must be polylinear");
    if (f.is_zero()) return f;
    int n = f.degree();
    if (k < 1 || k > n) throw input_error("psi: k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    TreePoly out;
    for (const auto& [t, c] : f.terms()) out.add(psi_tree(t, k), c);
    return out;
}

std::vector<TreePoly> di_identities(const std::vector<TreePoly>& axioms) {
    std::vector<TreePoly> out;
    for (const auto& f : axioms)
        for (int k = 1; k <= f.degree(); ++k) out.push_back(psi(f, k));
    return out;
}

CenterDecomposition decompose_by_center(const TreePoly& g) {
    if (!g.is_polylinear()) throw input_error("decompose_by_center: input must be polylinear");
    CenterDecomposition d;
    if (g.is_zero()) return d;
    const int n = g.degree();
    d.parts.resize(n);
    for (const auto& [t, c] : g.terms()) {
        std::vector<int> centers;
        for (int p = 1; p <= n; ++p) {
            int hi = 0;
            if (tree_compare(psi_color(t, 1, hi, p), t) == 0) centers.push_back(p);
        }
        if (centers.size() == 1) {
            int var = leaf_vars(t)[centers[0] - 1];
            d.parts[var - 1].add(tree_strip_colors(t), c);
        } else {
            d.residual.add(t, c);
        }
    }
    return d;
}

void check_degree_guard(int n) {
    if (n < 1) throw input_error("degree must be positive");
    if (n > 8 || multilinear_count(n) > 1000000)
        throw input_error("degree " + std::to_string(n) + " exceeds the enumeration guard (" + (n <= 12 ? std::to_string(multilinear_count(n)) : std::string("> 10^9")) + " uncolored multilinear monomials, limit 10^6)");
}

namespace {

Tree substitute_var(const Tree& t, int var, const Tree& repl) {
    if (t->is_leaf()) return t->var == var ? repl : t;
    return node(substitute_var(t->left, var, repl), substitute_var(t->right, var, repl), t->color);
}

TreePoly substitute_var(const TreePoly& p, int var, const Tree& repl) {
    TreePoly out;
    for (const auto& [t, c] : p.terms()) out.add(substitute_var(t, var, repl), c);
    return out;
}

}  // namespace

Subspace consequence_space(const std::vector<TreePoly>& axioms, int n, bool colored) {
    check_degree_guard(n);
    const std::vector<Color> ops = colored ? std::vector<Color>{Color::Vdash, Color::Dashv} : std::vector<Color>{Color::None};

    std::vector<TreePoly> frontier;
    for (const auto& f : axioms) {
        if (f.is_zero()) continue;
        if (!f.is_polylinear()) throw input_error("consequence_space: axioms must be polylinear (linearize first)");
        if (f.is_colored() != colored && !f.is_zero() && f.degree() > 1)
            throw input_error("consequence_space: axiom coloring does not match the requested basis");
        if (f.degree() <= n) frontier.push_back(f);
    }

    std::vector<TreePoly> at_n;
    while (!frontier.empty()) {
        std::vector<TreePoly> next;
        for (const auto& g : frontier) {
            int d = g.degree();
            if (d == n) {
                at_n.push_back(g);
                continue;
            }
            for (Color op : ops) {
                for (int v = 1; v <= d; ++v) {
                    next.push_back(substitute_var(g, v, node(leaf(v), leaf(d + 1), op)));
                    next.push_back(substitute_var(g, v, node(leaf(d + 1), leaf(v), op)));
                }
                TreePoly lmul, rmul;
                for (const auto& [t, c] : g.terms()) {
                    rmul.add(node(t, leaf(d + 1), op), c);
                    lmul.add(node(leaf(d + 1), t, op), c);
                }
                next.push_back(std::move(rmul));
                next.push_back(std::move(lmul));
            }
        }
        frontier = std::move(next);
    }

    MultilinearBasis basis = MultilinearBasis::make(n, colored);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<QVec> rows;
    for (const auto& g : at_n) {
        std::vector<int> sigma = perm;
        do {
            rows.push_back(basis.coords(relabel(g, sigma)));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    QMatrix m(rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
    return Subspace::span_rows(m);
}

namespace {

struct NormalForm {
    std::vector<int> word;
    int center = 0;  // 0-based index into word
};

// x o y = x |> y + y <| x, with |> keeping the right center and <| the left.
std::vector<NormalForm> expand_circle(const Tree& t) {
    if (t->is_leaf()) return {{{t->var}, 0}};
    auto ls = expand_circle(t->left);
    auto rs = expand_circle(t->right);
    std::vector<NormalForm> out;
    out.reserve(2 * ls.size() * rs.size());
    for (const auto& a : ls)
        for (const auto& b : rs) {
            NormalForm keep;
            keep.word = a.word;
            keep.word.insert(keep.word.end(), b.word.begin(), b.word.end());
            keep.center = static_cast<int>(a.word.size()) + b.center;
            out.push_back(std::move(keep));
            NormalForm swap;
            swap.word = b.word;
            swap.word.insert(swap.word.end(), a.word.begin(), a.word.end());
            swap.center = b.center;
            out.push_back(std::move(swap));
        }
    return out;
}

// Lexicographic rank of a permutation of 1..n.
long perm_rank(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (word[j] < word[i]) ++smaller;
        long f = 1;
        for (int k = 2; k <= n - 1 - i; ++k) f *= k;
        rank += smaller * f;
    }
    return rank;
}

}  // namespace

QMatrix expansion_matrix(int n) {
    check_degree_guard(n);
    MultilinearBasis basis = MultilinearBasis::make(n, false);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    QMatrix m(basis.size(), n * fact);
    m.setZero();
    for (int row = 0; row < basis.size(); ++row) {
        for (const auto& nf : expand_circle(basis.monomials[row])) {
            long col = perm_rank(nf.word) * n + nf.center;
            m(row, col) += 1;
        }
    }
    return m;
}

SIdentityReport s_identity_space(int n, bool force) {
    if (n > 4 && !force)
        throw input_error("s-identity search at degree " + std::to_string(n) + " exceeds the desk-scale guard (limit 4); rerun with --force to lift it");
    check_degree_guard(n);

    SIdentityReport rep;
    rep.degree = n;
    QMatrix m = expansion_matrix(n);
    Subspace kernel = Subspace::span_rows(nullspace_basis(m.transpose()));
    std::vector<TreePoly> axioms;
    for (const auto& f : di_jordan_axioms()) axioms.push_back(linearize(f));
    Subspace cons = consequence_space(axioms, n, false);

    rep.special_identity_dim = kernel.dim();
    rep.consequence_dim = cons.dim();
    rep.meet_dim = kernel.intersect(cons).dim();
    rep.consequences_are_special = kernel.contains(cons);
    rep.no_s_identities = cons.contains(kernel);
    return rep;
}

namespace {
Tree mk(const char* s) { return parse_tree(s); }
}  // namespace

std::vector<TreePoly> associative_axioms() {
    TreePoly f = TreePoly::mono(mk("((x1 x2) x3)")) - TreePoly::mono(mk("(x1 (x2 x3))"));
    return {f};
}

std::vector<TreePoly> lie_axioms() {
    TreePoly anti = TreePoly::mono(mk("(x1 x2)")) + TreePoly::mono(mk("(x2 x1)"));
    // Jacobi in left-Leibniz form: x1(x2 x3) = (x1 x2)x3 + x2(x1 x3)
    TreePoly jac = TreePoly::mono(mk("(x1 (x2 x3))")) - TreePoly::mono(mk("((x1 x2) x3)")) - TreePoly::mono(mk("(x2 (x1 x3))"));
    return {anti, jac};
}

std::vector<TreePoly> jordan_axioms() {
    TreePoly comm = TreePoly::mono(mk("(x1 x2)")) - TreePoly::mono(mk("(x2 x1)"));
    // (x1^2 x2) x1 = x1^2 (x2 x1)
    TreePoly jordan = TreePoly::mono(mk("(((x1 x1) x2) x1)")) - TreePoly::mono(mk("((x1 x1) (x2 x1))"));
    return {comm, jordan};
}

std::vector<TreePoly> diassociative_axioms() {
    TreePoly z1 = TreePoly::mono(mk("(x1 <| (x2 |> x3))")) - TreePoly::mono(mk("(x1 <| (x2 <| x3))"));
    TreePoly z2 = TreePoly::mono(mk("((x1 <| x2) |> x3)")) - TreePoly::mono(mk("((x1 |> x2) |> x3)"));
    std::vector<TreePoly> out{z1, z2};
    for (auto& f : di_identities(associative_axioms())) out.push_back(std::move(f));
    return out;
}

std::vector<TreePoly> di_jordan_axioms() {
    // [x1,x2] x3 = 0
    TreePoly right_comm = TreePoly::mono(mk("((x1 x2) x3)")) - TreePoly::mono(mk("((x2 x1) x3)"));
    // (x1^2, x2, x3) = 2 (x1, x2, x1 x3)
    TreePoly assoc2 = TreePoly::mono(mk("(((x1 x1) x2) x3)")) - TreePoly::mono(mk("((x1 x1) (x2 x3))")) -
                      Rat(2) * (TreePoly::mono(mk("((x1 x2) (x1 x3))")) - TreePoly::mono(mk("(x1 (x2 (x1 x3)))")));
    // x1 (x1^2 x2) = x1^2 (x1 x2)
    TreePoly jordan3 = TreePoly::mono(mk("(x1 ((x1 x1) x2))")) - TreePoly::mono(mk("((x1 x1) (x1 x2))"));
    return {right_comm, assoc2, jordan3};
}

}  // namespace diaconf
