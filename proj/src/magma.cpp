#include "diaconf/magma.hpp"

#include <algorithm>
#include <sstream>

namespace diaconf {

Tree leaf(int var) {
    auto n = std::make_shared<TreeNode>();
    n->var = var;
    return n;
}

Tree node(const Tree& l, const Tree& r, Color c) {
    auto n = std::make_shared<TreeNode>();
    n->color = c;
    n->left = l;
    n->right = r;
    return n;
}

int tree_degree(const Tree& t) {
    return t->is_leaf() ? 1 : tree_degree(t->left) + tree_degree(t->right);
}

bool tree_is_colored(const Tree& t) {
    if (t->is_leaf()) return true;
    return t->color != Color::None && tree_is_colored(t->left) && tree_is_colored(t->right);
}

int tree_compare(const Tree& a, const Tree& b) {
    if (a->is_leaf() != b->is_leaf()) return a->is_leaf() ? -1 : 1;
    if (a->is_leaf()) return a->var < b->var ? -1 : (a->var > b->var ? 1 : 0);
    if (int c = tree_compare(a->left, b->left)) return c;
    if (int c = tree_compare(a->right, b->right)) return c;
    int ca = static_cast<int>(a->color), cb = static_cast<int>(b->color);
    return ca < cb ? -1 : (ca > cb ? 1 : 0);
}

std::string tree_str(const Tree& t) {
    if (t->is_leaf()) return "x" + std::to_string(t->var);
    std::string op = t->color == Color::None ? " " : (t->color == Color::Vdash ? " |> " : " <| ");
    return "(" + tree_str(t->left) + op + tree_str(t->right) + ")";
}

namespace {

struct TreeParser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw input_error("tree parse error at position " + std::to_string(i) + " in \"" + s + "\": " + what);
    }

    Tree parse() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            Tree l = parse();
            skip_ws();
            Color c = Color::None;
            if (i + 1 < s.size() && s[i] == '|' && s[i + 1] == '>') {
                c = Color::Vdash;
                i += 2;
            } else if (i + 1 < s.size() && s[i] == '<' && s[i + 1] == '|') {
                c = Color::Dashv;
                i += 2;
            } else if (i < s.size() && s[i] == '*') {
                ++i;
            }
            Tree r = parse();
            skip_ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return node(l, r, c);
        }
        if (s[i] == 'x') {
            ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected variable index after 'x'");
            return leaf(std::stoi(s.substr(start, i - start)));
        }
        fail("expected '(' or variable");
    }
};

}  // namespace

Tree parse_tree(const std::string& s) {
    TreeParser p{s};
    Tree t = p.parse();
    p.skip_ws();
    if (p.i != s.size()) p.fail("trailing input");
    return t;
}

Tree tree_relabel(const Tree& t, const std::vector<int>& sigma) {
    if (t->is_leaf()) return leaf(sigma.at(t->var - 1));
    return node(tree_relabel(t->left, sigma), tree_relabel(t->right, sigma), t->color);
}

Tree tree_strip_colors(const Tree& t) {
    if (t->is_leaf()) return t;
    return node(tree_strip_colors(t->left), tree_strip_colors(t->right), Color::None);
}

TreePoly TreePoly::mono(const Tree& t, const Rat& c) {
    TreePoly p;
    p.add(t, c);
    return p;
}

void TreePoly::add(const Tree& t, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TreePoly TreePoly::operator-() const {
    TreePoly out = *this;
    for (auto& [t, c] : out.terms_) c = -c;
    return out;
}

TreePoly& TreePoly::operator+=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

TreePoly& TreePoly::operator-=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

TreePoly& TreePoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

bool operator==(const TreePoly& a, const TreePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin(), jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
        if (tree_compare(it->first, jt->first) != 0 || it->second != jt->second) return false;
    return true;
}

int TreePoly::degree() const {
    if (terms_.empty()) return 0;
    int d = tree_degree(terms_.begin()->first);
    for (const auto& [t, c] : terms_)
        if (tree_degree(t) != d) throw input_error("mixed-degree tree polynomial");
    return d;
}

namespace {
void collect_vars(const Tree& t, std::vector<int>& count) {
    if (t->is_leaf()) {
        if (t->var >= 1 && t->var <= static_cast<int>(count.size())) ++count[t->var - 1];
        return;
    }
    collect_vars(t->left, count);
    collect_vars(t->right, count);
}
}  // namespace

bool TreePoly::is_polylinear() const {
    if (terms_.empty()) return true;
    int d = tree_degree(terms_.begin()->first);
    for (const auto& [t, c] : terms_) {
        if (tree_degree(t) != d) return false;
        std::vector<int> count(d, 0);
        collect_vars(t, count);
        for (int k : count)
            if (k != 1) return false;
    }
    return true;
}

bool TreePoly::is_colored() const {
    for (const auto& [t, c] : terms_)
        if (!tree_is_colored(t)) return false;
    return true;
}

std::string TreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) os << rat_str(a) << "*";
        os << tree_str(t);
    }
    return os.str();
}

TreePoly relabel(const TreePoly& p, const std::vector<int>& sigma) {
    TreePoly out;
    for (const auto& [t, c] : p.terms()) out.add(tree_relabel(t, sigma), c);
    return out;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

long multilinear_count(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return catalan(n - 1) * f;
}

namespace {

// Shapes with unlabeled leaves (var = 0), smaller left subtrees first.
std::vector<Tree> shapes(int n) {
    if (n == 1) return {leaf(0)};
    std::vector<Tree> out;
    for (int l = 1; l < n; ++l)
        for (const auto& a : shapes(l))
            for (const auto& b : shapes(n - l)) out.push_back(node(a, b));
    return out;
}

Tree assign_labels(const Tree& shape, const std::vector<int>& perm, int& pos) {
    if (shape->is_leaf()) return leaf(perm[pos++]);
    Tree l = assign_labels(shape->left, perm, pos);
    Tree r = assign_labels(shape->right, perm, pos);
    return node(l, r, shape->color);
}

// Colors internal nodes in preorder according to the bits of mask.
Tree assign_colors(const Tree& t, unsigned mask, int& bit) {
    if (t->is_leaf()) return t;
    Color c = (mask >> bit++) & 1u ? Color::Dashv : Color::Vdash;
    Tree l = assign_colors(t->left, mask, bit);
    Tree r = assign_colors(t->right, mask, bit);
    return node(l, r, c);
}

}  // namespace

MultilinearBasis MultilinearBasis::make(int degree, bool colored) {
    MultilinearBasis b;
    b.degree = degree;
    b.colored = colored;
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i + 1;
    for (const auto& shape : shapes(degree)) {
        std::vector<int> p = perm;
        do {
            int pos = 0;
            Tree labeled = assign_labels(shape, p, pos);
            if (!colored) {
                b.monomials.push_back(labeled);
            } else {
                unsigned count = 1u << (degree - 1);
                for (unsigned mask = 0; mask < count; ++mask) {
                    int bit = 0;
                    b.monomials.push_back(assign_colors(labeled, mask, bit));
                }
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], static_cast<int>(i));
    return b;
}

QVec MultilinearBasis::coords(const TreePoly& p) const {
    QVec v = QVec::Zero(size());
    for (const auto& [t, c] : p.terms()) {
        auto it = index.find(t);
        if (it == index.end()) throw input_error("monomial " + tree_str(t) + " is outside the degree-" + std::to_string(degree) + (colored ? " colored" : "") + " multilinear basis");
        v(it->second) = c;
    }
    return v;
}

}  // namespace diaconf
