#include "diaconf/algebra.hpp"

#include <map>
#include <sstream>

namespace diaconf {

Algebra::Algebra(std::vector<std::string> basis) : basis_(std::move(basis)) {
    table_.resize(basis_.size() * basis_.size());
}

int Algebra::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == name) return static_cast<int>(i);
    return -1;
}

void Algebra::set_product(int i, int j, QVec v) {
    if (v.size() != dim()) throw input_error("structure constant vector has wrong dimension");
    table_[i * dim() + j] = v.isZero() ? QVec() : std::move(v);
}

void Algebra::add_structure_constant(int i, int j, int k, const Rat& c) {
    QVec& v = table_[i * dim() + j];
    if (v.size() == 0) v = QVec::Zero(dim());
    v(k) += c;
    if (v.isZero()) v = QVec();
}

const QVec* Algebra::product_ptr(int i, int j) const {
    const QVec& v = table_[i * dim() + j];
    return v.size() == 0 ? nullptr : &v;
}

QVec Algebra::product_basis(int i, int j) const {
    const QVec* p = product_ptr(i, j);
    return p ? *p : QVec(QVec::Zero(dim()));
}

QVec Algebra::product(const QVec& x, const QVec& y) const {
    QVec out = QVec::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x(i) == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y(j) == 0) continue;
            const QVec* p = product_ptr(i, j);
            if (!p) continue;
            Rat c = x(i) * y(j);
            for (int k = 0; k < dim(); ++k)
                if ((*p)(k) != 0) out(k) += c * (*p)(k);
        }
    }
    return out;
}

QMatrix Algebra::left_mul(const QVec& x) const {
    QMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.col(j) = product(x, unit_vec(dim(), j));
    return m;
}

QMatrix Algebra::right_mul(const QVec& x) const {
    QMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.col(j) = product(unit_vec(dim(), j), x);
    return m;
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (a.basis_ != b.basis_) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (a.product_basis(i, j) != b.product_basis(i, j)) return false;
    return true;
}

Dialgebra::Dialgebra(std::vector<std::string> basis) : vdash_(basis), dashv_(std::move(basis)) {}

Dialgebra as_dialgebra(const Algebra& a) {
    Dialgebra d(a.basis());
    d.table(Op::Vdash) = a;
    d.table(Op::Dashv) = a;
    return d;
}

Dialgebra leibniz_as_dialgebra(const Algebra& l) {
    Dialgebra d(l.basis());
    d.table(Op::Vdash) = l;
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j) d.table(Op::Dashv).set_product(i, j, -l.product_basis(j, i));
    return d;
}

Dialgebra di_jordan_as_dialgebra(const Algebra& j) {
    Dialgebra d(j.basis());
    d.table(Op::Vdash) = j;
    for (int a = 0; a < j.dim(); ++a)
        for (int b = 0; b < j.dim(); ++b) d.table(Op::Dashv).set_product(a, b, j.product_basis(b, a));
    return d;
}

namespace {

std::string tuple_witness(const std::vector<std::string>& basis, std::initializer_list<int> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int i : idx) {
        if (!first) os << ", ";
        os << basis[i];
        first = false;
    }
    os << ")";
    return os.str();
}

// ---- symbolic scalar polynomials for non-multilinear identities ----------

// Sparse polynomial over Q in a dynamic number of scalar indeterminates;
// just enough arithmetic for substituting generic elements into identities.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    static ScalarPoly variable(int i, int nvars) {
        ScalarPoly p;
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }
    static ScalarPoly constant(const Rat& c, int nvars) {
        ScalarPoly p;
        if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    bool is_zero() const { return terms_.empty(); }
    ScalarPoly& operator+=(const ScalarPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    ScalarPoly& operator-=(const ScalarPoly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add(e, ca * cb);
            }
        return out;
    }
    ScalarPoly& operator*=(const Rat& c) {
        if (c == 0) terms_.clear();
        else
            for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

  private:
    void add(const std::vector<int>& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<std::vector<int>, Rat> terms_;
};

using SPVec = std::vector<ScalarPoly>;

SPVec sp_zero(int dim) { return SPVec(dim); }

SPVec sp_generic(int dim) {
    SPVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = ScalarPoly::variable(i, dim);
    return v;
}

SPVec sp_basis(int dim, int i, int nvars) {
    SPVec v(dim);
    v[i] = ScalarPoly::constant(Rat(1), nvars);
    return v;
}

SPVec sp_product(const Algebra& a, const SPVec& x, const SPVec& y) {
    SPVec out = sp_zero(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < a.dim(); ++j) {
            if (y[j].is_zero()) continue;
            const QVec* p = a.product_ptr(i, j);
            if (!p) continue;
            ScalarPoly prod = x[i] * y[j];
            for (int k = 0; k < a.dim(); ++k) {
                if ((*p)(k) == 0) continue;
                ScalarPoly term = prod;
                term *= (*p)(k);
                out[k] += term;
            }
        }
    }
    return out;
}

bool sp_is_zero(const SPVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

SPVec& sp_sub(SPVec& a, const SPVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

CheckResult is_associative(const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                QVec lhs = a.product(a.product_basis(i, j), unit_vec(a.dim(), k));
                QVec rhs = a.product(unit_vec(a.dim(), i), a.product_basis(j, k));
                if (lhs != rhs) return {false, "associativity fails at " + tuple_witness(a.basis(), {i, j, k})};
            }
    return {};
}

CheckResult is_commutative(const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.product_basis(i, j) != a.product_basis(j, i))
                return {false, "commutativity fails at " + tuple_witness(a.basis(), {i, j})};
    return {};
}

CheckResult is_anticommutative(const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i) {
        if (!a.product_basis(i, i).isZero()) return {false, "x x != 0 at " + tuple_witness(a.basis(), {i})};
        for (int j = i + 1; j < a.dim(); ++j)
            if (QVec(a.product_basis(i, j) + a.product_basis(j, i)).isZero() == false)
                return {false, "anticommutativity fails at " + tuple_witness(a.basis(), {i, j})};
    }
    return {};
}

CheckResult is_lie(const Algebra& a) {
    if (auto r = is_anticommutative(a); !r) return r;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                QVec s = a.product(a.product_basis(i, j), unit_vec(a.dim(), k));
                s += a.product(a.product_basis(j, k), unit_vec(a.dim(), i));
                s += a.product(a.product_basis(k, i), unit_vec(a.dim(), j));
                if (!s.isZero()) return {false, "Jacobi fails at " + tuple_witness(a.basis(), {i, j, k})};
            }
    return {};
}

CheckResult is_leibniz(const Algebra& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k) {
                QVec lhs = a.product(unit_vec(a.dim(), i), a.product_basis(j, k));
                QVec rhs = a.product(a.product_basis(i, j), unit_vec(a.dim(), k));
                rhs += a.product(unit_vec(a.dim(), j), a.product_basis(i, k));
                if (lhs != rhs) return {false, "Leibniz identity fails at " + tuple_witness(a.basis(), {i, j, k})};
            }
    return {};
}

CheckResult is_jordan(const Algebra& a) {
    if (auto r = is_commutative(a); !r) return r;
    const int n = a.dim();
    SPVec x = sp_generic(n);
    SPVec xx = sp_product(a, x, x);
    for (int j = 0; j < n; ++j) {
        SPVec y = sp_basis(n, j, n);
        // (x^2 y) x = x^2 (y x)
        SPVec lhs = sp_product(a, sp_product(a, xx, y), x);
        SPVec rhs = sp_product(a, xx, sp_product(a, y, x));
        if (!sp_is_zero(sp_sub(lhs, rhs)))
            return {false, "Jordan identity fails with generic x and y = " + a.basis()[j]};
    }
    return {};
}

CheckResult is_di_jordan(const Algebra& a) {
    const int n = a.dim();
    // [x1,x2] x3 = 0 is multilinear
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QVec comm = a.product_basis(i, j) - a.product_basis(j, i);
            if (comm.isZero()) continue;
            for (int k = 0; k < n; ++k)
                if (!a.product(comm, unit_vec(n, k)).isZero())
                    return {false, "[x,y]z = 0 fails at " + tuple_witness(a.basis(), {i, j, k})};
        }
    SPVec x = sp_generic(n);
    SPVec xx = sp_product(a, x, x);
    // (x^2, y, z) = 2 (x, y, x z) with generic x
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            SPVec y = sp_basis(n, j, n), z = sp_basis(n, k, n);
            SPVec yz = sp_product(a, y, z);
            SPVec xz = sp_product(a, x, z);
            SPVec lhs = sp_product(a, sp_product(a, xx, y), z);
            sp_sub(lhs, sp_product(a, xx, yz));
            SPVec rhs = sp_product(a, sp_product(a, x, y), xz);
            sp_sub(rhs, sp_product(a, x, sp_product(a, y, xz)));
            for (auto& p : rhs) p *= Rat(2);
            if (!sp_is_zero(sp_sub(lhs, rhs)))
                return {false, "(x^2,y,z) = 2(x,y,xz) fails with generic x at " + tuple_witness(a.basis(), {j, k})};
        }
    // x (x^2 y) = x^2 (x y) with generic x
    for (int j = 0; j < n; ++j) {
        SPVec y = sp_basis(n, j, n);
        SPVec lhs = sp_product(a, x, sp_product(a, xx, y));
        SPVec rhs = sp_product(a, xx, sp_product(a, x, y));
        if (!sp_is_zero(sp_sub(lhs, rhs)))
            return {false, "x(x^2 y) = x^2(x y) fails with generic x and y = " + a.basis()[j]};
    }
    return {};
}

CheckResult check_zero_identities(const Dialgebra& d) {
    const int n = d.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                QVec a = d.product(Op::Dashv, unit_vec(n, i), d.product_basis(Op::Vdash, j, k));
                QVec b = d.product(Op::Dashv, unit_vec(n, i), d.product_basis(Op::Dashv, j, k));
                if (a != b) return {false, "x -| (y |- z) = x -| (y -| z) fails at " + tuple_witness(d.basis(), {i, j, k})};
                QVec c = d.product(Op::Vdash, d.product_basis(Op::Dashv, i, j), unit_vec(n, k));
                QVec e = d.product(Op::Vdash, d.product_basis(Op::Vdash, i, j), unit_vec(n, k));
                if (c != e) return {false, "(x -| y) |- z = (x |- y) |- z fails at " + tuple_witness(d.basis(), {i, j, k})};
            }
    return {};
}

CheckResult is_diassociative(const Dialgebra& d) {
    if (auto r = check_zero_identities(d); !r) return r;
    const int n = d.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                QVec l1 = d.product(Op::Vdash, unit_vec(n, i), d.product_basis(Op::Vdash, j, k));
                QVec r1 = d.product(Op::Vdash, d.product_basis(Op::Vdash, i, j), unit_vec(n, k));
                if (l1 != r1) return {false, "|- associativity fails at " + tuple_witness(d.basis(), {i, j, k})};
                QVec l2 = d.product(Op::Dashv, unit_vec(n, i), d.product_basis(Op::Dashv, j, k));
                QVec r2 = d.product(Op::Dashv, d.product_basis(Op::Dashv, i, j), unit_vec(n, k));
                if (l2 != r2) return {false, "-| associativity fails at " + tuple_witness(d.basis(), {i, j, k})};
                QVec l3 = d.product(Op::Vdash, unit_vec(n, i), d.product_basis(Op::Dashv, j, k));
                QVec r3 = d.product(Op::Dashv, d.product_basis(Op::Vdash, i, j), unit_vec(n, k));
                if (l3 != r3) return {false, "x |- (y -| z) = (x |- y) -| z fails at " + tuple_witness(d.basis(), {i, j, k})};
            }
    return {};
}

namespace {

template <class ProdFn>
CheckResult satisfies_polylinear(const std::vector<std::string>& basis, int dim, const TreePoly& f, const ProdFn& prod) {
    if (!f.is_polylinear()) throw input_error("identity is not polylinear; linearize it first");
    if (f.is_zero()) return {};
    const int deg = f.degree();
    std::vector<int> idx(deg, 0);
    std::vector<QVec> vars(deg);
    while (true) {
        for (int i = 0; i < deg; ++i) vars[i] = unit_vec(dim, idx[i]);
        QVec acc = QVec::Zero(dim);
        eval_poly(f, vars, prod, [&](const Rat& c, const QVec& v) { acc += c * v; });
        if (!acc.isZero()) {
            std::ostringstream os;
            os << "identity " << f.str() << " fails at (";
            for (int i = 0; i < deg; ++i) os << (i ? ", " : "") << basis[idx[i]];
            os << ")";
            return {false, os.str()};
        }
        int p = deg - 1;
        while (p >= 0 && idx[p] == dim - 1) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
    return {};
}

}  // namespace

CheckResult satisfies_identity(const Algebra& a, const TreePoly& f) {
    return satisfies_polylinear(a.basis(), a.dim(), f, [&](Color c, const QVec& x, const QVec& y) {
        if (c != Color::None) throw input_error("colored identity evaluated in a single-product algebra");
        return a.product(x, y);
    });
}

CheckResult satisfies_identity(const Dialgebra& d, const TreePoly& f) {
    return satisfies_polylinear(d.basis(), d.dim(), f, [&](Color c, const QVec& x, const QVec& y) {
        if (c == Color::None) throw input_error("uncolored identity evaluated in a dialgebra");
        return d.product(c == Color::Vdash ? Op::Vdash : Op::Dashv, x, y);
    });
}

Subspace d_zero_ideal(const Dialgebra& d) {
    if (auto r = check_zero_identities(d); !r)
        throw input_error("D0 requires the 0-identities: " + r.witness);
    const int n = d.dim();
    QMatrix rows(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows.row(i * n + j) = (d.product_basis(Op::Vdash, i, j) - d.product_basis(Op::Dashv, i, j)).transpose();
    Subspace s = Subspace::span_rows(rows);
    // ideal property, asserted
    for (int b = 0; b < s.dim(); ++b) {
        QVec v = s.basis().row(b).transpose();
        for (int k = 0; k < n; ++k)
            for (Op op : {Op::Vdash, Op::Dashv}) {
                if (!s.contains(d.product(op, v, unit_vec(n, k))) || !s.contains(d.product(op, unit_vec(n, k), v)))
                    throw input_error("D0 is not an ideal (unexpected; 0-identities were verified)");
            }
    }
    return s;
}

BarQuotient bar_quotient(const Dialgebra& d) {
    Subspace d0 = d_zero_ideal(d);
    const int n = d.dim();

    std::vector<bool> is_pivot(n, false);
    {
        int col = 0;
        for (int i = 0; i < d0.dim(); ++i) {
            while (col < n && d0.basis()(i, col) == 0) ++col;
            is_pivot[col] = true;
        }
    }
    BarQuotient q;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) q.representatives.push_back(i);

    const int b = static_cast<int>(q.representatives.size());
    q.projection = QMatrix(b, n);
    for (int j = 0; j < n; ++j) {
        QVec r = d0.reduce(unit_vec(n, j));
        for (int i = 0; i < b; ++i) q.projection(i, j) = r(q.representatives[i]);
    }

    std::vector<std::string> names;
    for (int i : q.representatives) names.push_back(d.basis()[i] + "_bar");
    q.algebra = Algebra(names);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            q.algebra.set_product(i, j, q.projection * d.product_basis(Op::Vdash, q.representatives[i], q.representatives[j]));

    // representative independence: perturbing an argument by D0 must not
    // change the projected product
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            for (int t = 0; t < d0.dim(); ++t) {
                QVec dv = d0.basis().row(t).transpose();
                QVec ei = unit_vec(n, q.representatives[i]), ej = unit_vec(n, q.representatives[j]);
                QVec base = q.projection * d.product(Op::Vdash, ei, ej);
                if (q.projection * d.product(Op::Vdash, ei + dv, ej) != base ||
                    q.projection * d.product(Op::Vdash, ei, ej + dv) != base ||
                    q.projection * d.product(Op::Dashv, ei, ej) != base)
                    throw input_error("bar product is not well-defined (unexpected; 0-identities were verified)");
            }
    return q;
}

Algebra hat_extension(const Dialgebra& d) {
    BarQuotient q = bar_quotient(d);
    const int n = d.dim();
    const int b = q.algebra.dim();

    std::vector<std::string> names = q.algebra.basis();
    for (const auto& s : d.basis()) names.push_back(s);
    Algebra hat(names);

    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            QVec p = q.algebra.product_basis(i, j);
            QVec v = QVec::Zero(b + n);
            v.head(b) = p;
            hat.set_product(i, j, v);
        }
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < n; ++j) {
            // (x + D0) acting on b from the left: x |- b
            QVec v = QVec::Zero(b + n);
            v.tail(n) = d.product_basis(Op::Vdash, q.representatives[i], j);
            hat.set_product(i, b + j, v);
            // b acted on by (x + D0) from the right: b -| x
            QVec w = QVec::Zero(b + n);
            w.tail(n) = d.product_basis(Op::Dashv, j, q.representatives[i]);
            hat.set_product(b + j, i, w);
        }
    // D D = 0: nothing to set
    return hat;
}

CheckResult is_di_variety(const Dialgebra& d, const std::vector<TreePoly>& axioms) {
    for (const auto& f : axioms)
        if (!f.is_polylinear()) throw input_error("is_di_variety: axioms must be polylinear; linearize first");
    if (auto r = check_zero_identities(d); !r) return r;
    Algebra hat = hat_extension(d);
    for (const auto& f : axioms)
        if (auto r = satisfies_identity(hat, f); !r) return {false, "hat extension: " + r.witness};
    return {};
}

Algebra minus_product(const Dialgebra& d) {
    Algebra a(d.basis());
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j)
            a.set_product(i, j, d.product_basis(Op::Vdash, i, j) - d.product_basis(Op::Dashv, j, i));
    return a;
}

Algebra plus_product(const Dialgebra& d) {
    Algebra a(d.basis());
    for (int i = 0; i < d.dim(); ++i)
        for (int j = 0; j < d.dim(); ++j)
            a.set_product(i, j, d.product_basis(Op::Vdash, i, j) + d.product_basis(Op::Dashv, j, i));
    return a;
}

QMatrix left_multiplication(const Algebra& a, const QVec& x) { return a.left_mul(x); }

QMatrix left_multiplication(const Dialgebra& d, Op op, const QVec& x) { return d.table(op).left_mul(x); }

namespace {

SeriesReport run_series(int dim, const std::vector<BilinearMap>& products, SeriesKind kind) {
    SeriesReport rep;
    rep.kind = kind;
    Subspace cur = Subspace::full(dim);
    rep.terms.push_back(cur);
    while (true) {
        std::vector<QVec> rows;
        auto all_products = [&](const Subspace& u, const Subspace& v) {
            for (int i = 0; i < u.dim(); ++i)
                for (int j = 0; j < v.dim(); ++j)
                    for (const auto& p : products) rows.push_back(p(u.basis().row(i).transpose(), v.basis().row(j).transpose()));
        };
        if (kind == SeriesKind::LowerCentral) {
            all_products(cur, Subspace::full(dim));
            all_products(Subspace::full(dim), cur);
        } else if (kind == SeriesKind::Derived) {
            all_products(cur, cur);
        } else {  // Penico: P^2 + P^2 A
            all_products(cur, cur);
            QMatrix sq_rows(rows.size(), dim);
            for (std::size_t i = 0; i < rows.size(); ++i) sq_rows.row(i) = rows[i].transpose();
            Subspace sq = Subspace::span_rows(sq_rows);
            all_products(sq, Subspace::full(dim));
            for (int i = 0; i < sq.dim(); ++i) rows.push_back(sq.basis().row(i).transpose());
        }
        QMatrix m(rows.size(), dim);
        for (std::size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
        Subspace next = Subspace::span_rows(m);
        if (next == cur) {
            rep.stabilized_at = static_cast<int>(rep.terms.size());
            rep.reaches_zero = cur.is_zero();
            return rep;
        }
        rep.terms.push_back(next);
        cur = next;
    }
}

}  // namespace

SeriesReport series(const Algebra& a, SeriesKind kind) {
    std::vector<BilinearMap> prods{[&a](const QVec& x, const QVec& y) { return a.product(x, y); }};
    return run_series(a.dim(), prods, kind);
}

SeriesReport series(const Dialgebra& d, SeriesKind kind) {
    if (kind == SeriesKind::Penico) throw input_error("the Penico series is defined for single-product algebras");
    std::vector<BilinearMap> prods{
        [&d](const QVec& x, const QVec& y) { return d.product(Op::Vdash, x, y); },
        [&d](const QVec& x, const QVec& y) { return d.product(Op::Dashv, x, y); }};
    return run_series(d.dim(), prods, kind);
}

bool is_nilpotent_matrix(const QMatrix& m) {
    QMatrix p = m;
    for (Eigen::Index k = 1; k <= m.rows(); ++k) {
        if (p.isZero()) return true;
        p = p * m;
    }
    return p.isZero();
}

EngelReport engel_verdict(const Algebra& l) {
    if (auto r = is_leibniz(l); !r) throw input_error("engel_verdict requires a Leibniz algebra: " + r.witness);
    EngelReport rep;
    rep.all_left_mults_nilpotent = true;
    for (int i = 0; i < l.dim(); ++i) {
        if (!is_nilpotent_matrix(l.left_mul(unit_vec(l.dim(), i)))) {
            rep.all_left_mults_nilpotent = false;
            rep.non_nilpotent_witness = "[" + l.basis()[i] + ", -] is not nilpotent";
            break;
        }
    }
    rep.lcs = series(l, SeriesKind::LowerCentral);
    rep.nilpotent = rep.lcs.reaches_zero;
    rep.engel_consistent = !(rep.all_left_mults_nilpotent && !rep.nilpotent);
    return rep;
}

}  // namespace diaconf
