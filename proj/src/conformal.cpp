#include "diaconf/conformal.hpp"

#include <sstream>

namespace diaconf {

bool ConfElement::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

ConfElement& ConfElement::operator+=(const ConfElement& o) {
    if (comp.size() != o.comp.size()) throw input_error("conformal element slot mismatch");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
}

ConfElement& ConfElement::operator-=(const ConfElement& o) {
    if (comp.size() != o.comp.size()) throw input_error("conformal element slot mismatch");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
}

ConfElement operator*(const Poly& h, ConfElement e) {
    for (auto& p : e.comp) p = h * p;
    return e;
}

std::string ConfElement::str(const std::vector<std::string>& slot_names) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (comp[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (slot_names[i].empty()) {
            os << comp[i].str();
        } else if (comp[i] == Poly(1)) {
            os << slot_names[i];
        } else {
            os << "(" << comp[i].str() << ")*" << slot_names[i];
        }
    }
    return first ? "0" : os.str();
}

bool LambdaValue::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

int LambdaValue::lambda_degree(Sym lam) const {
    int d = 0;
    for (const auto& p : comp) d = std::max(d, p.degree(lam));
    return d;
}

ConfElement LambdaValue::coeff(Sym lam, int k) const {
    ConfElement e(slots());
    for (int i = 0; i < slots(); ++i) e.comp[i] = comp[i].coeff_of(lam, k);
    return e;
}

ConfElement LambdaValue::nth_product(int s, Sym lam) const {
    ConfElement e = coeff(lam, s);
    Poly f(Rat(factorial(s)));
    return f * e;
}

ConfElement LambdaValue::substituted(Sym lam, const Poly& value) const {
    ConfElement e(slots());
    for (int i = 0; i < slots(); ++i) e.comp[i] = comp[i].substitute({{lam, value}});
    return e;
}

LambdaValue& LambdaValue::operator+=(const LambdaValue& o) {
    if (comp.size() != o.comp.size()) throw input_error("lambda value slot mismatch");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
}

LambdaValue& LambdaValue::operator-=(const LambdaValue& o) {
    if (comp.size() != o.comp.size()) throw input_error("lambda value slot mismatch");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
}

LambdaValue operator*(const Poly& h, LambdaValue v) {
    for (auto& p : v.comp) p = h * p;
    return v;
}

std::string LambdaValue::str(const std::vector<std::string>& slot_names) const {
    ConfElement e;
    e.comp = comp;
    return e.str(slot_names);
}

ConformalAlgebra ConformalAlgebra::make_table(std::string name, std::vector<std::string> generators) {
    ConformalAlgebra c;
    c.kind_ = Kind::Table;
    c.name_ = std::move(name);
    c.generators_ = std::move(generators);
    return c;
}

int ConformalAlgebra::slots() const {
    switch (kind_) {
        case Kind::Table: return static_cast<int>(generators_.size());
        case Kind::Weyl: return 1;
        case Kind::NoUnit: return 2;
        case Kind::Minus: return base_->slots();
    }
    return 0;
}

std::vector<std::string> ConformalAlgebra::slot_names() const {
    switch (kind_) {
        case Kind::Table: return generators_;
        case Kind::Weyl: return {""};
        case Kind::NoUnit: return {"", "w"};
        case Kind::Minus: return base_->slot_names();
    }
    return {};
}

void ConformalAlgebra::set_entry(int i, int j, LambdaValue v) {
    if (kind_ != Kind::Table) throw input_error("set_entry applies to table algebras only");
    if (v.slots() != slots()) throw input_error("table entry slot mismatch");
    for (const auto& p : v.comp)
        if (p.depends_on(Sym::M) || p.depends_on(Sym::x) || p.depends_on(Sym::t))
            throw input_error("table entries may use T and L only");
    if (v.is_zero())
        table_.erase({i, j});
    else
        table_[{i, j}] = std::move(v);
}

ConfElement ConformalAlgebra::generator_element(int i) const {
    ConfElement e(slots());
    e.comp[i] = Poly(1);
    return e;
}

std::vector<ConfElement> ConformalAlgebra::module_generators(int x_degree_bound) const {
    std::vector<ConfElement> out;
    switch (kind_) {
        case Kind::Table:
            for (int i = 0; i < slots(); ++i) out.push_back(generator_element(i));
            break;
        case Kind::Weyl:
            for (int k = 0; k <= x_degree_bound; ++k) {
                ConfElement e(1);
                e.comp[0] = Poly::var(Sym::x, k);
                out.push_back(e);
            }
            break;
        case Kind::NoUnit:
            for (int k = 0; k <= x_degree_bound; ++k) {
                ConfElement e(2);
                e.comp[0] = Poly::var(Sym::x, k);
                out.push_back(e);
            }
            {
                ConfElement w(2);
                w.comp[1] = Poly(1);
                out.push_back(w);
            }
            break;
        case Kind::Minus: return base_->module_generators(x_degree_bound);
    }
    return out;
}

std::vector<std::string> ConformalAlgebra::module_generator_names(int x_degree_bound) const {
    std::vector<std::string> names;
    for (const auto& g : module_generators(x_degree_bound)) names.push_back(g.str(slot_names()));
    return names;
}

namespace {

void validate_operand(const ConformalAlgebra& c, const ConfElement& a, Sym lam, const char* side) {
    if (a.slots() != c.slots())
        throw input_error(std::string(side) + " operand has " + std::to_string(a.slots()) + " slots, the algebra has " + std::to_string(c.slots()) + " (unknown generator?)");
    for (const auto& p : a.comp) {
        if (p.depends_on(lam))
            throw input_error(std::string(side) + " operand already depends on the product variable " + sym_name(lam));
        if (c.kind() == ConformalAlgebra::Kind::Table && p.depends_on(Sym::x))
            throw input_error("elements of a table algebra are polynomials in T");
    }
}

Sym pick_swap_sym(Sym lam, const ConfElement& a, const ConfElement& b) {
    for (Sym s : {Sym::M, Sym::L, Sym::t}) {
        if (s == lam) continue;
        bool used = false;
        for (const auto& p : a.comp) used = used || p.depends_on(s);
        for (const auto& p : b.comp) used = used || p.depends_on(s);
        if (!used) return s;
    }
    throw input_error("no free lambda symbol left for the minus bracket");
}

// w-component of (Q(T) w)_lam G(T,x): a term c T^j x^k of G contributes
// c (T+lam)^j T^k.
Poly w_twist(const Poly& g, Sym lam) {
    Poly out;
    Poly t_plus_lam = Poly::var(Sym::T) + Poly::var(lam);
    for (const auto& [e, coef] : g.terms()) {
        ExpVec rest = e;
        int j = rest[static_cast<int>(Sym::T)];
        int k = rest[static_cast<int>(Sym::x)];
        rest[static_cast<int>(Sym::T)] = 0;
        rest[static_cast<int>(Sym::x)] = 0;
        Poly term;
        term.add_term(rest, coef);
        out += term * t_plus_lam.pow(j) * Poly::var(Sym::T, k);
    }
    return out;
}

ConfElement as_element(const LambdaValue& v) {
    ConfElement e;
    e.comp = v.comp;
    return e;
}

}  // namespace

LambdaValue lambda_product(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b, Sym lam) {
    validate_operand(c, a, lam, "left");
    validate_operand(c, b, lam, "right");
    const Poly neg_lam = -Poly::var(lam);
    const Poly t_plus_lam = Poly::var(Sym::T) + Poly::var(lam);

    switch (c.kind()) {
        case ConformalAlgebra::Kind::Table: {
            LambdaValue out(c.slots());
            for (int i = 0; i < c.slots(); ++i) {
                if (a.comp[i].is_zero()) continue;
                Poly fa = a.comp[i].substitute({{Sym::T, neg_lam}});
                for (int j = 0; j < c.slots(); ++j) {
                    if (b.comp[j].is_zero()) continue;
                    auto it = c.entries().find({i, j});
                    if (it == c.entries().end()) continue;
                    Poly fab = fa * b.comp[j].substitute({{Sym::T, t_plus_lam}});
                    for (int k = 0; k < c.slots(); ++k) {
                        if (it->second.comp[k].is_zero()) continue;
                        Poly entry = lam == Sym::L ? it->second.comp[k]
                                                   : it->second.comp[k].substitute({{Sym::L, Poly::var(lam)}});
                        out.comp[k] += fab * entry;
                    }
                }
            }
            return out;
        }
        case ConformalAlgebra::Kind::Weyl: {
            LambdaValue out(1);
            Poly f = a.comp[0].substitute({{Sym::T, neg_lam}});
            Poly g = b.comp[0].substitute({{Sym::T, t_plus_lam}, {Sym::x, Poly::var(Sym::x) + Poly::var(lam)}});
            out.comp[0] = f * g;
            return out;
        }
        case ConformalAlgebra::Kind::NoUnit: {
            LambdaValue out(2);
            const Poly& f_part = a.comp[0];
            const Poly& q_part = a.comp[1];
            const Poly& g_part = b.comp[0];
            if (!f_part.is_zero() && !g_part.is_zero()) {
                Poly f = f_part.substitute({{Sym::T, neg_lam}, {Sym::x, Poly::var(Sym::x) - Poly::var(Sym::T) - Poly::var(lam)}});
                out.comp[0] = f * g_part.substitute({{Sym::T, t_plus_lam}});
            }
            if (!q_part.is_zero() && !g_part.is_zero())
                out.comp[1] = q_part.substitute({{Sym::T, neg_lam}}) * w_twist(g_part, lam);
            return out;
        }
        case ConformalAlgebra::Kind::Minus: {
            LambdaValue direct = lambda_product(c.base(), a, b, lam);
            Sym sw = pick_swap_sym(lam, a, b);
            LambdaValue swapped = lambda_product(c.base(), b, a, sw);
            Poly minus_t_lam = -Poly::var(Sym::T) - Poly::var(lam);
            LambdaValue out(c.slots());
            for (int i = 0; i < c.slots(); ++i)
                out.comp[i] = direct.comp[i] - swapped.comp[i].substitute({{sw, minus_t_lam}});
            return out;
        }
    }
    throw input_error("unreachable conformal kind");
}

ConfElement conf_vdash(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b) {
    return lambda_product(c, a, b, Sym::L).at_zero(Sym::L);
}

ConfElement conf_dashv(const ConformalAlgebra& c, const ConfElement& a, const ConfElement& b) {
    return lambda_product(c, a, b, Sym::L).substituted(Sym::L, -Poly::var(Sym::T));
}

CheckResult check_conformal_associativity(const ConformalAlgebra& c, int bound) {
    auto gens = c.module_generators(bound);
    auto names = c.module_generator_names(bound);
    const Poly l_plus_m = Poly::var(Sym::L) + Poly::var(Sym::M);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            LambdaValue ab = lambda_product(c, gens[i], gens[j], Sym::L);
            for (std::size_t k = 0; k < gens.size(); ++k) {
                LambdaValue lhs_m = lambda_product(c, as_element(ab), gens[k], Sym::M);
                ConfElement lhs = lhs_m.substituted(Sym::M, l_plus_m);
                LambdaValue bc = lambda_product(c, gens[j], gens[k], Sym::M);
                LambdaValue rhs = lambda_product(c, gens[i], as_element(bc), Sym::L);
                if (!(lhs.comp == rhs.comp)) {
                    std::ostringstream os;
                    os << "conformal associativity fails at (" << names[i] << ", " << names[j] << ", " << names[k]
                       << "): (a_L b)_{L+M} c = " << lhs.str(c.slot_names()) << " but a_L (b_M c) = " << rhs.str(c.slot_names());
                    return {false, os.str()};
                }
            }
        }
    return {};
}

CheckResult check_conformal_lie(const ConformalAlgebra& c, int bound) {
    auto gens = c.module_generators(bound);
    auto names = c.module_generator_names(bound);
    const Poly minus_t_l = -Poly::var(Sym::T) - Poly::var(Sym::L);
    const Poly l_plus_m = Poly::var(Sym::L) + Poly::var(Sym::M);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            LambdaValue ab = lambda_product(c, gens[i], gens[j], Sym::L);
            LambdaValue ba = lambda_product(c, gens[j], gens[i], Sym::M);
            ConfElement skew = as_element(ab) + ba.substituted(Sym::M, minus_t_l);
            if (!skew.is_zero())
                return {false, "conformal skew-symmetry fails at (" + names[i] + ", " + names[j] + "): [a_L b] + [b_{-T-L} a] = " + skew.str(c.slot_names())};
            for (std::size_t k = 0; k < gens.size(); ++k) {
                LambdaValue bc = lambda_product(c, gens[j], gens[k], Sym::M);
                LambdaValue lhs = lambda_product(c, gens[i], as_element(bc), Sym::L);
                LambdaValue ab_c = lambda_product(c, as_element(ab), gens[k], Sym::M);
                ConfElement mid = ab_c.substituted(Sym::M, l_plus_m);
                LambdaValue ac = lambda_product(c, gens[i], gens[k], Sym::L);
                LambdaValue rhs = lambda_product(c, gens[j], as_element(ac), Sym::M);
                ConfElement defect = as_element(lhs) - mid - as_element(rhs);
                if (!defect.is_zero())
                    return {false, "conformal Jacobi fails at (" + names[i] + ", " + names[j] + ", " + names[k] + "), defect " + defect.str(c.slot_names())};
            }
        }
    return {};
}

ConformalAlgebra current(const Algebra& a) {
    ConformalAlgebra c = ConformalAlgebra::make_table("cur", a.basis());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const QVec* p = a.product_ptr(i, j);
            if (!p) continue;
            LambdaValue v(a.dim());
            for (int k = 0; k < a.dim(); ++k) v.comp[k] = Poly((*p)(k));
            c.set_entry(i, j, std::move(v));
        }
    return c;
}

ConformalAlgebra virasoro() {
    ConformalAlgebra c = ConformalAlgebra::make_table("virasoro", {"v"});
    LambdaValue v(1);
    v.comp[0] = Poly::var(Sym::T) + Rat(2) * Poly::var(Sym::L);
    c.set_entry(0, 0, std::move(v));
    return c;
}

ConformalAlgebra weyl() {
    ConformalAlgebra c;
    c.kind_ = ConformalAlgebra::Kind::Weyl;
    c.name_ = "weyl";
    return c;
}

ConformalAlgebra no_unit_example() {
    ConformalAlgebra c;
    c.kind_ = ConformalAlgebra::Kind::NoUnit;
    c.name_ = "nounit";
    return c;
}

ConformalAlgebra diffcur(const Algebra& a, const QMatrix& derivation) {
    const int n = a.dim();
    if (derivation.rows() != n || derivation.cols() != n) throw input_error("derivation matrix has wrong shape");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QVec lhs = derivation * a.product_basis(i, j);
            QVec rhs = a.product(derivation.col(i), unit_vec(n, j)) + a.product(unit_vec(n, i), derivation.col(j));
            if (lhs != rhs)
                throw input_error("diffcur: the map is not a derivation (fails at (" + a.basis()[i] + ", " + a.basis()[j] + "))");
        }
    if (!is_nilpotent_matrix(derivation)) throw input_error("diffcur: the derivation is not nilpotent");

    ConformalAlgebra c = ConformalAlgebra::make_table("diffcur", a.basis());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LambdaValue v(n);
            QVec d = unit_vec(n, j);
            Rat kfact(1);
            for (int k = 0; !d.isZero(); ++k) {
                if (k > 0) kfact *= k;
                QVec prod = a.product(unit_vec(n, i), d);
                Poly lk = Poly::var(Sym::L, k) * (Rat(1) / kfact);
                for (int s = 0; s < n; ++s)
                    if (prod(s) != 0) v.comp[s] += Poly(prod(s)) * lk;
                d = derivation * d;
            }
            c.set_entry(i, j, std::move(v));
        }
    return c;
}

ConformalAlgebra minus_functor(const ConformalAlgebra& c, int bound) {
    if (auto r = check_conformal_associativity(c, bound); !r)
        throw input_error("minus_functor requires an associative conformal algebra: " + r.witness);
    if (c.kind() == ConformalAlgebra::Kind::Table) {
        ConformalAlgebra out = ConformalAlgebra::make_table(c.name() + "^(-)", c.generators());
        const Poly minus_t_l = -Poly::var(Sym::T) - Poly::var(Sym::L);
        for (int i = 0; i < c.slots(); ++i)
            for (int j = 0; j < c.slots(); ++j) {
                LambdaValue ab = lambda_product(c, c.generator_element(i), c.generator_element(j), Sym::L);
                LambdaValue ba = lambda_product(c, c.generator_element(j), c.generator_element(i), Sym::M);
                LambdaValue v(c.slots());
                for (int k = 0; k < c.slots(); ++k) v.comp[k] = ab.comp[k] - ba.comp[k].substitute({{Sym::M, minus_t_l}});
                out.set_entry(i, j, std::move(v));
            }
        return out;
    }
    ConformalAlgebra out;
    out.kind_ = ConformalAlgebra::Kind::Minus;
    out.name_ = c.name() + "^(-)";
    out.base_ = std::make_shared<ConformalAlgebra>(c);
    return out;
}

namespace {

// Candidate monomial elements of T-degree (and x-degree) <= bound.
std::vector<ConfElement> unit_candidates(const ConformalAlgebra& c, int bound) {
    std::vector<ConfElement> out;
    ConformalAlgebra::Kind k = c.kind();
    if (k == ConformalAlgebra::Kind::Minus) k = c.base().kind();
    switch (k) {
        case ConformalAlgebra::Kind::Table:
            for (int i = 0; i < c.slots(); ++i)
                for (int d = 0; d <= bound; ++d) {
                    ConfElement e(c.slots());
                    e.comp[i] = Poly::var(Sym::T, d);
                    out.push_back(e);
                }
            break;
        case ConformalAlgebra::Kind::Weyl:
            for (int d = 0; d <= bound; ++d)
                for (int xk = 0; xk <= bound; ++xk) {
                    ConfElement e(1);
                    e.comp[0] = Poly::var(Sym::T, d) * Poly::var(Sym::x, xk);
                    out.push_back(e);
                }
            break;
        case ConformalAlgebra::Kind::NoUnit:
            for (int d = 0; d <= bound; ++d)
                for (int xk = 0; xk <= bound; ++xk) {
                    ConfElement e(2);
                    e.comp[0] = Poly::var(Sym::T, d) * Poly::var(Sym::x, xk);
                    out.push_back(e);
                }
            for (int d = 0; d <= bound; ++d) {
                ConfElement e(2);
                e.comp[1] = Poly::var(Sym::T, d);
                out.push_back(e);
            }
            break;
        case ConformalAlgebra::Kind::Minus: break;
    }
    return out;
}

using MonoKey = std::pair<int, ExpVec>;

void collect_monomials(const ConfElement& e, std::map<MonoKey, Rat>& out) {
    for (int s = 0; s < e.slots(); ++s)
        for (const auto& [exp, coef] : e.comp[s].terms()) out[{s, exp}] += coef;
}

}  // namespace

bool is_conformal_unit(const ConformalAlgebra& c, const ConfElement& e, int bound) {
    if (e.is_zero()) return false;
    if (bound < 0) {
        bound = 4;
        for (const auto& p : e.comp) bound = std::max(bound, 4 + p.degree(Sym::x));
    }
    for (const auto& g : c.module_generators(bound))
        if (!(conf_vdash(c, e, g) == g)) return false;
    LambdaValue ee = lambda_product(c, e, e, Sym::L);
    return ee.comp == e.comp;
}

std::optional<ConfElement> find_left_unit(const ConformalAlgebra& c, int degree_bound) {
    std::vector<ConfElement> cands = unit_candidates(c, degree_bound);
    if (cands.empty()) return std::nullopt;

    auto gens = c.module_generators(degree_bound + 1);

    // rows indexed by monomials (generator block, slot, exponent vector) of
    // the constraints sum_u c_u (u_L g)|_0 = g over all module generators g
    std::map<std::pair<int, MonoKey>, int> row_index;
    std::vector<std::map<int, Rat>> cols(cands.size());
    std::map<int, Rat> rhs;
    auto row_of = [&](int block, const MonoKey& k) {
        auto [it, inserted] = row_index.emplace(std::make_pair(block, k), static_cast<int>(row_index.size()));
        return it->second;
    };

    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (std::size_t u = 0; u < cands.size(); ++u) {
            std::map<MonoKey, Rat> monos;
            collect_monomials(conf_vdash(c, cands[u], gens[gi]), monos);
            for (const auto& [key, coef] : monos) cols[u][row_of(static_cast<int>(gi), key)] += coef;
        }
        std::map<MonoKey, Rat> gm;
        collect_monomials(gens[gi], gm);
        for (const auto& [key, coef] : gm) rhs[row_of(static_cast<int>(gi), key)] += coef;
    }

    const int rows = static_cast<int>(row_index.size());
    QMatrix A = QMatrix::Zero(rows, cands.size());
    QVec b = QVec::Zero(rows);
    for (std::size_t u = 0; u < cands.size(); ++u)
        for (const auto& [r, coef] : cols[u]) A(r, u) = coef;
    for (const auto& [r, coef] : rhs) b(r) = coef;

    auto x = solve_linear(A, b);
    if (!x) return std::nullopt;
    ConfElement e(c.slots());
    for (std::size_t u = 0; u < cands.size(); ++u)
        if ((*x)(u) != 0) e += Poly((*x)(u)) * cands[u];
    return e;
}

std::vector<CoeffTerm> coeff_product(const ConformalAlgebra& c, long m, const ConfElement& a, long n, const ConfElement& b) {
    LambdaValue v = lambda_product(c, a, b, Sym::L);
    std::vector<CoeffTerm> out;
    for (int s = 0; s <= v.lambda_degree(Sym::L); ++s) {
        ConfElement e = v.nth_product(s, Sym::L);
        Rat binom = binomial(m, s);
        if (binom == 0 || e.is_zero()) continue;
        out.push_back({m + n - s, Poly(binom) * e});
    }
    return out;
}

MaterializedDialgebra zero_functor(const ConformalAlgebra& c, int t_bound, int x_bound) {
    MaterializedDialgebra out;
    std::map<MonoKey, int> index;

    auto add_basis = [&](int slot, int t_deg, int x_deg, const std::string& label) {
        ConfElement e(c.slots());
        e.comp[slot] = Poly::var(Sym::T, t_deg) * Poly::var(Sym::x, x_deg);
        index[{slot, e.comp[slot].terms().begin()->first}] = static_cast<int>(out.elements.size());
        out.elements.push_back(e);
        out.labels.push_back(label);
    };

    auto tname = [](int d, const std::string& g) {
        std::string t = d == 0 ? "" : (d == 1 ? "T*" : "T^" + std::to_string(d) + "*");
        return t + g;
    };

    ConformalAlgebra::Kind k = c.kind() == ConformalAlgebra::Kind::Minus ? c.base().kind() : c.kind();
    switch (k) {
        case ConformalAlgebra::Kind::Table:
            for (int i = 0; i < c.slots(); ++i)
                for (int d = 0; d <= t_bound; ++d) add_basis(i, d, 0, tname(d, c.slot_names()[i]));
            break;
        case ConformalAlgebra::Kind::Weyl:
            for (int d = 0; d <= t_bound; ++d)
                for (int xk = 0; xk <= x_bound; ++xk)
                    add_basis(0, d, xk, tname(d, xk == 0 ? "1" : "x^" + std::to_string(xk)));
            break;
        case ConformalAlgebra::Kind::NoUnit:
            for (int d = 0; d <= t_bound; ++d)
                for (int xk = 0; xk <= x_bound; ++xk)
                    add_basis(0, d, xk, tname(d, xk == 0 ? "1" : "x^" + std::to_string(xk)));
            for (int d = 0; d <= t_bound; ++d) add_basis(1, d, 0, tname(d, "w"));
            break;
        case ConformalAlgebra::Kind::Minus: break;
    }

    const int n = static_cast<int>(out.elements.size());
    out.dialgebra = Dialgebra(out.labels);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (Op op : {Op::Vdash, Op::Dashv}) {
                ConfElement p = op == Op::Vdash ? conf_vdash(c, out.elements[i], out.elements[j])
                                                : conf_dashv(c, out.elements[i], out.elements[j]);
                std::map<MonoKey, Rat> monos;
                collect_monomials(p, monos);
                QVec v = QVec::Zero(n);
                for (const auto& [key, coef] : monos) {
                    auto it = index.find(key);
                    if (it == index.end())
                        throw input_error("filtration is not closed under the products: (" + out.labels[i] + (op == Op::Vdash ? ") |- (" : ") -| (") + out.labels[j] + ") leaves the degree bound");
                    v(it->second) = coef;
                }
                out.dialgebra.table(op).set_product(i, j, v);
            }
    return out;
}

}  // namespace diaconf
