#include "diaconf/catalog.hpp"

namespace diaconf {

namespace {

struct C {
    int i, j, k;
    Rat c;
};

Algebra make_algebra(std::vector<std::string> basis, const std::vector<C>& constants) {
    Algebra a(std::move(basis));
    for (const auto& t : constants) a.add_structure_constant(t.i, t.j, t.k, t.c);
    return a;
}

Algebra zero_algebra(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return Algebra(names);
}

Algebra idempotent_1() { return make_algebra({"a"}, {{0, 0, 0, 1}}); }

// [a,a] = b: the smallest Leibniz algebra that is not Lie.
Algebra leibniz_2() { return make_algebra({"a", "b"}, {{0, 0, 1, 1}}); }

// [a,a] = b, [a,b] = c: nilpotent of index 3.
Algebra leibniz_3() { return make_algebra({"a", "b", "c"}, {{0, 0, 1, 1}, {0, 1, 2, 1}}); }

// [a,b] = b = -[b,a]: solvable, not nilpotent.
Algebra lie_solvable_2() { return make_algebra({"a", "b"}, {{0, 1, 1, 1}, {1, 0, 1, -1}}); }

// [a,b] = c = -[b,a]: the Heisenberg algebra.
Algebra lie_heisenberg() { return make_algebra({"a", "b", "c"}, {{0, 1, 2, 1}, {1, 0, 2, -1}}); }

Algebra lie_sl2() {
    return make_algebra({"h", "e", "f"}, {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}});
}

// k[e]/(e^2): u unit, e*e = 0.
Algebra assoc_dual() {
    return make_algebra({"u", "e"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
}

// Full 2x2 matrix algebra, basis E11 E12 E21 E22.
Algebra assoc_mat2() {
    std::vector<C> cs;
    auto idx = [](int r, int c) { return 2 * r + c; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) cs.push_back({idx(i, j), idx(k, l), idx(i, l), 1});
    return make_algebra({"E11", "E12", "E21", "E22"}, cs);
}

// 2x2 symmetric matrices under a o b = (ab + ba)/2; basis E11, E22, E12+E21.
Algebra jordan_sym2() {
    return make_algebra({"p", "q", "s"},
                        {{0, 0, 0, 1},
                         {1, 1, 1, 1},
                         {0, 2, 2, Rat(1, 2)},
                         {2, 0, 2, Rat(1, 2)},
                         {1, 2, 2, Rat(1, 2)},
                         {2, 1, 2, Rat(1, 2)},
                         {2, 2, 0, 1},
                         {2, 2, 1, 1}});
}

// Free diassociative algebra on one generator, truncated in degree <= 2:
// basis x, x |- x, x -| x; all degree-3 products vanish.
Dialgebra dias_free_1gen_2() {
    Dialgebra d(std::vector<std::string>{"x", "xl", "xr"});
    d.table(Op::Vdash).add_structure_constant(0, 0, 1, 1);
    d.table(Op::Dashv).add_structure_constant(0, 0, 2, 1);
    return d;
}

// a |- a = b, a -| a = 0: diassociative with distinct products; its minus
// algebra is leibniz_2.
Dialgebra dias_2() {
    Dialgebra d(std::vector<std::string>{"a", "b"});
    d.table(Op::Vdash).add_structure_constant(0, 0, 1, 1);
    return d;
}

// a |- a = c, a -| c = c: fails the first 0-identity at (a, a, a).
Dialgebra dias_bad_zero() {
    Dialgebra d(std::vector<std::string>{"a", "c"});
    d.table(Op::Vdash).add_structure_constant(0, 0, 1, 1);
    d.table(Op::Dashv).add_structure_constant(0, 1, 1, 1);
    return d;
}

// a |- a = a -| a = b, a |- b = c: passes the 0-identities but fails
// x |- (y -| z) = (x |- y) -| z at (a, a, a).
Dialgebra dias_bad_assoc() {
    Dialgebra d(std::vector<std::string>{"a", "b", "c"});
    d.table(Op::Vdash).add_structure_constant(0, 0, 1, 1);
    d.table(Op::Dashv).add_structure_constant(0, 0, 1, 1);
    d.table(Op::Vdash).add_structure_constant(0, 1, 2, 1);
    return d;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;
    auto alg = [&](std::string name, Algebra a, std::string note) {
        v.push_back({std::move(name), "algebra", std::move(note), std::move(a), std::nullopt});
    };
    auto dia = [&](std::string name, Dialgebra d, std::string note) {
        v.push_back({std::move(name), "dialgebra", std::move(note), std::nullopt, std::move(d)});
    };
    alg("zero_1", zero_algebra(1), "1-dim algebra with zero product");
    alg("zero_2", zero_algebra(2), "2-dim algebra with zero product");
    alg("idempotent_1", idempotent_1(), "k with e*e = e");
    alg("leibniz_2", leibniz_2(), "[a,a] = b, the smallest non-Lie Leibniz algebra");
    alg("leibniz_3", leibniz_3(), "[a,a] = b, [a,b] = c, nilpotent of index 3");
    alg("lie_solvable_2", lie_solvable_2(), "[a,b] = b, solvable non-nilpotent Lie algebra");
    alg("lie_heisenberg", lie_heisenberg(), "[a,b] = c, nilpotent Lie algebra");
    alg("lie_sl2", lie_sl2(), "sl_2 with standard basis h, e, f");
    alg("assoc_dual", assoc_dual(), "unital associative k[e]/(e^2)");
    alg("assoc_mat2", assoc_mat2(), "2x2 matrix algebra");
    alg("jordan_sym2", jordan_sym2(), "2x2 symmetric matrices under the Jordan product");
    alg("dijordan_nilpotent_2", plus_product(dias_2()), "plus algebra of dias_2, nilpotent di-Jordan");
    alg("dijordan_nilpotent_3", plus_product(dias_free_1gen_2()), "plus algebra of the free diassociative truncation");
    dia("leibniz_2dim", leibniz_as_dialgebra(leibniz_2()), "[a,a] = b as a Lie dialgebra");
    dia("dias_free_1gen_2", dias_free_1gen_2(), "free diassociative algebra on x, degree <= 2");
    dia("dias_2", dias_2(), "a |- a = b, a -| a = 0");
    dia("dias_bad_zero", dias_bad_zero(), "violates a 0-identity");
    dia("dias_bad_assoc", dias_bad_assoc(), "0-identities hold, diassociativity fails");
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::pair<std::string, Dialgebra>> catalog_dialgebras() {
    std::vector<std::pair<std::string, Dialgebra>> out;
    for (const auto& e : catalog()) {
        if (e.dialgebra) {
            out.emplace_back(e.name, *e.dialgebra);
        } else if (is_leibniz(*e.algebra) && !is_lie(*e.algebra)) {
            out.emplace_back(e.name + ":bracket", leibniz_as_dialgebra(*e.algebra));
        } else {
            out.emplace_back(e.name + ":both", as_dialgebra(*e.algebra));
        }
    }
    return out;
}

std::vector<std::pair<std::string, Algebra>> catalog_leibniz() {
    std::vector<std::pair<std::string, Algebra>> out;
    for (const auto& e : catalog())
        if (e.algebra && is_leibniz(*e.algebra)) out.emplace_back(e.name, *e.algebra);
    return out;
}

std::vector<DiJordanSample> catalog_di_jordan() {
    std::vector<DiJordanSample> out;
    for (const auto& e : catalog()) {
        if (!e.algebra || !is_di_jordan(*e.algebra)) continue;
        bool nil = series(*e.algebra, SeriesKind::LowerCentral).reaches_zero;
        out.push_back({e.name, *e.algebra, nil});
    }
    return out;
}

std::vector<std::pair<std::string, Algebra>> catalog_jordan() {
    std::vector<std::pair<std::string, Algebra>> out;
    for (const auto& e : catalog())
        if (e.algebra && is_jordan(*e.algebra)) out.emplace_back(e.name, *e.algebra);
    return out;
}

}  // namespace diaconf
