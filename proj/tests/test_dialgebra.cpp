#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diaconf/catalog.hpp"
#include "diaconf/identities.hpp"
#include "test_util.hpp"

using namespace diaconf;

namespace {

const Algebra& cat_alg(const std::string& name) { return *catalog_find(name)->algebra; }
const Dialgebra& cat_dia(const std::string& name) { return *catalog_find(name)->dialgebra; }

}  // namespace

TEST_CASE("zero identities") {
    for (const auto& e : catalog())
        if (e.algebra) CHECK(check_zero_identities(as_dialgebra(*e.algebra)).ok);

    CHECK(check_zero_identities(cat_dia("dias_2")).ok);
    auto bad = check_zero_identities(cat_dia("dias_bad_zero"));
    CHECK(!bad.ok);
    CHECK(bad.witness.find("(a, a, a)") != std::string::npos);

    Dialgebra zero(std::vector<std::string>{"a", "b"});
    CHECK(check_zero_identities(zero).ok);
}

TEST_CASE("D0 ideal") {
    // |- = -| gives the zero ideal
    CHECK(d_zero_ideal(as_dialgebra(cat_alg("assoc_mat2"))).is_zero());

    // Leibniz bracket dialgebra: D0 = span{[x,y] + [y,x]} = span{b}
    Subspace d0 = d_zero_ideal(cat_dia("leibniz_2dim"));
    CHECK(d0.dim() == 1);
    CHECK(d0.contains(unit_vec(2, 1)));

    Dialgebra zero(std::vector<std::string>{"a"});
    CHECK(d_zero_ideal(zero).is_zero());

    CHECK_THROWS_AS(d_zero_ideal(cat_dia("dias_bad_zero")), input_error);
}

TEST_CASE("bar quotient") {
    // |- = -|: bar is the same algebra up to naming
    auto q = bar_quotient(as_dialgebra(cat_alg("assoc_dual")));
    CHECK(q.algebra.dim() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(q.algebra.product_basis(i, j) == cat_alg("assoc_dual").product_basis(i, j));

    // [a,a] = b: b spans D0, bar is 1-dimensional abelian
    auto qb = bar_quotient(cat_dia("leibniz_2dim"));
    CHECK(qb.algebra.dim() == 1);
    CHECK(qb.algebra.product_basis(0, 0).isZero());

    Dialgebra zero(std::vector<std::string>{"a", "b", "c"});
    CHECK(bar_quotient(zero).algebra.dim() == 3);
}

TEST_CASE("hat extension") {
    // zero dialgebra of dim n: hat is the zero algebra of dim 2n
    Dialgebra zero(std::vector<std::string>{"a", "b"});
    Algebra hz = hat_extension(zero);
    CHECK(hz.dim() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(hz.product_basis(i, j).isZero());

    // 1-dim a |- a = a -| a = a: hat has e e = e, e a = a, a e = a, a a = 0
    Algebra h = hat_extension(as_dialgebra(cat_alg("idempotent_1")));
    REQUIRE(h.dim() == 2);
    CHECK(h.product_basis(0, 0) == unit_vec(2, 0));
    CHECK(h.product_basis(0, 1) == unit_vec(2, 1));
    CHECK(h.product_basis(1, 0) == unit_vec(2, 1));
    CHECK(h.product_basis(1, 1).isZero());

    // Leibniz example: 3-dim hat, and it is a Lie algebra (Theorem 2.2 side)
    Algebra hl = hat_extension(cat_dia("leibniz_2dim"));
    CHECK(hl.dim() == 3);
    CHECK(is_lie(hl).ok);
}

TEST_CASE("di-variety membership") {
    CHECK(is_di_variety(cat_dia("dias_2"), associative_axioms()).ok);
    CHECK(is_di_variety(cat_dia("leibniz_2dim"), lie_axioms()).ok);
    auto r = is_di_variety(cat_dia("dias_bad_assoc"), associative_axioms());
    CHECK(!r.ok);
    CHECK_THROWS_AS(is_di_variety(cat_dia("dias_2"), jordan_axioms()), input_error);
}

TEST_CASE("Theorem 2.2 coherence across the catalog") {
    for (const auto& [name, d] : catalog_dialgebras()) {
        CAPTURE(name);
        // associative route
        bool via_hat = is_di_variety(d, associative_axioms()).ok;
        CHECK(via_hat == is_diassociative(d).ok);
        // Lie route: -| is determined by |- and the |- table is Leibniz
        bool via_hat_lie = is_di_variety(d, lie_axioms()).ok;
        bool minus_normalized = true;
        for (int i = 0; i < d.dim() && minus_normalized; ++i)
            for (int j = 0; j < d.dim(); ++j)
                if (d.product_basis(Op::Dashv, i, j) != QVec(-d.product_basis(Op::Vdash, j, i))) {
                    minus_normalized = false;
                    break;
                }
        bool direct = minus_normalized && is_leibniz(d.table(Op::Vdash)).ok;
        CHECK(via_hat_lie == direct);
    }
}

TEST_CASE("variety checkers") {
    CHECK(is_leibniz(cat_alg("lie_sl2")).ok);
    CHECK(is_leibniz(cat_alg("lie_heisenberg")).ok);
    CHECK(is_leibniz(cat_alg("leibniz_2")).ok);
    CHECK(!is_lie(cat_alg("leibniz_2")).ok);
    CHECK(is_leibniz(cat_alg("leibniz_3")).ok);
    CHECK(!is_leibniz(cat_alg("assoc_mat2")).ok);
    CHECK(is_associative(cat_alg("assoc_mat2")).ok);
    CHECK(!is_associative(cat_alg("lie_sl2")).ok);
    CHECK(is_jordan(cat_alg("jordan_sym2")).ok);
    CHECK(!is_jordan(cat_alg("assoc_mat2")).ok);
    CHECK(is_di_jordan(cat_alg("jordan_sym2")).ok);
    CHECK(is_di_jordan(cat_alg("dijordan_nilpotent_2")).ok);
    CHECK(is_di_jordan(cat_alg("dijordan_nilpotent_3")).ok);
    auto r = is_di_jordan(cat_alg("lie_sl2"));
    CHECK(!r.ok);
}

TEST_CASE("minus and plus products") {
    // commutative |- = -|: minus vanishes
    Algebra zero_minus = minus_product(as_dialgebra(cat_alg("jordan_sym2")));
    for (int i = 0; i < zero_minus.dim(); ++i)
        for (int j = 0; j < zero_minus.dim(); ++j) CHECK(zero_minus.product_basis(i, j).isZero());

    // associative |- = -|: plus is the Jordan symmetrization xy + yx
    const Algebra& m2 = cat_alg("assoc_mat2");
    Algebra sym = plus_product(as_dialgebra(m2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(sym.product_basis(i, j) == QVec(m2.product_basis(i, j) + m2.product_basis(j, i)));
    CHECK(is_jordan(sym).ok);

    // diassociative catalog entries: minus is Leibniz, plus is di-Jordan
    for (const auto& [name, d] : catalog_dialgebras()) {
        if (!is_diassociative(d).ok) continue;
        CAPTURE(name);
        CHECK(is_leibniz(minus_product(d)).ok);
        CHECK(is_di_jordan(plus_product(d)).ok);
    }

    CHECK(minus_product(cat_dia("dias_2")) == cat_alg("leibniz_2"));
}

TEST_CASE("left multiplication matrices") {
    CHECK(left_multiplication(cat_alg("zero_2"), unit_vec(2, 0)).isZero());

    QMatrix la = left_multiplication(cat_alg("leibniz_2"), unit_vec(2, 0));
    CHECK(la.col(0) == unit_vec(2, 1));
    CHECK(la.col(1).isZero());
    CHECK(is_nilpotent_matrix(la));

    CHECK(left_multiplication(cat_alg("assoc_dual"), unit_vec(2, 0)) == QMatrix::Identity(2, 2));
}

TEST_CASE("series") {
    auto z = series(cat_alg("zero_1"), SeriesKind::LowerCentral);
    CHECK(z.reaches_zero);
    CHECK(z.terms.size() == 2);

    auto l = series(cat_alg("leibniz_2"), SeriesKind::LowerCentral);
    CHECK(l.reaches_zero);
    REQUIRE(l.terms.size() == 3);  // L, span{b}, 0
    CHECK(l.terms[1].dim() == 1);
    CHECK(l.terms[2].is_zero());

    auto i = series(cat_alg("idempotent_1"), SeriesKind::LowerCentral);
    CHECK(!i.reaches_zero);
    CHECK(i.terms.back().dim() == 1);

    // monotone decreasing, stabilizes within dim steps
    for (const auto& e : catalog()) {
        if (!e.algebra) continue;
        for (auto kind : {SeriesKind::LowerCentral, SeriesKind::Derived, SeriesKind::Penico}) {
            auto rep = series(*e.algebra, kind);
            for (std::size_t k = 1; k < rep.terms.size(); ++k) CHECK(rep.terms[k - 1].contains(rep.terms[k]));
            CHECK(rep.terms.size() <= static_cast<std::size_t>(e.algebra->dim()) + 1);
        }
    }

    CHECK(series(cat_alg("dijordan_nilpotent_3"), SeriesKind::Penico).reaches_zero);
    CHECK(!series(cat_alg("jordan_sym2"), SeriesKind::Penico).reaches_zero);
    CHECK(series(cat_alg("lie_solvable_2"), SeriesKind::Derived).reaches_zero);
    CHECK(!series(cat_alg("lie_solvable_2"), SeriesKind::LowerCentral).reaches_zero);
    CHECK_THROWS_AS(series(cat_dia("dias_2"), SeriesKind::Penico), input_error);
}

TEST_CASE("engel verdicts") {
    auto e1 = engel_verdict(cat_alg("leibniz_2"));
    CHECK(e1.all_left_mults_nilpotent);
    CHECK(e1.nilpotent);
    CHECK(e1.engel_consistent);

    auto e2 = engel_verdict(cat_alg("lie_solvable_2"));
    CHECK(!e2.all_left_mults_nilpotent);
    CHECK(!e2.nilpotent);
    CHECK(e2.engel_consistent);

    auto e3 = engel_verdict(cat_alg("zero_2"));
    CHECK(e3.all_left_mults_nilpotent);
    CHECK(e3.nilpotent);

    auto e4 = engel_verdict(cat_alg("lie_sl2"));
    CHECK(!e4.all_left_mults_nilpotent);
    CHECK(e4.engel_consistent);

    CHECK_THROWS_AS(engel_verdict(cat_alg("assoc_mat2")), input_error);
}

TEST_CASE("random nilpotent Leibniz samples satisfy the Engel implication") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        Algebra l = testutil::random_nilpotent_leibniz(rng);
        REQUIRE(is_leibniz(l).ok);
        auto rep = engel_verdict(l);
        CHECK(rep.all_left_mults_nilpotent);
        CHECK(rep.nilpotent);
        CHECK(rep.engel_consistent);
    }
}

TEST_CASE("polylinear identity evaluation") {
    // translated associativity holds in dias_2 and fails in dias_bad_assoc
    for (const auto& f : di_identities(associative_axioms())) {
        CHECK(satisfies_identity(cat_dia("dias_2"), f).ok);
    }
    bool all_ok = true;
    for (const auto& f : di_identities(associative_axioms()))
        all_ok = all_ok && satisfies_identity(cat_dia("dias_bad_assoc"), f).ok;
    CHECK(!all_ok);

    CHECK_THROWS_AS(satisfies_identity(cat_alg("lie_sl2"), jordan_axioms()[1]), input_error);
}
