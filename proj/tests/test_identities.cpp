#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diaconf/identities.hpp"

using namespace diaconf;

namespace {

TreePoly tp(const char* s, int c = 1) { return TreePoly::mono(parse_tree(s), Rat(c)); }

}  // namespace

TEST_CASE("tree parse and print") {
    CHECK(tree_str(parse_tree("(x1 (x2 x3))")) == "(x1 (x2 x3))");
    CHECK(tree_str(parse_tree("(x1 |> (x2 <| x3))")) == "(x1 |> (x2 <| x3))");
    CHECK(tree_degree(parse_tree("((x1 x2) (x3 x4))")) == 4);
    CHECK_THROWS_AS(parse_tree("(x1"), input_error);
    CHECK_THROWS_AS(parse_tree("x"), input_error);
}

TEST_CASE("multilinear monomial counts") {
    CHECK(multilinear_count(1) == 1);
    CHECK(multilinear_count(2) == 2);
    CHECK(multilinear_count(3) == 12);
    CHECK(multilinear_count(4) == 120);
    for (int n = 1; n <= 4; ++n) {
        CHECK(MultilinearBasis::make(n, false).size() == multilinear_count(n));
        CHECK(MultilinearBasis::make(n, true).size() == multilinear_count(n) << (n - 1));
    }
}

TEST_CASE("psi on the printed examples") {
    // Psi_1(x1 x2 + x2 x1) = x1 -| x2 + x2 |- x1
    TreePoly f = tp("(x1 x2)") + tp("(x2 x1)");
    CHECK(psi(f, 1) == tp("(x1 <| x2)") + tp("(x2 |> x1)"));

    // Psi_2(x1(x2 x3) - (x1 x2)x3) = x1 |> (x2 -| x3) - (x1 |> x2) -| x3
    TreePoly g = tp("(x1 (x2 x3))") - tp("((x1 x2) x3)");
    CHECK(psi(g, 2) == tp("(x1 |> (x2 <| x3))") - tp("((x1 |> x2) <| x3)"));

    // single leaf is fixed
    CHECK(psi(tp("x1"), 1) == tp("x1"));

    CHECK_THROWS_AS(psi(f, 3), input_error);
    CHECK_THROWS_AS(psi(tp("(x1 x1)"), 1), input_error);
}

TEST_CASE("translating associativity gives the three diassociative identities") {
    auto ids = di_identities(associative_axioms());
    REQUIRE(ids.size() == 3);
    // k = 1: (x1 -| x2) -| x3 = x1 -| (x2 -| x3)
    CHECK(ids[0] == tp("((x1 <| x2) <| x3)") - tp("(x1 <| (x2 <| x3))"));
    // k = 2: (x1 |> x2) -| x3 = x1 |> (x2 -| x3)
    CHECK(ids[1] == tp("((x1 |> x2) <| x3)") - tp("(x1 |> (x2 <| x3))"));
    // k = 3: (x1 |> x2) |> x3 = x1 |> (x2 |> x3)
    CHECK(ids[2] == tp("((x1 |> x2) |> x3)") - tp("(x1 |> (x2 |> x3))"));
}

TEST_CASE("linearize") {
    // already polylinear: unchanged
    TreePoly comm = tp("(x1 x2)") - tp("(x2 x1)");
    CHECK(linearize(comm) == comm);

    // Jordan identity: re-substituting x1=x2=x3 recovers 3! times the original
    TreePoly jordan = tp("(((x1 x1) x2) x1)") - tp("((x1 x1) (x2 x1))");
    TreePoly lin = linearize(jordan);
    CHECK(lin.is_polylinear());
    CHECK(lin.degree() == 4);
    TreePoly back = relabel(lin, {1, 1, 1, 2});
    CHECK(back == Rat(6) * jordan);

    // non-homogeneous input is rejected
    CHECK_THROWS_AS(linearize(tp("(x1 x2)") + tp("(x1 x1)")), input_error);
}

TEST_CASE("decompose_by_center inverts psi") {
    TreePoly f = tp("(x1 (x2 x3))") + tp("((x2 x1) x3)", -2);
    auto d = decompose_by_center(psi(f, 2));
    CHECK(d.residual.is_zero());
    CHECK(d.parts[1] == f);
    CHECK(d.parts[0].is_zero());
    CHECK(d.parts[2].is_zero());

    // the printed Psi_1 display, inverted
    auto d2 = decompose_by_center(tp("(x1 <| x2)") + tp("(x2 |> x1)"));
    CHECK(d2.parts[0] == tp("(x1 x2)") + tp("(x2 x1)"));
    CHECK(d2.parts[1].is_zero());

    auto d3 = decompose_by_center(tp("(x1 |> (x2 <| x3))"));
    CHECK(d3.parts[1] == tp("(x1 (x2 x3))"));

    // a coloring that is not a psi-image lands in the residual
    auto d4 = decompose_by_center(tp("(x1 <| (x2 |> x3))"));
    CHECK(d4.residual == tp("(x1 <| (x2 |> x3))"));
    for (const auto& p : d4.parts) CHECK(p.is_zero());
}

TEST_CASE("psi is injective: exhaustive to degree 3, randomized at 4 and 5") {
    for (int n = 1; n <= 3; ++n) {
        auto basis = MultilinearBasis::make(n, false);
        for (const auto& m : basis.monomials)
            for (int k = 1; k <= n; ++k) {
                auto d = decompose_by_center(psi(TreePoly::mono(m), k));
                CHECK(d.residual.is_zero());
                CHECK(d.parts[k - 1] == TreePoly::mono(m));
            }
    }
    std::mt19937_64 rng(23);
    for (int n : {4, 5}) {
        auto basis = MultilinearBasis::make(n, false);
        std::uniform_int_distribution<int> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const Tree& m = basis.monomials[pick(rng)];
            int k = 1 + trial % n;
            auto d = decompose_by_center(psi(TreePoly::mono(m), k));
            CHECK(d.residual.is_zero());
            CHECK(d.parts[k - 1] == TreePoly::mono(m));
        }
    }
}

TEST_CASE("consequence_space basics") {
    // commutativity at its own degree: a 1-dimensional subspace of dim 2
    Subspace c2 = consequence_space({tp("(x1 x2)") - tp("(x2 x1)")}, 2, false);
    CHECK(c2.ambient() == 2);
    CHECK(c2.dim() == 1);

    // associative multilinear quotient at degree 3 is 3! = 6
    Subspace c3 = consequence_space(associative_axioms(), 3, false);
    CHECK(12 - c3.dim() == 6);

    // axioms of degree > n are ignored: colored degree-2 quotient is 2*2! = 4
    Subspace c2c = consequence_space(diassociative_axioms(), 2, true);
    CHECK(c2c.dim() == 0);
    CHECK(4 - c2c.dim() == 4);

    // the axioms' own degree-n instances are contained
    auto basis3 = MultilinearBasis::make(3, false);
    for (const auto& f : associative_axioms()) CHECK(c3.contains(basis3.coords(f)));

    // monotone in the axioms
    Subspace bigger = consequence_space({associative_axioms()[0], tp("((x1 x2) x3)")}, 3, false);
    CHECK(bigger.contains(c3));
}

TEST_CASE("diassociative multilinear quotient has dimension n * n!") {
    long fact = 1;
    for (int n = 2; n <= 4; ++n) {
        fact *= n;
        Subspace c = consequence_space(diassociative_axioms(), n, true);
        long total = multilinear_count(n) << (n - 1);
        CHECK(total - c.dim() == n * fact);
    }
}

TEST_CASE("Lie translations match the Leibniz presentation at degree 3") {
    Subspace from_lie = consequence_space(di_identities(lie_axioms()), 3, true);
    // x -| y = -(y |- x), plus the Leibniz identity in |-
    TreePoly elim = tp("(x1 <| x2)") + tp("(x2 |> x1)");
    TreePoly leibniz = tp("(x1 |> (x2 |> x3))") - tp("((x1 |> x2) |> x3)") - tp("(x2 |> (x1 |> x3))");
    Subspace from_leibniz = consequence_space({elim, leibniz}, 3, true);
    CHECK(from_lie == from_leibniz);
}

TEST_CASE("expansion matrix") {
    QMatrix m2 = expansion_matrix(2);
    REQUIRE(m2.rows() == 2);
    REQUIRE(m2.cols() == 4);
    // x1 o x2 = x1 |> x2 + x2 <| x1: words (1,2) center 2 and (2,1) center 1
    auto basis2 = MultilinearBasis::make(2, false);
    REQUIRE(tree_str(basis2.monomials[0]) == "(x1 x2)");
    CHECK(m2(0, 1) == 1);
    CHECK(m2(0, 2) == 1);
    CHECK(m2(1, 0) == 1);
    CHECK(m2(1, 3) == 1);

    // every row sums to 2^(n-1)
    for (int n = 2; n <= 4; ++n) {
        QMatrix m = expansion_matrix(n);
        for (int r = 0; r < m.rows(); ++r) {
            Rat s(0);
            for (int c = 0; c < m.cols(); ++c) s += m(r, c);
            CHECK(s == Rat(1 << (n - 1)));
        }
    }
}

TEST_CASE("no s-identities at desk scale") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = s_identity_space(n);
        CHECK(rep.consequences_are_special);
        CHECK(rep.no_s_identities);
        CHECK(rep.meet_dim == rep.special_identity_dim);
    }
    CHECK_THROWS_AS(s_identity_space(5), input_error);
}

TEST_CASE("degree guard") {
    CHECK_THROWS_AS(check_degree_guard(8), input_error);
    CHECK_NOTHROW(check_degree_guard(7));
}
