#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diaconf/poly.hpp"

using namespace diaconf;

namespace {

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(0, 3), coeff(-5, 5), den(1, 3);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e{};
        e[0] = expd(rng);
        e[1] = expd(rng);
        e[3] = expd(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(e, Rat(c, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("7/14") == Rat(1, 2));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(rat_str(parse_rat("4/2")) == "2");
    CHECK(rat_str(Rat(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rat("0.5"), input_error);
    CHECK_THROWS_AS(parse_rat("1/0"), input_error);
    CHECK_THROWS_AS(parse_rat(""), input_error);
    CHECK_THROWS_AS(parse_rat("2/"), input_error);
    CHECK_THROWS_AS(parse_rat("a"), input_error);
}

TEST_CASE("binomial with negative upper index") {
    CHECK(binomial(4, 2) == Rat(6));
    CHECK(binomial(0, 0) == Rat(1));
    CHECK(binomial(0, 1) == Rat(0));
    CHECK(binomial(-1, 2) == Rat(1));
    CHECK(binomial(-2, 3) == Rat(-4));
}

TEST_CASE("poly parse and print round trip") {
    Poly p = parse_poly("T^2 + 2*T*L + L^2");
    CHECK(p.str() == "T^2 + 2*T*L + L^2");
    CHECK(parse_poly(p.str()) == p);

    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("T - T").is_zero());
    CHECK(parse_poly("x - 1/2*M").str() == "-1/2*M + x");
    CHECK(parse_poly("3").constant_term() == Rat(3));
    CHECK_THROWS_AS(parse_poly("y + 1"), input_error);
    CHECK_THROWS_AS(parse_poly("1.5*T"), input_error);
}

TEST_CASE("substitution examples") {
    Poly p = parse_poly("T + 2*L");
    CHECK(p.substitute({{Sym::L, Poly(0)}}) == parse_poly("T"));

    Poly l2 = parse_poly("L^2");
    Poly target = l2.substitute({{Sym::L, parse_poly("-T - M")}});
    CHECK(target == parse_poly("T^2 + 2*T*M + M^2"));

    Poly q = parse_poly("T^3 - 1/2*x*L");
    CHECK(q.substitute({}) == q);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::map<Sym, Poly> bind{{Sym::T, parse_poly("T + L")}, {Sym::x, parse_poly("2*x - 1")}};
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng);
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("coefficient extraction and degree") {
    Poly p = parse_poly("T^2*L + 2*L^2 + 3*T - 1");
    CHECK(p.degree(Sym::L) == 2);
    CHECK(p.degree(Sym::T) == 2);
    CHECK(p.coeff_of(Sym::L, 1) == parse_poly("T^2"));
    CHECK(p.coeff_of(Sym::L, 0) == parse_poly("3*T - 1"));
    CHECK(p.coeff_of(Sym::L, 2) == Poly(2));
    CHECK(p.coeff_of(Sym::L, 3).is_zero());
}
