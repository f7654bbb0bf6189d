#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diaconf/linalg.hpp"

using namespace diaconf;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(num(rng), den(rng));
    return m;
}

QMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    QMatrix m(rows.size(), rows.begin()->size());
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto [r1, k1] = rref(QMatrix::Identity(3, 3));
    CHECK(k1 == 3);
    CHECK(r1 == QMatrix::Identity(3, 3));

    auto [r2, k2] = rref(mat({{1, 2}, {2, 4}}));
    CHECK(k2 == 1);
    CHECK(r2 == mat({{1, 2}, {0, 0}}));

    QMatrix z = QMatrix::Zero(2, 3);
    auto [r3, k3] = rref(z);
    CHECK(k3 == 0);
    CHECK(r3 == z);
}

TEST_CASE("rref is a fixed point and preserves the row space") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        QMatrix m = random_matrix(rng, 4, 5);
        auto [r, k] = rref(m);
        CHECK(rref(r).first == r);
        CHECK(Subspace::span_rows(m) == Subspace::span_rows(r));
        CHECK(rank_of(r) == k);
    }
}

TEST_CASE("nullspace") {
    CHECK(nullspace_basis(QMatrix::Identity(3, 3)).rows() == 0);

    QMatrix m = mat({{1, 1}});
    QMatrix ns = nullspace_basis(m);
    REQUIRE(ns.rows() == 1);
    CHECK((m * ns.row(0).transpose()).isZero());

    QMatrix z = QMatrix::Zero(2, 3);
    CHECK(nullspace_basis(z).rows() == 3);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        QMatrix a = random_matrix(rng, 3, 5);
        QMatrix ns2 = nullspace_basis(a);
        CHECK(ns2.rows() == 5 - rank_of(a));
        for (int r = 0; r < ns2.rows(); ++r) CHECK((a * ns2.row(r).transpose()).isZero());
    }
}

TEST_CASE("rank is submultiplicative") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        QMatrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 3);
        CHECK(rank_of(QMatrix(a * b)) <= std::min(rank_of(a), rank_of(b)));
    }
}

TEST_CASE("solve_linear") {
    QMatrix a = mat({{1, 2}, {3, 4}});
    QVec b(2);
    b << 5, 6;
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(QVec(a * *x) == b);

    QMatrix sing = mat({{1, 1}, {1, 1}});
    QVec c(2);
    c << 0, 1;
    CHECK(!solve_linear(sing, c).has_value());
}

TEST_CASE("subspace membership, sum, intersection") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        Subspace u = Subspace::span_rows(random_matrix(rng, 2, 5));
        Subspace v = Subspace::span_rows(random_matrix(rng, 2, 5));

        // any rational combination of basis rows is inside
        std::uniform_int_distribution<int> c(-3, 3);
        QVec comb = QVec::Zero(5);
        for (int r = 0; r < u.dim(); ++r) comb += Rat(c(rng)) * QVec(u.basis().row(r).transpose());
        CHECK(u.contains(comb));

        // a vector that raises the rank is outside
        QVec w = random_matrix(rng, 1, 5).row(0).transpose();
        QMatrix stack(u.dim() + 1, 5);
        stack.topRows(u.dim()) = u.basis();
        stack.row(u.dim()) = w.transpose();
        if (rank_of(stack) > u.dim()) CHECK(!u.contains(w));

        // dim(U+V) = dim U + dim V - dim(U cap V)
        CHECK((u + v).dim() == u.dim() + v.dim() - u.intersect(v).dim());
        CHECK(u.contains(u.intersect(v)));
        CHECK((u + v).contains(u));
    }
}

TEST_CASE("subspace closure") {
    // closure({v}, {zero map}) = span{v}
    QVec v = unit_vec(3, 0);
    auto zero_map = [](const QVec& a, const QVec& b) { return QVec(QVec::Zero(a.size())); };
    Subspace s = subspace_closure(3, {v}, {zero_map});
    CHECK(s.dim() == 1);
    CHECK(s.contains(v));

    // 1-dim idempotent: closure({a}) = span{a}
    auto idem = [](const QVec& a, const QVec& b) { return QVec(Rat(a(0) * b(0)) * unit_vec(1, 0)); };
    CHECK(subspace_closure(1, {unit_vec(1, 0)}, {idem}).dim() == 1);

    // [a,a] = b: closure({a}) = span{a,b}
    auto br = [](const QVec& x, const QVec& y) {
        QVec out = QVec::Zero(2);
        out(1) = x(0) * y(0);
        return out;
    };
    Subspace t = subspace_closure(2, {unit_vec(2, 0)}, {br});
    CHECK(t.dim() == 2);

    // monotone and idempotent
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        QMatrix g = random_matrix(rng, 2, 3);
        QMatrix h = random_matrix(rng, 1, 3);
        QMatrix table = random_matrix(rng, 3, 3);
        auto prod = [&table](const QVec& x, const QVec& y) { return QVec(Rat(x(0) * y(1)) * QVec(table.row(0).transpose())); };
        Subspace a = subspace_closure(3, {g.row(0).transpose(), g.row(1).transpose()}, {prod});
        Subspace b = subspace_closure(3, {g.row(0).transpose(), g.row(1).transpose(), h.row(0).transpose()}, {prod});
        CHECK(b.contains(a));  // monotone in the generators
        std::vector<QVec> abasis;
        for (int r = 0; r < a.dim(); ++r) abasis.push_back(a.basis().row(r).transpose());
        CHECK(subspace_closure(3, abasis, {prod}) == a);  // idempotent
    }
}
