#include "diaconf/linalg.hpp"

namespace diaconf {

QVec unit_vec(Eigen::Index n, Eigen::Index i) {
    QVec v = QVec::Zero(n);
    v(i) = 1;
    return v;
}

std::pair<QMatrix, int> rref(QMatrix m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        if (m(r, c) != 1) {
            Rat inv = Rat(1) / m(r, c);
            for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return {std::move(m), static_cast<int>(r)};
}

int rank_of(const QMatrix& m) { return rref(m).second; }

namespace {

std::vector<Eigen::Index> pivot_columns(const QMatrix& r, int rank) {
    std::vector<Eigen::Index> pivots;
    pivots.reserve(rank);
    Eigen::Index c = 0;
    for (int i = 0; i < rank; ++i) {
        while (c < r.cols() && r(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

QMatrix nullspace_basis(const QMatrix& m) {
    auto [r, rank] = rref(m);
    const Eigen::Index cols = m.cols();
    auto pivots = pivot_columns(r, rank);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    QMatrix out(cols - rank, cols);
    out.setZero();
    Eigen::Index row = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        out(row, f) = 1;
        for (int i = 0; i < rank; ++i) out(row, pivots[i]) = -r(i, f);
        ++row;
    }
    return out;
}

std::optional<QVec> solve_linear(const QMatrix& A, const QVec& b) {
    QMatrix aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    auto [r, rank] = rref(std::move(aug));
    auto pivots = pivot_columns(r, rank);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    QVec x = QVec::Zero(A.cols());
    for (int i = 0; i < rank; ++i) x(pivots[i]) = r(i, A.cols());
    return x;
}

QMatrix inverse_of(const QMatrix& m) {
    const Eigen::Index n = m.rows();
    QMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = QMatrix::Identity(n, n);
    auto [r, rank] = rref(std::move(aug));
    if (rank < n) throw input_error("matrix is singular");
    return r.rightCols(n);
}

Subspace Subspace::span_rows(const QMatrix& rows) {
    auto [r, rank] = rref(rows);
    Subspace s(static_cast<int>(rows.cols()));
    s.basis_ = r.topRows(rank);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    s.basis_ = QMatrix::Identity(ambient, ambient);
    return s;
}

QVec Subspace::reduce(QVec v) const {
    auto pivots = pivot_columns(basis_, dim());
    for (int i = 0; i < dim(); ++i) {
        Rat f = v(pivots[i]);
        if (f == 0) continue;
        for (Eigen::Index j = 0; j < ambient_; ++j) v(j) -= f * basis_(i, j);
    }
    return v;
}

bool Subspace::contains(const QVec& v) const { return reduce(v).isZero(); }

bool Subspace::contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
        if (!contains(QVec(o.basis_.row(i).transpose()))) return false;
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    QMatrix rows(a.dim() + b.dim(), a.ambient_);
    rows.topRows(a.dim()) = a.basis_;
    rows.bottomRows(b.dim()) = b.basis_;
    return Subspace::span_rows(rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // Zassenhaus: rref of [A A; B 0]; rows with zero left half carry an
    // intersection basis in the right half.
    const int n = ambient_;
    QMatrix block(dim() + o.dim(), 2 * n);
    block.setZero();
    block.topLeftCorner(dim(), n) = basis_;
    block.topRightCorner(dim(), n) = basis_;
    block.bottomLeftCorner(o.dim(), n) = o.basis_;
    auto [r, rank] = rref(std::move(block));
    std::vector<Eigen::Index> meet_rows;
    for (int i = 0; i < rank; ++i)
        if (r.row(i).head(n).isZero()) meet_rows.push_back(i);
    QMatrix rows(meet_rows.size(), n);
    for (std::size_t i = 0; i < meet_rows.size(); ++i) rows.row(i) = r.row(meet_rows[i]).tail(n);
    return Subspace::span_rows(rows);
}

Subspace subspace_closure(int ambient, const std::vector<QVec>& generators,
                          const std::vector<BilinearMap>& products) {
    QMatrix rows(generators.size(), ambient);
    for (std::size_t i = 0; i < generators.size(); ++i) rows.row(i) = generators[i].transpose();
    Subspace s = Subspace::span_rows(rows);
    while (true) {
        std::vector<QVec> fresh;
        for (int i = 0; i < s.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j)
                for (const auto& p : products) {
                    QVec v = p(s.basis().row(i).transpose(), s.basis().row(j).transpose());
                    if (!s.contains(v)) fresh.push_back(std::move(v));
                }
        if (fresh.empty()) return s;
        QMatrix add(s.dim() + fresh.size(), ambient);
        add.topRows(s.dim()) = s.basis();
        for (std::size_t i = 0; i < fresh.size(); ++i) add.row(s.dim() + i) = fresh[i].transpose();
        s = Subspace::span_rows(add);
    }
}

}  // namespace diaconf
