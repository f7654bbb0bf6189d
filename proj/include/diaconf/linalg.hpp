#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "diaconf/rat.hpp"

namespace diaconf {

using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

QVec unit_vec(Eigen::Index n, Eigen::Index i);

// Reduced row echelon form with leftmost-first pivots, no pivoting
// heuristics; the result is deterministic. Returns (rref, rank).
std::pair<QMatrix, int> rref(QMatrix m);

int rank_of(const QMatrix& m);

// Rows of the result form the canonical basis of {v : m v = 0}
// (free-column construction from the RREF, one row per free column).
QMatrix nullspace_basis(const QMatrix& m);

// Particular solution of A x = b with free variables set to zero, or
// nullopt when the system is inconsistent.
std::optional<QVec> solve_linear(const QMatrix& A, const QVec& b);

// Inverse of a square invertible matrix; throws on singular input.
QMatrix inverse_of(const QMatrix& m);

// A linear subspace of Q^n, stored as its unique RREF row basis.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span_rows(const QMatrix& rows);
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    bool is_zero() const { return dim() == 0; }
    const QMatrix& basis() const { return basis_; }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& o) const;

    // Canonical representative of v modulo this subspace (pivot
    // coordinates eliminated).
    QVec reduce(QVec v) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    Subspace intersect(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
    }

  private:
    int ambient_;
    QMatrix basis_;
};

using BilinearMap = std::function<QVec(const QVec&, const QVec&)>;

// Smallest subspace containing the generators and closed under all the
// given bilinear maps. Reaches its fixed point in at most dim-many rounds.
Subspace subspace_closure(int ambient, const std::vector<QVec>& generators,
                          const std::vector<BilinearMap>& products);

}  // namespace diaconf
