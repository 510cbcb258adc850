// Copyright 2026 The tugs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGS_LINALG_HPP
#define TUGS_LINALG_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact dense linear algebra over an ordered field. Nothing here compares
// against a tolerance, so Scalar must be exact (tugs::Rational in practice).

namespace tugs::linalg {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Solves the square system a * x = b by Gauss-Jordan elimination.
/// Returns nullopt when a is singular.
template <class Scalar>
std::optional<Vector<Scalar>> solve_exact(Matrix<Scalar> a, Vector<Scalar> b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");

    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        const Scalar inv = Scalar(1) / a(col, col);
        a.row(col) *= inv;
        b(col) *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Scalar f = a(r, col);
            a.row(r) -= f * a.row(col);
            b(r) -= f * b(col);
        }
    }
    return b;
}

enum class LpStatus { optimal, unbounded };

template <class Scalar>
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    Scalar objective{};
    Vector<Scalar> primal;  ///< one entry per column of A
    Vector<Scalar> dual;    ///< simplex multipliers, one per row of A
    std::vector<Eigen::Index> basis;
};

/// Column access for maximize(). A model supplies the constraint matrix one
/// column at a time, so callers with structured columns never materialize A.
///
///   rows()          number of equality constraints
///   columns()       number of variables
///   column(j)       column j of A
///   cost(j)         objective coefficient of variable j
///   entering(y, bland)
///                   a column with positive reduced cost cost(j) - column(j).dot(y),
///                   or -1 when none exists. With bland set it must be the smallest
///                   such j; otherwise the largest reduced cost, smallest j on ties.
template <class Scalar>
class DenseModel {
public:
    DenseModel(const Matrix<Scalar>& a, const Vector<Scalar>& c) : a_(a), c_(c) {
        if (c.size() != a.cols()) throw std::invalid_argument("simplex: shape mismatch");
    }

    Eigen::Index rows() const { return a_.rows(); }
    Eigen::Index columns() const { return a_.cols(); }
    Vector<Scalar> column(Eigen::Index j) const { return a_.col(j); }
    Scalar cost(Eigen::Index j) const { return c_(j); }

    Eigen::Index entering(const Vector<Scalar>& y, bool bland) const {
        Eigen::Index best = -1;
        Scalar best_reduced = 0;
        for (Eigen::Index j = 0; j < a_.cols(); ++j) {
            const Scalar reduced = c_(j) - a_.col(j).dot(y);
            if (reduced <= best_reduced) continue;
            if (bland) return j;
            best = j;
            best_reduced = reduced;
        }
        return best;
    }

private:
    const Matrix<Scalar>& a_;
    const Vector<Scalar>& c_;
};

/// Maximizes c'x subject to A x = b, x >= 0, starting from a feasible basis
/// supplied by the caller (column indices whose submatrix is invertible and
/// whose basic solution is nonnegative).
///
/// Revised primal simplex. The entering column has the largest reduced cost
/// until a degenerate pivot occurs; from then until the objective next
/// improves, Bland's rule picks the smallest improving column. The leaving
/// row is always the smallest basic index among ratio-test ties. This
/// terminates on degenerate problems and is deterministic.
template <class Scalar, class Model>
LpSolution<Scalar> maximize(const Model& model, const Vector<Scalar>& b, std::vector<Eigen::Index> basis) {
    const Eigen::Index m = model.rows();
    const Eigen::Index k = model.columns();
    if (b.size() != m || static_cast<Eigen::Index>(basis.size()) != m)
        throw std::invalid_argument("simplex: shape mismatch");

    Matrix<Scalar> basis_matrix(m, m);
    for (Eigen::Index r = 0; r < m; ++r) basis_matrix.col(r) = model.column(basis[r]);
    Matrix<Scalar> inverse(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
        Vector<Scalar> unit = Vector<Scalar>::Zero(m);
        unit(r) = 1;
        auto column = solve_exact<Scalar>(basis_matrix, unit);
        if (!column) throw std::invalid_argument("simplex: initial basis is singular");
        inverse.col(r) = *column;
    }
    Vector<Scalar> x_basic = inverse * b;
    for (Eigen::Index r = 0; r < m; ++r)
        if (x_basic(r) < 0) throw std::invalid_argument("simplex: initial basis is infeasible");

    Vector<Scalar> c_basic(m);
    Vector<Scalar> y(m);
    bool bland = false;
    while (true) {
        for (Eigen::Index r = 0; r < m; ++r) c_basic(r) = model.cost(basis[r]);
        y = inverse.transpose() * c_basic;

        const Eigen::Index entering = model.entering(y, bland);
        if (entering < 0) break;

        const Vector<Scalar> direction = inverse * model.column(entering);
        Eigen::Index leaving = -1;
        Scalar best_ratio;
        for (Eigen::Index r = 0; r < m; ++r) {
            if (direction(r) <= 0) continue;
            const Scalar ratio = x_basic(r) / direction(r);
            if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) {
            LpSolution<Scalar> out;
            out.status = LpStatus::unbounded;
            out.basis = std::move(basis);
            return out;
        }

        bland = best_ratio == 0;
        const Scalar pivot = direction(leaving);
        inverse.row(leaving) /= pivot;
        x_basic(leaving) /= pivot;
        for (Eigen::Index r = 0; r < m; ++r) {
            if (r == leaving || direction(r) == 0) continue;
            const Scalar f = direction(r);
            inverse.row(r) -= f * inverse.row(leaving);
            x_basic(r) -= f * x_basic(leaving);
        }
        basis[leaving] = entering;
    }

    LpSolution<Scalar> out;
    out.primal = Vector<Scalar>::Zero(k);
    out.objective = 0;
    for (Eigen::Index r = 0; r < m; ++r) {
        out.primal(basis[r]) = x_basic(r);
        out.objective += model.cost(basis[r]) * x_basic(r);
    }
    out.dual = y;
    out.basis = std::move(basis);
    return out;
}

template <class Scalar>
LpSolution<Scalar> maximize(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& c,
                            std::vector<Eigen::Index> basis) {
    return maximize<Scalar>(DenseModel<Scalar>(a, c), b, std::move(basis));
}

}  // namespace tugs::linalg

#endif  // TUGS_LINALG_HPP
