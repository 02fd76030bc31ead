#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Dense rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

using RationalVector = std::vector<Rational>;

/// Integer matrix stored as a list of columns (cols[j][i] = entry in row i).
using IntColumns = std::vector<std::vector<Int>>;

/// Exact solve of A x = b by Gaussian elimination with partial pivoting.
inline RationalVector solve_linear(RationalMatrix A, RationalVector b) {
    const int n = A.rows();
    if (A.cols() != n || static_cast<int>(b.size()) != n)
        throw Error(ErrorKind::InvalidParams, "solve_linear: dimension mismatch");
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!A.at(r, c).is_zero()) { p = r; break; }
        if (p < 0)
            throw Error(ErrorKind::SingularMatrix, "solve_linear: singular matrix");
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(A.at(p, j), A.at(c, j));
            std::swap(b[p], b[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            if (A.at(r, c).is_zero()) continue;
            Rational f = A.at(r, c) / A.at(c, c);
            for (int j = c; j < n; ++j) A.at(r, j) -= f * A.at(c, j);
            b[r] -= f * b[c];
        }
    }
    RationalVector x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational s = b[r];
        for (int j = r + 1; j < n; ++j) s -= A.at(r, j) * x[j];
        x[r] = s / A.at(r, r);
    }
    return x;
}

inline Rational determinant(RationalMatrix A) {
    const int n = A.rows();
    if (A.cols() != n)
        throw Error(ErrorKind::InvalidParams, "determinant: matrix not square");
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!A.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(A.at(p, j), A.at(c, j));
            det = -det;
        }
        det *= A.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (A.at(r, c).is_zero()) continue;
            Rational f = A.at(r, c) / A.at(c, c);
            for (int j = c; j < n; ++j) A.at(r, j) -= f * A.at(c, j);
        }
    }
    return det;
}

/// Rank of a set of rational vectors (rows), by exact elimination.
inline int rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rk; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][c].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[rk]);
        for (int r = rk + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][c].is_zero()) continue;
            Rational f = rows[r][c] / rows[rk][c];
            for (int j = c; j < cols; ++j) rows[r][j] -= f * rows[rk][j];
        }
        ++rk;
    }
    return rk;
}

/**
 * Canonical column basis, in Hermite normal form, of the lattice generated
 * by the given integer columns. Convention: pivot rows strictly increase
 * with the column index, each pivot is positive, every entry above a pivot
 * row is zero, and in each pivot row the entries of the earlier columns are
 * reduced into [0, pivot). Zero columns are dropped; the result is the
 * unique such basis of the lattice.
 */
inline IntColumns hnf_column_basis(IntColumns cols) {
    cols.erase(std::remove_if(cols.begin(), cols.end(),
                              [](const std::vector<Int>& c) {
                                  for (const Int& x : c)
                                      if (x != 0) return false;
                                  return true;
                              }),
               cols.end());
    if (cols.empty()) return cols;
    const int n = static_cast<int>(cols[0].size());
    int c = 0;
    for (int r = 0; r < n && c < static_cast<int>(cols.size()); ++r) {
        // gcd elimination in row r among columns c.. until one nonzero remains
        for (;;) {
            int best = -1;
            for (int j = c; j < static_cast<int>(cols.size()); ++j)
                if (cols[j][r] != 0 && (best < 0 || abs(cols[j][r]) < abs(cols[best][r])))
                    best = j;
            if (best < 0) break;
            std::swap(cols[c], cols[best]);
            bool others = false;
            for (int j = c + 1; j < static_cast<int>(cols.size()); ++j) {
                if (cols[j][r] == 0) continue;
                others = true;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(), cols[c][r].get_mpz_t());
                for (int i = 0; i < n; ++i) cols[j][i] -= q * cols[c][i];
            }
            if (!others) break;
        }
        if (cols[c][r] == 0) continue;
        if (cols[c][r] < 0)
            for (int i = 0; i < n; ++i) cols[c][i] = -cols[c][i];
        // canonical reduction of earlier columns in this pivot row;
        // column c is zero above row r, so their pivot rows are untouched
        for (int j = 0; j < c; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(), cols[c][r].get_mpz_t());
            if (q == 0) continue;
            for (int i = 0; i < n; ++i) cols[j][i] -= q * cols[c][i];
        }
        ++c;
    }
    cols.resize(c);
    return cols;
}

/// Pivot preference for the projection construction in min_scale_affine.
/// Both orders must give the same ScaleRequirement; tests assert it.
enum class PivotOrder { FirstNonzero, LastNonzero };

/**
 * Affine subspace v0 + span(directions) of Q^n. Directions must be
 * linearly independent; use drop_dependent_directions to prune first.
 */
struct AffineSubspace {
    RationalVector base_point;
    std::vector<RationalVector> directions;

    AffineSubspace(RationalVector base, std::vector<RationalVector> dirs)
        : base_point(std::move(base)), directions(std::move(dirs)) {
        if (!directions.empty() &&
            rank(directions) != static_cast<int>(directions.size()))
            throw Error(ErrorKind::InvalidParams,
                        "AffineSubspace: directions are linearly dependent");
    }
};

/// Keeps a maximal linearly independent subset, in input order.
inline std::vector<RationalVector>
drop_dependent_directions(const std::vector<RationalVector>& dirs) {
    std::vector<RationalVector> kept;
    for (const RationalVector& d : dirs) {
        kept.push_back(d);
        if (rank(kept) != static_cast<int>(kept.size()))
            kept.pop_back();
    }
    return kept;
}

namespace detail {

/// Reduced row echelon form; returns pivot column per row.
inline std::vector<int> rref(std::vector<RationalVector>& rows, PivotOrder order) {
    const int m = static_cast<int>(rows.size());
    const int ncols = m ? static_cast<int>(rows[0].size()) : 0;
    std::vector<int> pivot_cols;
    int rk = 0;
    auto col_index = [&](int k) {
        return order == PivotOrder::FirstNonzero ? k : ncols - 1 - k;
    };
    for (int ci = 0; ci < ncols && rk < m; ++ci) {
        const int c = col_index(ci);
        int p = -1;
        for (int r = rk; r < m; ++r)
            if (!rows[r][c].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[p], rows[rk]);
        Rational inv = rows[rk][c];
        for (int j = 0; j < ncols; ++j) rows[rk][j] /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == rk || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (int j = 0; j < ncols; ++j) rows[r][j] -= f * rows[rk][j];
        }
        pivot_cols.push_back(c);
        ++rk;
    }
    return pivot_cols;
}

} // namespace detail

/**
 * Smallest positive rational r such that r*S meets Z^n, or Free when every
 * positive r works. Since r*S = r*v0 + L with L the rational span of the
 * directions, the condition is r*v0 in Z^n + L. A projection pi with kernel
 * exactly L is built by completing the pivot coordinates of the direction
 * matrix; the quotient lattice pi(Z^n) is captured by an HNF column basis B,
 * and with gamma the coordinates of pi(v0) in B the answer is
 * min_scale_point(gamma). The result does not depend on the pivot order.
 */
inline ScaleRequirement min_scale_affine(const AffineSubspace& S, int n,
                                         PivotOrder order = PivotOrder::FirstNonzero) {
    if (static_cast<int>(S.base_point.size()) != n)
        throw Error(ErrorKind::InvalidParams, "min_scale_affine: dimension mismatch");
    const int ell = static_cast<int>(S.directions.size());
    if (ell == 0)
        return min_scale_point(S.base_point);
    if (ell >= n)
        return ScaleRequirement::free(); // S spans Q^n, so Z^n subset of Z^n + L

    std::vector<RationalVector> rows = S.directions;
    std::vector<int> pivots = detail::rref(rows, order);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const int q = static_cast<int>(free_cols.size()); // = n - ell

    // pi(x)_k = x_{f_k} - sum_j rows[j][f_k] * x_{p_j}; kernel(pi) = L
    auto project = [&](const RationalVector& x) {
        RationalVector y(q);
        for (int k = 0; k < q; ++k) {
            Rational v = x[free_cols[k]];
            for (int j = 0; j < ell; ++j)
                v -= rows[j][free_cols[k]] * x[pivots[j]];
            y[k] = v;
        }
        return y;
    };

    // images of the standard basis, scaled to integers, generate scale*pi(Z^n)
    std::vector<RationalVector> images(n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = Rational(1);
        images[i] = project(e);
        for (const Rational& x : images[i]) scale = lcm(scale, x.den());
    }
    IntColumns gen(n, std::vector<Int>(q));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k)
            gen[i][k] = (images[i][k] * Rational(scale)).num();
    IntColumns basis = hnf_column_basis(std::move(gen));
    if (static_cast<int>(basis.size()) != q)
        throw Error(ErrorKind::ValidationFailed,
                    "min_scale_affine: projected lattice has unexpected rank");

    RationalVector target = project(S.base_point);
    bool zero = true;
    for (const Rational& x : target)
        if (!x.is_zero()) { zero = false; break; }
    if (zero)
        return ScaleRequirement::free(); // v0 lies in L

    // gamma solves B * gamma = scale * pi(v0)
    RationalMatrix B(q, q);
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < q; ++i)
            B.at(i, j) = Rational(basis[j][i]);
    RationalVector rhs(q);
    for (int i = 0; i < q; ++i) rhs[i] = target[i] * Rational(scale);
    RationalVector gamma = solve_linear(std::move(B), std::move(rhs));
    return min_scale_point(gamma);
}

} // namespace ehrhart
