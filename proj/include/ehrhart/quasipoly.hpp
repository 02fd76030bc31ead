#pragma once

#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

namespace detail {

/// Solves sum_i x_i * nodes[t]^i = values[t] exactly.
inline RationalVector vandermonde_solve(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values) {
    const int m = static_cast<int>(nodes.size());
    RationalMatrix A(m, m);
    for (int t = 0; t < m; ++t) {
        Rational p(1);
        for (int i = 0; i < m; ++i) {
            A.at(t, i) = p;
            p *= nodes[t];
        }
    }
    return solve_linear(std::move(A), values);
}

inline Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational v(0);
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

} // namespace detail

/**
 * Integer-argument Ehrhart quasi-polynomial: for each residue class j mod
 * the period, #(kP cap Z^n) = sum_i coeffs[j][i] k^i. Built by exact
 * interpolation; every residue is validated against a held-out count.
 */
class QuasiPolynomial {
public:
    long period() const { return period_; }
    int degree() const { return degree_; }

    /// Coefficient G_i(P, k); depends on k only through k mod period.
    const Rational& coefficient(int i, const Int& k) const {
        if (i < 0 || i > degree_)
            throw Error(ErrorKind::InvalidParams, "coefficient: index out of range");
        return coeffs_[residue(k)][i];
    }

    /// Value at k; negative k is evaluated via its residue class, as
    /// Ehrhart reciprocity requires.
    Rational eval(const Int& k) const {
        return detail::poly_eval(coeffs_[residue(k)], Rational(k));
    }

    const std::vector<std::vector<Rational>>& table() const { return coeffs_; }

    friend QuasiPolynomial compute_ehrhart(const Polytope& P, long period_hint);

private:
    QuasiPolynomial(long period, int degree,
                    std::vector<std::vector<Rational>> coeffs)
        : period_(period), degree_(degree), coeffs_(std::move(coeffs)) {}

    size_t residue(const Int& k) const {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), Int(period_).get_mpz_t());
        return r.get_ui();
    }

    long period_;
    int degree_;
    std::vector<std::vector<Rational>> coeffs_;
};

/**
 * Interpolates the Ehrhart quasi-polynomial of a full-dimensional polytope.
 * period_hint must be a positive multiple of d(P); 0 selects d(P) itself.
 * Each residue class is sampled at k = j, j+d, ..., j+m*d, solved exactly,
 * and checked against a fresh count at j+(m+1)*d.
 */
inline QuasiPolynomial compute_ehrhart(const Polytope& P, long period_hint = 0) {
    if (!P.is_full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "compute_ehrhart: polytope not full-dimensional");
    Int dz = denominator(P);
    if (!dz.fits_slong_p() || dz.get_si() > 1000000)
        throw Error(ErrorKind::InvalidParams, "compute_ehrhart: denominator too large");
    const long d = dz.get_si();
    const long period = period_hint == 0 ? d : period_hint;
    if (period <= 0 || period % d != 0)
        throw Error(ErrorKind::InvalidParams,
                    "compute_ehrhart: period hint must be a positive multiple of d(P)");
    const int m = P.dim();

    std::vector<std::vector<Rational>> table;
    table.reserve(period);
    for (long j = 0; j < period; ++j) {
        std::vector<Rational> nodes, values;
        for (int t = 0; t <= m; ++t) {
            Int k = Int(j) + Int(t) * period;
            nodes.push_back(Rational(k));
            values.push_back(Rational(count(P, Rational(k))));
        }
        std::vector<Rational> row = detail::vandermonde_solve(nodes, values);
        Int kv = Int(j) + Int(m + 1) * period;
        if (detail::poly_eval(row, Rational(kv)) != Rational(count(P, Rational(kv))))
            throw Error(ErrorKind::ValidationFailed,
                        "compute_ehrhart: held-out count mismatch; period hint is not a period");
        table.push_back(std::move(row));
    }
    return QuasiPolynomial(period, m, std::move(table));
}

} // namespace ehrhart
