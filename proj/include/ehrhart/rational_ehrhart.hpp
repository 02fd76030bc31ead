#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehrhart {

/**
 * The rational Ehrhart quasi-polynomial of P as a piecewise object on one
 * period [0, q(P)]: breakpoints r_0 = 0 < ... < r_l = q(P), and on each open
 * interval the exact coefficient polynomials Q_j (pieces[j], ascending
 * powers, degree n-j) together with the anchor constants Q_{i,0} satisfying
 * Q(P, rt + k q) = sum_i Q_{i,0} (k q)^i for rt inside the interval.
 */
struct PiecewiseQP {
    int dim = 0;
    Rational period;
    std::vector<Rational> breakpoints;

    struct Interval {
        std::vector<Rational> anchors;
        std::vector<std::vector<Rational>> pieces;
    };
    std::vector<Interval> intervals;
};

/// Piece evaluation of Q_i at r (reduced into [0, period) first). The
/// pieces live on open intervals; exact breakpoint arguments are refused,
/// use the integer-reduction path there instead.
inline Rational eval_piecewise(const PiecewiseQP& pw, int i, const Rational& r) {
    if (i < 0 || i > pw.dim)
        throw Error(ErrorKind::InvalidParams, "eval_piecewise: index out of range");
    if (r.sign() < 0)
        throw Error(ErrorKind::DomainError, "eval_piecewise: negative argument");
    Rational rr = r - Rational(floor(r / pw.period)) * pw.period;
    auto it = std::lower_bound(pw.breakpoints.begin(), pw.breakpoints.end(), rr);
    if (it != pw.breakpoints.end() && *it == rr)
        throw Error(ErrorKind::AtBreakpoint,
                    "eval_piecewise: argument is a breakpoint (" + rr.str() + ")");
    size_t idx = static_cast<size_t>(it - pw.breakpoints.begin()) - 1;
    return detail::poly_eval(pw.intervals[idx].pieces[i], rr);
}

/// Report of the minimal-period falsification scan for Q_{dim-1}.
struct PeriodFalsification {
    Rational period; // rd_{dim-1}(P), the claimed minimal period
    struct Candidate {
        Rational value;
        std::optional<Rational> witness_r; // Q_{n-1}(r+s) != Q_{n-1}(r) here
        Rational lhs, rhs;
    };
    std::vector<Candidate> candidates;

    bool all_witnessed() const {
        for (const Candidate& c : candidates)
            if (!c.witness_r) return false;
        return true;
    }
};

/**
 * Evaluator for the rational Ehrhart quasi-polynomial of one
 * full-dimensional polytope.
 *
 * The authoritative path reduces a rational argument a/b to the classical
 * quasi-polynomial of (1/b)P: Q_i(P, a/b) = G_i((1/b)P, a) b^i, with period
 * hint b*d(P) (always a valid period, never assumed minimal). Only the
 * residue class of a is interpolated, with a held-out validation count, and
 * rows are cached per (b, residue). The piecewise path (compute_piecewise)
 * recovers the coefficient polynomials per breakpoint interval from anchor
 * constants; it is the structural object but undefined at breakpoints.
 */
class RationalEhrhart {
public:
    explicit RationalEhrhart(Polytope P)
        : P_(std::move(P)), n_(P_.dim()),
          dP_(denominator(P_)), q_(rational_denominator(P_)) {
        if (!P_.is_full_dimensional())
            throw Error(ErrorKind::NotFullDimensional,
                        "RationalEhrhart: polytope not full-dimensional");
    }

    const Polytope& polytope() const { return P_; }
    int dim() const { return n_; }
    const Int& integer_denominator() const { return dP_; }
    const Rational& period() const { return q_; } // q(P)

    /// Q_i(P, r) by integer reduction; defined for every rational r
    /// (negative arguments resolve through the periodic G_i).
    Rational eval_Qi(int i, const Rational& r) const {
        return eval_Qi_pair(i, r.num(), r.den());
    }

    /// Same, from an explicit (a, b) pair, b >= 1, not necessarily reduced.
    /// Well-definedness across representations follows from the
    /// integer-dilation identity and is exercised by tests.
    Rational eval_Qi_pair(int i, const Int& a, const Int& b) const {
        if (i < 0 || i > n_)
            throw Error(ErrorKind::InvalidParams, "eval_Qi: index out of range");
        if (b <= 0)
            throw Error(ErrorKind::InvalidParams, "eval_Qi: denominator must be positive");
        const std::vector<Rational>& row = coeff_row(b, a);
        return row[i] * Rational(pow(b, static_cast<unsigned long>(i)));
    }

    /// Q(P, r) = sum_i Q_i(P, r) r^i = #(rP cap Z^n) for r >= 0.
    Rational eval_Q(const Rational& r) const {
        if (r.sign() < 0)
            throw Error(ErrorKind::NegativeDilation, "eval_Q: negative dilation");
        const std::vector<Rational>& row = coeff_row(r.den(), r.num());
        return detail::poly_eval(row, Rational(r.num()));
    }

    /**
     * Jump candidates of Q(P, .) in [0, q(P)]: for each facet halfspace with
     * offset c = p/q != 0, alpha_F = q/|p| is the smallest positive scale
     * putting the facet hyperplane onto a lattice-containing hyperplane;
     * facets through the origin contribute nothing. Returns the sorted set
     * {k alpha_F <= q(P)} together with 0 and q(P).
     */
    std::vector<Rational> breakpoints() const {
        std::vector<Rational> bps{Rational(0), q_};
        for (const Halfspace& h : P_.halfspaces()) {
            if (h.offset.is_zero()) continue;
            Rational alpha(h.offset.den(), abs(h.offset.num()));
            for (Rational x = alpha; x <= q_; x += alpha)
                bps.push_back(x);
        }
        std::sort(bps.begin(), bps.end());
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        return bps;
    }

    /**
     * Recovers the piecewise coefficient polynomials. Per interval, the
     * anchor constants Q_{i,0} solve Q(P, rt + k q) = sum_i Q_{i,0} (k q)^i
     * at the interval midpoint rt for k = 0..n, and the pieces expand as
     * Q_j(rt) = sum_i binom(i+j, j) Q_{i+j,0} (-1)^i rt^i. Every interval is
     * validated against a fresh count at its one-third point.
     */
    PiecewiseQP compute_piecewise() const {
        PiecewiseQP pw;
        pw.dim = n_;
        pw.period = q_;
        pw.breakpoints = breakpoints();
        for (size_t m = 1; m < pw.breakpoints.size(); ++m) {
            const Rational& lo = pw.breakpoints[m - 1];
            const Rational& hi = pw.breakpoints[m];
            Rational mid = (lo + hi) / Rational(2);

            std::vector<Rational> nodes, values;
            for (int k = 0; k <= n_; ++k) {
                nodes.push_back(Rational(k) * q_);
                values.push_back(Rational(count(P_, mid + Rational(k) * q_)));
            }
            PiecewiseQP::Interval iv;
            iv.anchors = detail::vandermonde_solve(nodes, values);
            iv.pieces.resize(n_ + 1);
            for (int j = 0; j <= n_; ++j) {
                iv.pieces[j].resize(n_ - j + 1);
                for (int i = 0; i <= n_ - j; ++i) {
                    Int binom;
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i + j),
                                 static_cast<unsigned long>(j));
                    Rational c = Rational(binom) * iv.anchors[i + j];
                    iv.pieces[j][i] = (i % 2 == 0) ? c : -c;
                }
            }
            pw.intervals.push_back(std::move(iv));

            Rational third = lo + (hi - lo) / Rational(3);
            Rational total(0);
            for (int j = 0; j <= n_; ++j)
                total += detail::poly_eval(pw.intervals.back().pieces[j], third) *
                         pow(third, static_cast<unsigned long>(j));
            if (total != Rational(count(P_, third)))
                throw Error(ErrorKind::ValidationFailed,
                            "compute_piecewise: interval validation failed on (" +
                                lo.str() + ", " + hi.str() + ")");
        }
        return pw;
    }

    /// Cor-1.4 check: #(r int(P) cap Z^n) = (-1)^n Q(P, -r), with the
    /// negative argument shifted into [0, q(P)) by periodicity (q(P) is an
    /// integer multiple of every rd_i, so it is a period of every Q_i).
    bool check_reciprocity(const Rational& r) const {
        Rational lhs(count_interior(P_, r));
        Rational rhs = eval_Q_negative(r);
        if (n_ % 2 != 0) rhs = -rhs;
        return lhs == rhs;
    }

    /// Q(P, -r) for r > 0, via the shifted coefficients.
    Rational eval_Q_negative(const Rational& r) const {
        Int k = ceil(r / q_);
        Rational shifted = -r + Rational(k) * q_; // >= 0
        Rational total(0);
        for (int i = 0; i <= n_; ++i)
            total += eval_Qi(i, shifted) * pow(-r, static_cast<unsigned long>(i));
        return total;
    }

    /// Checks that rd_i and d_i are periods of Q_i(P, .).
    /// Throws FreeIndex when rd_i is Free (nothing to check).
    bool check_periods(int i, std::span<const Rational> samples) const {
        ScaleRequirement rd = rational_i_index(P_, i);
        if (rd.is_free())
            throw Error(ErrorKind::FreeIndex, "check_periods: rd_i is free");
        std::optional<Int> di = integer_i_index(P_, i);
        for (const Rational& r : samples) {
            Rational base = eval_Qi(i, r);
            if (eval_Qi(i, r + rd.value()) != base) return false;
            if (eval_Qi(i, r + Rational(*di)) != base) return false;
        }
        return true;
    }

    /// Dilation identity check: Q_i(sP, r) = Q_i(P, sr) s^i, both sides exact.
    bool check_dilation_identity(const Rational& s, const Rational& r, int i) const {
        RationalEhrhart scaled(scale(P_, s));
        Rational lhs = scaled.eval_Qi(i, r);
        Rational rhs = eval_Qi(i, s * r) * pow(s, static_cast<unsigned long>(i));
        return lhs == rhs;
    }

    /**
     * Searches sampled r (step rd/24 over one period) for witnesses that
     * each candidate s fails to be a period of Q_{dim-1}(P, .). Default
     * candidates are rd_{dim-1}/k for k = 2..6. A missing witness is
     * reported as such, never treated as proof of a smaller period.
     */
    PeriodFalsification
    falsify_smaller_period(std::vector<Rational> candidates = {}) const {
        ScaleRequirement rd = rational_i_index(P_, n_ - 1);
        if (rd.is_free())
            throw Error(ErrorKind::FreeIndex, "falsify_smaller_period: rd_{dim-1} is free");
        const Rational& period = rd.value();
        if (candidates.empty())
            for (long k = 2; k <= 6; ++k)
                candidates.push_back(period / Rational(k));
        PeriodFalsification rep;
        rep.period = period;
        for (const Rational& s : candidates) {
            PeriodFalsification::Candidate cand;
            cand.value = s;
            for (long t = 0; t < 24; ++t) {
                Rational r = Rational(t) * period / Rational(24);
                Rational lhs = eval_Qi(n_ - 1, r + s);
                Rational rhs = eval_Qi(n_ - 1, r);
                if (lhs != rhs) {
                    cand.witness_r = r;
                    cand.lhs = lhs;
                    cand.rhs = rhs;
                    break;
                }
            }
            rep.candidates.push_back(std::move(cand));
        }
        return rep;
    }

private:
    /// Cached coefficients of G_.((1/b)P, .) on the residue class of a
    /// modulo b*d(P): interpolation over k = res, res+H, ..., res+n*H with
    /// H = b*d(P), plus a held-out validation count at res+(n+1)*H.
    const std::vector<Rational>& coeff_row(const Int& b, const Int& a) const {
        Int H = b * dP_;
        Int res;
        mpz_fdiv_r(res.get_mpz_t(), a.get_mpz_t(), H.get_mpz_t());
        auto key = std::make_pair(b, res);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        Polytope Pb = scale(P_, Rational(Int(1), b));
        std::vector<Rational> nodes, values;
        for (int t = 0; t <= n_; ++t) {
            Int k = res + Int(t) * H;
            nodes.push_back(Rational(k));
            values.push_back(Rational(count(Pb, Rational(k))));
        }
        std::vector<Rational> row = detail::vandermonde_solve(nodes, values);
        Int kv = res + Int(n_ + 1) * H;
        if (detail::poly_eval(row, Rational(kv)) != Rational(count(Pb, Rational(kv))))
            throw Error(ErrorKind::ValidationFailed,
                        "eval_Qi: held-out validation failed");
        return cache_.emplace(std::move(key), std::move(row)).first->second;
    }

    Polytope P_;
    int n_;
    Int dP_;
    Rational q_;
    mutable std::map<std::pair<Int, Int>, std::vector<Rational>> cache_;
};

} // namespace ehrhart
