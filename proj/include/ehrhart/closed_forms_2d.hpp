#pragma once

#include <optional>
#include <utility>

#include "ehrhart/polytope.hpp"
#include "ehrhart/rational_ehrhart.hpp"

namespace ehrhart {

/**
 * Parameters of the triangle family
 *   T = conv((0,0), (s1/t1 * a/b, a/b), (s2/t2 * a/b, a/b))
 * with a, b, t1, t2 > 0, s2/t2 > s1/t1 and gcd(a,b) = gcd(s1,t1) =
 * gcd(s2,t2) = 1. The closed-form coefficient formulas below hold exactly
 * under these hypotheses; parameter sets violating them are rejected, not
 * normalized.
 */
struct TriangleParams {
    long a, b, t1, t2, s1, s2;
};

inline TriangleParams make_triangle_params(long a, long b, long t1, long t2,
                                           long s1, long s2) {
    if (a <= 0 || b <= 0 || t1 <= 0 || t2 <= 0)
        throw Error(ErrorKind::InvalidParams, "triangle params: a, b, t1, t2 must be positive");
    if (gcd(Int(a), Int(b)) != 1 || gcd(Int(s1), Int(t1)) != 1 ||
        gcd(Int(s2), Int(t2)) != 1)
        throw Error(ErrorKind::InvalidParams, "triangle params: gcd conditions violated");
    if (!(Rational(s2, t2) > Rational(s1, t1)))
        throw Error(ErrorKind::InvalidParams, "triangle params: need s2/t2 > s1/t1");
    return TriangleParams{a, b, t1, t2, s1, s2};
}

inline Polytope triangle_polytope(const TriangleParams& p) {
    Rational h(p.a, p.b);
    return build_polygon({{Rational(0), Rational(0)},
                          {Rational(p.s1, p.t1) * h, h},
                          {Rational(p.s2, p.t2) * h, h}});
}

/// Q_2(T, r): the constant (a^2 / 2b^2)(s2/t2 - s1/t1), the triangle area.
inline Rational triangle_Q2(const TriangleParams& p) {
    return Rational(Int(p.a) * p.a, Int(2) * p.b * p.b) *
           (Rational(p.s2, p.t2) - Rational(p.s1, p.t1));
}

/// Q_1(T, r) = (a/b)((t1+t2)/(2 t1 t2) - ({ar/b} - 1/2)(s2/t2 - s1/t1)).
inline Rational triangle_Q1(const TriangleParams& p, const Rational& r) {
    if (r.sign() < 0)
        throw Error(ErrorKind::DomainError, "triangle_Q1: r must be nonnegative");
    Rational delta = Rational(p.s2, p.t2) - Rational(p.s1, p.t1);
    Rational fr = frac(Rational(p.a, p.b) * r);
    return Rational(p.a, p.b) *
           (Rational(p.t1 + p.t2, 2 * p.t1 * p.t2) - (fr - Rational(1, 2)) * delta);
}

/**
 * Q_0(T, r): the four-term closed form, including the partial
 * fractional-part sum up to {floor(ar/b)/l} * l with l = lcm(t1, t2).
 */
inline Rational triangle_Q0(const TriangleParams& p, const Rational& r) {
    if (r.sign() < 0)
        throw Error(ErrorKind::DomainError, "triangle_Q0: r must be nonnegative");
    Int l = lcm(Int(p.t1), Int(p.t2));
    Rational delta = Rational(p.s2, p.t2) - Rational(p.s1, p.t1);
    Rational ar_b = Rational(p.a, p.b) * r;
    Rational fr = frac(ar_b);

    Rational v = Rational(1) - Rational(1, 2) * fr * (delta + Rational(2)) +
                 Rational(1, 2) * fr * fr * delta;
    v += frac(ar_b / Rational(l)) * Rational(l) *
         (Rational(p.t2 - 1, 2 * p.t2) + Rational(p.t1 - 1, 2 * p.t1));

    // upper limit {floor(ar/b)/l} * l is the integer floor(ar/b) mod l
    Int upper;
    mpz_fdiv_r(upper.get_mpz_t(), floor(ar_b).get_mpz_t(), l.get_mpz_t());
    for (Int i = 0; i <= upper; ++i) {
        Rational s2i(Int(p.s2) * i, Int(p.t2));
        Rational s1i(Int(p.s1) * i, Int(p.t1));
        v -= frac(s2i) + Rational(ceil(s1i)) - s1i;
    }
    return v;
}

/// Coefficients of the segment g_i = conv(0, (a/b)(s_i/t_i, 1)), i = 1 or 2:
/// Q_1(g_i, r) = a/(b t_i), Q_0(g_i, r) = 1 - {ar/(b t_i)} (and Q_2 = 0).
inline std::pair<Rational, Rational> segment_coeffs(int which,
                                                    const TriangleParams& p,
                                                    const Rational& r) {
    if (which != 1 && which != 2)
        throw Error(ErrorKind::InvalidParams, "segment_coeffs: which must be 1 or 2");
    long t = which == 1 ? p.t1 : p.t2;
    Rational q1(p.a, p.b * t);
    Rational q0 = Rational(1) - frac(q1 * r);
    return {q1, q0};
}

/// Parameters of T_alpha = conv(0, ((alpha-1)/alpha, 1), ((alpha+1)/alpha, 1)).
inline TriangleParams talpha_params(long alpha) {
    if (alpha < 2)
        throw Error(ErrorKind::InvalidParams, "talpha: alpha must be >= 2");
    return make_triangle_params(1, 1, alpha, alpha, alpha - 1, alpha + 1);
}

inline Polytope talpha_polytope(long alpha) {
    return triangle_polytope(talpha_params(alpha));
}

/// Q_0(T_alpha, m*alpha + k + rt) = (1/alpha)(k(alpha-k-2) + rt^2 - 2 rt) + 1
/// for m >= 0, 0 <= k < alpha, rt in [0, 1).
inline Rational talpha_Q0(long alpha, long m, long k, const Rational& rt) {
    if (alpha < 2)
        throw Error(ErrorKind::InvalidParams, "talpha_Q0: alpha must be >= 2");
    if (m < 0 || k < 0 || k >= alpha)
        throw Error(ErrorKind::DomainError, "talpha_Q0: need m >= 0 and 0 <= k < alpha");
    if (rt.sign() < 0 || rt >= Rational(1))
        throw Error(ErrorKind::DomainError, "talpha_Q0: need 0 <= rt < 1");
    return Rational(k * (alpha - k - 2), alpha) +
           (rt * rt - Rational(2) * rt) / Rational(alpha) + Rational(1);
}

/// Result of sampling |Q_1(P, r)| <= Q_1(P, 0) over one period of Q_1.
struct Q1BoundReport {
    Rational q1_at_zero;
    Rational sample_period; // rd_1(P), the period sampled over
    int samples = 0;
    struct Violation {
        Rational r, value, bound;
    };
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Samples over one period of Q_1 whether |Q_1(P, r)| stays within Q_1(P, 0).
inline Q1BoundReport check_Q1_bound(const Polytope& P, int samples) {
    if (P.ambient_dim() != 2 || P.dim() != 2)
        throw Error(ErrorKind::NotDimensionTwo, "check_Q1_bound: need a 2-dimensional polygon");
    RationalEhrhart E(P);
    Q1BoundReport rep;
    rep.q1_at_zero = E.eval_Qi(1, Rational(0));
    ScaleRequirement rd1 = rational_i_index(P, 1);
    rep.sample_period = rd1.is_free() ? E.period() : rd1.value();
    rep.samples = samples;
    for (int t = 0; t < samples; ++t) {
        Rational r = Rational(t) * rep.sample_period / Rational(samples);
        Rational v = E.eval_Qi(1, r);
        if (abs(v) > rep.q1_at_zero) {
            rep.violation = Q1BoundReport::Violation{r, v, rep.q1_at_zero};
            break;
        }
    }
    return rep;
}

/// The sharpened lower bound for the closed-form triangle family:
/// Q_1(T, r) >= -Q_1(T, 0) + Q_1(g_1, r) + Q_1(g_2, r).
inline Q1BoundReport check_sharpened_Q1_bound(const TriangleParams& p, int samples) {
    Polytope T = triangle_polytope(p);
    RationalEhrhart E(T);
    Q1BoundReport rep;
    rep.q1_at_zero = E.eval_Qi(1, Rational(0));
    rep.sample_period = Rational(p.b, p.a); // period of Q_1 for this family
    rep.samples = samples;
    Rational segs = Rational(p.a, p.b * p.t1) + Rational(p.a, p.b * p.t2);
    Rational lower = -rep.q1_at_zero + segs;
    for (int t = 0; t < samples; ++t) {
        Rational r = Rational(t) * rep.sample_period / Rational(samples);
        Rational v = E.eval_Qi(1, r);
        if (v < lower) {
            rep.violation = Q1BoundReport::Violation{r, v, lower};
            break;
        }
    }
    return rep;
}

} // namespace ehrhart
