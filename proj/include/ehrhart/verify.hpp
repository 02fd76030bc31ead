#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehrhart/closed_forms_2d.hpp"
#include "ehrhart/random_polygons.hpp"
#include "ehrhart/rational_ehrhart.hpp"

namespace ehrhart {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // witness values on failure, optional note on pass
};

/// Reciprocity #(r int(P) cap Z^n) = (-1)^n Q(P,-r) at sample dilations
/// r = (2t+1) q(P) / (2 samples), t = 0..samples-1.
inline std::vector<CheckResult> verify_reciprocity(const RationalEhrhart& E,
                                                   int samples) {
    std::vector<CheckResult> out;
    for (int t = 0; t < samples; ++t) {
        Rational r = Rational(2 * t + 1) * E.period() / Rational(2 * samples);
        CheckResult c{"reciprocity r=" + r.str(), false, ""};
        Rational lhs(count_interior(E.polytope(), r));
        Rational rhs = E.eval_Q_negative(r);
        if (E.dim() % 2 != 0) rhs = -rhs;
        c.pass = lhs == rhs;
        if (!c.pass)
            c.detail = "interior=" + lhs.str() + " (-1)^n Q(-r)=" + rhs.str();
        out.push_back(std::move(c));
    }
    return out;
}

/// Derivative relation as exact coefficient identities on a recovered table:
/// per interval and j, d/dr piece_j = -(j+1) piece_{j+1}.
inline std::vector<CheckResult> verify_derivative(const PiecewiseQP& pw) {
    std::vector<CheckResult> out;
    for (size_t m = 0; m < pw.intervals.size(); ++m) {
        const PiecewiseQP::Interval& iv = pw.intervals[m];
        std::string where = "(" + pw.breakpoints[m].str() + "," +
                            pw.breakpoints[m + 1].str() + ")";
        for (int j = 0; j < pw.dim; ++j) {
            CheckResult c{"derivative " + where + " Q_" + std::to_string(j), true, ""};
            for (size_t i = 1; i < iv.pieces[j].size(); ++i) {
                Rational lhs = Rational(static_cast<long>(i)) * iv.pieces[j][i];
                Rational rhs = -Rational(j + 1) * iv.pieces[j + 1][i - 1];
                if (lhs != rhs) {
                    c.pass = false;
                    c.detail = "coefficient of r^" + std::to_string(i - 1) +
                               ": " + lhs.str() + " != " + rhs.str();
                    break;
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

/// Dilation identity Q_i(sP,r) = Q_i(P,sr) s^i for s in {1/2, 2, 3/2}
/// at sampled (r, i).
inline std::vector<CheckResult> verify_dilation(const RationalEhrhart& E,
                                                int samples) {
    std::vector<CheckResult> out;
    const std::vector<Rational> factors{Rational(1, 2), Rational(2), Rational(3, 2)};
    for (const Rational& s : factors) {
        RationalEhrhart scaled(scale(E.polytope(), s));
        CheckResult c{"dilation s=" + s.str(), true, ""};
        for (int t = 0; t < samples && c.pass; ++t) {
            Rational r = Rational(2 * t + 1) * E.period() / Rational(2 * samples);
            int i = t % (E.dim() + 1);
            Rational lhs = scaled.eval_Qi(i, r);
            Rational rhs = E.eval_Qi(i, s * r) * pow(s, static_cast<unsigned long>(i));
            if (lhs != rhs) {
                c.pass = false;
                c.detail = "r=" + r.str() + " i=" + std::to_string(i) + ": " +
                           lhs.str() + " != " + rhs.str();
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// rd_i and d_i are periods of Q_i; Free indices are
/// reported as skipped.
inline std::vector<CheckResult> verify_periods(const RationalEhrhart& E,
                                               int samples) {
    std::vector<CheckResult> out;
    for (int i = 0; i <= E.dim(); ++i) {
        CheckResult c{"periods i=" + std::to_string(i), true, ""};
        ScaleRequirement rd = rational_i_index(E.polytope(), i);
        if (rd.is_free()) {
            c.detail = "skipped: rd_i is free";
            out.push_back(std::move(c));
            continue;
        }
        Int di = *integer_i_index(E.polytope(), i);
        for (int t = 0; t < samples && c.pass; ++t) {
            Rational r = Rational(2 * t + 1) * rd.value() / Rational(2 * samples);
            Rational base = E.eval_Qi(i, r);
            if (E.eval_Qi(i, r + rd.value()) != base) {
                c.pass = false;
                c.detail = "rd_i=" + rd.value().str() + " fails at r=" + r.str();
            } else if (E.eval_Qi(i, r + Rational(di)) != base) {
                c.pass = false;
                c.detail = "d_i=" + di.get_str() + " fails at r=" + r.str();
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// |Q_1(P,r)| <= Q_1(P,0) on the given polygon plus `polygons` seeded
/// random polygons.
inline std::vector<CheckResult> verify_bound2d(const Polytope& P, int samples,
                                               uint64_t seed, int polygons) {
    std::vector<CheckResult> out;
    auto run = [&](const Polytope& Q, const std::string& name) {
        CheckResult c{name, false, ""};
        Q1BoundReport rep = check_Q1_bound(Q, samples);
        c.pass = rep.ok();
        if (!c.pass)
            c.detail = "r=" + rep.violation->r.str() + " |Q1|=" +
                       abs(rep.violation->value).str() + " > " +
                       rep.violation->bound.str();
        out.push_back(std::move(c));
    };
    run(P, "bound2d input polygon");
    Lcg64 gen(seed);
    for (int k = 0; k < polygons; ++k)
        run(random_polygon(gen), "bound2d random polygon " + std::to_string(k));
    return out;
}

} // namespace ehrhart
