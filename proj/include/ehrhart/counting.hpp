#pragma once

#include <numeric>
#include <vector>

#include "ehrhart/polytope.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

namespace detail {

/// One scaled inequality scale*(a.z) <= bound (or < for interiors), with
/// scale > 0, obtained from a.z <= r*c by cross-multiplication so the scan
/// never divides.
struct ScaledHalfspace {
    std::vector<Int> normal;
    Int scale; // den(r)*den(c) > 0
    Int bound; // num(r)*num(c)
};

inline std::vector<ScaledHalfspace> scale_halfspaces(const Polytope& P,
                                                     const Rational& r) {
    std::vector<ScaledHalfspace> out;
    out.reserve(P.halfspaces().size());
    for (const Halfspace& h : P.halfspaces()) {
        ScaledHalfspace s;
        s.normal = h.normal;
        s.scale = r.den() * h.offset.den();
        s.bound = r.num() * h.offset.num();
        out.push_back(std::move(s));
    }
    return out;
}

/// Integer bounding box of the scaled vertex set, [lo_i, hi_i] per axis.
inline bool scaled_box(const Polytope& P, const Rational& r,
                       std::vector<Int>& lo, std::vector<Int>& hi) {
    const int n = P.ambient_dim();
    lo.assign(n, 0);
    hi.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        Rational mn = P.vertices()[0][j] * r, mx = mn;
        for (const Point& v : P.vertices()) {
            Rational x = v[j] * r;
            if (x < mn) mn = x;
            if (x > mx) mx = x;
        }
        lo[j] = ceil(mn);
        hi[j] = floor(mx);
        if (lo[j] > hi[j]) return false;
    }
    return true;
}

/// Lattice points per row y = const: exact x-interval from the halfspaces.
inline Int count_rows_2d(const std::vector<ScaledHalfspace>& hs,
                         const Int& ylo, const Int& yhi,
                         const Int& xlo0, const Int& xhi0, bool strict) {
    const size_t m = hs.size();
    std::vector<Int> xcoef(m), ycoef(m);
    for (size_t i = 0; i < m; ++i) {
        xcoef[i] = hs[i].scale * hs[i].normal[0];
        ycoef[i] = hs[i].scale * hs[i].normal[1];
    }
    Int total = 0;
    Int q;
    for (Int y = ylo; y <= yhi; ++y) {
        Int xlo = xlo0, xhi = xhi0;
        bool empty = false;
        for (size_t i = 0; i < m; ++i) {
            const Int& A = xcoef[i];
            Int B = hs[i].bound - ycoef[i] * y;
            if (A == 0) {
                if (strict ? !(0 < B) : !(0 <= B)) { empty = true; break; }
            } else if (A > 0) {
                // x <= B/A (or <)
                if (strict) {
                    mpz_cdiv_q(q.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
                    q -= 1;
                } else {
                    mpz_fdiv_q(q.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
                }
                if (q < xhi) xhi = q;
            } else {
                // x >= B/A (or >)
                if (strict) {
                    mpz_fdiv_q(q.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
                    q += 1;
                } else {
                    mpz_cdiv_q(q.get_mpz_t(), B.get_mpz_t(), A.get_mpz_t());
                }
                if (q > xlo) xlo = q;
            }
            if (xlo > xhi) { empty = true; break; }
        }
        if (!empty) total += xhi - xlo + 1;
    }
    return total;
}

/// Plain box scan for n != 2 with early rejection, halfspaces reordered by
/// observed violation frequency.
inline Int box_scan(const std::vector<ScaledHalfspace>& hs,
                    const std::vector<Int>& lo, const std::vector<Int>& hi,
                    bool strict) {
    const int n = static_cast<int>(lo.size());
    std::vector<int> order(hs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<unsigned long> violations(hs.size(), 0);
    unsigned long since_resort = 0;

    std::vector<Int> z = lo;
    Int total = 0;
    for (;;) {
        bool inside = true;
        for (int oi = 0; oi < static_cast<int>(order.size()); ++oi) {
            const ScaledHalfspace& h = hs[order[oi]];
            Int s = 0;
            for (int j = 0; j < n; ++j) s += h.normal[j] * z[j];
            s *= h.scale;
            if (strict ? !(s < h.bound) : !(s <= h.bound)) {
                inside = false;
                ++violations[order[oi]];
                break;
            }
        }
        if (inside) ++total;
        if (++since_resort == 4096) {
            since_resort = 0;
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return violations[a] > violations[b];
            });
        }
        int k = n - 1;
        while (k >= 0 && z[k] == hi[k]) { z[k] = lo[k]; --k; }
        if (k < 0) break;
        z[k] += 1;
    }
    return total;
}

inline Int count_impl(const Polytope& P, const Rational& r, bool strict) {
    std::vector<Int> lo, hi;
    if (!scaled_box(P, r, lo, hi)) return 0;
    std::vector<ScaledHalfspace> hs = scale_halfspaces(P, r);
    if (P.ambient_dim() == 2)
        return count_rows_2d(hs, lo[1], hi[1], lo[0], hi[0], strict);
    return box_scan(hs, lo, hi, strict);
}

} // namespace detail

/// #(rP cap Z^n), exact. r = 0 gives 1 (0*P is the origin).
inline Int count(const Polytope& P, const Rational& r) {
    if (r.sign() < 0)
        throw Error(ErrorKind::NegativeDilation, "count: negative dilation");
    if (r.is_zero()) return 1;
    return detail::count_impl(P, r, false);
}

/// #(r int(P) cap Z^n), exact; requires a full-dimensional P and r > 0.
inline Int count_interior(const Polytope& P, const Rational& r) {
    if (r.sign() <= 0)
        throw Error(ErrorKind::NonpositiveDilation, "count_interior: dilation must be positive");
    if (!P.is_full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "count_interior: polytope not full-dimensional");
    return detail::count_impl(P, r, true);
}

} // namespace ehrhart
