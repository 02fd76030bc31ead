#include "doctest.h"

#include "ehrhart/linalg.hpp"
#include "ehrhart/random_polygons.hpp"
#include "oracles.hpp"

using namespace ehrhart;

namespace {

RationalMatrix mat2(long a, long b, long c, long d) {
    RationalMatrix M(2, 2);
    M.at(0, 0) = Rational(a);
    M.at(0, 1) = Rational(b);
    M.at(1, 0) = Rational(c);
    M.at(1, 1) = Rational(d);
    return M;
}

} // namespace

TEST_CASE("solve_linear on the documented examples") {
    RationalVector x = solve_linear(mat2(1, 0, 0, 1), {Rational(3, 2), Rational(-1)});
    CHECK(x[0] == Rational(3, 2));
    CHECK(x[1] == Rational(-1));

    x = solve_linear(mat2(1, 1, 1, 2), {Rational(1), Rational(0)});
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(-1));

    CHECK_THROWS_AS(solve_linear(mat2(1, 1, 2, 2), {Rational(1), Rational(0)}), Error);
}

TEST_CASE("solve_linear then multiply reproduces b on 200 random systems") {
    Lcg64 gen(12345);
    int solved = 0;
    while (solved < 200) {
        int n = 2 + static_cast<int>(gen.uniform(3));
        RationalMatrix A(n, n);
        RationalVector b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                A.at(i, j) = Rational(gen.uniform(11) - 5, 1 + gen.uniform(4));
            b[i] = Rational(gen.uniform(11) - 5, 1 + gen.uniform(4));
        }
        RationalMatrix Acopy = A;
        RationalVector x;
        try {
            x = solve_linear(std::move(Acopy), b);
        } catch (const Error&) {
            continue; // singular draw
        }
        for (int i = 0; i < n; ++i) {
            Rational s(0);
            for (int j = 0; j < n; ++j) s += A.at(i, j) * x[j];
            CHECK(s == b[i]);
        }
        ++solved;
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(mat2(1, 1, 1, 2)) == Rational(1));
    CHECK(determinant(mat2(1, 1, 2, 2)) == Rational(0));
    CHECK(determinant(mat2(0, 1, 1, 0)) == Rational(-1));
}

TEST_CASE("hnf_column_basis: identity, gcd column, mixed generators") {
    IntColumns id{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK(hnf_column_basis(id) == id);

    // single column (4,6): the generated lattice is {(4k, 6k)}, basis (4,6)
    IntColumns single{{Int(4), Int(6)}};
    IntColumns h1 = hnf_column_basis(single);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0][0] == 4);
    CHECK(h1[0][1] == 6);
    CHECK(oracle::lattice_member(h1, {Int(4), Int(6)}));
    CHECK(oracle::bounded_member(single, {h1[0][0], h1[0][1]}, 10));
    CHECK(!oracle::lattice_member(h1, {Int(2), Int(3)}));

    // columns {(2,0),(0,3),(1,1)} generate all of Z^2
    IntColumns gen{{Int(2), Int(0)}, {Int(0), Int(3)}, {Int(1), Int(1)}};
    IntColumns h2 = hnf_column_basis(gen);
    REQUIRE(h2.size() == 2);
    CHECK(h2 == id);
    for (const auto& col : gen)
        CHECK(oracle::lattice_member(h2, col));
    for (const auto& col : h2)
        CHECK(oracle::bounded_member(gen, col, 6));
}

TEST_CASE("hnf_column_basis: canonical form and membership on samples") {
    Lcg64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(3));
        int m = 1 + static_cast<int>(rng.uniform(4));
        IntColumns cols(m, std::vector<Int>(n));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i)
                cols[j][i] = Int(rng.uniform(13) - 6);
        IntColumns h = hnf_column_basis(cols);
        // every generator lies in the lattice spanned by the basis
        bool all_zero = true;
        for (const auto& c : cols) {
            bool zero = true;
            for (const Int& x : c)
                if (x != 0) zero = false;
            if (!zero) {
                all_zero = false;
                CHECK(oracle::lattice_member(h, c));
            }
        }
        if (all_zero) {
            CHECK(h.empty());
            continue;
        }
        // when the lattice has full rank, equal covolume pins equality:
        // L(cols) inside L(h) with |det h| = gcd of n x n minors of cols
        if (static_cast<int>(h.size()) == n) {
            Int det_h = 1;
            for (int i = 0; i < n; ++i) det_h *= h[i][i];
            CHECK(det_h == oracle::full_rank_lattice_det(cols, n));
        }
        // canonical shape: increasing pivot rows, positive pivots, reduced row
        int prev_pivot = -1;
        for (size_t j = 0; j < h.size(); ++j) {
            int p = 0;
            while (p < n && h[j][p] == 0) ++p;
            REQUIRE(p < n);
            CHECK(p > prev_pivot);
            CHECK(h[j][p] > 0);
            for (size_t k = 0; k < j; ++k) {
                CHECK(h[k][p] >= 0);
                CHECK(h[k][p] < h[j][p]);
            }
            prev_pivot = p;
        }
        // idempotent
        CHECK(hnf_column_basis(h) == h);
    }
}

TEST_CASE("min_scale_affine: documented examples") {
    // a single point reduces to min_scale_point
    AffineSubspace pt({Rational(1, 2), Rational(-1, 2)}, {});
    CHECK(min_scale_affine(pt, 2) == ScaleRequirement::finite(Rational(2)));

    // the line y = -1/2 reaches y = -1 at scale 2
    AffineSubspace line({Rational(0), Rational(-1, 2)}, {{Rational(1), Rational(0)}});
    CHECK(min_scale_affine(line, 2) == ScaleRequirement::finite(Rational(2)));

    // a line through the origin contains it at every scale
    AffineSubspace through0({Rational(0), Rational(0)}, {{Rational(1), Rational(2)}});
    CHECK(min_scale_affine(through0, 2).is_free());

    // full-dimensional subspace is always free
    AffineSubspace full({Rational(1, 7), Rational(2, 9)},
                        {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(min_scale_affine(full, 2).is_free());
}

TEST_CASE("min_scale_affine: bounded-scan minimality and multiples in 2D") {
    struct Case {
        Point base;
        std::vector<Rational> dir;
    };
    std::vector<Case> cases = {
        {{Rational(0), Rational(-1, 2)}, {Rational(1), Rational(0)}},
        {{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(2)}},
        {{Rational(1, 3), Rational(0)}, {Rational(1), Rational(1)}},
        {{Rational(1, 4), Rational(1, 6)}, {Rational(2), Rational(3)}},
        {{Rational(2, 5), Rational(1, 5)}, {Rational(1), Rational(-1)}},
    };
    for (const Case& c : cases) {
        AffineSubspace S(c.base, {c.dir});
        ScaleRequirement s = min_scale_affine(S, 2);
        REQUIRE(s.is_finite());
        const Rational& r = s.value();
        // the returned scale works, and so does every integer multiple
        for (long k = 1; k <= 3; ++k)
            CHECK(oracle::line_has_integer_point(c.base, c.dir, r * Rational(k), 120));
        // no smaller p/q with p, q <= 24 works
        auto scanned = oracle::line_min_scale_scan(c.base, c.dir, 24, 120);
        REQUIRE(scanned.has_value());
        CHECK(*scanned == r);
    }
}

TEST_CASE("min_scale_affine: hyperplane closed form cross-check") {
    // For {x : a.x = c} with a primitive integral and c = p/q != 0 reduced,
    // the minimal scale is q/|p|; c = 0 gives Free.
    struct Case {
        std::vector<Int> a;
        Rational c;
    };
    std::vector<Case> cases2d = {
        {{Int(2), Int(3)}, Rational(5, 6)},
        {{Int(1), Int(0)}, Rational(-2, 3)},
        {{Int(4), Int(1)}, Rational(3, 2)},
        {{Int(4), Int(1)}, Rational(0)},
    };
    for (const Case& cs : cases2d) {
        // base point: pick coordinate with a_i != 0
        int piv = cs.a[0] != 0 ? 0 : 1;
        Point base{Rational(0), Rational(0)};
        base[piv] = cs.c / Rational(cs.a[piv]);
        std::vector<Rational> dir{Rational(-cs.a[1]), Rational(cs.a[0])};
        AffineSubspace S(base, {dir});
        ScaleRequirement got = min_scale_affine(S, 2);
        if (cs.c.is_zero()) {
            CHECK(got.is_free());
        } else {
            REQUIRE(got.is_finite());
            CHECK(got.value() == Rational(cs.c.den(), abs(cs.c.num())));
        }
    }

    // one 3D plane: 2x + 3y + 5z = 7/4  ->  minimal scale 4/7
    Point base{Rational(7, 8), Rational(0), Rational(0)};
    std::vector<RationalVector> dirs{{Rational(-3), Rational(2), Rational(0)},
                                     {Rational(-5), Rational(0), Rational(2)}};
    AffineSubspace plane(base, dirs);
    CHECK(min_scale_affine(plane, 3) == ScaleRequirement::finite(Rational(4, 7)));
}

TEST_CASE("min_scale_affine is independent of the pivot order") {
    Lcg64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(3));
        int ell = 1 + static_cast<int>(rng.uniform(n));
        Point base(n);
        for (int j = 0; j < n; ++j)
            base[j] = Rational(rng.uniform(9) - 4, 1 + rng.uniform(4));
        std::vector<RationalVector> dirs;
        for (int k = 0; k < ell; ++k) {
            RationalVector d(n);
            for (int j = 0; j < n; ++j)
                d[j] = Rational(rng.uniform(9) - 4, 1 + rng.uniform(3));
            dirs.push_back(std::move(d));
        }
        dirs = drop_dependent_directions(dirs);
        if (dirs.empty()) continue;
        AffineSubspace S(base, dirs);
        CHECK(min_scale_affine(S, n, PivotOrder::FirstNonzero) ==
              min_scale_affine(S, n, PivotOrder::LastNonzero));
    }
}
