#include "doctest.h"

#include "ehrhart/counting.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ehrhart;

TEST_CASE("count: regression values") {
    CHECK(count(fixtures::t1(), Rational(2, 3)) == 2);
    CHECK(count(fixtures::t2(), Rational(2, 3)) == 1);
    CHECK(count(fixtures::t2(), Rational(2)) == 7);
    CHECK(count(fixtures::t2(), Rational(11, 5)) == 4);
    CHECK(count(fixtures::unit_square(), Rational(3, 2)) == 4);
    CHECK(count(fixtures::unit_square(), Rational(7, 3)) == 9);
}

TEST_CASE("count: zero dilation gives the origin only") {
    CHECK(count(fixtures::t1(), Rational(0)) == 1);
    CHECK(count(fixtures::t2(), Rational(0)) == 1);
    CHECK(count(fixtures::simplex3d(), Rational(0)) == 1);
}

TEST_CASE("count: errors") {
    CHECK_THROWS_AS(count(fixtures::t1(), Rational(-1, 2)), Error);
    CHECK_THROWS_AS(count_interior(fixtures::t1(), Rational(0)), Error);
    CHECK_THROWS_AS(count_interior(fixtures::t1(), Rational(-1)), Error);
    CHECK_THROWS_AS(count_interior(fixtures::seg2d(), Rational(1)), Error);
}

TEST_CASE("count_interior: examples") {
    CHECK(count_interior(fixtures::unit_square(), Rational(2)) == 1);
    CHECK(count_interior(fixtures::std_triangle(), Rational(3)) == 1);
    // (2/3)T1 strictly contains the origin; of the two counted points,
    // (0,0) is interior and (0,1) is a boundary vertex
    CHECK(count_interior(fixtures::t1(), Rational(2, 3)) == 1);
    CHECK(count(fixtures::t1(), Rational(2, 3)) -
              count_interior(fixtures::t1(), Rational(2, 3)) ==
          1);
}

TEST_CASE("count vs interior count, monotonicity with 0 in P") {
    Polytope sq = fixtures::unit_square();
    Int prev = 0, prev_int = 0;
    for (long j = 0; j <= 24; ++j) {
        Rational r(j, 8);
        Int c = count(sq, r);
        CHECK(c >= prev);
        if (r.sign() > 0) {
            Int ic = count_interior(sq, r);
            CHECK(c - ic >= 0);
            CHECK(ic >= prev_int);
            prev_int = ic;
        }
        prev = c;
    }
    // T2 does not contain the origin and is not monotone
    CHECK(count(fixtures::t2(), Rational(2)) > count(fixtures::t2(), Rational(11, 5)));
}

TEST_CASE("integer translation invariance at integer dilations only") {
    Polytope t1 = fixtures::t1();
    Polytope t2 = fixtures::t2();
    for (long k = 0; k <= 4; ++k)
        CHECK(count(t1, Rational(k)) == count(t2, Rational(k)));
    CHECK(count(t1, Rational(2, 3)) != count(t2, Rational(2, 3)));
}

TEST_CASE("count(P, q(P) k) equals count of the integral polytope q(P)P at k") {
    for (const Polytope& P : {fixtures::t1(), fixtures::seg1d(), fixtures::half_simplex3d()}) {
        Rational q = rational_denominator(P);
        Polytope qP = scale(P, q);
        for (long k = 1; k <= 4; ++k)
            CHECK(count(P, q * Rational(k)) == count(qP, Rational(k)));
    }
}

TEST_CASE("count agrees with the plain box-enumeration oracle") {
    std::vector<Polytope> suite{fixtures::t1(),
                                fixtures::t2(),
                                fixtures::unit_square(),
                                fixtures::tri011(),
                                fixtures::seg1d(),
                                fixtures::half_simplex3d(),
                                fixtures::shifted_simplex3d(),
                                fixtures::seg2d()};
    std::vector<Rational> rs{Rational(0),     Rational(1, 3), Rational(1, 2),
                             Rational(1),     Rational(7, 5), Rational(2),
                             Rational(13, 4), Rational(5)};
    for (const Polytope& P : suite)
        for (const Rational& r : rs) {
            CHECK(count(P, r) == oracle::count_box(P, r));
            if (r.sign() > 0 && P.is_full_dimensional())
                CHECK(count_interior(P, r) == oracle::count_box(P, r, /*strict=*/true));
        }
}

TEST_CASE("counts on the 2D segment polytope (general kind)") {
    Polytope seg = fixtures::seg2d();
    CHECK(count(seg, Rational(1)) == 2);     // (0,0), (0,1)
    CHECK(count(seg, Rational(7, 2)) == 4);  // y = 0..3
}
