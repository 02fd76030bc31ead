#pragma once

// Shared test polytopes.

#include "ehrhart/polytope.hpp"

namespace fixtures {

using ehrhart::Int;
using ehrhart::Point;
using ehrhart::Polytope;
using ehrhart::Rational;

/// conv((1/2,-1/2), (-1/2,-1/2), (0,3/2))
inline Polytope t1() {
    return ehrhart::build_polygon({{Rational(1, 2), Rational(-1, 2)},
                                   {Rational(-1, 2), Rational(-1, 2)},
                                   {Rational(0), Rational(3, 2)}});
}

/// t1 translated by (0,1): conv((1/2,1/2), (-1/2,1/2), (0,5/2))
inline Polytope t2() {
    return ehrhart::build_polygon({{Rational(1, 2), Rational(1, 2)},
                                   {Rational(-1, 2), Rational(1, 2)},
                                   {Rational(0), Rational(5, 2)}});
}

inline Polytope unit_square() {
    return ehrhart::build_polygon({{Rational(0), Rational(0)},
                                   {Rational(1), Rational(0)},
                                   {Rational(1), Rational(1)},
                                   {Rational(0), Rational(1)}});
}

/// conv(0, (0,1), (1,1)) as a simplex
inline Polytope tri011() {
    return ehrhart::build_simplex(
        {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
}

/// conv(0, e1, e2) as a simplex
inline Polytope std_triangle() {
    return ehrhart::build_simplex(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

/// conv(2/3, 4/3) in dimension 1
inline Polytope seg1d() {
    return ehrhart::build_simplex({{Rational(2, 3)}, {Rational(4, 3)}});
}

/// standard 3-simplex conv(0, e1, e2, e3)
inline Polytope simplex3d() {
    return ehrhart::build_simplex({{Rational(0), Rational(0), Rational(0)},
                                   {Rational(1), Rational(0), Rational(0)},
                                   {Rational(0), Rational(1), Rational(0)},
                                   {Rational(0), Rational(0), Rational(1)}});
}

/// half-scaled standard 3-simplex, q = 2
inline Polytope half_simplex3d() {
    return ehrhart::build_simplex({{Rational(0), Rational(0), Rational(0)},
                                   {Rational(1, 2), Rational(0), Rational(0)},
                                   {Rational(0), Rational(1, 2), Rational(0)},
                                   {Rational(0), Rational(0), Rational(1, 2)}});
}

/// rational 3-simplex with several breakpoints
inline Polytope shifted_simplex3d() {
    return ehrhart::build_simplex({{Rational(1, 2), Rational(1, 2), Rational(1, 2)},
                                   {Rational(3, 2), Rational(1, 2), Rational(1, 2)},
                                   {Rational(1, 2), Rational(3, 2), Rational(1, 2)},
                                   {Rational(1, 2), Rational(1, 2), Rational(3, 2)}});
}

/// vertical segment conv(0, (0,1)) in 2D, general kind (not full-dimensional)
inline Polytope seg2d() {
    std::vector<ehrhart::Halfspace> hs;
    hs.push_back({{Int(1), Int(0)}, Rational(0)});   //  x <= 0
    hs.push_back({{Int(-1), Int(0)}, Rational(0)});  // -x <= 0
    hs.push_back({{Int(0), Int(1)}, Rational(1)});   //  y <= 1
    hs.push_back({{Int(0), Int(-1)}, Rational(0)});  // -y <= 0
    return ehrhart::make_general(
        2, {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}, std::move(hs));
}

} // namespace fixtures
