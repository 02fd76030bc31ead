#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrhart/linalg.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

using Point = RationalVector;

enum class PolytopeKind { Polygon2D, Simplex, General };

inline const char* kind_name(PolytopeKind k) {
    switch (k) {
        case PolytopeKind::Polygon2D: return "polygon";
        case PolytopeKind::Simplex: return "simplex";
        default: return "general";
    }
}

/// Closed halfspace a.x <= c with primitive integer normal a.
struct Halfspace {
    std::vector<Int> normal;
    Rational offset;
};

/// Reference to an i-face by the vertex indices spanning it.
struct FaceRef {
    int dim;
    std::vector<int> verts;
};

inline Rational dot(const std::vector<Int>& a, const Point& x) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
    return s;
}

namespace detail {

/// Clears denominators and divides by the gcd; keeps direction.
inline std::vector<Int> primitive_integer(const RationalVector& v) {
    Int d = 1;
    for (const Rational& x : v) d = lcm(d, x.den());
    std::vector<Int> u(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        u[i] = (v[i] * Rational(d)).num();
        g = gcd(g, u[i]);
    }
    if (g == 0)
        throw Error(ErrorKind::InvalidParams, "primitive_integer: zero vector");
    for (Int& x : u) x /= g;
    return u;
}

} // namespace detail

/**
 * Rational polytope in vertex representation with a validated halfspace
 * representation. Polygon2D keeps vertices in strictly convex
 * counterclockwise order; Simplex keeps the n+1 affinely independent
 * vertices as given; General carries user-supplied halfspaces and supports
 * counting only. Values are immutable after construction.
 */
class Polytope {
public:
    int ambient_dim() const { return n_; }
    PolytopeKind kind() const { return kind_; }
    const std::vector<Point>& vertices() const { return verts_; }
    const std::vector<Halfspace>& halfspaces() const { return hs_; }

    /// Dimension of the affine hull of the vertices.
    int dim() const {
        switch (kind_) {
            case PolytopeKind::Polygon2D: return 2;
            case PolytopeKind::Simplex: return n_;
            default: {
                std::vector<RationalVector> diffs;
                for (size_t i = 1; i < verts_.size(); ++i) {
                    RationalVector d(n_);
                    for (int j = 0; j < n_; ++j) d[j] = verts_[i][j] - verts_[0][j];
                    diffs.push_back(std::move(d));
                }
                return rank(std::move(diffs));
            }
        }
    }

    bool is_full_dimensional() const { return dim() == n_; }

    friend Polytope build_polygon(std::vector<Point> vertices);
    friend Polytope build_simplex(std::vector<Point> vertices);
    friend Polytope make_general(int n, std::vector<Point> vertices,
                                 std::vector<Halfspace> halfspaces);

private:
    Polytope(int n, PolytopeKind kind, std::vector<Point> verts,
             std::vector<Halfspace> hs)
        : n_(n), kind_(kind), verts_(std::move(verts)), hs_(std::move(hs)) {}

    int n_;
    PolytopeKind kind_;
    std::vector<Point> verts_;
    std::vector<Halfspace> hs_;
};

namespace detail {

inline Rational cross2(const Point& a, const Point& b) {
    return a[0] * b[1] - a[1] * b[0];
}

inline void check_vertices(const std::vector<Point>& verts, int n) {
    for (const Point& v : verts)
        if (static_cast<int>(v.size()) != n)
            throw Error(ErrorKind::InvalidParams, "vertex has wrong dimension");
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i] == verts[j])
                throw Error(ErrorKind::DuplicateVertex, "duplicate vertex");
}

inline void validate_halfspaces(const std::vector<Point>& verts,
                                const std::vector<Halfspace>& hs, int min_tight) {
    for (const Halfspace& h : hs) {
        int tight = 0;
        for (const Point& v : verts) {
            Rational s = dot(h.normal, v);
            if (s > h.offset)
                throw Error(ErrorKind::ValidationFailed,
                            "vertex violates halfspace");
            if (s == h.offset) ++tight;
        }
        if (tight < min_tight)
            throw Error(ErrorKind::ValidationFailed,
                        "halfspace not tight at enough vertices");
    }
}

} // namespace detail

/**
 * Builds a 2D polygon from at least three rational points given in any
 * order. Points are canonicalized to counterclockwise order around the
 * centroid; sets that are not in strictly convex position are rejected.
 * Edge halfspaces with primitive integer normals are derived.
 */
inline Polytope build_polygon(std::vector<Point> vertices) {
    detail::check_vertices(vertices, 2);
    if (vertices.size() < 3)
        throw Error(ErrorKind::InvalidParams, "polygon needs at least 3 vertices");

    std::vector<RationalVector> diffs;
    for (size_t i = 1; i < vertices.size(); ++i)
        diffs.push_back({vertices[i][0] - vertices[0][0],
                         vertices[i][1] - vertices[0][1]});
    if (rank(diffs) < 2)
        throw Error(ErrorKind::CollinearAll, "all points collinear");

    Point c{Rational(0), Rational(0)};
    for (const Point& v : vertices) { c[0] += v[0]; c[1] += v[1]; }
    Rational m(static_cast<long>(vertices.size()));
    c[0] /= m; c[1] /= m;
    for (const Point& v : vertices)
        if (v == c)
            throw Error(ErrorKind::NonConvex, "a point lies at the centroid of the set");

    // exact counterclockwise angular sort around the centroid
    auto half = [&](const Point& v) {
        Rational dy = v[1] - c[1], dx = v[0] - c[0];
        return (dy > Rational(0) || (dy == Rational(0) && dx > Rational(0))) ? 0 : 1;
    };
    std::sort(vertices.begin(), vertices.end(), [&](const Point& a, const Point& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Point da{a[0] - c[0], a[1] - c[1]}, db{b[0] - c[0], b[1] - c[1]};
        Rational cr = detail::cross2(da, db);
        if (!cr.is_zero()) return cr > Rational(0);
        // same ray from the centroid: convexity check below rejects the set
        return da[0] * da[0] + da[1] * da[1] < db[0] * db[0] + db[1] * db[1];
    });

    const size_t mv = vertices.size();
    for (size_t i = 0; i < mv; ++i) {
        const Point& p0 = vertices[i];
        const Point& p1 = vertices[(i + 1) % mv];
        const Point& p2 = vertices[(i + 2) % mv];
        Point e1{p1[0] - p0[0], p1[1] - p0[1]}, e2{p2[0] - p1[0], p2[1] - p1[1]};
        if (detail::cross2(e1, e2) <= Rational(0))
            throw Error(ErrorKind::NonConvex, "points not in strictly convex position");
    }

    std::vector<Halfspace> hs;
    for (size_t i = 0; i < mv; ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % mv];
        RationalVector outward{q[1] - p[1], p[0] - q[0]};
        std::vector<Int> a = detail::primitive_integer(outward);
        hs.push_back(Halfspace{a, dot(a, p)});
    }
    detail::validate_halfspaces(vertices, hs, 2);
    return Polytope(2, PolytopeKind::Polygon2D, std::move(vertices), std::move(hs));
}

/**
 * Builds an n-simplex from n+1 affinely independent points (n <= 6).
 * Facet halfspaces are derived by the generalized cross product of the
 * facet's edge vectors, oriented away from the omitted vertex.
 */
inline Polytope build_simplex(std::vector<Point> vertices) {
    if (vertices.empty())
        throw Error(ErrorKind::InvalidParams, "simplex needs vertices");
    const int n = static_cast<int>(vertices[0].size());
    if (n < 1 || n > 6)
        throw Error(ErrorKind::DimensionTooLarge, "simplex dimension must be 1..6");
    if (static_cast<int>(vertices.size()) != n + 1)
        throw Error(ErrorKind::InvalidParams, "simplex needs n+1 vertices");
    detail::check_vertices(vertices, n);

    RationalMatrix E(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            E.at(i, j) = vertices[i + 1][j] - vertices[0][j];
    if (determinant(E).is_zero())
        throw Error(ErrorKind::AffinelyDependent, "simplex vertices affinely dependent");

    std::vector<Halfspace> hs;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<int> idx;
        for (int i = 0; i <= n; ++i)
            if (i != omit) idx.push_back(i);
        // normal_k = (-1)^k det(D without column k), D the (n-1) x n edge matrix
        RationalVector normal(n);
        for (int k = 0; k < n; ++k) {
            RationalMatrix D(n - 1, n - 1);
            for (int r = 0; r < n - 1; ++r) {
                int cc = 0;
                for (int col = 0; col < n; ++col) {
                    if (col == k) continue;
                    D.at(r, cc++) = vertices[idx[r + 1]][col] - vertices[idx[0]][col];
                }
            }
            Rational d = determinant(D);
            normal[k] = (k % 2 == 0) ? d : -d;
        }
        std::vector<Int> a = detail::primitive_integer(normal);
        Rational c = dot(a, vertices[idx[0]]);
        if (dot(a, vertices[omit]) > c) {
            for (Int& x : a) x = -x;
            c = -c;
        }
        hs.push_back(Halfspace{a, c});
    }
    detail::validate_halfspaces(vertices, hs, n);
    return Polytope(n, PolytopeKind::Simplex, std::move(vertices), std::move(hs));
}

/**
 * General polytope from user-supplied vertices and halfspaces. Normals are
 * made primitive; every vertex must satisfy every halfspace and each
 * halfspace must be tight at >= dim(P) vertices. Face enumeration and the
 * index quantities are not available for this kind.
 */
inline Polytope make_general(int n, std::vector<Point> vertices,
                             std::vector<Halfspace> halfspaces) {
    if (n < 1 || n > 6)
        throw Error(ErrorKind::DimensionTooLarge, "dimension must be 1..6");
    if (vertices.empty() || halfspaces.empty())
        throw Error(ErrorKind::InvalidParams, "general kind needs vertices and halfspaces");
    detail::check_vertices(vertices, n);
    for (Halfspace& h : halfspaces) {
        if (static_cast<int>(h.normal.size()) != n)
            throw Error(ErrorKind::InvalidParams, "halfspace normal has wrong dimension");
        Int g = 0;
        for (const Int& x : h.normal) g = gcd(g, x);
        if (g == 0)
            throw Error(ErrorKind::InvalidParams, "halfspace normal is zero");
        if (g != 1) {
            for (Int& x : h.normal) x /= g;
            h.offset /= Rational(g);
        }
    }
    Polytope p(n, PolytopeKind::General, std::move(vertices), std::move(halfspaces));
    detail::validate_halfspaces(p.vertices(), p.halfspaces(), p.dim());
    return p;
}

/// All i-faces of a polygon or simplex.
inline std::vector<FaceRef> faces(const Polytope& P, int i) {
    if (P.kind() == PolytopeKind::General)
        throw Error(ErrorKind::UnsupportedKind, "faces: unsupported for general kind");
    if (i < 0 || i > P.dim())
        throw Error(ErrorKind::InvalidParams, "faces: index out of range");
    std::vector<FaceRef> out;
    const int m = static_cast<int>(P.vertices().size());
    if (P.kind() == PolytopeKind::Polygon2D) {
        if (i == 0) {
            for (int k = 0; k < m; ++k) out.push_back({0, {k}});
        } else if (i == 1) {
            for (int k = 0; k < m; ++k) out.push_back({1, {k, (k + 1) % m}});
        } else {
            FaceRef whole{2, {}};
            for (int k = 0; k < m; ++k) whole.verts.push_back(k);
            out.push_back(std::move(whole));
        }
        return out;
    }
    // simplex: all (i+1)-subsets of the n+1 vertices, lexicographic
    std::vector<int> pick(i + 1);
    for (int k = 0; k <= i; ++k) pick[k] = k;
    for (;;) {
        out.push_back({i, pick});
        int k = i;
        while (k >= 0 && pick[k] == m - 1 - (i - k)) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j <= i; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// Affine hull of a face: first vertex as base, differences as directions.
inline AffineSubspace affine_hull(const Polytope& P, const FaceRef& f) {
    const std::vector<Point>& V = P.vertices();
    Point base = V.at(f.verts.at(0));
    std::vector<RationalVector> dirs;
    for (size_t k = 1; k < f.verts.size(); ++k) {
        RationalVector d(P.ambient_dim());
        for (int j = 0; j < P.ambient_dim(); ++j)
            d[j] = V[f.verts[k]][j] - base[j];
        dirs.push_back(std::move(d));
    }
    return AffineSubspace(std::move(base), drop_dependent_directions(dirs));
}

/// d(P): smallest positive integer k with kP integral (lcm of coordinate
/// denominators).
inline Int denominator(const Polytope& P) {
    Int d = 1;
    for (const Point& v : P.vertices())
        for (const Rational& x : v)
            d = lcm(d, x.den());
    return d;
}

/// q(P): smallest positive rational r with rP integral; equals rd_0(P).
inline Rational rational_denominator(const Polytope& P) {
    std::optional<Rational> acc;
    for (const Point& v : P.vertices()) {
        ScaleRequirement s = min_scale_point(v);
        if (s.is_free()) continue; // vertex at the origin
        acc = acc ? rat_lcm(*acc, s.value()) : s.value();
    }
    if (!acc)
        throw Error(ErrorKind::DegeneratePolytope,
                    "rational_denominator: polytope is the origin point");
    return *acc;
}

/// rd_i(P): smallest positive rational r with r aff(F) meeting Z^n for
/// every i-face F; Free faces are skipped, all-Free reports Free.
inline ScaleRequirement rational_i_index(const Polytope& P, int i) {
    std::optional<Rational> acc;
    for (const FaceRef& f : faces(P, i)) {
        ScaleRequirement s = min_scale_affine(affine_hull(P, f), P.ambient_dim());
        if (s.is_free()) continue;
        acc = acc ? rat_lcm(*acc, s.value()) : s.value();
    }
    return acc ? ScaleRequirement::finite(*acc) : ScaleRequirement::free();
}

/// d_i(P): smallest positive integer k with k aff(F) meeting Z^n for every
/// i-face F (nullopt when every face is Free). For a face with minimal
/// rational scale p/q the smallest working integer is p, so this is the
/// lcm of the numerators.
inline std::optional<Int> integer_i_index(const Polytope& P, int i) {
    std::optional<Int> acc;
    for (const FaceRef& f : faces(P, i)) {
        ScaleRequirement s = min_scale_affine(affine_hull(P, f), P.ambient_dim());
        if (s.is_free()) continue;
        Int p = s.value().num();
        acc = acc ? lcm(*acc, p) : p;
    }
    return acc;
}

/// Exact dim(P)-dimensional volume (shoelace for polygons, determinant
/// over n! for simplices).
inline Rational volume(const Polytope& P) {
    if (P.kind() == PolytopeKind::Polygon2D) {
        const std::vector<Point>& V = P.vertices();
        Rational s(0);
        for (size_t i = 0; i < V.size(); ++i) {
            const Point& a = V[i];
            const Point& b = V[(i + 1) % V.size()];
            s += a[0] * b[1] - b[0] * a[1];
        }
        return s / Rational(2); // positive: vertices are counterclockwise
    }
    if (P.kind() == PolytopeKind::Simplex) {
        const int n = P.ambient_dim();
        RationalMatrix E(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                E.at(i, j) = P.vertices()[i + 1][j] - P.vertices()[0][j];
        Rational d = abs(determinant(E));
        Int f = 1;
        for (int k = 2; k <= n; ++k) f *= k;
        return d / Rational(f);
    }
    throw Error(ErrorKind::UnsupportedKind, "volume: unsupported for general kind");
}

/// Vertex-wise scaling by s > 0; halfspace offsets scale along.
inline Polytope scale(const Polytope& P, const Rational& s) {
    if (s.sign() <= 0)
        throw Error(ErrorKind::DomainError, "scale: factor must be positive");
    std::vector<Point> verts = P.vertices();
    for (Point& v : verts)
        for (Rational& x : v) x *= s;
    std::vector<Halfspace> hs = P.halfspaces();
    for (Halfspace& h : hs) h.offset *= s;
    if (P.kind() == PolytopeKind::General)
        return make_general(P.ambient_dim(), std::move(verts), std::move(hs));
    if (P.kind() == PolytopeKind::Polygon2D)
        return build_polygon(std::move(verts));
    return build_simplex(std::move(verts));
}

/// Translation by an integer vector t; offsets become c + a.t.
inline Polytope translate(const Polytope& P, const std::vector<Int>& t) {
    if (static_cast<int>(t.size()) != P.ambient_dim())
        throw Error(ErrorKind::InvalidParams, "translate: dimension mismatch");
    std::vector<Point> verts = P.vertices();
    for (Point& v : verts)
        for (int j = 0; j < P.ambient_dim(); ++j) v[j] += Rational(t[j]);
    if (P.kind() == PolytopeKind::General) {
        std::vector<Halfspace> hs = P.halfspaces();
        for (Halfspace& h : hs) {
            Rational shift(0);
            for (int j = 0; j < P.ambient_dim(); ++j)
                shift += Rational(Int(h.normal[j] * t[j]));
            h.offset += shift;
        }
        return make_general(P.ambient_dim(), std::move(verts), std::move(hs));
    }
    if (P.kind() == PolytopeKind::Polygon2D)
        return build_polygon(std::move(verts));
    return build_simplex(std::move(verts));
}

/// Membership test against all halfspaces (strict: open interior).
inline bool contains(const Polytope& P, const Point& x, bool strict = false) {
    if (static_cast<int>(x.size()) != P.ambient_dim())
        throw Error(ErrorKind::InvalidParams, "contains: dimension mismatch");
    for (const Halfspace& h : P.halfspaces()) {
        Rational s = dot(h.normal, x);
        if (strict ? !(s < h.offset) : !(s <= h.offset)) return false;
    }
    return true;
}

} // namespace ehrhart
