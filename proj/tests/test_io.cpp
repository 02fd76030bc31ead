#include "doctest.h"

#include <sstream>

#include "ehrhart/io.hpp"
#include "fixtures.hpp"

using namespace ehrhart;

namespace {

Polytope reparse(const Polytope& P) {
    std::ostringstream os;
    write_polytope(os, P);
    std::istringstream is(os.str());
    return parse_polytope(is);
}

std::string text_of(const Polytope& P) {
    std::ostringstream os;
    write_polytope(os, P);
    return os.str();
}

} // namespace

TEST_CASE("parse_rational: strict forms") {
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1//2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("+3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("polytope files round-trip bit-exactly") {
    for (const Polytope& P : {fixtures::t1(), fixtures::unit_square(), fixtures::tri011(),
                              fixtures::seg1d(), fixtures::simplex3d(), fixtures::seg2d()}) {
        Polytope Q = reparse(P);
        CHECK(Q.vertices() == P.vertices());
        CHECK(Q.ambient_dim() == P.ambient_dim());
        CHECK(Q.kind() == P.kind());
        REQUIRE(Q.halfspaces().size() == P.halfspaces().size());
        for (size_t i = 0; i < Q.halfspaces().size(); ++i) {
            CHECK(Q.halfspaces()[i].normal == P.halfspaces()[i].normal);
            CHECK(Q.halfspaces()[i].offset == P.halfspaces()[i].offset);
        }
        // serialized form is a fixed point
        CHECK(text_of(Q) == text_of(P));
    }
}

TEST_CASE("parse_polytope: comments, blank lines, vertex order freedom") {
    std::istringstream is(
        "# a comment line\n"
        "dim 2   # trailing comment\n"
        "\n"
        "kind polygon\n"
        "0 1\n"
        "1 0 # shuffled corner\n"
        "0 0\n"
        "1 1\n");
    Polytope P = parse_polytope(is);
    CHECK(P.vertices() == fixtures::unit_square().vertices());
}

TEST_CASE("parse_polytope: error positions") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream is(text);
        try {
            parse_polytope(is);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("dim 2\nkind polygon\n0 0\n1//2 0\n1 1\n", 4);
    expect_line("kind polygon\ndim 2\n", 1);
    expect_line("dim 2\nkind sphere\n", 2);
    expect_line("dim 2\nkind polygon\n0 0 0\n", 3);
    expect_line("dim 2\nkind general\n0 0\nhalfspaces\n1 0\n", 5);
    expect_line("dim two\nkind polygon\n", 1);
}

TEST_CASE("parse_polytope: structural errors") {
    std::istringstream no_hs("dim 2\nkind general\n0 0\n1 0\n");
    CHECK_THROWS_AS(parse_polytope(no_hs), ParseError);
    std::istringstream hs_for_polygon(
        "dim 2\nkind polygon\n0 0\n1 0\n1 1\nhalfspaces\n1 0 1\n");
    CHECK_THROWS_AS(parse_polytope(hs_for_polygon), ParseError);
    std::istringstream wrong_dim_polygon("dim 3\nkind polygon\n0 0 0\n1 0 0\n1 1 0\n");
    CHECK_THROWS_AS(parse_polytope(wrong_dim_polygon), ParseError);
    // domain-level failures surface as Error, not ParseError
    std::istringstream collinear("dim 2\nkind polygon\n0 0\n1 1\n2 2\n3 3\n");
    CHECK_THROWS_AS(parse_polytope(collinear), Error);
}
