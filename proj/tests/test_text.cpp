#include <doctest.h>

#include "helpers.hpp"

using namespace hbn;

TEST_CASE("parse basics") {
    CHECK(parse_tree("e") == Num{});
    CHECK(parse_tree("w(v(e,[]),[e,e,e])") == t(42));
    CHECK(parse_tree(" w( v(e,[]) , [ e, e ,e ] ) ") == t(42));
}

TEST_CASE("render matches the term syntax") {
    CHECK(render_tree(Num{}) == "e");
    CHECK(render_tree(t(5)) == "v(e,[e])");
    CHECK(render_tree(t(42)) == "w(v(e,[]),[e,e,e])");
}

TEST_CASE("round trip on sampled values") {
    for (std::uint64_t k = 0; k < 2000; ++k)
        CHECK(parse_tree(render_tree(t(k))) == t(k));
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_tree("v(e)"), ParseError);
    CHECK_THROWS_AS(parse_tree("x"), ParseError);
    CHECK_THROWS_AS(parse_tree("v(e,[e"), ParseError);
    CHECK_THROWS_AS(parse_tree("e junk"), ParseError);
    try {
        parse_tree("v(e;[])");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}
