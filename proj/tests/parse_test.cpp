#include <string>

#include "doctest.h"
#include "odw/parse.hpp"
#include "odw/space.hpp"

using namespace odw;

namespace {

template <class Fn>
ParseError capture(Fn&& parse_call) {
  try {
    parse_call();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, "");
}

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("whitespace is insignificant") {
    CHECK(parse_diagram("w^(  d( W )+ w^(0) )") ==
          parse_diagram("w^(d(W) + w^(0))"));
    CHECK(parse_vterm(" phi( 0,0 ) ") == parse_vterm("phi(0, 0)"));
    CHECK(parse_piterm("D1( p )+D0(0)") == parse_piterm("D1(p) + D0(0)"));
  }

  TEST_CASE("sums parse flat") {
    Diagram t = parse_diagram("W + w^(0) + 0");
    REQUIRE(t.is(Diagram::Kind::Sum));
    CHECK(t.parts().size() == 3);
  }

  TEST_CASE("non-normal input is accepted raw") {
    Diagram t = parse_diagram("w^(W)");
    CHECK(t.is(Diagram::Kind::Pow));
    CHECK_FALSE(is_normal(t));
    CHECK(to_text(normalize(t)) == "W");
    Diagram z = parse_diagram("0 + 0");
    CHECK(z.is(Diagram::Kind::Sum));
    CHECK(to_text(normalize(z)) == "0");
  }

  TEST_CASE("plus binding of the small atoms") {
    // An immediately attached '+' extends the atom; a spaced one is a sum.
    PiTerm spaced = parse_piterm("s + s");
    REQUIRE(spaced.is(PiTerm::Kind::Sum));
    CHECK(spaced.parts().size() == 2);
    CHECK(spaced.parts()[0].is(PiTerm::Kind::Sigma));
    CHECK(parse_piterm("s+").is(PiTerm::Kind::SigmaPlus));
    CHECK(parse_piterm("p+").is(PiTerm::Kind::PiPlus));
    PiTerm mixed = parse_piterm("s+ + s");
    REQUIRE(mixed.is(PiTerm::Kind::Sum));
    CHECK(mixed.parts()[0].is(PiTerm::Kind::SigmaPlus));
    CHECK(mixed.parts()[1].is(PiTerm::Kind::Sigma));
    // 's+s' reads as the atom 's+' followed by junk.
    ParseError e = capture([] { return parse_piterm("s+s"); });
    CHECK(e.offset == 2);
  }

  TEST_CASE("error offsets point at the failure") {
    ParseError e1 = capture([] { return parse_diagram("w^(0"); });
    CHECK(e1.offset == 4);
    CHECK(e1.expected == "')'");

    ParseError e2 = capture([] { return parse_diagram(""); });
    CHECK(e2.offset == 0);

    ParseError e3 = capture([] { return parse_diagram("W + + W"); });
    CHECK(e3.offset == 4);

    ParseError e4 = capture([] { return parse_vterm("phi(0; 0)"); });
    CHECK(e4.offset == 5);
    CHECK(e4.expected == "','");

    ParseError e5 = capture([] { return parse_diagram("W W"); });
    CHECK(e5.offset == 2);

    ParseError e6 = capture([] { return parse_piterm("D2(0)"); });
    CHECK(e6.offset == 0);
  }

  TEST_CASE("messages carry the expectation and position") {
    ParseError e = capture([] { return parse_diagram("w^(0"); });
    CHECK(std::string(e.what()) == "expected ')' at offset 4");
  }

  TEST_CASE("printed normal forms parse back to the same tree") {
    for (const Diagram& t : enumerate_diagrams(5).terms) {
      CHECK(parse_diagram(to_text(t)) == t);
    }
    for (const VTerm& t : enumerate_vterms(5).terms) {
      CHECK(parse_vterm(to_text(t)) == t);
    }
    for (const PiTerm& t : enumerate_piterms(4).terms) {
      CHECK(parse_piterm(to_text(t)) == t);
    }
  }
}
