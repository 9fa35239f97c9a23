#include <string>

#include "doctest.h"
#include "odw/parse.hpp"
#include "odw/space.hpp"
#include "odw/veblen.hpp"

using namespace odw;

namespace {

VTerm vt(const std::string& text) { return normalize(parse_vterm(text)); }

}  // namespace

TEST_SUITE("veblen") {
  TEST_CASE("fixed-point collapse in the constructor") {
    // phi(0, x) = x when x is a phi-value at a bigger index.
    VTerm inner = vt("phi(phi(0, 0), 0)");
    CHECK(VTerm::phi(VTerm::zero(), inner) == inner);
    CHECK(vt("phi(0, phi(phi(0, 0), 0))") == inner);
    // No collapse at equal or smaller index.
    CHECK(vt("phi(0, phi(0, 0))") != vt("phi(0, 0)"));
    CHECK(is_normal(vt("phi(phi(0, 0), phi(0, 0))")));
  }

  TEST_CASE("absorption law re-derives the fixed point") {
    // Every phi-value at a positive index absorbs phi(0, -): applying the
    // outer layer explicitly gives back the same term, three layers deep.
    VTerm t = vt("phi(phi(0, 0), 0)");
    for (int i = 0; i < 3; ++i) {
      t = VTerm::phi(VTerm::zero(), t);
      CHECK(compare(t, vt("phi(phi(0, 0), 0)")) == Ordering3::Equal);
    }
  }

  TEST_CASE("comparison chain of small values") {
    CHECK(compare(vt("0"), vt("phi(0, 0)")) == Ordering3::Less);
    CHECK(compare(vt("phi(0, 0)"), vt("phi(0, phi(0, 0))")) ==
          Ordering3::Less);
    CHECK(compare(vt("phi(0, phi(0, 0))"), vt("phi(phi(0, 0), 0)")) ==
          Ordering3::Less);
    CHECK(compare(vt("phi(phi(0, 0), 0)"), vt("phi(0, 0)")) ==
          Ordering3::Greater);
    CHECK(compare(vt("phi(0, 0) + phi(0, 0)"), vt("phi(0, 0)")) ==
          Ordering3::Greater);
    CHECK(compare(vt("phi(0, 0) + phi(0, 0)"), vt("phi(0, phi(0, 0))")) ==
          Ordering3::Less);
  }

  TEST_CASE("index argument dominates when the other side is small") {
    // phi(a1, b1) vs phi(a2, b2) with a1 < a2 reduces to b1 vs the whole
    // right side.
    VTerm lhs = vt("phi(0, phi(phi(0, 0), 0))");  // collapses to inner
    CHECK(lhs == vt("phi(phi(0, 0), 0)"));
    CHECK(compare(vt("phi(0, phi(0, phi(0, 0)))"), vt("phi(phi(0, 0), 0)")) ==
          Ordering3::Less);
  }

  TEST_CASE("sum normalization sorts descending") {
    CHECK(to_text(vt("phi(0, 0) + phi(phi(0, 0), 0)")) ==
          "phi(phi(0, 0), 0) + phi(0, 0)");
    CHECK(to_text(vt("phi(0, 0) + 0 + phi(0, 0)")) ==
          "phi(0, 0) + phi(0, 0)");
  }

  TEST_CASE("raw trees normalize to enumerated forms") {
    VTerm raw = VTerm::raw_phi(VTerm::zero(),
                               VTerm::raw_phi(vt("phi(0, 0)"), VTerm::zero()));
    CHECK_FALSE(is_normal(raw));
    CHECK(is_normal(normalize(raw)));
    for (const VTerm& t : enumerate_vterms(5).terms) {
      CHECK(is_normal(t));
      CHECK(normalize(t) == t);
    }
  }
}
