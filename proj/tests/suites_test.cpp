#include <string>

#include "doctest.h"
#include "odw/diagram.hpp"
#include "odw/parse.hpp"
#include "odw/space.hpp"
#include "odw/suites.hpp"

using namespace odw;

namespace {

Diagram dg(const std::string& text) { return normalize(parse_diagram(text)); }

Ordering3 lib_cmp(const Diagram& a, const Diagram& b) { return compare(a, b); }

// Swaps the verdict on one fixed non-adjacent pair, leaving reversal
// symmetry intact; only the transitivity pass can notice.
Ordering3 swapped_pair_cmp(const Diagram& a, const Diagram& b) {
  const Diagram zero = Diagram::zero();
  const Diagram dzero = Diagram::collapse(Diagram::zero());
  if (a == zero && b == dzero) return Ordering3::Greater;
  if (a == dzero && b == zero) return Ordering3::Less;
  return compare(a, b);
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("order axioms pass exhaustively on small spaces") {
    PropertyReport r = check_total_order(enumerate_diagrams(4), lib_cmp);
    CHECK(r.pass);
    // reflexive + pairs + all triples
    CHECK(r.checked == 21 + 210 + 21 * 21 * 21);
  }

  TEST_CASE("a swapped pair is caught by the transitivity pass") {
    PropertyReport r =
        check_total_order(enumerate_diagrams(2), swapped_pair_cmp);
    CHECK_FALSE(r.pass);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses[0].terms.size() == 3);
  }

  TEST_CASE("sampling is reproducible") {
    TripleSampling s{500, 42};
    PropertyReport a = check_total_order(enumerate_diagrams(3), lib_cmp, s);
    PropertyReport b = check_total_order(enumerate_diagrams(3), lib_cmp, s);
    CHECK(a.pass);
    CHECK(a.checked == b.checked);
    CHECK(a.checked == 10 + 45 + 500);
  }

  TEST_CASE("collapse fact suites pass on small spaces") {
    PropertyReport facts =
        check_collapse_facts(enumerate_diagrams(4), enumerate_diagrams(3));
    CHECK(facts.pass);
    PropertyReport inj = check_collapse_injectivity(enumerate_diagrams(4));
    CHECK(inj.pass);
    PropertyReport forms = check_collapsibly_less_forms(enumerate_diagrams(4));
    CHECK(forms.pass);
  }

  TEST_CASE("veblen laws pass on the small space") {
    PropertyReport r = check_veblen_laws(enumerate_vterms(5));
    CHECK(r.pass);
    CHECK(r.checked > 0);
  }

  TEST_CASE("roundtrip suites pass") {
    CHECK(check_roundtrip(enumerate_diagrams(4)).pass);
    CHECK(check_roundtrip(enumerate_vterms(5)).pass);
    CHECK(check_roundtrip(enumerate_piterms(3)).pass);
  }

  TEST_CASE("greedy descent walks the immediate predecessors") {
    DiagramSpace space = enumerate_diagrams(5);
    DescentResult r = descent_search(space, dg("w^(0) + w^(0)"),
                                     {DescentPolicy::Kind::GreedyMax, 0}, 100);
    REQUIRE(r.chain.size() == 3);
    CHECK(to_text(r.chain[0]) == "w^(0) + w^(0)");
    CHECK(to_text(r.chain[1]) == "w^(0)");
    CHECK(to_text(r.chain[2]) == "0");
    CHECK_FALSE(r.truncated);
  }

  TEST_CASE("descent from the bottom stops immediately") {
    DescentResult r = descent_search(enumerate_diagrams(4), Diagram::zero(),
                                     {DescentPolicy::Kind::GreedyMax, 0}, 100);
    CHECK(r.chain.size() == 1);
    CHECK_FALSE(r.truncated);
  }

  TEST_CASE("step caps mark the walk truncated") {
    DescentResult r = descent_search(enumerate_diagrams(4), Diagram::omega(),
                                     {DescentPolicy::Kind::GreedyMax, 0}, 2);
    CHECK(r.chain.size() == 3);
    CHECK(r.truncated);
  }

  TEST_CASE("random descent is seed-deterministic and strictly descending") {
    DiagramSpace space = enumerate_diagrams(5);
    DescentResult a = descent_search(space, Diagram::omega(),
                                     {DescentPolicy::Kind::Random, 7}, 1000);
    DescentResult b = descent_search(space, Diagram::omega(),
                                     {DescentPolicy::Kind::Random, 7}, 1000);
    REQUIRE(a.chain.size() == b.chain.size());
    for (std::size_t i = 0; i < a.chain.size(); ++i) {
      CHECK(a.chain[i] == b.chain[i]);
    }
    CHECK_FALSE(a.truncated);
    CHECK(a.chain.back() == Diagram::zero());
  }

  TEST_CASE("batched descents terminate") {
    PropertyReport r = check_descent_batch(enumerate_diagrams(4), 50, 1000, 3);
    CHECK(r.pass);
    CHECK(r.checked == 50);
    CHECK(r.witness_total == 0);
    CHECK(r.witnesses.empty());
  }
}
