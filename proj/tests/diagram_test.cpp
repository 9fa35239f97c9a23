#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "odw/diagram.hpp"
#include "odw/parse.hpp"
#include "odw/space.hpp"

using namespace odw;

namespace {

Diagram dg(const std::string& text) { return normalize(parse_diagram(text)); }

char cmp_char(const std::string& a, const std::string& b) {
  return to_char(compare(dg(a), dg(b)));
}

// Independent section scan: iterative worklist instead of the library's
// recursive walk, collecting collapse nodes without entering them.
std::vector<Diagram> section_oracle(const Diagram& t) {
  std::set<Diagram, StructuralLess> found;
  std::vector<Diagram> todo{t};
  while (!todo.empty()) {
    Diagram cur = todo.back();
    todo.pop_back();
    switch (cur.kind()) {
      case Diagram::Kind::Collapse:
        found.insert(cur);
        break;
      case Diagram::Kind::Pow:
        todo.push_back(cur.child());
        break;
      case Diagram::Kind::Sum:
        for (const auto& p : cur.parts()) todo.push_back(p);
        break;
      default:
        break;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("node counting") {
    CHECK(node_count(Diagram::zero()) == 1);
    CHECK(node_count(Diagram::omega()) == 1);
    CHECK(node_count(dg("w^(0)")) == 2);
    CHECK(node_count(dg("d(W)")) == 2);
    CHECK(node_count(dg("W + W")) == 3);
    CHECK(node_count(dg("w^(d(W) + w^(0)) + d(0)")) == 9);
  }

  TEST_CASE("normalization collapses epsilon exponents") {
    CHECK(to_text(dg("w^(d(0))")) == "d(0)");
    CHECK(to_text(dg("w^(W)")) == "W");
    CHECK(to_text(dg("w^(w^(0))")) == "w^(w^(0))");
    CHECK(to_text(dg("w^(d(d(W)))")) == "d(d(W))");
  }

  TEST_CASE("normalization of sums") {
    CHECK(to_text(dg("W + 0")) == "W");
    CHECK(to_text(dg("0 + 0")) == "0");
    CHECK(to_text(dg("w^(0) + w^(W)")) == "W + w^(0)");
    CHECK(to_text(dg("w^(0) + W + w^(0)")) == "W + w^(0) + w^(0)");
    // Nested sums flatten.
    Diagram nested = Diagram::raw_sum(
        {parse_diagram("W"), parse_diagram("w^(0) + w^(0)")});
    CHECK(to_text(normalize(nested)) == "W + w^(0) + w^(0)");
  }

  TEST_CASE("normalize is idempotent and lands in normal form") {
    for (const char* text :
         {"w^(w^(W) + d(0))", "0 + w^(d(W)) + 0", "d(w^(W + 0))",
          "w^(0) + d(0) + W + W"}) {
      Diagram once = normalize(parse_diagram(text));
      CHECK(is_normal(once));
      CHECK(normalize(once) == once);
    }
    for (const Diagram& t : enumerate_diagrams(4).terms) {
      CHECK(is_normal(t));
      CHECK(normalize(t) == t);
    }
  }

  TEST_CASE("comparison of atoms, powers and sums") {
    CHECK(cmp_char("0", "0") == '=');
    CHECK(cmp_char("0", "w^(0)") == '<');
    CHECK(cmp_char("w^(0)", "W") == '<');
    CHECK(cmp_char("w^(0)", "w^(w^(0))") == '<');
    CHECK(cmp_char("W + W", "W") == '>');
    CHECK(cmp_char("W + w^(0)", "W + d(0)") == '<');
    CHECK(cmp_char("w^(W + W)", "W + W") == '>');
    CHECK(cmp_char("w^(w^(0)) + w^(0)", "w^(w^(0)) + w^(0)") == '=');
  }

  TEST_CASE("collapse terms sit below the big atom") {
    CHECK(cmp_char("d(0)", "W") == '<');
    CHECK(cmp_char("d(W + W)", "W") == '<');
    CHECK(cmp_char("d(d(W))", "W") == '<');
    CHECK(cmp_char("w^(0)", "d(0)") == '<');
  }

  TEST_CASE("collapse pairs follow the section clauses") {
    // Larger argument with a vacuous section wins.
    CHECK(cmp_char("d(0)", "d(W)") == '<');
    CHECK(cmp_char("d(W + w^(0))", "d(W)") == '>');
    // The section of the smaller side blocks or admits the step.
    CHECK(cmp_char("d(W)", "d(d(W))") == '<');
    CHECK(cmp_char("d(d(0))", "d(W)") == '<');
    CHECK(cmp_char("d(d(W))", "d(W)") == '>');
    CHECK(cmp_char("d(0)", "d(0)") == '=');
  }

  TEST_CASE("section extraction stops at the outermost collapse") {
    CHECK(k_section(dg("W + w^(0)")).empty());
    CHECK(k_section(dg("d(d(0))")) == KSection{dg("d(d(0))")});
    KSection sec = k_section(dg("w^(d(W) + w^(0)) + d(0)"));
    REQUIRE(sec.size() == 2);
    CHECK(sec[0] == dg("d(0)"));
    CHECK(sec[1] == dg("d(W)"));
  }

  TEST_CASE("section extraction agrees with an independent scan") {
    for (const Diagram& t : enumerate_diagrams(5).terms) {
      CHECK(k_section(t) == section_oracle(t));
    }
  }

  TEST_CASE("section maximum") {
    CHECK(k_max(dg("W + W")) == Diagram::zero());
    CHECK(k_max(dg("w^(d(W) + w^(0)) + d(0)")) == dg("d(W)"));
    CHECK(k_max(dg("d(0) + d(0)")) == dg("d(0)"));
  }

  TEST_CASE("natural sum merges part lists") {
    CHECK(to_text(natural_sum(dg("W + w^(0)"), dg("W + d(0)"))) ==
          "W + W + d(0) + w^(0)");
    CHECK(natural_sum(dg("0"), dg("d(0)")) == dg("d(0)"));
    CHECK(natural_sum(dg("w^(0)"), dg("0")) == dg("w^(0)"));
    CHECK(to_text(natural_sum(dg("w^(0)"), dg("W"))) == "W + w^(0)");
  }

  TEST_CASE("natural sum is commutative and associative") {
    const auto space = enumerate_diagrams(3).terms;
    for (const Diagram& a : space) {
      for (const Diagram& b : space) {
        CHECK(natural_sum(a, b) == natural_sum(b, a));
        for (const Diagram& c : space) {
          CHECK(natural_sum(natural_sum(a, b), c) ==
                natural_sum(a, natural_sum(b, c)));
        }
      }
    }
  }

  TEST_CASE("natural sum is strictly monotone") {
    const auto space = enumerate_diagrams(3).terms;
    for (const Diagram& a : space) {
      for (const Diagram& b : space) {
        if (compare(a, b) != Ordering3::Less) continue;
        for (const Diagram& c : space) {
          CHECK(compare(natural_sum(a, c), natural_sum(b, c)) ==
                Ordering3::Less);
        }
      }
    }
  }

  TEST_CASE("collapse-compatible order") {
    CHECK(collapsibly_less(dg("0"), dg("W")));
    CHECK(collapsibly_less(dg("W"), dg("W + w^(0)")));
    CHECK_FALSE(collapsibly_less(dg("d(0)"), dg("0")));
    CHECK_FALSE(collapsibly_less(dg("d(W)"), dg("W")));
    CHECK_FALSE(collapsibly_less(dg("W"), dg("W")));
    CHECK(collapsibly_less(dg("d(0)"), dg("W")));
  }

  TEST_CASE("printing and comparison agree on equality") {
    const auto space = enumerate_diagrams(4).terms;
    for (const Diagram& a : space) {
      for (const Diagram& b : space) {
        const bool same_text = to_text(a) == to_text(b);
        const bool same_order = compare(a, b) == Ordering3::Equal;
        CHECK(same_text == same_order);
      }
    }
  }
}
