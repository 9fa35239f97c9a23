#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "odw/diagram.hpp"
#include "odw/hull.hpp"
#include "odw/parse.hpp"
#include "odw/space.hpp"

using namespace odw;

namespace {

Diagram dg(const std::string& text) { return normalize(parse_diagram(text)); }

// Comparator mutant: flips the verdict on every distinct collapse pair.
// Saturation itself barely uses those clauses, so the membership checks
// must catch the disagreement.
DiagramCompare collapse_pair_flipped() {
  return [](const Diagram& a, const Diagram& b) {
    Ordering3 c = compare(a, b);
    if (a.is(Diagram::Kind::Collapse) && b.is(Diagram::Kind::Collapse) &&
        c != Ordering3::Equal) {
      return reverse(c);
    }
    return c;
  };
}

}  // namespace

TEST_SUITE("hull") {
  TEST_CASE("a zero argument admits no collapse members") {
    HullSet hull = saturate(Diagram::zero(), 4);
    CHECK(hull.contains(dg("W")));
    CHECK(hull.contains(dg("0")));
    CHECK(hull.contains(dg("w^(w^(0))")));
    CHECK_FALSE(hull.contains(dg("d(0)")));
    for (const auto& [term, entry] : hull.entries) {
      CHECK(entry.rule != HullSet::Rule::Collapse);
      CHECK(k_section(term).empty());
    }
  }

  TEST_CASE("the big atom is always a member") {
    for (const Diagram& alpha : enumerate_diagrams(2).terms) {
      CHECK(saturate(alpha, 4).contains(Diagram::omega()));
    }
  }

  TEST_CASE("members stay within budget") {
    HullSet hull = saturate(dg("W"), 5);
    CHECK(!hull.entries.empty());
    for (const auto& [term, entry] : hull.entries) {
      CHECK(node_count(term) <= 5);
    }
  }

  TEST_CASE("larger budgets only add members") {
    for (const Diagram& alpha : enumerate_diagrams(2).terms) {
      HullSet small = saturate(alpha, 4);
      HullSet large = saturate(alpha, 6);
      for (const auto& [term, entry] : small.entries) {
        CHECK(large.contains(term));
      }
    }
  }

  TEST_CASE("saturation is deterministic") {
    HullSet a = saturate(dg("d(W)"), 6);
    HullSet b = saturate(dg("d(W)"), 6);
    REQUIRE(a.entries.size() == b.entries.size());
    auto ita = a.entries.begin();
    auto itb = b.entries.begin();
    for (; ita != a.entries.end(); ++ita, ++itb) {
      CHECK(ita->first == itb->first);
      CHECK(ita->second.rule == itb->second.rule);
      CHECK(ita->second.order == itb->second.order);
      CHECK(ita->second.operands == itb->second.operands);
    }
  }

  TEST_CASE("every entry re-derives from its recorded rule") {
    HullSet hull = saturate(dg("W + w^(0)"), 6);
    for (const auto& [term, entry] : hull.entries) {
      switch (entry.rule) {
        case HullSet::Rule::Seed:
          CHECK(entry.operands.empty());
          break;
        case HullSet::Rule::Sum:
          REQUIRE(entry.operands.size() == 2);
          CHECK(natural_sum(entry.operands[0], entry.operands[1]) == term);
          CHECK(hull.contains(entry.operands[0]));
          CHECK(hull.contains(entry.operands[1]));
          break;
        case HullSet::Rule::Power:
          REQUIRE(entry.operands.size() == 1);
          CHECK(Diagram::omega_pow(entry.operands[0]) == term);
          CHECK(hull.contains(entry.operands[0]));
          break;
        case HullSet::Rule::Collapse:
          REQUIRE(entry.operands.size() == 1);
          CHECK(Diagram::collapse(entry.operands[0]) == term);
          CHECK(hull.contains(entry.operands[0]));
          CHECK(compare(entry.operands[0], hull.alpha) == Ordering3::Less);
          break;
      }
    }
  }

  TEST_CASE("membership of countable terms tracks the comparator") {
    for (const Diagram& alpha : enumerate_diagrams(2).terms) {
      HullSet hull = saturate(alpha, 6);
      Diagram bound = Diagram::collapse(alpha);
      for (const Diagram& xi : enumerate_diagrams(3).terms) {
        if (compare(xi, Diagram::omega()) != Ordering3::Less) continue;
        CHECK(hull.contains(xi) ==
              (compare(xi, bound) == Ordering3::Less));
      }
    }
  }

  TEST_CASE("collapse-compatible pairs force membership of the collapse") {
    const auto alphas = enumerate_diagrams(2).terms;
    for (const Diagram& a : alphas) {
      for (const Diagram& b : alphas) {
        if (!collapsibly_less(a, b)) continue;
        HullSet hull = saturate(b, 6);
        CHECK(hull.contains(Diagram::collapse(a)));
        CHECK(compare(Diagram::collapse(a), Diagram::collapse(b)) ==
              Ordering3::Less);
      }
    }
  }

  TEST_CASE("membership agreement over a small grid") {
    const auto probe = enumerate_diagrams(4).terms;
    for (const Diagram& alpha : enumerate_diagrams(2).terms) {
      PropertyReport r = check_hull_consistency(alpha, 6, probe);
      CHECK(r.pass);
      CHECK(r.checked > 0);
    }
  }

  TEST_CASE("members come back ascending") {
    HullSet hull = saturate(dg("W"), 5);
    auto members = hull.members_ascending();
    REQUIRE(members.size() == hull.entries.size());
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      CHECK(compare(members[i], members[i + 1]) == Ordering3::Less);
    }
  }

  TEST_CASE("a flipped comparator is caught by the checks") {
    PropertyReport r = check_hull_consistency(
        dg("W"), 5, enumerate_diagrams(3).terms, collapse_pair_flipped());
    CHECK_FALSE(r.pass);
    CHECK(r.witness_total > 0);
    REQUIRE(!r.witnesses.empty());
    CHECK(!r.witnesses[0].terms.empty());
  }

  TEST_CASE("degenerate budgets are rejected") {
    CHECK_THROWS_AS(saturate(Diagram::zero(), 1), std::invalid_argument);
    CHECK_THROWS_AS(saturate(Diagram::zero(), -1), std::invalid_argument);
  }

  TEST_CASE("non-normal probe terms are rejected") {
    std::vector<Diagram> bad{Diagram::raw_pow(Diagram::omega())};
    CHECK_THROWS_AS(check_hull_consistency(Diagram::zero(), 4, bad),
                    std::invalid_argument);
  }
}
