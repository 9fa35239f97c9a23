#include "odw/hull.hpp"

#include <algorithm>
#include <stdexcept>

#include "odw/space.hpp"

namespace odw {

namespace {

DiagramCompare or_default(const DiagramCompare& cmp) {
  return cmp ? cmp : natural_order();
}

bool leq(const DiagramCompare& cmp, const Diagram& a, const Diagram& b) {
  return cmp(a, b) != Ordering3::Greater;
}

}  // namespace

std::vector<Diagram> HullSet::members_ascending(
    const DiagramCompare& cmp) const {
  DiagramCompare c = or_default(cmp);
  std::vector<Diagram> out;
  out.reserve(entries.size());
  for (const auto& [term, entry] : entries) out.push_back(term);
  std::sort(out.begin(), out.end(), [&](const Diagram& x, const Diagram& y) {
    return c(x, y) == Ordering3::Less;
  });
  return out;
}

HullSet saturate(const Diagram& alpha, int budget, const DiagramCompare& cmp0) {
  if (budget < 2) {
    throw std::invalid_argument("saturation budget must be >= 2");
  }
  DiagramCompare cmp = or_default(cmp0);
  HullSet hull;
  hull.alpha = alpha;
  hull.budget = budget;
  std::size_t order = 0;
  const std::size_t max_nodes = static_cast<std::size_t>(budget);

  auto try_insert = [&](Diagram t, HullSet::Rule rule,
                        std::vector<Diagram> operands) -> bool {
    if (node_count(t) > max_nodes) return false;
    auto [it, inserted] = hull.entries.try_emplace(
        std::move(t), HullSet::Entry{rule, std::move(operands), order});
    if (inserted) ++order;
    return inserted;
  };

  // Seeds: W and the closed initial segment [0, k_max(alpha)].
  const Diagram kmax = k_max(alpha);
  try_insert(Diagram::omega(), HullSet::Rule::Seed, {});
  for (const Diagram& t : enumerate_diagrams(budget).terms) {
    if (leq(cmp, t, kmax)) try_insert(t, HullSet::Rule::Seed, {});
  }

  // Closure rounds: apply each rule to every pair involving a member that
  // is new since the previous round.  Iteration over the structural map is
  // deterministic, so discovery order and traces are reproducible.
  std::vector<Diagram> fresh;
  for (const auto& [term, entry] : hull.entries) fresh.push_back(term);
  while (!fresh.empty()) {
    std::vector<Diagram> members;
    members.reserve(hull.entries.size());
    for (const auto& [term, entry] : hull.entries) members.push_back(term);
    std::vector<Diagram> next;
    auto note = [&](const Diagram& t, HullSet::Rule rule,
                    std::vector<Diagram> ops) {
      if (try_insert(t, rule, std::move(ops))) {
        next.push_back(hull.entries.find(t)->first);
      }
    };
    for (const Diagram& t : fresh) {
      note(Diagram::omega_pow(t), HullSet::Rule::Power, {t});
      if (cmp(t, alpha) == Ordering3::Less) {
        note(Diagram::collapse(t), HullSet::Rule::Collapse, {t});
      }
    }
    for (const Diagram& a : members) {
      for (const Diagram& b : fresh) {
        note(natural_sum(a, b), HullSet::Rule::Sum, {a, b});
      }
    }
    fresh = std::move(next);
  }
  return hull;
}

HullChecks run_hull_checks(const HullSet& hull,
                           const std::vector<Diagram>& space,
                           const DiagramCompare& cmp0) {
  DiagramCompare cmp = or_default(cmp0);
  HullChecks out;
  const Diagram bound = Diagram::collapse(hull.alpha);
  const std::size_t max_nodes = static_cast<std::size_t>(hull.budget);
  for (const Diagram& xi : space) {
    const bool member = hull.contains(xi);
    bool section_ok = true;
    for (const Diagram& m : k_section(xi)) {
      if (cmp(m, bound) != Ordering3::Less) {
        section_ok = false;
        break;
      }
    }
    ++out.checked;
    if (member && !section_ok) {
      out.sound = false;
      if (out.witnesses.size() < PropertyReport::kMaxWitnesses) {
        out.witnesses.push_back(
            {{to_text(xi), to_text(hull.alpha)},
             "member's d-subterms all below " + to_text(bound),
             "a d-subterm is not below it"});
      }
    }
    ++out.checked;
    if (!member && section_ok && node_count(xi) <= max_nodes) {
      out.complete = false;
      if (out.witnesses.size() < PropertyReport::kMaxWitnesses) {
        out.witnesses.push_back(
            {{to_text(xi), to_text(hull.alpha)},
             "term with d-subterms below " + to_text(bound) +
                 " generated within budget",
             "not a member"});
      }
    }
    // Countable members lie below d(alpha).
    ++out.checked;
    if (member && cmp(xi, Diagram::omega()) == Ordering3::Less &&
        cmp(xi, bound) != Ordering3::Less) {
      out.sound = false;
      if (out.witnesses.size() < PropertyReport::kMaxWitnesses) {
        out.witnesses.push_back({{to_text(xi), to_text(hull.alpha)},
                                 "countable member below " + to_text(bound),
                                 "not below it"});
      }
    }
  }
  return out;
}

PropertyReport check_hull_consistency(const Diagram& alpha, int budget,
                                      const std::vector<Diagram>& space,
                                      const DiagramCompare& cmp0) {
  for (const Diagram& xi : space) {
    if (!is_normal(xi)) {
      throw std::invalid_argument("space contains a non-normal term: " +
                                  to_text(xi));
    }
  }
  DiagramCompare cmp = or_default(cmp0);
  HullSet hull = saturate(alpha, budget, cmp);
  HullChecks checks = run_hull_checks(hull, space, cmp);
  PropertyReport report;
  report.suite = "hull";
  report.checked = checks.checked;
  for (const Witness& w : checks.witnesses) {
    report.add_witness(w.terms, w.expected, w.actual);
  }
  report.witness_total = checks.witnesses.size();
  report.pass = checks.sound && checks.complete;
  return report;
}

}  // namespace odw
