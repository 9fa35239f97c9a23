#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "odw/diagram.hpp"
#include "odw/report.hpp"

namespace odw {

/**
 * Budget-bounded closure of the hull of terms reachable "from below" a
 * parameter alpha — an oracle for the collapse order that never invokes
 * the d-vs-d comparison clauses on its own account.  Members are generated,
 * not compared into existence:
 *
 *   seeds:   W, plus every enumerable term <= k_max(alpha) within budget;
 *   sum:     natural_sum of two members;
 *   power:   w^(member), collapsing to the member itself on epsilons;
 *   collapse: d(delta) for a member delta with delta < alpha;
 *
 * always discarding results with more than `budget` nodes.  d(alpha) is by
 * construction the least term missing from the hull, so membership of a
 * countable term is equivalent to sitting below d(alpha).
 */
struct HullSet {
  enum class Rule { Seed, Sum, Power, Collapse };

  struct Entry {
    Rule rule;
    std::vector<Diagram> operands;  // empty for seeds
    std::size_t order = 0;          // discovery sequence number
  };

  Diagram alpha;
  int budget = 0;
  std::map<Diagram, Entry, StructuralLess> entries;

  bool contains(const Diagram& t) const { return entries.count(t) != 0; }

  /// Members sorted ascending under `cmp` (the ordinal order, not the
  /// structural one).
  std::vector<Diagram> members_ascending(const DiagramCompare& cmp = {}) const;
};

/// Deterministic least fixed point of the closure rules.  Throws
/// std::invalid_argument for budget < 2 (no room for any d-term) and
/// propagates the enumeration cap.  Pass a comparator to run the closure
/// under a non-standard order (test fixtures); empty means the library
/// order.
HullSet saturate(const Diagram& alpha, int budget,
                 const DiagramCompare& cmp = {});

/// The two directions of the membership law, checked over `space`, plus the
/// countable-member shadow (members below W are below d(alpha)).
struct HullChecks {
  bool sound = true;     // member => its k-section sits below d(alpha)
  bool complete = true;  // k-section below d(alpha) and within budget => member
  std::size_t checked = 0;
  std::vector<Witness> witnesses;
};

HullChecks run_hull_checks(const HullSet& hull,
                           const std::vector<Diagram>& space,
                           const DiagramCompare& cmp = {});

/// run_hull_checks flattened into a PropertyReport (suite "hull").  Space
/// members must be normalized (std::invalid_argument otherwise); the
/// complete direction is only asserted for terms within the hull's budget.
PropertyReport check_hull_consistency(const Diagram& alpha, int budget,
                                      const std::vector<Diagram>& space,
                                      const DiagramCompare& cmp = {});

}  // namespace odw
