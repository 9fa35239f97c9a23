#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "odw/diagram.hpp"
#include "odw/report.hpp"
#include "odw/space.hpp"

namespace odw {

/// Random triple sampling for the transitivity pass of check_total_order;
/// nullopt means every triple is checked.
struct TripleSampling {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

/**
 * Order axioms over a term space: irreflexivity (a term compares Equal to
 * itself), trichotomy/antisymmetry (distinct terms compare strictly one
 * way, and the reversed pair agrees), and transitivity.
 */
template <class Term, class Cmp>
PropertyReport check_total_order(
    const BasicSpace<Term>& space, Cmp cmp,
    const std::optional<TripleSampling>& sampling = std::nullopt) {
  PropertyReport report;
  report.suite = "order";
  const auto& ts = space.terms;
  const std::size_t n = ts.size();
  for (std::size_t i = 0; i < n; ++i) {
    ++report.checked;
    if (cmp(ts[i], ts[i]) != Ordering3::Equal) {
      report.add_witness({to_text(ts[i])}, "term compares equal to itself",
                         to_word(cmp(ts[i], ts[i])));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.checked;
      const Ordering3 ij = cmp(ts[i], ts[j]);
      const Ordering3 ji = cmp(ts[j], ts[i]);
      if (ij == Ordering3::Equal || ji != reverse(ij)) {
        report.add_witness({to_text(ts[i]), to_text(ts[j])},
                           "distinct terms strictly ordered, reversal agrees",
                           std::string(to_word(ij)) + " / " + to_word(ji));
      }
    }
  }
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++report.checked;
    if (cmp(ts[a], ts[b]) == Ordering3::Less &&
        cmp(ts[b], ts[c]) == Ordering3::Less &&
        cmp(ts[a], ts[c]) != Ordering3::Less) {
      report.add_witness({to_text(ts[a]), to_text(ts[b]), to_text(ts[c])},
                         "order is transitive",
                         "a < b and b < c but not a < c");
    }
  };
  if (sampling) {
    std::mt19937_64 rng(sampling->seed);
    for (std::size_t k = 0; k < sampling->count && n > 0; ++k) {
      check_triple(rng() % n, rng() % n, rng() % n);
    }
  } else {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  }
  return report;
}

/**
 * The collapse-order facts of the base system, over `space` (with the
 * universally quantified side of the conditional fact drawn from
 * `alpha_space`):
 *   every d(a) is below W;
 *   every member of k_section(a) is below d(a) and at most a;
 *   a term b below W whose k-section is below d(a) is itself below d(a).
 */
PropertyReport check_collapse_facts(const DiagramSpace& space,
                                    const DiagramSpace& alpha_space);

/// No two distinct terms collapse to the same d-term.
PropertyReport check_collapse_injectivity(const DiagramSpace& space);

/// collapsibly_less(a, b) agrees with "d(a) < d(b) and a < b" on all pairs.
PropertyReport check_collapsibly_less_forms(const DiagramSpace& space);

/**
 * Veblen laws, exhaustive over the space: phi(a, phi(c, d)) with a < c
 * normalizes to the inner term; the normalized phi is strictly monotone in
 * its second argument; and b <= phi(a, b) after normalization.
 */
PropertyReport check_veblen_laws(const VebSpace& space);

/// parse(print(t)) returns an identical tree for every enumerated term.
PropertyReport check_roundtrip(const DiagramSpace& space);
PropertyReport check_roundtrip(const VebSpace& space);
PropertyReport check_roundtrip(const PiSpace& space);

struct DescentPolicy {
  enum class Kind { GreedyMax, Random };
  Kind kind = Kind::GreedyMax;
  std::uint64_t rng_seed = 0;
};

/// A strictly descending chain; truncated means max_steps ran out while
/// smaller space members were still available (not an error).
struct DescentResult {
  std::vector<Diagram> chain;
  bool truncated = false;
};

/**
 * Walk downward from `seed` through the space: each successor is a space
 * member strictly below the current term — the greatest one (greedy-max)
 * or a uniformly random one.  Stops when nothing in the space is smaller.
 * The returned chain is re-verified to be strictly descending.
 */
DescentResult descent_search(const DiagramSpace& space, const Diagram& seed,
                             DescentPolicy policy, std::size_t max_steps);

/// `count` random-policy descents from random space seeds; every chain must
/// terminate within max_steps, undescended or non-descending chains are
/// witnesses.
PropertyReport check_descent_batch(const DiagramSpace& space,
                                   std::size_t count, std::size_t max_steps,
                                   std::uint64_t seed);

}  // namespace odw
