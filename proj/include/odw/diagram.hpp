#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "odw/ordering.hpp"

namespace odw {

/**
 * A term of the base ordinal notation system: the atoms 0 and W (the big
 * regular atom), Cantor-normal-form sums, omega powers w^(e), and the
 * collapsing constructor d(a), which names a countable ordinal below W.
 *
 * Values are immutable trees.  Raw (possibly non-normal) trees are
 * representable; `normalize` is total on them and the remaining operations
 * expect normalized input.  Normal form means:
 *   - sums have >= 2 parts, each additively principal (never Zero or Sum),
 *     ordered non-increasingly under `compare`, and never nested;
 *   - w^(e) never has e = W or e = d(...): both are epsilon numbers, i.e.
 *     fixed points of b |-> w^b, so such a power rewrites to e itself.
 * Collapse accepts any argument; finite n is the n-fold sum of w^(0).
 */
class Diagram {
 public:
  enum class Kind : std::uint8_t { Zero, Omega, Sum, Pow, Collapse };

  Diagram() : kind_(Kind::Zero) {}

  static Diagram zero() { return Diagram(); }
  static Diagram omega() { return Diagram(Kind::Omega, {}); }

  /// Normalizing sum: flattens one level of nested sums, drops zero parts,
  /// sorts the rest non-increasingly (a stable multiset merge).  Parts must
  /// themselves be normalized.
  static Diagram sum(std::vector<Diagram> parts);

  /// Normalizing power: returns the exponent itself when it is an epsilon
  /// number (W or a d-term), else a Pow node.  Exponent must be normalized.
  static Diagram omega_pow(Diagram exponent);

  static Diagram collapse(Diagram argument) {
    return Diagram(Kind::Collapse, {std::move(argument)});
  }

  /// Structure-preserving constructors for building raw (possibly
  /// non-normal) trees, e.g. from the parser.
  static Diagram raw_sum(std::vector<Diagram> parts) {
    return Diagram(Kind::Sum, std::move(parts));
  }
  static Diagram raw_pow(Diagram exponent) {
    return Diagram(Kind::Pow, {std::move(exponent)});
  }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  /// Sum parts (valid for Sum nodes).
  const std::vector<Diagram>& parts() const { return children_; }

  /// The single child of a Pow or Collapse node.
  const Diagram& child() const { return children_.front(); }

 private:
  Diagram(Kind k, std::vector<Diagram> children)
      : kind_(k), children_(std::move(children)) {}

  Kind kind_;
  std::vector<Diagram> children_;
};

/// Total order on the raw tree structure (kind, then children, lexicographic).
/// Fast, used for sets and dedup; unrelated to the ordinal order.
int structural_cmp(const Diagram& a, const Diagram& b);

inline bool operator==(const Diagram& a, const Diagram& b) {
  return structural_cmp(a, b) == 0;
}
inline bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }

struct StructuralLess {
  bool operator()(const Diagram& a, const Diagram& b) const {
    return structural_cmp(a, b) < 0;
  }
};

/// Number of constructor nodes in the tree (atoms count 1, a sum counts 1
/// plus its parts).
std::size_t node_count(const Diagram& d);

bool is_normal(const Diagram& d);

/// Total on arbitrary trees; idempotent; result is the unique normal form.
Diagram normalize(const Diagram& raw);

/**
 * Ordinal comparison of normalized terms.  Zero is least; sums compare
 * lexicographically on their non-increasing part lists; w^(a) vs w^(b)
 * reduces to a vs b (with W and d-terms acting as their own logarithm);
 * every d-term sits below W.  Two d-terms are ordered by:
 *   d(a) < d(b)  iff  a < b and every member of k_section(a) is < d(b),
 * and for a > b the mirrored condition decides the other way around.  In
 * particular d(a) <= some member of k_section(b) forces d(a) < d(b) even
 * when a > b.
 *
 * Throws std::logic_error if a single top-level call exceeds 10^6 recursive
 * steps; that guards the termination measure, it is not reachable from
 * well-formed input.
 */
Ordering3 compare(const Diagram& a, const Diagram& b);

using DiagramCompare =
    std::function<Ordering3(const Diagram&, const Diagram&)>;

/// The library comparator wrapped for call sites that take a DiagramCompare.
DiagramCompare natural_order();

/// Duplicate-free list of d-subterms, structurally sorted.  Every member is
/// a Collapse node.
using KSection = std::vector<Diagram>;

/// The outermost d-subterms of `a`: Collapse nodes reachable from the root
/// without passing through another Collapse node (the root itself counts).
KSection k_section(const Diagram& a);

/// Maximum of k_section(a) under `compare`, or Zero when the section is
/// empty.
Diagram k_max(const Diagram& a);

/// Hessenberg sum: merges the Cantor-normal-form part lists of both sides.
/// Commutative, associative, strictly monotone in each argument.
Diagram natural_sum(const Diagram& a, const Diagram& b);

/// True iff a < b and every member of k_section(a) is below d(b); exactly
/// the pairs whose collapses are ordered the same way as the terms.
bool collapsibly_less(const Diagram& a, const Diagram& b);

/// Canonical text form; output always parses back to an identical tree.
std::string to_text(const Diagram& d);

}  // namespace odw
