#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "odw/ordering.hpp"
#include "odw/report.hpp"

namespace odw {

/**
 * Terms of the two-level collapsing fragment.  Four atoms in fixed order
 * s < s+ < p < p+, CNF sums, binary phi, and two collapsing constructors:
 * D1(b) collapses below p+ and lands in the band (p, p+); D0(b) collapses
 * below s+ and lands in (s, s+).  The atoms and both kinds of collapse
 * terms are strongly critical: they are closed under phi, so phi(a, e)
 * rewrites to e whenever a < e, and phi(e, 0) rewrites to e.
 */
class PiTerm {
 public:
  enum class Kind : std::uint8_t {
    Zero,
    Sigma,       // s
    SigmaPlus,   // s+
    Pi,          // p
    PiPlus,      // p+
    Sum,
    Phi,
    CollapseHi,  // D1
    CollapseLo,  // D0
  };

  PiTerm() : kind_(Kind::Zero) {}

  static PiTerm zero() { return PiTerm(); }
  static PiTerm sigma() { return PiTerm(Kind::Sigma, {}); }
  static PiTerm sigma_plus() { return PiTerm(Kind::SigmaPlus, {}); }
  static PiTerm pi() { return PiTerm(Kind::Pi, {}); }
  static PiTerm pi_plus() { return PiTerm(Kind::PiPlus, {}); }

  /// Normalizing constructors over normalized children.
  static PiTerm sum(std::vector<PiTerm> parts);
  static PiTerm phi(PiTerm index, PiTerm arg);

  static PiTerm collapse_hi(PiTerm argument) {
    return PiTerm(Kind::CollapseHi, {std::move(argument)});
  }
  static PiTerm collapse_lo(PiTerm argument) {
    return PiTerm(Kind::CollapseLo, {std::move(argument)});
  }

  static PiTerm raw_sum(std::vector<PiTerm> parts) {
    return PiTerm(Kind::Sum, std::move(parts));
  }
  static PiTerm raw_phi(PiTerm index, PiTerm arg) {
    std::vector<PiTerm> ch;
    ch.push_back(std::move(index));
    ch.push_back(std::move(arg));
    return PiTerm(Kind::Phi, std::move(ch));
  }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::vector<PiTerm>& parts() const { return children_; }
  const PiTerm& index() const { return children_[0]; }
  const PiTerm& arg() const { return children_[1]; }
  const PiTerm& child() const { return children_.front(); }

  /// Atom or collapse term — the strongly critical leaves.
  bool is_critical_leaf() const {
    switch (kind_) {
      case Kind::Sigma:
      case Kind::SigmaPlus:
      case Kind::Pi:
      case Kind::PiPlus:
      case Kind::CollapseHi:
      case Kind::CollapseLo:
        return true;
      default:
        return false;
    }
  }

 private:
  PiTerm(Kind k, std::vector<PiTerm> children)
      : kind_(k), children_(std::move(children)) {}

  Kind kind_;
  std::vector<PiTerm> children_;
};

int structural_cmp(const PiTerm& a, const PiTerm& b);

inline bool operator==(const PiTerm& a, const PiTerm& b) {
  return structural_cmp(a, b) == 0;
}
inline bool operator!=(const PiTerm& a, const PiTerm& b) { return !(a == b); }

struct PiStructuralLess {
  bool operator()(const PiTerm& a, const PiTerm& b) const {
    return structural_cmp(a, b) < 0;
  }
};

std::size_t node_count(const PiTerm& t);

bool is_normal(const PiTerm& t);

PiTerm normalize(const PiTerm& raw);

/**
 * Comparison of normalized terms.  Critical leaves sit in fixed bands
 * (s < D0-terms < s+ < p < D1-terms < p+); phi(a, b) is below a critical
 * leaf exactly when both a and b are; D1 pairs (and mirrored D0 pairs)
 * follow the same two clauses as the d-terms of the base system, with the
 * matching k-section.
 */
Ordering3 compare(const PiTerm& a, const PiTerm& b);

/// Outermost D1 (resp. D0) subterms: nodes of that kind reachable from the
/// root without passing through another node of the same kind (the walk
/// descends through collapses of the other kind).  Structurally sorted,
/// duplicate-free.
std::vector<PiTerm> k_section_hi(const PiTerm& t);
std::vector<PiTerm> k_section_lo(const PiTerm& t);

/// Raised by apply_substitution on terms outside the domain; `offending`
/// carries the printed subterm that blocks the mapping.
struct SubstitutionDomainError : std::runtime_error {
  explicit SubstitutionDomainError(std::string subterm)
      : std::runtime_error("term outside the substitution domain; offending subterm: " +
                           subterm),
        offending(std::move(subterm)) {}
  std::string offending;
};

/// Domain of the collapsing substitution: the term mentions no s, s+ or D0
/// node, and every maximal subterm lying below p also lies below s.
bool in_domain(const PiTerm& xi);

/**
 * The collapsing substitution: identity on terms below p, maps p to s,
 * p+ to s+, D1(b) to D0(image of b), and commutes with sums and phi.
 * The result is normalized and never mentions p, p+ or D1.  Throws
 * SubstitutionDomainError outside the domain.
 */
PiTerm apply_substitution(const PiTerm& xi);

std::string to_text(const PiTerm& t);

/**
 * Exhaustive embedding laws over the in-domain part of `space`: the
 * substitution preserves the order on all pairs, is the identity below p,
 * and maps the D1-section of each term onto the D0-section of its image.
 */
PropertyReport check_embedding(const std::vector<PiTerm>& space);

}  // namespace odw
