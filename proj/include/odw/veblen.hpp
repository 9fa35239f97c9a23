#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "odw/ordering.hpp"

namespace odw {

/**
 * Terms of the binary Veblen fragment below Gamma_0: the atom 0, CNF sums,
 * and phi(a, b) where phi(0, b) = w^b and phi(a, .) enumerates the common
 * fixed points of every phi(c, .) with c < a.  Normal form: sums as in
 * Diagram (principal parts, non-increasing), and phi(a, phi(c, d)) with
 * a < c rewrites to phi(c, d) — the inner term is already a fixed point of
 * phi(a, .).
 */
class VTerm {
 public:
  enum class Kind : std::uint8_t { Zero, Sum, Phi };

  VTerm() : kind_(Kind::Zero) {}

  static VTerm zero() { return VTerm(); }

  /// Normalizing sum over normalized parts (flatten, drop zeros, sort).
  static VTerm sum(std::vector<VTerm> parts);

  /// Normalizing phi over normalized arguments (fixed-point collapse).
  static VTerm phi(VTerm index, VTerm arg);

  static VTerm raw_sum(std::vector<VTerm> parts) {
    return VTerm(Kind::Sum, std::move(parts));
  }
  static VTerm raw_phi(VTerm index, VTerm arg) {
    std::vector<VTerm> ch;
    ch.push_back(std::move(index));
    ch.push_back(std::move(arg));
    return VTerm(Kind::Phi, std::move(ch));
  }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::vector<VTerm>& parts() const { return children_; }
  const VTerm& index() const { return children_[0]; }
  const VTerm& arg() const { return children_[1]; }

 private:
  VTerm(Kind k, std::vector<VTerm> children)
      : kind_(k), children_(std::move(children)) {}

  Kind kind_;
  std::vector<VTerm> children_;
};

int structural_cmp(const VTerm& a, const VTerm& b);

inline bool operator==(const VTerm& a, const VTerm& b) {
  return structural_cmp(a, b) == 0;
}
inline bool operator!=(const VTerm& a, const VTerm& b) { return !(a == b); }

struct VStructuralLess {
  bool operator()(const VTerm& a, const VTerm& b) const {
    return structural_cmp(a, b) < 0;
  }
};

std::size_t node_count(const VTerm& t);

bool is_normal(const VTerm& t);

/// Total on arbitrary trees; idempotent.
VTerm normalize(const VTerm& raw);

/**
 * Comparison of normalized terms.  Zero least, sums lexicographic on parts.
 * phi(a1, b1) vs phi(a2, b2): equal indices compare the arguments; for
 * a1 < a2 the left side is below exactly when b1 is below the whole right
 * term (and symmetrically), since the right term is a fixed point of
 * phi(a1, .).
 */
Ordering3 compare(const VTerm& a, const VTerm& b);

std::string to_text(const VTerm& t);

}  // namespace odw
