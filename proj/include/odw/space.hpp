#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "odw/diagram.hpp"
#include "odw/pi_system.hpp"
#include "odw/veblen.hpp"

namespace odw {

enum class System { OO, VB, PI };

const char* to_text(System s);

/// Thrown when an enumeration request exceeds the configured node cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultNodeCap = 9;

/// Every normal-form term of one system with at most max_nodes nodes, each
/// exactly once, sorted ascending under the system comparator.
template <class Term>
struct BasicSpace {
  System system;
  int max_nodes = 0;
  std::vector<Term> terms;
};

using DiagramSpace = BasicSpace<Diagram>;
using VebSpace = BasicSpace<VTerm>;
using PiSpace = BasicSpace<PiTerm>;

/// Enumerators throw std::invalid_argument for max_nodes < 1 and
/// ResourceLimitError for max_nodes > cap.  Sortedness (strictly ascending,
/// so also duplicate-freedom) is verified before returning.
DiagramSpace enumerate_diagrams(int max_nodes, int cap = kDefaultNodeCap);
VebSpace enumerate_vterms(int max_nodes, int cap = kDefaultNodeCap);
PiSpace enumerate_piterms(int max_nodes, int cap = kDefaultNodeCap);

}  // namespace odw
