#include "odw/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace odw {

namespace {

void check_bounds(int max_nodes, int cap) {
  if (max_nodes < 1) throw std::invalid_argument("max_nodes must be >= 1");
  if (max_nodes > cap) {
    throw ResourceLimitError("max_nodes " + std::to_string(max_nodes) +
                             " exceeds the enumeration cap " +
                             std::to_string(cap));
  }
}

// Emit every multiset of >= 2 principal parts, non-increasing under the
// system order, whose node counts sum to `budget`.  `pool` is sorted
// descending; each part is drawn at or after the previous part's index, so
// every multiset appears exactly once.
template <class Term, class Emit>
void gen_sums(const std::vector<std::pair<Term, int>>& pool,
              std::size_t start, int budget, std::vector<Term>& acc,
              Emit emit) {
  if (budget == 0) {
    if (acc.size() >= 2) emit(acc);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int sz = pool[i].second;
    if (sz > budget) continue;
    acc.push_back(pool[i].first);
    gen_sums(pool, i, budget - sz, acc, emit);
    acc.pop_back();
  }
}

// Shared sum layer: principals_by_size[n] holds the principal terms of
// exactly n nodes; returns the sums of exactly `n` nodes.
template <class Term, class Cmp, class MkSum>
std::vector<Term> sums_of_size(
    const std::vector<std::vector<Term>>& principals_by_size, int n, Cmp cmp,
    MkSum mk_sum) {
  std::vector<std::pair<Term, int>> pool;
  for (int s = 1; s <= n - 2; ++s) {
    for (const Term& t : principals_by_size[s]) pool.emplace_back(t, s);
  }
  std::sort(pool.begin(), pool.end(),
            [&](const auto& x, const auto& y) {
              return cmp(x.first, y.first) == Ordering3::Greater;
            });
  std::vector<Term> out;
  std::vector<Term> acc;
  gen_sums<Term>(pool, 0, n - 1, acc,
                 [&](const std::vector<Term>& parts) {
                   out.push_back(mk_sum(parts));
                 });
  return out;
}

template <class Term, class Cmp>
void sort_and_verify(std::vector<Term>& terms, Cmp cmp) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return cmp(x, y) == Ordering3::Less;
  });
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (cmp(terms[i], terms[i + 1]) != Ordering3::Less) {
      throw std::logic_error(
          "enumeration produced order-indistinct terms: " +
          to_text(terms[i]) + " vs " + to_text(terms[i + 1]));
    }
  }
}

}  // namespace

const char* to_text(System s) {
  switch (s) {
    case System::OO:
      return "oo";
    case System::VB:
      return "vb";
    default:
      return "pi";
  }
}

DiagramSpace enumerate_diagrams(int max_nodes, int cap) {
  check_bounds(max_nodes, cap);
  std::vector<std::vector<Diagram>> by_size(max_nodes + 1);
  std::vector<std::vector<Diagram>> principals(max_nodes + 1);
  by_size[1] = {Diagram::zero(), Diagram::omega()};
  principals[1] = {Diagram::omega()};
  for (int n = 2; n <= max_nodes; ++n) {
    for (const Diagram& e : by_size[n - 1]) {
      if (!e.is(Diagram::Kind::Omega) && !e.is(Diagram::Kind::Collapse))
        principals[n].push_back(Diagram::raw_pow(e));
      principals[n].push_back(Diagram::collapse(e));
    }
    by_size[n] = principals[n];
    auto cmp = [](const Diagram& x, const Diagram& y) { return compare(x, y); };
    for (Diagram& s : sums_of_size<Diagram>(
             principals, n, cmp,
             [](const std::vector<Diagram>& parts) {
               return Diagram::raw_sum(parts);
             })) {
      by_size[n].push_back(std::move(s));
    }
  }
  DiagramSpace space{System::OO, max_nodes, {}};
  for (int n = 1; n <= max_nodes; ++n) {
    for (Diagram& t : by_size[n]) space.terms.push_back(std::move(t));
  }
  sort_and_verify(space.terms,
                  [](const Diagram& x, const Diagram& y) { return compare(x, y); });
  return space;
}

VebSpace enumerate_vterms(int max_nodes, int cap) {
  check_bounds(max_nodes, cap);
  std::vector<std::vector<VTerm>> by_size(max_nodes + 1);
  std::vector<std::vector<VTerm>> principals(max_nodes + 1);
  by_size[1] = {VTerm::zero()};
  for (int n = 2; n <= max_nodes; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      const int j = n - 1 - i;
      for (const VTerm& a : by_size[i]) {
        for (const VTerm& b : by_size[j]) {
          if (b.is(VTerm::Kind::Phi) &&
              compare(a, b.index()) == Ordering3::Less)
            continue;  // would collapse to b
          principals[n].push_back(VTerm::raw_phi(a, b));
        }
      }
    }
    by_size[n] = principals[n];
    auto cmp = [](const VTerm& x, const VTerm& y) { return compare(x, y); };
    for (VTerm& s : sums_of_size<VTerm>(
             principals, n, cmp,
             [](const std::vector<VTerm>& parts) {
               return VTerm::raw_sum(parts);
             })) {
      by_size[n].push_back(std::move(s));
    }
  }
  VebSpace space{System::VB, max_nodes, {}};
  for (int n = 1; n <= max_nodes; ++n) {
    for (VTerm& t : by_size[n]) space.terms.push_back(std::move(t));
  }
  sort_and_verify(space.terms,
                  [](const VTerm& x, const VTerm& y) { return compare(x, y); });
  return space;
}

PiSpace enumerate_piterms(int max_nodes, int cap) {
  check_bounds(max_nodes, cap);
  std::vector<std::vector<PiTerm>> by_size(max_nodes + 1);
  std::vector<std::vector<PiTerm>> principals(max_nodes + 1);
  by_size[1] = {PiTerm::zero(), PiTerm::sigma(), PiTerm::sigma_plus(),
                PiTerm::pi(), PiTerm::pi_plus()};
  principals[1] = {PiTerm::sigma(), PiTerm::sigma_plus(), PiTerm::pi(),
                   PiTerm::pi_plus()};
  for (int n = 2; n <= max_nodes; ++n) {
    for (const PiTerm& a : by_size[n - 1]) {
      principals[n].push_back(PiTerm::collapse_hi(a));
      principals[n].push_back(PiTerm::collapse_lo(a));
    }
    for (int i = 1; i <= n - 2; ++i) {
      const int j = n - 1 - i;
      for (const PiTerm& a : by_size[i]) {
        for (const PiTerm& b : by_size[j]) {
          if (b.is(PiTerm::Kind::Phi) &&
              compare(a, b.index()) == Ordering3::Less)
            continue;
          if (b.is_critical_leaf() && compare(a, b) == Ordering3::Less)
            continue;
          if (b.is(PiTerm::Kind::Zero) && a.is_critical_leaf()) continue;
          principals[n].push_back(PiTerm::raw_phi(a, b));
        }
      }
    }
    by_size[n] = principals[n];
    auto cmp = [](const PiTerm& x, const PiTerm& y) { return compare(x, y); };
    for (PiTerm& s : sums_of_size<PiTerm>(
             principals, n, cmp,
             [](const std::vector<PiTerm>& parts) {
               return PiTerm::raw_sum(parts);
             })) {
      by_size[n].push_back(std::move(s));
    }
  }
  PiSpace space{System::PI, max_nodes, {}};
  for (int n = 1; n <= max_nodes; ++n) {
    for (PiTerm& t : by_size[n]) space.terms.push_back(std::move(t));
  }
  sort_and_verify(space.terms,
                  [](const PiTerm& x, const PiTerm& y) { return compare(x, y); });
  return space;
}

}  // namespace odw
