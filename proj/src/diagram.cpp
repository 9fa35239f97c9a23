#include "odw/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace odw {

namespace {

bool is_principal(const Diagram& d) {
  return !d.is(Diagram::Kind::Zero) && !d.is(Diagram::Kind::Sum);
}

// View a non-Zero term as its list of additive parts.
std::size_t part_count(const Diagram& d) {
  return d.is(Diagram::Kind::Sum) ? d.parts().size() : 1;
}

const Diagram& part_at(const Diagram& d, std::size_t i) {
  return d.is(Diagram::Kind::Sum) ? d.parts()[i] : d;
}

// Recursion guard shared by one top-level compare call.  The measure
// (combined node count) strictly shrinks along every recursive path, so the
// limit is only reachable if that measure is broken.
thread_local std::uint64_t g_compare_steps = 0;

constexpr std::uint64_t kCompareStepLimit = 1000000;

struct CompareGuard {
  bool root;
  CompareGuard() : root(g_compare_steps == 0) { ++g_compare_steps; }
  ~CompareGuard() {
    if (root) g_compare_steps = 0;
  }
};

Ordering3 cmp(const Diagram& a, const Diagram& b);

// True iff every outermost d-subterm of x lies strictly below `bound`
// (a Collapse term).
bool section_below(const Diagram& x, const Diagram& bound) {
  for (const Diagram& m : k_section(x)) {
    if (cmp(m, bound) != Ordering3::Less) return false;
  }
  return true;
}

Ordering3 cmp_collapse(const Diagram& a, const Diagram& b) {
  Ordering3 c = cmp(a.child(), b.child());
  if (c == Ordering3::Equal) return Ordering3::Equal;
  if (c == Ordering3::Less) {
    return section_below(a.child(), b) ? Ordering3::Less : Ordering3::Greater;
  }
  return section_below(b.child(), a) ? Ordering3::Greater : Ordering3::Less;
}

Ordering3 cmp_principal(const Diagram& a, const Diagram& b) {
  const bool ca = a.is(Diagram::Kind::Collapse);
  const bool cb = b.is(Diagram::Kind::Collapse);
  if (a.is(Diagram::Kind::Omega) && b.is(Diagram::Kind::Omega))
    return Ordering3::Equal;
  if (ca && cb) return cmp_collapse(a, b);
  if (ca && b.is(Diagram::Kind::Omega)) return Ordering3::Less;
  if (a.is(Diagram::Kind::Omega) && cb) return Ordering3::Greater;
  // At least one side is a power; W and d-terms are fixed points of
  // b |-> w^b, so they act as their own exponent.
  const Diagram& ea = a.is(Diagram::Kind::Pow) ? a.child() : a;
  const Diagram& eb = b.is(Diagram::Kind::Pow) ? b.child() : b;
  return cmp(ea, eb);
}

Ordering3 cmp(const Diagram& a, const Diagram& b) {
  CompareGuard guard;
  if (g_compare_steps > kCompareStepLimit) {
    throw std::logic_error(
        "diagram compare exceeded its recursion budget; "
        "termination measure violated");
  }
  const bool za = a.is(Diagram::Kind::Zero);
  const bool zb = b.is(Diagram::Kind::Zero);
  if (za && zb) return Ordering3::Equal;
  if (za) return Ordering3::Less;
  if (zb) return Ordering3::Greater;
  const std::size_t na = part_count(a);
  const std::size_t nb = part_count(b);
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    Ordering3 c = cmp_principal(part_at(a, i), part_at(b, i));
    if (c != Ordering3::Equal) return c;
  }
  if (na == nb) return Ordering3::Equal;
  return na < nb ? Ordering3::Less : Ordering3::Greater;
}

}  // namespace

Diagram Diagram::sum(std::vector<Diagram> parts) {
  std::vector<Diagram> flat;
  flat.reserve(parts.size());
  for (Diagram& p : parts) {
    if (p.is(Kind::Zero)) continue;
    if (p.is(Kind::Sum)) {
      for (const Diagram& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return zero();
  std::stable_sort(flat.begin(), flat.end(),
                   [](const Diagram& x, const Diagram& y) {
                     return compare(x, y) == Ordering3::Greater;
                   });
  if (flat.size() == 1) return std::move(flat.front());
  return Diagram(Kind::Sum, std::move(flat));
}

Diagram Diagram::omega_pow(Diagram exponent) {
  if (exponent.is(Kind::Omega) || exponent.is(Kind::Collapse)) return exponent;
  return Diagram(Kind::Pow, {std::move(exponent)});
}

int structural_cmp(const Diagram& a, const Diagram& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  std::size_t na = 0, nb = 0;
  switch (a.kind()) {
    case Diagram::Kind::Zero:
    case Diagram::Kind::Omega:
      return 0;
    case Diagram::Kind::Sum:
      na = a.parts().size();
      nb = b.parts().size();
      break;
    default:
      na = nb = 1;
      break;
  }
  if (na != nb) return na < nb ? -1 : 1;
  for (std::size_t i = 0; i < na; ++i) {
    const Diagram& x = a.is(Diagram::Kind::Sum) ? a.parts()[i] : a.child();
    const Diagram& y = b.is(Diagram::Kind::Sum) ? b.parts()[i] : b.child();
    int c = structural_cmp(x, y);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t node_count(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Zero:
    case Diagram::Kind::Omega:
      return 1;
    case Diagram::Kind::Sum: {
      std::size_t n = 1;
      for (const Diagram& p : d.parts()) n += node_count(p);
      return n;
    }
    default:
      return 1 + node_count(d.child());
  }
}

bool is_normal(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Zero:
    case Diagram::Kind::Omega:
      return true;
    case Diagram::Kind::Pow:
      return !d.child().is(Diagram::Kind::Omega) &&
             !d.child().is(Diagram::Kind::Collapse) && is_normal(d.child());
    case Diagram::Kind::Collapse:
      return is_normal(d.child());
    case Diagram::Kind::Sum: {
      if (d.parts().size() < 2) return false;
      for (const Diagram& p : d.parts()) {
        if (!is_principal(p) || !is_normal(p)) return false;
      }
      for (std::size_t i = 0; i + 1 < d.parts().size(); ++i) {
        if (compare(d.parts()[i], d.parts()[i + 1]) == Ordering3::Less)
          return false;
      }
      return true;
    }
  }
  return false;
}

Diagram normalize(const Diagram& raw) {
  switch (raw.kind()) {
    case Diagram::Kind::Zero:
    case Diagram::Kind::Omega:
      return raw;
    case Diagram::Kind::Pow:
      return Diagram::omega_pow(normalize(raw.child()));
    case Diagram::Kind::Collapse:
      return Diagram::collapse(normalize(raw.child()));
    case Diagram::Kind::Sum: {
      std::vector<Diagram> parts;
      parts.reserve(raw.parts().size());
      for (const Diagram& p : raw.parts()) parts.push_back(normalize(p));
      return Diagram::sum(std::move(parts));
    }
  }
  return raw;
}

Ordering3 compare(const Diagram& a, const Diagram& b) { return cmp(a, b); }

DiagramCompare natural_order() {
  return [](const Diagram& x, const Diagram& y) { return compare(x, y); };
}

namespace {

void collect_outermost(const Diagram& d, std::vector<Diagram>& out) {
  switch (d.kind()) {
    case Diagram::Kind::Collapse:
      out.push_back(d);
      return;
    case Diagram::Kind::Pow:
      collect_outermost(d.child(), out);
      return;
    case Diagram::Kind::Sum:
      for (const Diagram& p : d.parts()) collect_outermost(p, out);
      return;
    default:
      return;
  }
}

}  // namespace

KSection k_section(const Diagram& a) {
  std::vector<Diagram> out;
  collect_outermost(a, out);
  std::sort(out.begin(), out.end(), StructuralLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagram k_max(const Diagram& a) {
  Diagram best = Diagram::zero();
  for (const Diagram& m : k_section(a)) {
    if (compare(m, best) == Ordering3::Greater) best = m;
  }
  return best;
}

Diagram natural_sum(const Diagram& a, const Diagram& b) {
  if (a.is(Diagram::Kind::Zero)) return b;
  if (b.is(Diagram::Kind::Zero)) return a;
  std::vector<Diagram> merged;
  merged.reserve(part_count(a) + part_count(b));
  std::size_t i = 0, j = 0;
  const std::size_t na = part_count(a), nb = part_count(b);
  while (i < na && j < nb) {
    if (compare(part_at(a, i), part_at(b, j)) == Ordering3::Less) {
      merged.push_back(part_at(b, j++));
    } else {
      merged.push_back(part_at(a, i++));
    }
  }
  while (i < na) merged.push_back(part_at(a, i++));
  while (j < nb) merged.push_back(part_at(b, j++));
  if (merged.size() == 1) return merged.front();
  return Diagram::raw_sum(std::move(merged));
}

bool collapsibly_less(const Diagram& a, const Diagram& b) {
  if (compare(a, b) != Ordering3::Less) return false;
  const Diagram bound = Diagram::collapse(b);
  for (const Diagram& m : k_section(a)) {
    if (compare(m, bound) != Ordering3::Less) return false;
  }
  return true;
}

std::string to_text(const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::Zero:
      return "0";
    case Diagram::Kind::Omega:
      return "W";
    case Diagram::Kind::Pow:
      return "w^(" + to_text(d.child()) + ")";
    case Diagram::Kind::Collapse:
      return "d(" + to_text(d.child()) + ")";
    case Diagram::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < d.parts().size(); ++i) {
        if (i > 0) out += " + ";
        out += to_text(d.parts()[i]);
      }
      return out;
    }
  }
  return "";
}

}  // namespace odw
