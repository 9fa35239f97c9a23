#include "odw/veblen.hpp"

#include <algorithm>

namespace odw {

namespace {

std::size_t part_count(const VTerm& t) {
  return t.is(VTerm::Kind::Sum) ? t.parts().size() : 1;
}

const VTerm& part_at(const VTerm& t, std::size_t i) {
  return t.is(VTerm::Kind::Sum) ? t.parts()[i] : t;
}

Ordering3 cmp(const VTerm& a, const VTerm& b);

Ordering3 cmp_phi(const VTerm& a, const VTerm& b) {
  Ordering3 c = cmp(a.index(), b.index());
  if (c == Ordering3::Equal) return cmp(a.arg(), b.arg());
  if (c == Ordering3::Less) {
    // b is a fixed point of phi(a.index, .): position of a.arg decides.
    return cmp(a.arg(), b) == Ordering3::Less ? Ordering3::Less
                                              : Ordering3::Greater;
  }
  return cmp(a, b.arg()) == Ordering3::Greater ? Ordering3::Greater
                                               : Ordering3::Less;
}

Ordering3 cmp(const VTerm& a, const VTerm& b) {
  const bool za = a.is(VTerm::Kind::Zero);
  const bool zb = b.is(VTerm::Kind::Zero);
  if (za && zb) return Ordering3::Equal;
  if (za) return Ordering3::Less;
  if (zb) return Ordering3::Greater;
  const std::size_t na = part_count(a);
  const std::size_t nb = part_count(b);
  if (na == 1 && nb == 1) return cmp_phi(a, b);
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    Ordering3 c = cmp_phi(part_at(a, i), part_at(b, i));
    if (c != Ordering3::Equal) return c;
  }
  if (na == nb) return Ordering3::Equal;
  return na < nb ? Ordering3::Less : Ordering3::Greater;
}

}  // namespace

VTerm VTerm::sum(std::vector<VTerm> parts) {
  std::vector<VTerm> flat;
  flat.reserve(parts.size());
  for (VTerm& p : parts) {
    if (p.is(Kind::Zero)) continue;
    if (p.is(Kind::Sum)) {
      for (const VTerm& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return zero();
  std::stable_sort(flat.begin(), flat.end(), [](const VTerm& x, const VTerm& y) {
    return compare(x, y) == Ordering3::Greater;
  });
  if (flat.size() == 1) return std::move(flat.front());
  return VTerm(Kind::Sum, std::move(flat));
}

VTerm VTerm::phi(VTerm index, VTerm arg) {
  if (arg.is(Kind::Phi) &&
      compare(index, arg.index()) == Ordering3::Less) {
    return arg;  // already a fixed point of phi(index, .)
  }
  return raw_phi(std::move(index), std::move(arg));
}

int structural_cmp(const VTerm& a, const VTerm& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  const std::size_t na = a.parts().size();
  const std::size_t nb = b.parts().size();
  if (na != nb) return na < nb ? -1 : 1;
  for (std::size_t i = 0; i < na; ++i) {
    int c = structural_cmp(a.parts()[i], b.parts()[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t node_count(const VTerm& t) {
  std::size_t n = 1;
  for (const VTerm& c : t.parts()) n += node_count(c);
  return n;
}

bool is_normal(const VTerm& t) {
  switch (t.kind()) {
    case VTerm::Kind::Zero:
      return true;
    case VTerm::Kind::Phi:
      if (!is_normal(t.index()) || !is_normal(t.arg())) return false;
      return !(t.arg().is(VTerm::Kind::Phi) &&
               compare(t.index(), t.arg().index()) == Ordering3::Less);
    case VTerm::Kind::Sum: {
      if (t.parts().size() < 2) return false;
      for (const VTerm& p : t.parts()) {
        if (!p.is(VTerm::Kind::Phi) || !is_normal(p)) return false;
      }
      for (std::size_t i = 0; i + 1 < t.parts().size(); ++i) {
        if (compare(t.parts()[i], t.parts()[i + 1]) == Ordering3::Less)
          return false;
      }
      return true;
    }
  }
  return false;
}

VTerm normalize(const VTerm& raw) {
  switch (raw.kind()) {
    case VTerm::Kind::Zero:
      return raw;
    case VTerm::Kind::Phi:
      return VTerm::phi(normalize(raw.index()), normalize(raw.arg()));
    case VTerm::Kind::Sum: {
      std::vector<VTerm> parts;
      parts.reserve(raw.parts().size());
      for (const VTerm& p : raw.parts()) parts.push_back(normalize(p));
      return VTerm::sum(std::move(parts));
    }
  }
  return raw;
}

Ordering3 compare(const VTerm& a, const VTerm& b) { return cmp(a, b); }

std::string to_text(const VTerm& t) {
  switch (t.kind()) {
    case VTerm::Kind::Zero:
      return "0";
    case VTerm::Kind::Phi:
      return "phi(" + to_text(t.index()) + ", " + to_text(t.arg()) + ")";
    case VTerm::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < t.parts().size(); ++i) {
        if (i > 0) out += " + ";
        out += to_text(t.parts()[i]);
      }
      return out;
    }
  }
  return "";
}

}  // namespace odw
