#include "odw/pi_system.hpp"

#include <algorithm>

namespace odw {

namespace {

using Kind = PiTerm::Kind;

std::size_t part_count(const PiTerm& t) {
  return t.is(Kind::Sum) ? t.parts().size() : 1;
}

const PiTerm& part_at(const PiTerm& t, std::size_t i) {
  return t.is(Kind::Sum) ? t.parts()[i] : t;
}

// Band position of a critical leaf: s < D0 terms < s+ < p < D1 terms < p+.
int band_rank(const PiTerm& t) {
  switch (t.kind()) {
    case Kind::Sigma:
      return 1;
    case Kind::CollapseLo:
      return 2;
    case Kind::SigmaPlus:
      return 3;
    case Kind::Pi:
      return 4;
    case Kind::CollapseHi:
      return 5;
    case Kind::PiPlus:
      return 6;
    default:
      return 0;
  }
}

Ordering3 cmp(const PiTerm& a, const PiTerm& b);

bool section_below(const std::vector<PiTerm>& section, const PiTerm& bound) {
  for (const PiTerm& m : section) {
    if (cmp(m, bound) != Ordering3::Less) return false;
  }
  return true;
}

// Shared clause pair for both collapse kinds; `section` extracts the
// matching k-section.
template <class SectionFn>
Ordering3 cmp_collapse(const PiTerm& a, const PiTerm& b, SectionFn section) {
  Ordering3 c = cmp(a.child(), b.child());
  if (c == Ordering3::Equal) return Ordering3::Equal;
  if (c == Ordering3::Less) {
    return section_below(section(a.child()), b) ? Ordering3::Less
                                                : Ordering3::Greater;
  }
  return section_below(section(b.child()), a) ? Ordering3::Greater
                                              : Ordering3::Less;
}

Ordering3 cmp_phi_pair(const PiTerm& a, const PiTerm& b) {
  Ordering3 c = cmp(a.index(), b.index());
  if (c == Ordering3::Equal) return cmp(a.arg(), b.arg());
  if (c == Ordering3::Less) {
    return cmp(a.arg(), b) == Ordering3::Less ? Ordering3::Less
                                              : Ordering3::Greater;
  }
  return cmp(a, b.arg()) == Ordering3::Greater ? Ordering3::Greater
                                               : Ordering3::Less;
}

Ordering3 cmp_principal(const PiTerm& a, const PiTerm& b) {
  const bool pa = a.is(Kind::Phi);
  const bool pb = b.is(Kind::Phi);
  if (pa && pb) return cmp_phi_pair(a, b);
  if (pa) {
    // b is a critical leaf, closed under phi.
    return (cmp(a.index(), b) == Ordering3::Less &&
            cmp(a.arg(), b) == Ordering3::Less)
               ? Ordering3::Less
               : Ordering3::Greater;
  }
  if (pb) return reverse(cmp_principal(b, a));
  const int ra = band_rank(a);
  const int rb = band_rank(b);
  if (ra != rb) return ra < rb ? Ordering3::Less : Ordering3::Greater;
  if (a.is(Kind::CollapseHi)) return cmp_collapse(a, b, k_section_hi);
  if (a.is(Kind::CollapseLo)) return cmp_collapse(a, b, k_section_lo);
  return Ordering3::Equal;  // same atom
}

Ordering3 cmp(const PiTerm& a, const PiTerm& b) {
  const bool za = a.is(Kind::Zero);
  const bool zb = b.is(Kind::Zero);
  if (za && zb) return Ordering3::Equal;
  if (za) return Ordering3::Less;
  if (zb) return Ordering3::Greater;
  const std::size_t na = part_count(a);
  const std::size_t nb = part_count(b);
  if (na == 1 && nb == 1) return cmp_principal(a, b);
  const std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    Ordering3 c = cmp_principal(part_at(a, i), part_at(b, i));
    if (c != Ordering3::Equal) return c;
  }
  if (na == nb) return Ordering3::Equal;
  return na < nb ? Ordering3::Less : Ordering3::Greater;
}

void collect_kind(const PiTerm& t, Kind stop, std::vector<PiTerm>& out) {
  if (t.kind() == stop) {
    out.push_back(t);
    return;
  }
  for (const PiTerm& c : t.parts()) collect_kind(c, stop, out);
}

std::vector<PiTerm> section_of(const PiTerm& t, Kind stop) {
  std::vector<PiTerm> out;
  collect_kind(t, stop, out);
  std::sort(out.begin(), out.end(), PiStructuralLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PiTerm PiTerm::sum(std::vector<PiTerm> parts) {
  std::vector<PiTerm> flat;
  flat.reserve(parts.size());
  for (PiTerm& p : parts) {
    if (p.is(Kind::Zero)) continue;
    if (p.is(Kind::Sum)) {
      for (const PiTerm& q : p.parts()) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return zero();
  std::stable_sort(flat.begin(), flat.end(),
                   [](const PiTerm& x, const PiTerm& y) {
                     return compare(x, y) == Ordering3::Greater;
                   });
  if (flat.size() == 1) return std::move(flat.front());
  return PiTerm(Kind::Sum, std::move(flat));
}

PiTerm PiTerm::phi(PiTerm index, PiTerm arg) {
  if (arg.is(Kind::Phi) && compare(index, arg.index()) == Ordering3::Less) {
    return arg;
  }
  if (arg.is_critical_leaf() && compare(index, arg) == Ordering3::Less) {
    return arg;  // arg is closed under phi
  }
  if (arg.is(Kind::Zero) && index.is_critical_leaf()) {
    return index;  // critical leaves are their own least fixed point
  }
  return raw_phi(std::move(index), std::move(arg));
}

int structural_cmp(const PiTerm& a, const PiTerm& b) {
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

std::size_t node_count(const PiTerm& t) {
  std::size_t n = 1;
  for (const PiTerm& c : t.parts()) n += node_count(c);
  return n;
}

bool is_normal(const PiTerm& t) {
  switch (t.kind()) {
    case Kind::Sum: {
      if (t.parts().size() < 2) return false;
      for (const PiTerm& p : t.parts()) {
        if (p.is(Kind::Zero) || p.is(Kind::Sum) || !is_normal(p)) return false;
      }
      for (std::size_t i = 0; i + 1 < t.parts().size(); ++i) {
        if (compare(t.parts()[i], t.parts()[i + 1]) == Ordering3::Less)
          return false;
      }
      return true;
    }
    case Kind::Phi: {
      if (!is_normal(t.index()) || !is_normal(t.arg())) return false;
      if (t.arg().is(Kind::Phi) &&
          compare(t.index(), t.arg().index()) == Ordering3::Less)
        return false;
      if (t.arg().is_critical_leaf() &&
          compare(t.index(), t.arg()) == Ordering3::Less)
        return false;
      if (t.arg().is(Kind::Zero) && t.index().is_critical_leaf()) return false;
      return true;
    }
    case Kind::CollapseHi:
    case Kind::CollapseLo:
      return is_normal(t.child());
    default:
      return true;
  }
}

PiTerm normalize(const PiTerm& raw) {
  switch (raw.kind()) {
    case Kind::Sum: {
      std::vector<PiTerm> parts;
      parts.reserve(raw.parts().size());
      for (const PiTerm& p : raw.parts()) parts.push_back(normalize(p));
      return PiTerm::sum(std::move(parts));
    }
    case Kind::Phi:
      return PiTerm::phi(normalize(raw.index()), normalize(raw.arg()));
    case Kind::CollapseHi:
      return PiTerm::collapse_hi(normalize(raw.child()));
    case Kind::CollapseLo:
      return PiTerm::collapse_lo(normalize(raw.child()));
    default:
      return raw;
  }
}

Ordering3 compare(const PiTerm& a, const PiTerm& b) { return cmp(a, b); }

std::vector<PiTerm> k_section_hi(const PiTerm& t) {
  return section_of(t, Kind::CollapseHi);
}

std::vector<PiTerm> k_section_lo(const PiTerm& t) {
  return section_of(t, Kind::CollapseLo);
}

namespace {

// First s, s+ or D0 node in depth-first order, if any.
const PiTerm* find_target_band_node(const PiTerm& t) {
  if (t.is(Kind::Sigma) || t.is(Kind::SigmaPlus) || t.is(Kind::CollapseLo))
    return &t;
  for (const PiTerm& c : t.parts()) {
    if (const PiTerm* hit = find_target_band_node(c)) return hit;
  }
  return nullptr;
}

void collect_maximal_below_pi(const PiTerm& t, std::vector<PiTerm>& out) {
  if (compare(t, PiTerm::pi()) == Ordering3::Less) {
    out.push_back(t);
    return;
  }
  for (const PiTerm& c : t.parts()) collect_maximal_below_pi(c, out);
}

PiTerm substitute(const PiTerm& t) {
  if (compare(t, PiTerm::pi()) == Ordering3::Less) return t;
  switch (t.kind()) {
    case Kind::Pi:
      return PiTerm::sigma();
    case Kind::PiPlus:
      return PiTerm::sigma_plus();
    case Kind::CollapseHi:
      return PiTerm::collapse_lo(substitute(t.child()));
    case Kind::Sum: {
      std::vector<PiTerm> parts;
      parts.reserve(t.parts().size());
      for (const PiTerm& p : t.parts()) parts.push_back(substitute(p));
      return PiTerm::sum(std::move(parts));
    }
    case Kind::Phi:
      return PiTerm::phi(substitute(t.index()), substitute(t.arg()));
    default:
      // Unreachable on in-domain input: everything below p was returned
      // above and target-band nodes were rejected by the domain check.
      throw SubstitutionDomainError(to_text(t));
  }
}

}  // namespace

bool in_domain(const PiTerm& xi) {
  if (find_target_band_node(xi) != nullptr) return false;
  std::vector<PiTerm> low;
  collect_maximal_below_pi(xi, low);
  for (const PiTerm& t : low) {
    if (compare(t, PiTerm::sigma()) != Ordering3::Less) return false;
  }
  return true;
}

PiTerm apply_substitution(const PiTerm& xi) {
  if (const PiTerm* hit = find_target_band_node(xi)) {
    throw SubstitutionDomainError(to_text(*hit));
  }
  std::vector<PiTerm> low;
  collect_maximal_below_pi(xi, low);
  for (const PiTerm& t : low) {
    if (compare(t, PiTerm::sigma()) != Ordering3::Less) {
      throw SubstitutionDomainError(to_text(t));
    }
  }
  return substitute(xi);
}

std::string to_text(const PiTerm& t) {
  switch (t.kind()) {
    case Kind::Zero:
      return "0";
    case Kind::Sigma:
      return "s";
    case Kind::SigmaPlus:
      return "s+";
    case Kind::Pi:
      return "p";
    case Kind::PiPlus:
      return "p+";
    case Kind::Phi:
      return "phi(" + to_text(t.index()) + ", " + to_text(t.arg()) + ")";
    case Kind::CollapseHi:
      return "D1(" + to_text(t.child()) + ")";
    case Kind::CollapseLo:
      return "D0(" + to_text(t.child()) + ")";
    case Kind::Sum: {
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

PropertyReport check_embedding(const std::vector<PiTerm>& space) {
  PropertyReport report;
  report.suite = "embedding";
  std::vector<PiTerm> dom;
  std::vector<PiTerm> img;
  for (const PiTerm& t : space) {
    if (in_domain(t)) {
      dom.push_back(t);
      img.push_back(apply_substitution(t));
    }
  }
  const PiTerm p = PiTerm::pi();
  const PiTerm p_plus = PiTerm::pi_plus();
  const PiTerm s_plus = PiTerm::sigma_plus();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    // Identity below p.
    ++report.checked;
    if (compare(dom[i], p) == Ordering3::Less && img[i] != dom[i]) {
      report.add_witness({to_text(dom[i])}, "image equals the term below p",
                         to_text(img[i]));
    }
    // Terms below p+ land below s+.
    ++report.checked;
    if (compare(dom[i], p_plus) == Ordering3::Less &&
        compare(img[i], s_plus) != Ordering3::Less) {
      report.add_witness({to_text(dom[i])}, "image below s+ for terms below p+",
                         to_text(img[i]));
    }
    // D1-section maps onto the D0-section of the image.
    ++report.checked;
    std::vector<PiTerm> mapped;
    for (const PiTerm& m : k_section_hi(dom[i]))
      mapped.push_back(apply_substitution(m));
    std::sort(mapped.begin(), mapped.end(), PiStructuralLess{});
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    std::vector<PiTerm> lo = k_section_lo(img[i]);
    bool same = mapped.size() == lo.size();
    for (std::size_t k = 0; same && k < mapped.size(); ++k)
      same = mapped[k] == lo[k];
    if (!same) {
      std::string got = "{";
      for (std::size_t k = 0; k < lo.size(); ++k)
        got += (k ? ", " : "") + to_text(lo[k]);
      got += "}";
      report.add_witness({to_text(dom[i])},
                         "image of the D1-section equals the D0-section of "
                         "the image",
                         got);
    }
  }
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      ++report.checked;
      Ordering3 before = compare(dom[i], dom[j]);
      Ordering3 after = compare(img[i], img[j]);
      if (before != after) {
        report.add_witness(
            {to_text(dom[i]), to_text(dom[j])},
            std::string("image pair ordered '") + to_char(before) + "'",
            std::string("'") + to_char(after) + "'");
      }
    }
  }
  return report;
}

}  // namespace odw
