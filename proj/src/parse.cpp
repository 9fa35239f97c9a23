#include "odw/parse.hpp"

#include <cctype>
#include <vector>

namespace odw {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == s.size();
  }
  // Consume `tok` if the input continues with it (no internal whitespace).
  bool try_eat(std::string_view tok) {
    skip_ws();
    if (s.substr(pos, tok.size()) != tok) return false;
    pos += tok.size();
    return true;
  }
  void expect(std::string_view tok, const std::string& production) {
    if (!try_eat(tok)) throw ParseError(pos, production);
  }
  // True if the character right here (no whitespace skip) is `c`.
  bool peek_adjacent(char c) const { return pos < s.size() && s[pos] == c; }
};

template <class Term, class PrimaryFn, class SumFn>
Term parse_sum(Cursor& c, PrimaryFn primary, SumFn raw_sum) {
  std::vector<Term> parts;
  parts.push_back(primary(c));
  while (c.try_eat("+")) parts.push_back(primary(c));
  if (parts.size() == 1) return std::move(parts.front());
  return raw_sum(std::move(parts));
}

template <class Term, class PrimaryFn, class SumFn>
Term parse_whole(std::string_view text, PrimaryFn primary, SumFn raw_sum) {
  Cursor c{text};
  Term t = parse_sum<Term>(c, primary, raw_sum);
  if (!c.at_end()) throw ParseError(c.pos, "' + ' or end of input");
  return t;
}

Diagram diagram_primary(Cursor& c) {
  if (c.try_eat("0")) return Diagram::zero();
  if (c.try_eat("w^")) {
    c.expect("(", "'(' after 'w^'");
    Diagram e = parse_sum<Diagram>(c, diagram_primary, &Diagram::raw_sum);
    c.expect(")", "')'");
    return Diagram::raw_pow(std::move(e));
  }
  if (c.try_eat("W")) return Diagram::omega();
  if (c.try_eat("d")) {
    c.expect("(", "'(' after 'd'");
    Diagram a = parse_sum<Diagram>(c, diagram_primary, &Diagram::raw_sum);
    c.expect(")", "')'");
    return Diagram::collapse(std::move(a));
  }
  c.skip_ws();
  throw ParseError(c.pos, "term ('0', 'W', 'w^(...)' or 'd(...)')");
}

VTerm vterm_primary(Cursor& c) {
  if (c.try_eat("0")) return VTerm::zero();
  if (c.try_eat("phi")) {
    c.expect("(", "'(' after 'phi'");
    VTerm a = parse_sum<VTerm>(c, vterm_primary, &VTerm::raw_sum);
    c.expect(",", "','");
    VTerm b = parse_sum<VTerm>(c, vterm_primary, &VTerm::raw_sum);
    c.expect(")", "')'");
    return VTerm::raw_phi(std::move(a), std::move(b));
  }
  c.skip_ws();
  throw ParseError(c.pos, "term ('0' or 'phi(...)')");
}

PiTerm piterm_primary(Cursor& c) {
  if (c.try_eat("0")) return PiTerm::zero();
  if (c.try_eat("phi")) {
    c.expect("(", "'(' after 'phi'");
    PiTerm a = parse_sum<PiTerm>(c, piterm_primary, &PiTerm::raw_sum);
    c.expect(",", "','");
    PiTerm b = parse_sum<PiTerm>(c, piterm_primary, &PiTerm::raw_sum);
    c.expect(")", "')'");
    return PiTerm::raw_phi(std::move(a), std::move(b));
  }
  if (c.try_eat("D1")) {
    c.expect("(", "'(' after 'D1'");
    PiTerm a = parse_sum<PiTerm>(c, piterm_primary, &PiTerm::raw_sum);
    c.expect(")", "')'");
    return PiTerm::collapse_hi(std::move(a));
  }
  if (c.try_eat("D0")) {
    c.expect("(", "'(' after 'D0'");
    PiTerm a = parse_sum<PiTerm>(c, piterm_primary, &PiTerm::raw_sum);
    c.expect(")", "')'");
    return PiTerm::collapse_lo(std::move(a));
  }
  if (c.try_eat("s")) {
    if (c.peek_adjacent('+')) {
      ++c.pos;
      return PiTerm::sigma_plus();
    }
    return PiTerm::sigma();
  }
  if (c.try_eat("p")) {
    if (c.peek_adjacent('+')) {
      ++c.pos;
      return PiTerm::pi_plus();
    }
    return PiTerm::pi();
  }
  c.skip_ws();
  throw ParseError(c.pos,
                   "term ('0', 's', 's+', 'p', 'p+', 'phi(...)', 'D1(...)' "
                   "or 'D0(...)')");
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  return parse_whole<Diagram>(text, diagram_primary, &Diagram::raw_sum);
}

VTerm parse_vterm(std::string_view text) {
  return parse_whole<VTerm>(text, vterm_primary, &VTerm::raw_sum);
}

PiTerm parse_piterm(std::string_view text) {
  return parse_whole<PiTerm>(text, piterm_primary, &PiTerm::raw_sum);
}

}  // namespace odw
