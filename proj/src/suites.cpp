#include "odw/suites.hpp"

#include <algorithm>

#include "odw/parse.hpp"

namespace odw {

PropertyReport check_collapse_facts(const DiagramSpace& space,
                                    const DiagramSpace& alpha_space) {
  PropertyReport report;
  report.suite = "facts";
  const Diagram omega = Diagram::omega();
  for (const Diagram& a : space.terms) {
    const Diagram da = Diagram::collapse(a);
    ++report.checked;
    if (compare(da, omega) != Ordering3::Less) {
      report.add_witness({to_text(a)}, "d(a) below W", to_text(da));
    }
    for (const Diagram& m : k_section(a)) {
      ++report.checked;
      if (compare(m, da) != Ordering3::Less) {
        report.add_witness({to_text(a), to_text(m)},
                           "d-subterm below " + to_text(da), "not below");
      }
      ++report.checked;
      if (compare(m, a) == Ordering3::Greater) {
        report.add_witness({to_text(a), to_text(m)},
                           "d-subterm at most the whole term", "greater");
      }
    }
  }
  for (const Diagram& b : space.terms) {
    if (compare(b, omega) != Ordering3::Less) continue;
    for (const Diagram& a : alpha_space.terms) {
      const Diagram da = Diagram::collapse(a);
      bool section_below = true;
      for (const Diagram& m : k_section(b)) {
        if (compare(m, da) != Ordering3::Less) {
          section_below = false;
          break;
        }
      }
      if (!section_below) continue;
      ++report.checked;
      if (compare(b, da) != Ordering3::Less) {
        report.add_witness(
            {to_text(b), to_text(a)},
            "countable term with d-subterms below d(a) is below d(a)",
            "not below");
      }
    }
  }
  return report;
}

PropertyReport check_collapse_injectivity(const DiagramSpace& space) {
  PropertyReport report;
  report.suite = "injectivity";
  const auto& ts = space.terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      ++report.checked;
      if (compare(Diagram::collapse(ts[i]), Diagram::collapse(ts[j])) ==
          Ordering3::Equal) {
        report.add_witness({to_text(ts[i]), to_text(ts[j])},
                           "distinct terms collapse to distinct d-terms",
                           "equal collapses");
      }
    }
  }
  return report;
}

PropertyReport check_collapsibly_less_forms(const DiagramSpace& space) {
  PropertyReport report;
  report.suite = "collapsibly-less";
  for (const Diagram& a : space.terms) {
    const Diagram da = Diagram::collapse(a);
    for (const Diagram& b : space.terms) {
      ++report.checked;
      const bool lhs = collapsibly_less(a, b);
      const bool rhs =
          compare(da, Diagram::collapse(b)) == Ordering3::Less &&
          compare(a, b) == Ordering3::Less;
      if (lhs != rhs) {
        report.add_witness({to_text(a), to_text(b)},
                           "section form agrees with the d-comparison form",
                           lhs ? "section form only" : "d-comparison only");
      }
    }
  }
  return report;
}

PropertyReport check_veblen_laws(const VebSpace& space) {
  PropertyReport report;
  report.suite = "veblen";
  const auto& ts = space.terms;
  for (const VTerm& a : ts) {
    for (const VTerm& c : ts) {
      if (compare(a, c) != Ordering3::Less) continue;
      for (const VTerm& d : ts) {
        ++report.checked;
        const VTerm inner = VTerm::phi(c, d);
        const VTerm collapsed = VTerm::phi(a, inner);
        if (collapsed != inner) {
          report.add_witness(
              {to_text(a), to_text(c), to_text(d)},
              "phi(a, phi(c, d)) with a < c collapses to the inner term",
              to_text(collapsed));
        }
      }
    }
  }
  for (const VTerm& a : ts) {
    for (const VTerm& b : ts) {
      const VTerm pb = VTerm::phi(a, b);
      ++report.checked;
      if (compare(b, pb) == Ordering3::Greater) {
        report.add_witness({to_text(a), to_text(b)},
                           "b at most phi(a, b)", to_text(pb));
      }
      for (const VTerm& c : ts) {
        if (compare(b, c) != Ordering3::Less) continue;
        ++report.checked;
        if (compare(pb, VTerm::phi(a, c)) != Ordering3::Less) {
          report.add_witness({to_text(a), to_text(b), to_text(c)},
                             "phi strictly monotone in the second argument",
                             "not strictly below");
        }
      }
    }
  }
  return report;
}

namespace {

template <class Term, class ParseFn>
PropertyReport roundtrip_impl(const std::vector<Term>& terms, ParseFn parse,
                              const char* suite) {
  PropertyReport report;
  report.suite = suite;
  for (const Term& t : terms) {
    ++report.checked;
    const std::string text = to_text(t);
    Term back = parse(text);
    if (back != t) {
      report.add_witness({text}, "parse of the printed form is identical",
                         to_text(back));
    }
  }
  return report;
}

}  // namespace

PropertyReport check_roundtrip(const DiagramSpace& space) {
  return roundtrip_impl(space.terms,
                        [](const std::string& s) { return parse_diagram(s); },
                        "roundtrip-oo");
}

PropertyReport check_roundtrip(const VebSpace& space) {
  return roundtrip_impl(space.terms,
                        [](const std::string& s) { return parse_vterm(s); },
                        "roundtrip-vb");
}

PropertyReport check_roundtrip(const PiSpace& space) {
  return roundtrip_impl(space.terms,
                        [](const std::string& s) { return parse_piterm(s); },
                        "roundtrip-pi");
}

DescentResult descent_search(const DiagramSpace& space, const Diagram& seed,
                             DescentPolicy policy, std::size_t max_steps) {
  DescentResult result;
  result.chain.push_back(seed);
  std::mt19937_64 rng(policy.rng_seed);
  const auto& ts = space.terms;
  for (std::size_t step = 0;; ++step) {
    const Diagram& current = result.chain.back();
    // Space is ascending, so the candidates are a prefix.
    std::size_t below = std::partition_point(
                            ts.begin(), ts.end(),
                            [&](const Diagram& t) {
                              return compare(t, current) == Ordering3::Less;
                            }) -
                        ts.begin();
    if (below == 0) break;
    if (step == max_steps) {
      result.truncated = true;
      break;
    }
    if (policy.kind == DescentPolicy::Kind::GreedyMax) {
      result.chain.push_back(ts[below - 1]);
    } else {
      result.chain.push_back(ts[rng() % below]);
    }
  }
  for (std::size_t i = 0; i + 1 < result.chain.size(); ++i) {
    if (compare(result.chain[i + 1], result.chain[i]) != Ordering3::Less) {
      throw std::logic_error("descent produced a non-descending step");
    }
  }
  return result;
}

PropertyReport check_descent_batch(const DiagramSpace& space,
                                   std::size_t count, std::size_t max_steps,
                                   std::uint64_t seed) {
  PropertyReport report;
  report.suite = "descent";
  if (space.terms.empty()) return report;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Diagram& start = space.terms[rng() % space.terms.size()];
    DescentPolicy policy{DescentPolicy::Kind::Random, rng()};
    DescentResult r = descent_search(space, start, policy, max_steps);
    ++report.checked;
    if (r.truncated) {
      report.add_witness({to_text(start)},
                         "descent terminates within max_steps",
                         "truncated after " +
                             std::to_string(r.chain.size() - 1) + " steps");
    }
    for (std::size_t k = 0; k + 1 < r.chain.size(); ++k) {
      if (compare(r.chain[k + 1], r.chain[k]) != Ordering3::Less) {
        report.add_witness({to_text(r.chain[k]), to_text(r.chain[k + 1])},
                           "chain strictly descending", "non-descending step");
        break;
      }
    }
  }
  return report;
}

}  // namespace odw
