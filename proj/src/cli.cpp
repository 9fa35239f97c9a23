#include "odw/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "odw/diagram.hpp"
#include "odw/hull.hpp"
#include "odw/parse.hpp"
#include "odw/pi_system.hpp"
#include "odw/report.hpp"
#include "odw/space.hpp"
#include "odw/suites.hpp"
#include "odw/veblen.hpp"

namespace odw {
namespace {

using nlohmann::json;

/// Thrown after a diagnostic has already been printed; carries the exit code.
struct CliFailure {
  int code;
};

System system_from(const std::string& name) {
  if (name == "vb") return System::VB;
  if (name == "pi") return System::PI;
  return System::OO;
}

// Per-system glue so the shared subcommands can be written once.  `add` is
// the natural (Hessenberg) sum: for every system the normalizing sum
// constructor merges the principal parts of both operands.
struct OoTag {
  using Term = Diagram;
  static Term parse(const std::string& text) { return parse_diagram(text); }
  static BasicSpace<Term> space(int n) { return enumerate_diagrams(n); }
  static Term add(const Term& a, const Term& b) { return natural_sum(a, b); }
};

struct VbTag {
  using Term = VTerm;
  static Term parse(const std::string& text) { return parse_vterm(text); }
  static BasicSpace<Term> space(int n) { return enumerate_vterms(n); }
  static Term add(const Term& a, const Term& b) { return VTerm::sum({a, b}); }
};

struct PiTag {
  using Term = PiTerm;
  static Term parse(const std::string& text) { return parse_piterm(text); }
  static BasicSpace<Term> space(int n) { return enumerate_piterms(n); }
  static Term add(const Term& a, const Term& b) { return PiTerm::sum({a, b}); }
};

template <class Fn>
int dispatch_system(System s, Fn&& fn) {
  switch (s) {
    case System::VB:
      return fn(VbTag{});
    case System::PI:
      return fn(PiTag{});
    case System::OO:
      break;
  }
  return fn(OoTag{});
}

void print_caret(std::ostream& err, const std::string& text,
                 const ParseError& e) {
  err << "error: " << e.what() << '\n';
  err << "  " << text << '\n';
  err << "  " << std::string(e.offset, ' ') << "^\n";
}

template <class Tag>
typename Tag::Term parse_or_fail(Tag tag, const std::string& text,
                                 std::ostream& err) {
  try {
    return tag.parse(text);
  } catch (const ParseError& e) {
    print_caret(err, text, e);
    throw CliFailure{2};
  }
}

json witness_json(const Witness& w) {
  return json{{"terms", w.terms}, {"expected", w.expected}, {"actual", w.actual}};
}

json report_json(const PropertyReport& r) {
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  return json{{"suite", r.suite},
              {"checked", r.checked},
              {"pass", r.pass},
              {"witness_total", r.witness_total},
              {"witnesses", std::move(ws)}};
}

int emit_report(const PropertyReport& r, bool as_json, const json& inputs,
                std::ostream& out) {
  if (as_json) {
    out << json{{"command", "check"}, {"inputs", inputs},
                {"report", report_json(r)}}
               .dump(2)
        << '\n';
  } else {
    out << "suite: " << r.suite << '\n';
    out << "checked: " << r.checked << '\n';
    out << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      const Witness& w = r.witnesses[i];
      out << "witness " << (i + 1) << ": [";
      for (std::size_t k = 0; k < w.terms.size(); ++k) {
        if (k > 0) out << " | ";
        out << w.terms[k];
      }
      out << "]\n  expected: " << w.expected << "\n  actual: " << w.actual
          << '\n';
    }
    if (r.witness_total > r.witnesses.size()) {
      out << "(" << (r.witness_total - r.witnesses.size())
          << " more witnesses not shown)\n";
    }
  }
  return r.pass ? 0 : 1;
}

void merge_into(PropertyReport& acc, const PropertyReport& r) {
  acc.checked += r.checked;
  acc.witness_total += r.witness_total;
  if (!r.pass) acc.pass = false;
  for (const auto& w : r.witnesses) {
    if (acc.witnesses.size() < PropertyReport::kMaxWitnesses) {
      acc.witnesses.push_back(w);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"ordinal notation workbench"};
  app.require_subcommand(1);

  struct {
    std::string system = "oo";
    std::string term;
    std::string lhs;
    std::string rhs;
    std::string alpha;
    std::string suite;
    bool as_json = false;
    int max_nodes = 5;
    int alpha_nodes = 2;
    int budget = 6;
    int space_size = 4;
    std::uint64_t triples = 100000;
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    std::uint64_t max_steps = 10000;
  } o;

  auto add_json = [&](CLI::App* sc) {
    sc->add_flag("--json", o.as_json, "emit a JSON document instead of text");
  };
  auto add_system = [&](CLI::App* sc, std::vector<std::string> allowed) {
    sc->add_option("--system", o.system, "term system")
        ->transform(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
  };

  CLI::App* sc_parse =
      app.add_subcommand("parse", "parse a term and report its shape");
  sc_parse->add_option("term", o.term, "term text")->required();
  add_system(sc_parse, {"oo", "vb", "pi"});
  add_json(sc_parse);

  CLI::App* sc_nf =
      app.add_subcommand("nf", "print the normal form of a term");
  sc_nf->add_option("term", o.term, "term text")->required();
  add_system(sc_nf, {"oo", "vb", "pi"});
  add_json(sc_nf);

  CLI::App* sc_cmp = app.add_subcommand("cmp", "compare two terms (<, =, >)");
  sc_cmp->add_option("lhs", o.lhs, "left term")->required();
  sc_cmp->add_option("rhs", o.rhs, "right term")->required();
  add_system(sc_cmp, {"oo", "vb", "pi"});
  add_json(sc_cmp);

  CLI::App* sc_ksec = app.add_subcommand(
      "ksec", "outermost collapse subterms, ascending");
  sc_ksec->add_option("term", o.term, "term text")->required();
  add_system(sc_ksec, {"oo", "pi"});
  add_json(sc_ksec);

  CLI::App* sc_add =
      app.add_subcommand("add", "natural (Hessenberg) sum of two terms");
  sc_add->add_option("lhs", o.lhs, "left term")->required();
  sc_add->add_option("rhs", o.rhs, "right term")->required();
  add_system(sc_add, {"oo", "vb", "pi"});
  add_json(sc_add);

  CLI::App* sc_ll = app.add_subcommand(
      "ll", "collapse-compatible strict order on base terms (true/false)");
  sc_ll->add_option("lhs", o.lhs, "left term")->required();
  sc_ll->add_option("rhs", o.rhs, "right term")->required();
  add_json(sc_ll);

  CLI::App* sc_dsim = app.add_subcommand(
      "dsim",
      "saturate the hull below a collapse argument and check membership "
      "against enumerated terms (always JSON)");
  sc_dsim->add_option("--alpha", o.alpha, "collapse argument")->required();
  sc_dsim->add_option("--budget", o.budget, "node budget for hull members")
      ->capture_default_str();
  sc_dsim
      ->add_option("--space-size", o.space_size,
                   "max nodes of the probe space")
      ->capture_default_str();

  CLI::App* sc_fmap = app.add_subcommand(
      "fmap", "apply the collapsing substitution to a two-level term");
  sc_fmap->add_option("term", o.term, "term text")->required();
  add_json(sc_fmap);

  CLI::App* sc_enum = app.add_subcommand(
      "enum", "enumerate every normal term within a node budget");
  add_system(sc_enum, {"oo", "vb", "pi"});
  sc_enum->add_option("--max-nodes", o.max_nodes, "node budget")
      ->capture_default_str();
  add_json(sc_enum);

  CLI::App* sc_check =
      app.add_subcommand("check", "run a property suite and report witnesses");
  sc_check
      ->add_option("--suite", o.suite,
                   "one of: order, facts, injectivity, forms, veblen, hull, "
                   "embedding, descent, roundtrip")
      ->required()
      ->transform(CLI::IsMember({"order", "facts", "injectivity", "forms",
                                 "veblen", "hull", "embedding", "descent",
                                 "roundtrip"}));
  add_system(sc_check, {"oo", "vb", "pi"});
  sc_check->add_option("--max-nodes", o.max_nodes, "term space node budget")
      ->capture_default_str();
  sc_check
      ->add_option("--alpha-nodes", o.alpha_nodes,
                   "collapse-argument space node budget (facts, hull)")
      ->capture_default_str();
  sc_check->add_option("--budget", o.budget, "hull node budget (hull)")
      ->capture_default_str();
  sc_check
      ->add_option("--triples", o.triples,
                   "sampled transitivity triples; 0 checks all (order)")
      ->capture_default_str();
  sc_check->add_option("--seed", o.seed, "RNG seed (order, descent)")
      ->capture_default_str();
  sc_check->add_option("--count", o.count, "number of walks (descent)")
      ->capture_default_str();
  sc_check->add_option("--max-steps", o.max_steps, "walk step cap (descent)")
      ->capture_default_str();
  add_json(sc_check);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("odw");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty()) {
      deepest = deepest->get_subcommands().front();
    }
    out << deepest->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run 'odw --help' for usage\n";
    return 2;
  }

  const bool as_json = o.as_json;
  try {
    if (sc_parse->parsed()) {
      return dispatch_system(system_from(o.system), [&](auto tag) {
        auto t = parse_or_fail(tag, o.term, err);
        const bool normal = is_normal(t);
        if (as_json) {
          out << json{{"command", "parse"},
                      {"inputs", {{"system", o.system}, {"term", o.term}}},
                      {"result",
                       {{"parsed", to_text(t)},
                        {"nodes", node_count(t)},
                        {"normal", normal}}}}
                     .dump(2)
              << '\n';
        } else {
          out << "parsed: " << to_text(t) << '\n';
          out << "nodes: " << node_count(t) << '\n';
          out << "normal: " << (normal ? "yes" : "no") << '\n';
        }
        return 0;
      });
    }

    if (sc_nf->parsed()) {
      return dispatch_system(system_from(o.system), [&](auto tag) {
        auto t = normalize(parse_or_fail(tag, o.term, err));
        if (as_json) {
          out << json{{"command", "nf"},
                      {"inputs", {{"system", o.system}, {"term", o.term}}},
                      {"result",
                       {{"term", to_text(t)}, {"nodes", node_count(t)}}}}
                     .dump(2)
              << '\n';
        } else {
          out << to_text(t) << '\n';
        }
        return 0;
      });
    }

    if (sc_cmp->parsed()) {
      return dispatch_system(system_from(o.system), [&](auto tag) {
        auto a = normalize(parse_or_fail(tag, o.lhs, err));
        auto b = normalize(parse_or_fail(tag, o.rhs, err));
        const Ordering3 c = compare(a, b);
        if (as_json) {
          out << json{{"command", "cmp"},
                      {"inputs",
                       {{"system", o.system}, {"lhs", o.lhs}, {"rhs", o.rhs}}},
                      {"result", {{"ordering", std::string(1, to_char(c))}}}}
                     .dump(2)
              << '\n';
        } else {
          out << to_char(c) << '\n';
        }
        return 0;
      });
    }

    if (sc_ksec->parsed()) {
      if (system_from(o.system) == System::OO) {
        Diagram t = normalize(parse_or_fail(OoTag{}, o.term, err));
        KSection sec = k_section(t);
        std::sort(sec.begin(), sec.end(), [](const Diagram& x, const Diagram& y) {
          return compare(x, y) == Ordering3::Less;
        });
        if (as_json) {
          json ms = json::array();
          for (const auto& m : sec) ms.push_back(to_text(m));
          out << json{{"command", "ksec"},
                      {"inputs", {{"system", o.system}, {"term", o.term}}},
                      {"result", {{"members", std::move(ms)}}}}
                     .dump(2)
              << '\n';
        } else {
          for (const auto& m : sec) out << to_text(m) << '\n';
        }
      } else {
        PiTerm t = normalize(parse_or_fail(PiTag{}, o.term, err));
        auto by_order = [](const PiTerm& x, const PiTerm& y) {
          return compare(x, y) == Ordering3::Less;
        };
        std::vector<PiTerm> hi = k_section_hi(t);
        std::vector<PiTerm> lo = k_section_lo(t);
        std::sort(hi.begin(), hi.end(), by_order);
        std::sort(lo.begin(), lo.end(), by_order);
        if (as_json) {
          json jhi = json::array();
          json jlo = json::array();
          for (const auto& m : hi) jhi.push_back(to_text(m));
          for (const auto& m : lo) jlo.push_back(to_text(m));
          out << json{{"command", "ksec"},
                      {"inputs", {{"system", o.system}, {"term", o.term}}},
                      {"result",
                       {{"hi", std::move(jhi)}, {"lo", std::move(jlo)}}}}
                     .dump(2)
              << '\n';
        } else {
          for (const auto& m : hi) out << "hi: " << to_text(m) << '\n';
          for (const auto& m : lo) out << "lo: " << to_text(m) << '\n';
        }
      }
      return 0;
    }

    if (sc_add->parsed()) {
      return dispatch_system(system_from(o.system), [&](auto tag) {
        auto a = normalize(parse_or_fail(tag, o.lhs, err));
        auto b = normalize(parse_or_fail(tag, o.rhs, err));
        auto s = tag.add(a, b);
        if (as_json) {
          out << json{{"command", "add"},
                      {"inputs",
                       {{"system", o.system}, {"lhs", o.lhs}, {"rhs", o.rhs}}},
                      {"result", {{"term", to_text(s)}}}}
                     .dump(2)
              << '\n';
        } else {
          out << to_text(s) << '\n';
        }
        return 0;
      });
    }

    if (sc_ll->parsed()) {
      Diagram a = normalize(parse_or_fail(OoTag{}, o.lhs, err));
      Diagram b = normalize(parse_or_fail(OoTag{}, o.rhs, err));
      const bool holds = collapsibly_less(a, b);
      if (as_json) {
        out << json{{"command", "ll"},
                    {"inputs", {{"lhs", o.lhs}, {"rhs", o.rhs}}},
                    {"result", {{"holds", holds}}}}
                   .dump(2)
            << '\n';
      } else {
        out << (holds ? "true" : "false") << '\n';
      }
      return 0;
    }

    if (sc_dsim->parsed()) {
      Diagram alpha = normalize(parse_or_fail(OoTag{}, o.alpha, err));
      HullSet hull = saturate(alpha, o.budget);
      std::vector<Diagram> probe = enumerate_diagrams(o.space_size).terms;
      HullChecks checks = run_hull_checks(hull, probe);
      std::vector<Diagram> members = hull.members_ascending();
      json ms = json::array();
      for (const auto& m : members) ms.push_back(to_text(m));
      json ws = json::array();
      for (const auto& w : checks.witnesses) ws.push_back(witness_json(w));
      json doc{{"command", "dsim"},
               {"inputs",
                {{"alpha", to_text(alpha)},
                 {"budget", o.budget},
                 {"space_size", o.space_size}}},
               {"report",
                {{"collapse", to_text(Diagram::collapse(alpha))},
                 {"member_count", members.size()},
                 {"members", std::move(ms)},
                 {"checks",
                  {{"sound", checks.sound},
                   {"complete", checks.complete},
                   {"checked", checks.checked},
                   {"witnesses", std::move(ws)}}}}}};
      out << doc.dump(2) << '\n';
      return (checks.sound && checks.complete) ? 0 : 1;
    }

    if (sc_fmap->parsed()) {
      PiTerm t = normalize(parse_or_fail(PiTag{}, o.term, err));
      try {
        PiTerm image = apply_substitution(t);
        if (as_json) {
          out << json{{"command", "fmap"},
                      {"inputs", {{"term", o.term}}},
                      {"result", {{"term", to_text(image)}}}}
                     .dump(2)
              << '\n';
        } else {
          out << to_text(image) << '\n';
        }
        return 0;
      } catch (const SubstitutionDomainError& e) {
        if (as_json) {
          out << json{{"command", "fmap"},
                      {"inputs", {{"term", o.term}}},
                      {"error",
                       {{"type", "domain"}, {"offending", e.offending}}}}
                     .dump(2)
              << '\n';
        } else {
          err << "error: " << e.what() << '\n';
        }
        return 1;
      }
    }

    if (sc_enum->parsed()) {
      return dispatch_system(system_from(o.system), [&](auto tag) {
        auto space = tag.space(o.max_nodes);
        if (as_json) {
          json ts = json::array();
          for (const auto& t : space.terms) ts.push_back(to_text(t));
          out << json{{"command", "enum"},
                      {"inputs",
                       {{"system", o.system}, {"max_nodes", o.max_nodes}}},
                      {"result",
                       {{"count", space.terms.size()}, {"terms", std::move(ts)}}}}
                     .dump(2)
              << '\n';
        } else {
          for (const auto& t : space.terms) out << to_text(t) << '\n';
        }
        return 0;
      });
    }

    if (sc_check->parsed()) {
      const bool system_given = sc_check->count("--system") > 0;
      auto require_system = [&](System wanted, const char* name) {
        if (system_given && system_from(o.system) != wanted) {
          err << "error: suite '" << o.suite << "' runs on system " << name
              << '\n';
          throw CliFailure{2};
        }
      };
      json inputs{{"suite", o.suite}};
      PropertyReport report;
      if (o.suite == "order" || o.suite == "roundtrip") {
        inputs["system"] = o.system;
        inputs["max_nodes"] = o.max_nodes;
        if (o.suite == "order") {
          inputs["triples"] = o.triples;
          inputs["seed"] = o.seed;
        }
        dispatch_system(system_from(o.system), [&](auto tag) {
          auto space = tag.space(o.max_nodes);
          if (o.suite == "order") {
            using Term = typename decltype(tag)::Term;
            std::optional<TripleSampling> sampling;
            if (o.triples > 0) sampling = TripleSampling{o.triples, o.seed};
            report = check_total_order(
                space,
                [](const Term& x, const Term& y) { return compare(x, y); },
                sampling);
          } else {
            report = check_roundtrip(space);
          }
          return 0;
        });
      } else if (o.suite == "facts") {
        require_system(System::OO, "oo");
        inputs["system"] = "oo";
        inputs["max_nodes"] = o.max_nodes;
        inputs["alpha_nodes"] = o.alpha_nodes;
        report = check_collapse_facts(enumerate_diagrams(o.max_nodes),
                                      enumerate_diagrams(o.alpha_nodes));
      } else if (o.suite == "injectivity") {
        require_system(System::OO, "oo");
        inputs["system"] = "oo";
        inputs["max_nodes"] = o.max_nodes;
        report = check_collapse_injectivity(enumerate_diagrams(o.max_nodes));
      } else if (o.suite == "forms") {
        require_system(System::OO, "oo");
        inputs["system"] = "oo";
        inputs["max_nodes"] = o.max_nodes;
        report = check_collapsibly_less_forms(enumerate_diagrams(o.max_nodes));
      } else if (o.suite == "veblen") {
        require_system(System::VB, "vb");
        inputs["system"] = "vb";
        inputs["max_nodes"] = o.max_nodes;
        report = check_veblen_laws(enumerate_vterms(o.max_nodes));
      } else if (o.suite == "hull") {
        require_system(System::OO, "oo");
        inputs["system"] = "oo";
        inputs["max_nodes"] = o.max_nodes;
        inputs["alpha_nodes"] = o.alpha_nodes;
        inputs["budget"] = o.budget;
        DiagramSpace alphas = enumerate_diagrams(o.alpha_nodes);
        DiagramSpace probe = enumerate_diagrams(o.max_nodes);
        report.suite = "hull";
        for (const auto& alpha : alphas.terms) {
          merge_into(report,
                     check_hull_consistency(alpha, o.budget, probe.terms));
        }
      } else if (o.suite == "embedding") {
        require_system(System::PI, "pi");
        inputs["system"] = "pi";
        inputs["max_nodes"] = o.max_nodes;
        report = check_embedding(enumerate_piterms(o.max_nodes).terms);
      } else {  // descent
        require_system(System::OO, "oo");
        inputs["system"] = "oo";
        inputs["max_nodes"] = o.max_nodes;
        inputs["count"] = o.count;
        inputs["max_steps"] = o.max_steps;
        inputs["seed"] = o.seed;
        report = check_descent_batch(enumerate_diagrams(o.max_nodes), o.count,
                                     o.max_steps, o.seed);
      }
      return emit_report(report, as_json, inputs, out);
    }
  } catch (const CliFailure& f) {
    return f.code;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace odw
