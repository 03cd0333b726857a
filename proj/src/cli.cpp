#include "hopfrep/cli.hpp"

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopfrep/alggroups.hpp"
#include "hopfrep/error.hpp"
#include "hopfrep/prop_h.hpp"
#include "hopfrep/repvariety.hpp"
#include "json.hpp"

namespace hopfrep::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int verbosity = 0;
  std::string order = "grevlex";

  std::string term;
  std::size_t n = 0;
  std::string word;
  std::string polarization = "left";
  std::string group;
  std::string target;
  std::string source;
  std::string finite;
  std::string observable;
  bool groebner = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

// `free:n` or a presentation JSON file.
groups::GroupPresentation load_presentation(const std::string& spec) {
  if (spec.starts_with("free:")) {
    std::string_view arg = std::string_view(spec).substr(5);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size())
      throw Error("malformed group spec '" + spec + "'");
    return groups::GroupPresentation::free(n);
  }
  return groups::GroupPresentation::load(spec);
}

// Words are read with the presentation's generator names, falling back to
// the x1, x2, ... syntax.
groups::FreeWord parse_word(const std::string& text, const groups::GroupPresentation& g) {
  try {
    return groups::FreeWord::parse(text, g.generators);
  } catch (const ParseError&) {
    try {
      return groups::FreeWord::parse(text, g.rank());
    } catch (const ParseError&) {
    }
    throw;
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json morphism_json(const prop::HMorphism& f) {
  Json words = Json::array();
  for (const auto& w : f.words()) words.push_back(w.to_string());
  return Json{{"dom", f.dom()}, {"cod", f.cod()}, {"words", words}, {"text", f.to_string()}};
}

// ------------------------------------------------------------ subcommands

int cmd_axioms(const Options& o, std::ostream& out) {
  auto report = prop::verify_axioms();
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : report) {
    all = all && r.holds;
    if (json_mode(o)) {
      Json sides = Json::array();
      for (std::size_t i = 0; i < r.sides.size(); ++i)
        sides.push_back({{"term", r.sides[i]}, {"normal_form", r.normal_forms[i].to_string()}});
      arr.push_back({{"number", r.number}, {"name", r.name}, {"holds", r.holds}, {"sides", sides}});
      continue;
    }
    out << (r.holds ? "PASS" : "FAIL") << ' ' << (r.number < 10 ? " " : "") << r.number << ' '
        << r.name << ": " << r.normal_forms.front().to_string() << '\n';
    if (o.verbosity > 0)
      for (std::size_t i = 0; i < r.sides.size(); ++i)
        out << "       " << r.sides[i] << "  =>  " << r.normal_forms[i].to_string() << '\n';
  }
  if (json_mode(o)) print_json(out, Json{{"all_hold", all}, {"axioms", arr}});
  return all ? kSuccess : kVerificationFailed;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  auto term = prop::GeneratorTerm::parse(o.term);
  auto f = prop::eval_term(term);
  if (json_mode(o)) {
    Json j = morphism_json(f);
    j["term"] = term.to_string();
    print_json(out, j);
  } else {
    out << f.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  auto w = groups::FreeWord::parse(o.word, o.n);
  auto order = o.polarization == "right" ? prop::PolarizationOrder::rightmost_first
                                         : prop::PolarizationOrder::leftmost_first;
  auto reduced = prop::multilinear_reduce(prop::LinHom::of(prop::HMorphism(o.n, {w})), order);
  if (json_mode(o)) {
    Json terms = Json::array();
    for (const auto& [f, c] : reduced.terms())
      terms.push_back({{"coefficient", c.get_str()}, {"word", f.words()[0].to_string()}});
    print_json(out, Json{{"n", o.n}, {"word", w.to_string()}, {"terms", terms}});
  } else {
    out << reduced.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_rep_ideal(const Options& o, std::ostream& out, std::ostream& err) {
  auto group = load_presentation(o.group);
  auto target = alg::make_group(o.target);
  auto order = poly::parse_monomial_order(o.order);
  auto rep = rep::rep_ideal(group, target, order);
  std::optional<poly::GroebnerBasis> gb;
  if (o.groebner) {
    gb = poly::groebner(rep.ideal, order);
    if (o.verbosity > 0)
      err << "groebner: " << gb->stats().pairs_considered << " pairs, "
          << gb->stats().reductions_to_zero << " reductions to zero\n";
  }
  if (json_mode(o)) {
    Json j = Json::parse(rep.to_json());
    if (gb) {
      j["order"] = poly::to_string(order);
      Json basis = Json::array();
      for (const auto& p : gb->basis()) basis.push_back(p.to_string());
      j["groebner_basis"] = basis;
    }
    print_json(out, j);
    return kSuccess;
  }
  out << "variables:";
  for (const auto& v : rep.ring.names()) out << ' ' << v;
  out << "\nideal (" << rep.ideal.generators.size() << " generators):\n";
  for (std::size_t i = 0; i < rep.ideal.generators.size(); ++i)
    out << "  " << rep.ideal.generators[i].to_string() << "    # " << rep.provenance[i].source
        << '\n';
  if (gb) {
    out << "groebner basis (" << poly::to_string(order) << ", " << gb->basis().size()
        << " elements):\n";
    for (const auto& p : gb->basis()) out << "  " << p.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_lie_rep_ideal(const Options& o, std::ostream& out) {
  auto source = alg::parse_lie_source(o.source);
  auto target = alg::make_lie(o.target);
  auto rep = rep::lie_rep_ideal(source, target);
  if (json_mode(o)) {
    print_json(out, Json::parse(rep.to_json()));
    return kSuccess;
  }
  out << "variables:";
  for (const auto& v : rep.ring.names()) out << ' ' << v;
  out << "\nideal (" << rep.ideal.generators.size() << " generators):\n";
  for (std::size_t i = 0; i < rep.ideal.generators.size(); ++i)
    out << "  " << rep.ideal.generators[i].to_string() << "    # " << rep.provenance[i].source
        << '\n';
  return kSuccess;
}

int cmd_rep_count(const Options& o, std::ostream& out) {
  auto group = load_presentation(o.group);
  auto finite = groups::parse_finite_group_spec(o.finite);
  auto algebra = rep::finite_rep_algebra(group, finite);
  auto point_json = [&](const groups::Homomorphism& rho) {
    Json p = Json::object();
    for (std::size_t i = 0; i < rho.size(); ++i) p[group.generators[i]] = finite.label(rho[i]);
    return p;
  };
  if (json_mode(o)) {
    Json points = Json::array();
    for (const auto& rho : algebra.points()) points.push_back(point_json(rho));
    print_json(out, Json{{"count", algebra.dimension()}, {"points", points}});
    return kSuccess;
  }
  out << algebra.dimension() << '\n';
  for (const auto& rho : algebra.points()) {
    for (std::size_t i = 0; i < rho.size(); ++i)
      out << (i ? " " : "") << group.generators[i] << '=' << finite.label(rho[i]);
    out << '\n';
  }
  return kSuccess;
}

int cmd_cotangent(const Options& o, std::ostream& out) {
  auto target = alg::make_group(o.target);
  auto cot = alg::cotangent_at_identity(target);
  const auto& vars = target.variables();
  auto vector_text = [&](const std::vector<poly::Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += v[i] < 0 ? " - " : " + ";
      else if (v[i] < 0) s += "-";
      poly::Rational a = abs(v[i]);
      if (a != 1) s += a.get_str() + "*";
      s += "d" + vars[i];
    }
    return s.empty() ? std::string("0") : s;
  };
  if (json_mode(o)) {
    Json basis = Json::array();
    for (const auto& v : cot.tangent_basis) {
      Json row = Json::array();
      for (const auto& c : v) row.push_back(c.get_str());
      basis.push_back(row);
    }
    print_json(out, Json{{"target", target.name()},
                         {"dimension", cot.dimension},
                         {"variables", vars},
                         {"tangent_basis", basis}});
    return kSuccess;
  }
  out << cot.dimension << '\n';
  for (const auto& v : cot.tangent_basis) out << "  " << vector_text(v) << '\n';
  return kSuccess;
}

int cmd_invariance(const Options& o, std::ostream& out) {
  auto group = load_presentation(o.group);
  auto target = alg::make_group(o.target);
  auto order = poly::parse_monomial_order(o.order);
  std::string what;
  auto result = [&] {
    if (!o.word.empty()) {
      auto w = parse_word(o.word, group);
      what = "tr(" + w.to_string(group.generators) + ")";
      return rep::check_trace_invariance(w, group, target, order);
    }
    auto ring = target.block_ring(1, group.rank());
    auto p = poly::Polynomial::parse(o.observable, ring);
    what = p.to_string();
    return rep::check_invariance(p, group, target, order);
  }();
  if (json_mode(o)) {
    print_json(out, Json{{"observable", what},
                         {"invariant", result.invariant},
                         {"residue", result.residue.to_string()}});
  } else {
    out << what << ": " << (result.invariant ? "invariant" : "not invariant") << '\n';
    if (!result.invariant && o.verbosity > 0) out << "  residue: " << result.residue.to_string() << '\n';
  }
  return result.invariant ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hopf-algebraic constructions on presented groups and representation varieties",
               "hopfrep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-v,--verbose", o.verbosity, "Increase verbosity");

  auto* axioms = app.add_subcommand("axioms", "Check the ten Hopf algebra identities");
  auto* normalize = app.add_subcommand("normalize", "Normal form of a generator term");
  normalize->add_option("--term", o.term, "Term, e.g. \"mu . (id:1 * S) . delta\"")->required();
  auto* reduce = app.add_subcommand("reduce", "Multilinear reduction of a word");
  reduce->add_option("--n", o.n, "Number of variables")->required();
  reduce->add_option("--word", o.word, "Word in x1..xn")->required();
  reduce->add_option("--polarize", o.polarization, "Which occurrence is split first")
      ->check(CLI::IsMember({"left", "right"}));
  auto* rep_ideal = app.add_subcommand("rep-ideal", "Ideal of the representation variety");
  rep_ideal->add_option("--group", o.group, "Presentation JSON or free:n")->required();
  rep_ideal->add_option("--target", o.target, "gl:m, sl:m, torus:k, ga or JSON")->required();
  rep_ideal->add_flag("--groebner", o.groebner, "Also print a reduced Groebner basis");
  auto* lie = app.add_subcommand("lie-rep-ideal", "Ideal of the Lie representation variety");
  lie->add_option("--source", o.source, "Lie presentation JSON, free:n or abelian:n")->required();
  lie->add_option("--target", o.target, "sl2, abelian:d or JSON")->required();
  auto* count = app.add_subcommand("rep-count", "Homomorphisms into a finite group");
  count->add_option("--group", o.group, "Presentation JSON or free:n")->required();
  count->add_option("--finite", o.finite, "cyclic:k, sym:k or table JSON")->required();
  auto* cot = app.add_subcommand("cotangent", "Dimension of I/I^2 at the identity");
  cot->add_option("--target", o.target, "gl:m, sl:m, torus:k, ga or JSON")->required();
  auto* inv = app.add_subcommand("invariance", "Conjugation invariance of an observable");
  auto* word_opt = inv->add_option("--word", o.word, "Word whose trace is checked");
  auto* obs_opt = inv->add_option("--observable", o.observable, "Polynomial over the copies");
  word_opt->excludes(obs_opt);
  inv->add_option("--group", o.group, "Presentation JSON or free:n")->required();
  inv->add_option("--target", o.target, "gl:m, sl:m, torus:k, ga or JSON")->required();
  for (auto* sub : {rep_ideal, inv})
    sub->add_option("--order", o.order, "Monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (inv->parsed() && o.word.empty() && o.observable.empty())
      throw CLI::ValidationError("invariance needs --word or --observable");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  }

  try {
    if (axioms->parsed()) return cmd_axioms(o, out);
    if (normalize->parsed()) return cmd_normalize(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (rep_ideal->parsed()) return cmd_rep_ideal(o, out, err);
    if (lie->parsed()) return cmd_lie_rep_ideal(o, out);
    if (count->parsed()) return cmd_rep_count(o, out);
    if (cot->parsed()) return cmd_cotangent(o, out);
    if (inv->parsed()) return cmd_invariance(o, out);
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.line() << ':' << e.column() << ": "
        << one_line(e.message()) << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hopfrep::cli
