#include <sstream>

#include "hopfrep/prop_h.hpp"

namespace hopfrep::prop {

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::mu: return "mu";
    case Generator::delta: return "delta";
    case Generator::antipode: return "S";
    case Generator::eta: return "eta";
    case Generator::epsilon: return "eps";
    case Generator::tau: return "tau";
  }
  return "?";
}

HMorphism::HMorphism(std::size_t dom, std::vector<FreeWord> words)
    : dom_(dom), words_(std::move(words)) {
  for (const auto& w : words_)
    if (w.rank() != dom_)
      throw MismatchError("word of rank " + std::to_string(w.rank()) +
                          " in a morphism from [" + std::to_string(dom_) + "]");
}

HMorphism HMorphism::identity(std::size_t n) {
  std::vector<FreeWord> words;
  for (std::uint32_t i = 0; i < n; ++i) words.push_back(FreeWord::generator(n, i));
  return HMorphism(n, std::move(words));
}

HMorphism HMorphism::generator(Generator g) {
  using groups::Letter;
  switch (g) {
    case Generator::mu:
      return HMorphism(2, {FreeWord(2, {Letter{0, false}, Letter{1, false}})});
    case Generator::delta:
      return HMorphism(1, {FreeWord::generator(1, 0), FreeWord::generator(1, 0)});
    case Generator::antipode:
      return HMorphism(1, {FreeWord::generator(1, 0, true)});
    case Generator::eta:
      return HMorphism(0, {FreeWord(0)});
    case Generator::epsilon:
      return HMorphism(1, {});
    case Generator::tau:
      return HMorphism(2, {FreeWord::generator(2, 1), FreeWord::generator(2, 0)});
  }
  throw Error("unknown generator");
}

HMorphism generator_morphism(Generator g) { return HMorphism::generator(g); }

std::string HMorphism::to_string() const {
  std::ostringstream out;
  out << '[' << dom_ << "]->[" << words_.size() << "]: (";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out << "; ";
    out << words_[i].to_string();
  }
  out << ')';
  return out.str();
}

HMorphism compose_h(const HMorphism& f, const HMorphism& g) {
  if (f.cod() != g.dom())
    throw MismatchError("cannot compose [" + std::to_string(f.dom()) + "]->[" +
                        std::to_string(f.cod()) + "] with [" +
                        std::to_string(g.dom()) + "]->[" +
                        std::to_string(g.cod()) + "]");
  std::vector<FreeWord> words;
  words.reserve(g.cod());
  for (const auto& w : g.words()) words.push_back(w.substitute(f.words(), f.dom()));
  return HMorphism(f.dom(), std::move(words));
}

HMorphism tensor_h(const HMorphism& f, const HMorphism& g) {
  const std::size_t dom = f.dom() + g.dom();
  std::vector<FreeWord> words;
  words.reserve(f.cod() + g.cod());
  for (const auto& w : f.words()) words.push_back(w.shifted(0, dom));
  for (const auto& w : g.words()) words.push_back(w.shifted(f.dom(), dom));
  return HMorphism(dom, std::move(words));
}

// ---------------------------------------------------------------- LinHom

LinHom LinHom::of(const HMorphism& f, const Rational& c) {
  LinHom out(f.dom(), f.cod());
  out.add(f, c);
  return out;
}

void LinHom::add(const HMorphism& f, const Rational& c) {
  if (f.dom() != dom_ || f.cod() != cod_)
    throw MismatchError("morphism arity does not match linear combination");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LinHom& LinHom::operator+=(const LinHom& other) {
  for (const auto& [f, c] : other.terms_) add(f, c);
  return *this;
}

std::string LinHom::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    Rational a = c;
    if (first) {
      out << a.get_str();
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
      out << a.get_str();
    }
    first = false;
    out << "*(";
    for (std::size_t i = 0; i < f.words().size(); ++i) {
      if (i) out << "; ";
      out << f.words()[i].to_string();
    }
    out << ')';
  }
  return out.str();
}

// ---------------------------------------------------------------- axioms

std::array<AxiomResult, 10> verify_axioms() {
  struct Spec {
    int number;
    const char* name;
    std::vector<const char*> sides;
  };
  const std::array<Spec, 10> specs{{
      {1, "associativity", {"mu . (mu * id:1)", "mu . (id:1 * mu)"}},
      {2, "unit", {"mu . (eta * id:1)", "mu . (id:1 * eta)", "id:1"}},
      {3, "coassociativity", {"(id:1 * delta) . delta", "(delta * id:1) . delta"}},
      {4, "counit", {"(id:1 * eps) . delta", "(eps * id:1) . delta", "id:1"}},
      {5, "compatibility of mu and delta",
       {"delta . mu", "(mu * mu) . (id:1 * tau * id:1) . (delta * delta)"}},
      {6, "antipode",
       {"mu . (id:1 * S) . delta", "eta . eps", "mu . (S * id:1) . delta"}},
      {7, "compatibility of S and delta", {"delta . S", "(S * S) . tau . delta"}},
      {8, "compatibility of S and mu", {"S . mu", "mu . tau . (S * S)"}},
      {9, "cocommutativity", {"tau . delta", "delta"}},
      {10, "involutive antipode", {"S . S", "id:1"}},
  }};
  std::array<AxiomResult, 10> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    AxiomResult r{specs[i].number, specs[i].name, {}, {}, true};
    for (const char* side : specs[i].sides) {
      r.sides.emplace_back(side);
      r.normal_forms.push_back(eval_term(GeneratorTerm::parse(side)));
      if (!(r.normal_forms.back() == r.normal_forms.front())) r.holds = false;
    }
    out[i] = std::move(r);
  }
  return out;
}

}  // namespace hopfrep::prop
