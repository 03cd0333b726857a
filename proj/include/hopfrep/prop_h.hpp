#pragma once

// The PROP of cocommutative Hopf algebras. A morphism [n] -> [m] is kept in
// normal form as an m-tuple of reduced words in the free group F_n; the
// generators mu, delta, S, eta, epsilon, tau are the tuples
//
//   mu      [2]->[1]  (x1 x2)        delta [1]->[2]  (x1; x1)
//   S       [1]->[1]  (x1^-1)        eta   [0]->[1]  (e)
//   epsilon [1]->[0]  ()             tau   [2]->[2]  (x2; x1)
//
// and g o f (f first) substitutes the words of f into the words of g.

#include <array>
#include <compare>
#include <concepts>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hopfrep/groups.hpp"
#include "hopfrep/polyalg.hpp"

namespace hopfrep::prop {

using groups::FreeWord;
using poly::Rational;

enum class Generator { mu, delta, antipode, eta, epsilon, tau };

std::string_view to_string(Generator g);

class HMorphism {
 public:
  HMorphism() = default;
  // Every word must have rank `dom`; the codomain is words.size().
  HMorphism(std::size_t dom, std::vector<FreeWord> words);

  static HMorphism identity(std::size_t n);
  static HMorphism generator(Generator g);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return words_.size(); }
  const std::vector<FreeWord>& words() const noexcept { return words_; }

  // `[n]->[m]: (w1; w2; ...)`
  std::string to_string() const;

  friend bool operator==(const HMorphism&, const HMorphism&) = default;
  friend auto operator<=>(const HMorphism& a, const HMorphism& b) {
    if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t dom_ = 0;
  std::vector<FreeWord> words_;
};

HMorphism generator_morphism(Generator g);
// g o f: f : [n]->[m] runs first, then g : [m]->[k].
HMorphism compose_h(const HMorphism& f, const HMorphism& g);
// f (x) g on [dom f + dom g]; g's letters are shifted by dom f.
HMorphism tensor_h(const HMorphism& f, const HMorphism& g);

// Formal composite of generators. Well-typed by construction.
class GeneratorTerm {
 public:
  static GeneratorTerm leaf(Generator g);
  static GeneratorTerm identity(std::size_t k);
  // outer o inner; requires inner.cod() == outer.dom().
  static GeneratorTerm compose(const GeneratorTerm& outer,
                               const GeneratorTerm& inner);
  static GeneratorTerm tensor(const GeneratorTerm& left,
                              const GeneratorTerm& right);

  // Grammar (`.` is composition, `*` tensor and binds tighter):
  //   term   := tensor ('.' tensor)*
  //   tensor := atom ('*' atom)*
  //   atom   := mu | delta | S | eta | eps | tau | id:<k> | '(' term ')'
  // The symbols `∘` and `⊗` are accepted as aliases.
  static GeneratorTerm parse(std::string_view text);

  std::size_t dom() const noexcept { return node_->dom; }
  std::size_t cod() const noexcept { return node_->cod; }
  std::string to_string() const;

  struct Leaf {
    Generator generator;
  };
  struct Identity {
    std::size_t arity;
  };
  struct Compose {
    std::shared_ptr<const GeneratorTerm> outer, inner;
  };
  struct Tensor {
    std::shared_ptr<const GeneratorTerm> left, right;
  };
  using Node = std::variant<Leaf, Identity, Compose, Tensor>;

  const Node& node() const noexcept { return node_->node; }

 private:
  struct Data {
    Node node;
    std::size_t dom;
    std::size_t cod;
  };
  explicit GeneratorTerm(std::shared_ptr<const Data> d) : node_(std::move(d)) {}
  std::shared_ptr<const Data> node_;
};

// Normalization by evaluation into the free-group-tuple model.
HMorphism eval_term(const GeneratorTerm& t);

struct AxiomResult {
  int number;
  std::string name;
  std::vector<std::string> sides;     // term text of each side
  std::vector<HMorphism> normal_forms;
  bool holds;
};

// The ten cocommutative Hopf algebra identities, each side evaluated with
// eval_term and compared for equality.
std::array<AxiomResult, 10> verify_axioms();

// Finite formal linear combination of morphisms [dom] -> [cod].
class LinHom {
 public:
  LinHom(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod) {}
  static LinHom of(const HMorphism& f, const Rational& c = 1);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return cod_; }
  const std::map<HMorphism, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const HMorphism& f, const Rational& c);
  LinHom& operator+=(const LinHom& other);
  friend bool operator==(const LinHom&, const LinHom&) = default;

  // `2*(x1 x2) - 1*(x2 x1)`; `0` when empty.
  std::string to_string() const;

 private:
  std::size_t dom_;
  std::size_t cod_;
  std::map<HMorphism, Rational> terms_;
};

// ---------------------------------------------------------------- models

// Element of H^{(x)n} in a model with basis type B: basis tuples with
// nonzero rational coefficients.
template <class B>
using ModelTensor = std::map<std::vector<B>, Rational>;

template <class B>
using LinearCombination = std::vector<std::pair<B, Rational>>;

template <class M>
concept HopfModel = requires(const M& m, const typename M::Basis& b,
                             std::size_t parts) {
  { m.unit() } -> std::convertible_to<typename M::Basis>;
  { m.counit(b) } -> std::convertible_to<Rational>;
  { m.multiply(b, b) } -> std::convertible_to<LinearCombination<typename M::Basis>>;
  { m.antipode(b) } -> std::convertible_to<LinearCombination<typename M::Basis>>;
  // Iterated comultiplication into `parts` tensor legs (parts >= 1).
  { m.coproduct(b, parts) }
      -> std::convertible_to<std::vector<std::pair<std::vector<typename M::Basis>, Rational>>>;
};

// Group algebra k[G] of a finite group: basis elements are grouplike.
class GroupAlgebraModel {
 public:
  using Basis = groups::Element;
  explicit GroupAlgebraModel(const groups::FiniteGroup& g) : group_(&g) {}

  Basis unit() const { return group_->identity(); }
  Rational counit(Basis) const { return 1; }
  LinearCombination<Basis> multiply(Basis a, Basis b) const {
    return {{group_->multiply(a, b), Rational(1)}};
  }
  LinearCombination<Basis> antipode(Basis a) const {
    return {{group_->inverse(a), Rational(1)}};
  }
  std::vector<std::pair<std::vector<Basis>, Rational>> coproduct(
      Basis a, std::size_t parts) const {
    return {{std::vector<Basis>(parts, a), Rational(1)}};
  }

  const groups::FiniteGroup& group() const noexcept { return *group_; }

 private:
  const groups::FiniteGroup* group_;
};

// Tensor algebra T(V) on primitive generators v_1..v_d, truncated above a
// fixed degree: Delta v = 1(x)v + v(x)1, S v = -v, eps v = 0. Basis
// elements are words in the generators (0-based letters).
class TensorAlgebraModel {
 public:
  using Basis = std::vector<std::uint32_t>;
  TensorAlgebraModel(std::size_t generators, std::size_t truncation);

  std::size_t generators() const noexcept { return generators_; }
  std::size_t truncation() const noexcept { return truncation_; }

  Basis unit() const { return {}; }
  Rational counit(const Basis& w) const { return w.empty() ? 1 : 0; }
  LinearCombination<Basis> multiply(const Basis& a, const Basis& b) const;
  LinearCombination<Basis> antipode(const Basis& w) const;
  std::vector<std::pair<std::vector<Basis>, Rational>> coproduct(
      const Basis& w, std::size_t parts) const;

 private:
  std::size_t generators_;
  std::size_t truncation_;
};

// Action of f : [n] -> [m] on an element of H^{(x)n}: per input variable,
// iterated comultiplication into one leg per occurrence (counit when the
// variable is unused), antipode on inverted occurrences, then the product
// of each output word in letter order (unit for the empty word).
template <HopfModel M>
ModelTensor<typename M::Basis> hopf_action(
    const HMorphism& f, const M& model,
    const ModelTensor<typename M::Basis>& input);

// Convenience overload for a single basis tuple with coefficient 1.
template <HopfModel M>
ModelTensor<typename M::Basis> hopf_action(
    const HMorphism& f, const M& model,
    const std::vector<typename M::Basis>& input) {
  ModelTensor<typename M::Basis> t;
  t.emplace(input, Rational(1));
  return hopf_action(f, model, t);
}

// ----------------------------------------------------- multilinear reduce

enum class PolarizationOrder { leftmost_first, rightmost_first };

// Reduces a combination of morphisms [n]->[1] modulo the relations that
// identify hom([n],[1]) with k[S_n]: words missing a variable vanish, a
// variable occurring at several positions is split into (one occurrence)
// + (the remaining occurrences) and each part deleted in turn, and finally
// each inverted letter of the multilinear word contributes a sign.
LinHom multilinear_reduce(
    const LinHom& element,
    PolarizationOrder order = PolarizationOrder::leftmost_first);

bool is_permutation_word(const FreeWord& w);

}  // namespace hopfrep::prop

#include "hopfrep/detail/hopf_action.hpp"
