#include <cctype>

#include "hopfrep/prop_h.hpp"

namespace hopfrep::prop {

GeneratorTerm GeneratorTerm::leaf(Generator g) {
  auto f = HMorphism::generator(g);
  return GeneratorTerm(
      std::make_shared<const Data>(Data{Leaf{g}, f.dom(), f.cod()}));
}

GeneratorTerm GeneratorTerm::identity(std::size_t k) {
  return GeneratorTerm(std::make_shared<const Data>(Data{Identity{k}, k, k}));
}

GeneratorTerm GeneratorTerm::compose(const GeneratorTerm& outer,
                                     const GeneratorTerm& inner) {
  if (inner.cod() != outer.dom())
    throw MismatchError("ill-typed composition: " + outer.to_string() + " has domain [" +
                        std::to_string(outer.dom()) + "] but " + inner.to_string() +
                        " has codomain [" + std::to_string(inner.cod()) + "]");
  return GeneratorTerm(std::make_shared<const Data>(
      Data{Compose{std::make_shared<const GeneratorTerm>(outer),
                   std::make_shared<const GeneratorTerm>(inner)},
           inner.dom(), outer.cod()}));
}

GeneratorTerm GeneratorTerm::tensor(const GeneratorTerm& left,
                                    const GeneratorTerm& right) {
  return GeneratorTerm(std::make_shared<const Data>(
      Data{Tensor{std::make_shared<const GeneratorTerm>(left),
                  std::make_shared<const GeneratorTerm>(right)},
           left.dom() + right.dom(), left.cod() + right.cod()}));
}

std::string GeneratorTerm::to_string() const {
  struct Printer {
    std::string operator()(const Leaf& l) const {
      return std::string(prop::to_string(l.generator));
    }
    std::string operator()(const Identity& i) const {
      return "id:" + std::to_string(i.arity);
    }
    std::string operator()(const Compose& c) const {
      return "(" + c.outer->to_string() + " . " + c.inner->to_string() + ")";
    }
    std::string operator()(const Tensor& t) const {
      return "(" + t.left->to_string() + " * " + t.right->to_string() + ")";
    }
  };
  return std::visit(Printer{}, node());
}

HMorphism eval_term(const GeneratorTerm& t) {
  struct Evaluator {
    HMorphism operator()(const GeneratorTerm::Leaf& l) const {
      return HMorphism::generator(l.generator);
    }
    HMorphism operator()(const GeneratorTerm::Identity& i) const {
      return HMorphism::identity(i.arity);
    }
    HMorphism operator()(const GeneratorTerm::Compose& c) const {
      return compose_h(eval_term(*c.inner), eval_term(*c.outer));
    }
    HMorphism operator()(const GeneratorTerm::Tensor& t) const {
      return tensor_h(eval_term(*t.left), eval_term(*t.right));
    }
  };
  return std::visit(Evaluator{}, t.node());
}

// ------------------------------------------------------------------ parser

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  GeneratorTerm parse() {
    GeneratorTerm t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    // Columns count code points so that the unicode operators line up.
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
    throw ParseError(msg, 1, column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  GeneratorTerm checked_compose(const GeneratorTerm& outer,
                                const GeneratorTerm& inner, std::size_t at) {
    if (inner.cod() != outer.dom()) {
      pos_ = at;
      fail("ill-typed composition: left side has domain [" +
           std::to_string(outer.dom()) + "], right side has codomain [" +
           std::to_string(inner.cod()) + "]");
    }
    return GeneratorTerm::compose(outer, inner);
  }

  GeneratorTerm term() {
    GeneratorTerm t = tensor();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept(".") || accept("∘")) {
        GeneratorTerm rhs = tensor();
        t = checked_compose(t, rhs, at);
      } else {
        return t;
      }
    }
  }

  GeneratorTerm tensor() {
    GeneratorTerm t = atom();
    while (accept("*") || accept("⊗")) t = GeneratorTerm::tensor(t, atom());
    return t;
  }

  GeneratorTerm atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (accept("(")) {
      GeneratorTerm t = term();
      if (!accept(")")) fail("expected ')'");
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "id") {
      if (!accept(":")) fail("expected ':' after id");
      skip_space();
      std::size_t digits = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (digits == pos_) fail("expected arity after id:");
      return GeneratorTerm::identity(
          std::stoul(std::string(text_.substr(digits, pos_ - digits))));
    }
    static constexpr std::pair<std::string_view, Generator> kNames[] = {
        {"mu", Generator::mu},        {"delta", Generator::delta},
        {"S", Generator::antipode},   {"eta", Generator::eta},
        {"eps", Generator::epsilon},  {"epsilon", Generator::epsilon},
        {"tau", Generator::tau},
    };
    for (const auto& [name, g] : kNames)
      if (word == name) return GeneratorTerm::leaf(g);
    pos_ = start;
    if (word.empty()) fail("expected a generator");
    fail("unknown generator '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GeneratorTerm GeneratorTerm::parse(std::string_view text) {
  return TermParser(text).parse();
}

}  // namespace hopfrep::prop
