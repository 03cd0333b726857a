#include <cctype>
#include <charconv>
#include <filesystem>
#include <set>

#include "hopfrep/alggroups.hpp"
#include "json_util.hpp"

namespace hopfrep::alg {

using Constants = std::vector<std::vector<std::vector<Rational>>>;

LieAlgebraData::LieAlgebraData(std::vector<std::string> basis, Constants constants)
    : basis_(std::move(basis)), c_(std::move(constants)) {
  const std::size_t d = basis_.size();
  std::set<std::string> seen;
  for (const auto& b : basis_)
    if (!seen.insert(b).second) throw ValidationError("duplicate basis name '" + b + "'");
  if (c_.size() != d) throw ValidationError("structure constants have the wrong shape");
  for (const auto& plane : c_) {
    if (plane.size() != d) throw ValidationError("structure constants have the wrong shape");
    for (const auto& row : plane)
      if (row.size() != d) throw ValidationError("structure constants have the wrong shape");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw ValidationError("structure constants are not antisymmetric at [" + basis_[i] +
                                ", " + basis_[j] + "]");
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on basis triples.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t m = 0; m < d; ++m) {
          Rational sum = 0;
          for (std::size_t l = 0; l < d; ++l)
            sum += c_[a][b][l] * c_[l][c][m] + c_[b][c][l] * c_[l][a][m] +
                   c_[c][a][l] * c_[l][b][m];
          if (sum != 0)
            throw ValidationError("Jacobi identity fails for (" + basis_[a] + ", " +
                                  basis_[b] + ", " + basis_[c] + ")");
        }
}

namespace {

Constants zero_constants(std::size_t d) {
  return Constants(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, 0)));
}

}  // namespace

LieAlgebraData LieAlgebraData::sl2() {
  // basis e, f, h: [h,e] = 2e, [h,f] = -2f, [e,f] = h
  auto c = zero_constants(3);
  const std::size_t e = 0, f = 1, h = 2;
  c[h][e][e] = 2;
  c[e][h][e] = -2;
  c[h][f][f] = -2;
  c[f][h][f] = 2;
  c[e][f][h] = 1;
  c[f][e][h] = -1;
  return LieAlgebraData({"e", "f", "h"}, std::move(c));
}

LieAlgebraData LieAlgebraData::abelian(std::size_t d) {
  if (d < 1) throw ValidationError("abelian Lie algebra needs dimension at least 1");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back("b" + std::to_string(i + 1));
  return LieAlgebraData(std::move(basis), zero_constants(d));
}

LieAlgebraData LieAlgebraData::from_json(std::string_view text) {
  auto j = detail::parse_json(text);
  return detail::with_schema("Lie algebra JSON", [&] {
    auto basis = j.at("basis").get<std::vector<std::string>>();
    auto c = zero_constants(basis.size());
    auto index = [&](const std::string& name) {
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name) return i;
      throw ValidationError("unknown basis element '" + name + "'");
    };
    if (j.contains("constants")) {
      for (const auto& entry : j.at("constants")) {
        auto e = entry.get<std::vector<std::string>>();
        if (e.size() != 4)
          throw ValidationError("each constant must be [left, right, component, value]");
        c[index(e[0])][index(e[1])][index(e[2])] = poly::parse_rational(e[3]);
      }
    }
    return LieAlgebraData(std::move(basis), std::move(c));
  });
}

std::vector<Rational> LieAlgebraData::bracket(const std::vector<Rational>& x,
                                              const std::vector<Rational>& y) const {
  const std::size_t d = dimension();
  if (x.size() != d || y.size() != d) throw MismatchError("vector length is not the dimension");
  std::vector<Rational> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += c_[i][j][k] * x[i] * y[j];
    }
  }
  return out;
}

std::vector<Polynomial> LieAlgebraData::bracket(const std::vector<Polynomial>& x,
                                                const std::vector<Polynomial>& y) const {
  const std::size_t d = dimension();
  if (x.size() != d || y.size() != d) throw MismatchError("vector length is not the dimension");
  const Ring& ring = x.at(0).ring();
  std::vector<Polynomial> out(d, Polynomial(ring));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Polynomial xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k)
        if (c_[i][j][k] != 0) out[k] += xy.scaled(c_[i][j][k]);
    }
  }
  return out;
}

LieAlgebraData make_lie(std::string_view spec) {
  if (spec == "sl2") return LieAlgebraData::sl2();
  if (spec.starts_with("abelian:")) {
    auto arg = spec.substr(8);
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), d);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty())
      throw Error("malformed Lie algebra spec '" + std::string(spec) + "'");
    return LieAlgebraData::abelian(d);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(spec), ec))
    return LieAlgebraData::from_json(detail::read_file(std::string(spec)));
  throw Error("unknown Lie algebra spec '" + std::string(spec) +
              "' (expected sl2, abelian:d or a JSON file)");
}

// ---------------------------------------------------------------- LieExpr

LieExpr LieExpr::generator(std::size_t index) { return LieExpr(Generator{index}); }

LieExpr LieExpr::bracket(LieExpr left, LieExpr right) {
  return LieExpr(Bracket{std::make_shared<const LieExpr>(std::move(left)),
                         std::make_shared<const LieExpr>(std::move(right))});
}

LieExpr LieExpr::sum(std::vector<std::pair<Rational, LieExpr>> terms) {
  return LieExpr(Sum{std::move(terms)});
}

std::string LieExpr::to_string(const std::vector<std::string>& names) const {
  struct Printer {
    const std::vector<std::string>& names;
    std::string operator()(const Generator& g) const { return names.at(g.index); }
    std::string operator()(const Bracket& b) const {
      return "[" + b.left->to_string(names) + ", " + b.right->to_string(names) + "]";
    }
    std::string operator()(const Sum& s) const {
      if (s.terms.empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < s.terms.size(); ++i) {
        Rational c = s.terms[i].first;
        if (i) {
          out += c < 0 ? " - " : " + ";
          if (c < 0) c = -c;
        }
        if (c != 1) out += c.get_str() + "*";
        const bool paren = std::holds_alternative<Sum>(s.terms[i].second.node());
        out += paren ? "(" + s.terms[i].second.to_string(names) + ")"
                     : s.terms[i].second.to_string(names);
      }
      return out;
    }
  };
  return std::visit(Printer{names}, node());
}

std::vector<Polynomial> LieExpr::evaluate(const std::vector<std::vector<Polynomial>>& images,
                                          const LieAlgebraData& target,
                                          const Ring& ring) const {
  struct Evaluator {
    const std::vector<std::vector<Polynomial>>& images;
    const LieAlgebraData& target;
    const Ring& ring;
    std::vector<Polynomial> operator()(const Generator& g) const {
      if (g.index >= images.size()) throw MismatchError("generator index out of range");
      return images[g.index];
    }
    std::vector<Polynomial> operator()(const Bracket& b) const {
      return target.bracket(b.left->evaluate(images, target, ring),
                            b.right->evaluate(images, target, ring));
    }
    std::vector<Polynomial> operator()(const Sum& s) const {
      std::vector<Polynomial> out(target.dimension(), Polynomial(ring));
      for (const auto& [c, e] : s.terms) {
        auto v = e.evaluate(images, target, ring);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[k].scaled(c);
      }
      return out;
    }
  };
  return std::visit(Evaluator{images, target, ring}, node());
}

// ---------------------------------------------------------- presentations

namespace {

class LieParser {
 public:
  LieParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  LieExpr parse() {
    LieExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LieExpr expr() {
    std::vector<std::pair<Rational, LieExpr>> terms;
    Rational sign = accept('-') ? -1 : 1;
    for (;;) {
      auto [c, e] = term();
      terms.emplace_back(sign * c, std::move(e));
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
    return LieExpr::sum(std::move(terms));
  }

  std::pair<Rational, LieExpr> term() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      Rational c;
      try {
        c = poly::parse_rational(text_.substr(start, pos_ - start));
      } catch (const Error&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      if (!accept('*')) fail("expected '*' after coefficient");
      return {c, atom()};
    }
    return {Rational(1), atom()};
  }

  LieExpr atom() {
    skip_space();
    if (accept('[')) {
      LieExpr left = expr();
      if (!accept(',')) fail("expected ','");
      LieExpr right = expr();
      if (!accept(']')) fail("expected ']'");
      return LieExpr::bracket(std::move(left), std::move(right));
    }
    if (accept('(')) {
      LieExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) fail(pos_ >= text_.size() ? "unexpected end of expression"
                                                : "expected a generator");
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == word) return LieExpr::generator(i);
    pos_ = start;
    fail("unknown generator '" + std::string(word) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

// a, b, c for up to three generators, a1..an beyond.
std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 3 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1));
  return out;
}

}  // namespace

LieExpr LiePresentation::parse_expr(std::string_view text,
                                    const std::vector<std::string>& generators) {
  return LieParser(text, generators).parse();
}

LiePresentation LiePresentation::from_json(std::string_view text) {
  auto j = detail::parse_json(text);
  auto [gens, rels] = detail::with_schema("Lie presentation JSON", [&] {
    auto g = j.at("generators").get<std::vector<std::string>>();
    std::vector<std::string> r;
    if (j.contains("relators")) r = j.at("relators").get<std::vector<std::string>>();
    return std::make_pair(g, r);
  });
  std::set<std::string> seen;
  for (const auto& g : gens)
    if (g.empty() || !seen.insert(g).second)
      throw ValidationError("generator names must be distinct and nonempty");
  LiePresentation out{gens, {}};
  for (const auto& r : rels) out.relators.push_back(parse_expr(r, out.generators));
  return out;
}

LiePresentation LiePresentation::free(std::size_t n) { return {default_names(n), {}}; }

LiePresentation LiePresentation::abelian(std::size_t n) {
  LiePresentation p = free(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      p.relators.push_back(LieExpr::bracket(LieExpr::generator(i), LieExpr::generator(j)));
  return p;
}

LiePresentation parse_lie_source(std::string_view spec) {
  for (std::string_view kind : {"free:", "abelian:"}) {
    if (!spec.starts_with(kind)) continue;
    auto arg = spec.substr(kind.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty())
      throw Error("malformed Lie source spec '" + std::string(spec) + "'");
    return kind == "free:" ? LiePresentation::free(n) : LiePresentation::abelian(n);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(spec), ec))
    return LiePresentation::from_json(detail::read_file(std::string(spec)));
  throw Error("unknown Lie source spec '" + std::string(spec) +
              "' (expected free:n, abelian:n or a JSON file)");
}

}  // namespace hopfrep::alg
