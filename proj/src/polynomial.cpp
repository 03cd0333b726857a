#include <algorithm>
#include <cctype>
#include <sstream>

#include "hopfrep/polyalg.hpp"

namespace hopfrep::poly {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty number", 1, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed number '" + s + "'", 1, 1);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 1, 1);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string_view to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  throw Error("unknown monomial order '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            Exponent power) {
  std::vector<Exponent> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = other.exponents_[i] - exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a.exponents_[i] + b.exponents_[i];
  return Monomial(std::move(e));
}

// -------------------------------------------------------------------- Ring

Ring::Ring() : Ring(std::vector<std::string>{}) {}

Ring::Ring(std::vector<std::string> names, MonomialOrder order) {
  auto data = std::make_shared<Data>();
  data->order = order;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!data->index.emplace(names[i], i).second)
      throw ValidationError("duplicate variable name '" + names[i] + "'");
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Ring Ring::with_order(MonomialOrder order) const {
  if (order == data_->order) return *this;
  return Ring(data_->names, order);
}

std::strong_ordering Ring::compare(const Monomial& a,
                                   const Monomial& b) const {
  const auto n = a.size();
  if (data_->order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Reverse lexicographic tie break: the smaller exponent in the last
  // differing variable wins.
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->order == b.data_->order && a.data_->names == b.data_->names;
}

// -------------------------------------------------------------- Polynomial

namespace {

void sort_and_merge(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms = std::move(merged);
}

}  // namespace

Polynomial::Polynomial(Ring ring, const Rational& constant)
    : ring_(std::move(ring)) {
  if (constant != 0) terms_.push_back({Monomial(ring_.size()), constant});
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.size() != ring_.size())
      throw MismatchError("monomial length does not match ring");
  sort_and_merge(ring_, terms_);
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.size()) throw MismatchError("variable index out of range");
  std::vector<Term> t;
  t.push_back({Monomial::variable(ring.size(), index), Rational(1)});
  return Polynomial(ring, std::move(t), true);
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  auto idx = ring.index_of(name);
  if (!idx) throw MismatchError("unknown variable '" + std::string(name) + "'");
  return variable(ring, *idx);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Exponent Polynomial::total_degree() const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return scaled(inv);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial(ring_);
  auto out = terms_;
  for (auto& t : out) t.coefficient *= factor;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coefficient * c});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::homogeneous_part(Exponent degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) out.push_back(t);
  return Polynomial(ring_, std::move(out), true);
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.size())
    throw MismatchError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i) {
      for (Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const Ring& target) const {
  if (images.size() != ring_.size())
    throw MismatchError("substitution must map every variable");
  for (const auto& img : images)
    if (!(img.ring() == target))
      throw MismatchError("substitution images must share the target ring");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod(target, t.coefficient);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i)
      if (t.monomial[i] > 0) prod *= power(i, t.monomial[i]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& images, const Ring& target) const {
  std::vector<Polynomial> ordered;
  ordered.reserve(ring_.size());
  for (const auto& name : ring_.names()) {
    auto it = images.find(name);
    if (it == images.end())
      throw MismatchError("substitution missing variable '" + name + "'");
    ordered.push_back(it->second);
  }
  return substitute(ordered, target);
}

std::vector<std::size_t> Polynomial::index_map_into(
    const Ring& target, const std::vector<std::string>& target_names) const {
  std::vector<std::size_t> map(target_names.size());
  for (std::size_t i = 0; i < target_names.size(); ++i) {
    auto idx = target.index_of(target_names[i]);
    if (!idx) {
      // Only variables actually used must exist in the target.
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) {
        return t.monomial[i] != 0;
      });
      if (used)
        throw MismatchError("variable '" + target_names[i] +
                            "' missing from target ring");
      map[i] = 0;
      continue;
    }
    map[i] = *idx;
  }
  return map;
}

Polynomial Polynomial::embed_into(const Ring& target) const {
  if (target == ring_) return *this;
  return rename_into(target, [](const std::string& n) { return n; });
}

void Polynomial::require_same_ring(const Polynomial& other,
                                   const char* op) const {
  if (!(ring_ == other.ring_))
    throw MismatchError(std::string("ring mismatch in ") + op);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other, "addition");
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = ring_.compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coefficient + b->coefficient;
      if (s != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other, "subtraction");
  return *this += -other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1)
    return a.times_term(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.terms_.size() == 1)
    return b.times_term(a.terms_[0].monomial, a.terms_[0].coefficient);
  std::map<Monomial, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] +=
        s.coefficient * t.coefficient;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [&](const Term& x, const Term& y) {
    return a.ring_.compare(x.monomial, y.monomial) > 0;
  });
  return Polynomial(a.ring_, std::move(out), true);
}

Polynomial operator-(const Polynomial& a) {
  auto out = a.terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return Polynomial(a.ring_, std::move(out), true);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.monomial.is_one()) {
      out << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << ring_.name(i);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

// ------------------------------------------------------------------ parser

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial sum(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = term();
    sum += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        break;
      }
    }
    return sum;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      Rational q;
      std::string s(text_.substr(start, pos_ - start));
      q.set_str(s, 10);
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return Polynomial(ring_, q);
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const Ring& ring) {
  return PolyParser(text, ring).parse();
}

Ideal::Ideal(Ring r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (!(g.ring() == ring))
      throw MismatchError("ideal generator outside the ideal's ring");
}

}  // namespace hopfrep::poly
