#include <random>

#include "doctest.h"
#include "hopfrep/alggroups.hpp"
#include "test_support.hpp"

using namespace hopfrep;
using namespace hopfrep::alg;
using groups::FreeWord;
using poly::groebner;
using poly::GroebnerBasis;

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix qmul(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.size(), std::vector<Rational>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

QMatrix qinv2(const QMatrix& x) {
  Rational det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
  return {{x[1][1] / det, -x[0][1] / det}, {-x[1][0] / det, x[0][0] / det}};
}

Rational qrand(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

QMatrix random_sl2(std::mt19937& rng) {
  Rational a = 0;
  while (a == 0) a = qrand(rng);
  Rational b = qrand(rng), c = qrand(rng);
  return {{a, b}, {c, (1 + b * c) / a}};
}

QMatrix random_gl2(std::mt19937& rng) {
  for (;;) {
    QMatrix x{{qrand(rng), qrand(rng)}, {qrand(rng), qrand(rng)}};
    if (x[0][0] * x[1][1] - x[0][1] * x[1][0] != 0) return x;
  }
}

// Coordinates of a 2x2 point in base-variable order (x_11 x_12 x_21 x_22 [t]).
std::vector<Rational> coords(const QMatrix& x, bool general) {
  std::vector<Rational> out{x[0][0], x[0][1], x[1][0], x[1][1]};
  if (general) out.push_back(1 / (x[0][0] * x[1][1] - x[0][1] * x[1][0]));
  return out;
}

QMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  QMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& p : row) out.back().push_back(p.evaluate(point));
  }
  return out;
}

// Derivative at 0 of a univariate polynomial of degree <= D from its values
// g(0..D): g'(0) = sum_k (-1)^{k+1}/k * Delta^k g(0).
Rational derivative_at_zero(std::vector<Rational> values) {
  Rational out = 0;
  for (std::size_t k = 1; values.size() > 1; ++k) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
    out += Rational(k % 2 ? 1 : -1, static_cast<long>(k)) * values[0];
  }
  return out;
}

// Tangent dimension by numeric differentiation of the generators at the
// counit, then rank of the resulting Jacobian.
std::size_t tangent_dimension_oracle(const PresentedCommHopf& g) {
  const std::size_t n = g.ring().size();
  poly::RationalMatrix jac;
  for (const auto& gen : g.ideal().generators) {
    if (gen.is_zero()) continue;
    const std::size_t deg = gen.total_degree();
    std::vector<Rational> row;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> values;
      for (std::size_t s = 0; s <= deg; ++s) {
        auto p = g.counit();
        p[i] += static_cast<long>(s);
        values.push_back(gen.evaluate(p));
      }
      row.push_back(derivative_at_zero(values));
    }
    jac.push_back(row);
  }
  auto rows = jac;
  return n - poly::row_reduce(rows, n).size();
}

GroebnerBasis conjugator_gb(const PresentedCommHopf& g, std::size_t copies) {
  Ring ring = g.block_ring(0, copies);
  return groebner(Ideal(ring, g.copy_ideal(0, ring)));
}

}  // namespace

TEST_CASE("copy names") {
  CHECK(copy_name("x_11", 1) == "x1_11");
  CHECK(copy_name("t", 3) == "t3");
  CHECK(copy_name("z_1", 2) == "z2_1");
  CHECK(copy_name("x_12", 0) == "x0_12");
}

TEST_CASE("shipped groups") {
  auto sl2 = make_sl(2);
  CHECK(sl2.variables() == std::vector<std::string>{"x_11", "x_12", "x_21", "x_22"});
  REQUIRE(sl2.ideal().generators.size() == 1);
  CHECK(sl2.ideal().generators[0] ==
        Polynomial::parse("x_11*x_22 - x_12*x_21 - 1", sl2.ring()));

  auto t1 = make_torus(1);
  CHECK(t1.variables() == std::vector<std::string>{"z", "t"});
  CHECK(t1.ideal().generators[0] == Polynomial::parse("z*t - 1", t1.ring()));
  CHECK(t1.comultiplication()[0] == Polynomial::parse("z'*z''", t1.doubled_ring()));
  CHECK(t1.antipode()[0] == Polynomial::parse("t", t1.ring()));

  auto gl2 = make_gl(2);
  CHECK(gl2.counit() == std::vector<Rational>{1, 0, 0, 1, 1});
  CHECK(gl2.ideal().generators[0].evaluate(gl2.counit()) == 0);
  CHECK(gl2.antipode()[0] == Polynomial::parse("x_22*t", gl2.ring()));
  CHECK(gl2.antipode()[4] == Polynomial::parse("x_11*x_22 - x_12*x_21", gl2.ring()));

  auto ga = make_additive();
  CHECK(ga.ideal().generators.empty());
  CHECK(ga.counit() == std::vector<Rational>{0});

  // Every shipped group is validated on construction.
  for (const char* spec : {"gl:1", "gl:2", "gl:3", "sl:1", "sl:2", "sl:3", "torus:1",
                           "torus:2", "torus:3", "ga"}) {
    INFO(spec);
    CHECK_NOTHROW(make_group(spec));
  }
  CHECK_THROWS_AS(make_group("gl:4"), ValidationError);
  CHECK_THROWS_AS(make_group("sl:0"), ValidationError);
  CHECK_THROWS_AS(make_group("torus:0"), ValidationError);
  CHECK_THROWS_AS(make_group("so:3"), Error);
  CHECK_THROWS_AS(make_group("gl:x"), Error);
}

TEST_CASE("explicit groups are validated, not trusted") {
  const char* sl2 = R"({
    "name": "my_sl2",
    "variables": ["a", "b", "c", "d"],
    "ideal": ["a*d - b*c - 1"],
    "delta": {"a": "a'*a'' + b'*c''", "b": "a'*b'' + b'*d''",
              "c": "c'*a'' + d'*c''", "d": "c'*b'' + d'*d''"},
    "epsilon": {"a": 1, "b": 0, "c": 0, "d": "1"},
    "antipode": {"a": "d", "b": "-b", "c": "-c", "d": "a"},
    "matrix": {"entries": [["a", "b"], ["c", "d"]]}
  })";
  auto g = PresentedCommHopf::from_json(sl2);
  CHECK(g.name() == "my_sl2");
  CHECK(cotangent_at_identity(g).dimension == 3);

  auto broken = [&](std::string from, std::string to) {
    std::string text = sl2;
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
  };
  // Wrong antipode, counit off the variety, non-multiplicative delta.
  CHECK_THROWS_AS(PresentedCommHopf::from_json(broken(R"("a": "d")", R"("a": "a")")),
                  ValidationError);
  CHECK_THROWS_AS(PresentedCommHopf::from_json(broken(R"("a": 1)", R"("a": 2)")),
                  ValidationError);
  CHECK_THROWS_AS(
      PresentedCommHopf::from_json(broken("a'*a'' + b'*c''", "a'*a''")),
      ValidationError);
  CHECK_THROWS_AS(PresentedCommHopf::from_json(broken("a*d - b*c - 1", "1")),
                  ValidationError);
  CHECK_THROWS_AS(PresentedCommHopf::from_json(broken(R"("c": "-c")", R"("e": "-c")")),
                  ValidationError);
  CHECK_THROWS_AS(PresentedCommHopf::from_json(broken("a*d - b*c - 1", "a*d -")),
                  ParseError);
  CHECK_THROWS_AS(PresentedCommHopf::from_json("{\"variables\": 3}"), ValidationError);
}

TEST_CASE("matrix_word examples") {
  auto sl2 = make_sl(2);
  auto x1 = matrix_word(FreeWord::parse("x1", 1), sl2);
  const Ring& r = x1[0][0].ring();
  CHECK(r.names() == std::vector<std::string>{"x1_11", "x1_12", "x1_21", "x1_22"});
  CHECK(x1[0][0] == Polynomial::parse("x1_11", r));
  CHECK(x1[1][0] == Polynomial::parse("x1_21", r));

  auto inv = matrix_word(FreeWord::parse("x1^-1", 1), sl2);
  CHECK(inv[0][0] == Polynomial::parse("x1_22", r));
  CHECK(inv[0][1] == Polynomial::parse("-x1_12", r));
  CHECK(inv[1][0] == Polynomial::parse("-x1_21", r));
  CHECK(inv[1][1] == Polynomial::parse("x1_11", r));

  // The unreduced product X adj(X) is det(X) on the diagonal.
  auto prod = multiply(x1, inv);
  auto gb = groebner(Ideal(r, sl2.copy_ideal(1, r)));
  CHECK(prod[0][0] == Polynomial::parse("x1_11*x1_22 - x1_12*x1_21", r));
  CHECK(gb.normal_form(prod[0][0]) == Polynomial(r, 1));
  CHECK(gb.normal_form(prod[1][1]) == Polynomial(r, 1));
  CHECK(prod[0][1].is_zero());

  auto e = matrix_word(FreeWord(2), sl2);
  CHECK(e == identity_matrix(sl2.block_ring(1, 2), 2));
  CHECK_THROWS_AS(matrix_word(FreeWord::parse("x1", 1), PresentedCommHopf(CommHopfSpec{
                                  "bare", {"a"}, {}, {{"a", "a' + a''"}}, {{"a", "0"}},
                                  {{"a", "-a"}}, std::nullopt})),
                  MismatchError);
}

TEST_CASE("property: matrix_word agrees with numeric matrix products") {
  std::mt19937 rng(17);
  for (bool general : {false, true}) {
    auto g = general ? make_gl(2) : make_sl(2);
    for (int trial = 0; trial < 40; ++trial) {
      auto w = test_support::random_word(rng, 2, 6);
      QMatrix a = general ? random_gl2(rng) : random_sl2(rng);
      QMatrix b = general ? random_gl2(rng) : random_sl2(rng);
      auto point = coords(a, general);
      auto pb = coords(b, general);
      point.insert(point.end(), pb.begin(), pb.end());

      QMatrix expected{{1, 0}, {0, 1}};
      for (const auto& l : w.letters()) {
        const QMatrix& m = l.generator == 0 ? a : b;
        expected = qmul(expected, l.inverse ? qinv2(m) : m);
      }
      CHECK(eval_matrix(matrix_word(w, g, g.block_ring(1, 2)), point) == expected);
    }
  }
}

TEST_CASE("trace_of_word examples") {
  auto sl2 = make_sl(2);
  CHECK(trace_of_word(FreeWord::parse("x1", 1), sl2).to_string() == "x1_11 + x1_22");
  CHECK(trace_of_word(FreeWord(1), sl2) == Polynomial(sl2.block_ring(1, 1), 2));
  auto r = sl2.block_ring(1, 2);
  CHECK(trace_of_word(FreeWord::parse("x1 x2", 2), sl2) ==
        Polynomial::parse("x1_11*x2_11 + x1_12*x2_21 + x1_21*x2_12 + x1_22*x2_22", r));
}

TEST_CASE("cotangent dimensions") {
  CHECK(cotangent_at_identity(make_sl(2)).dimension == 3);
  CHECK(cotangent_at_identity(make_gl(2)).dimension == 4);
  CHECK(cotangent_at_identity(make_torus(1)).dimension == 1);
  CHECK(cotangent_at_identity(make_additive()).dimension == 1);

  auto sl2 = cotangent_at_identity(make_sl(2));
  REQUIRE(sl2.linear_parts.size() == 1);
  CHECK(sl2.linear_parts[0] == std::vector<Rational>{1, 0, 0, 1});
  CHECK(sl2.tangent_basis.size() == 3);
  auto t1 = cotangent_at_identity(make_torus(1));
  CHECK(t1.linear_parts[0] == std::vector<Rational>{1, 1});
}

TEST_CASE("property: cotangent dimension matches the group dimension and a numeric oracle") {
  for (std::size_t m = 1; m <= 3; ++m) {
    auto gl = make_gl(m), sl = make_sl(m);
    CHECK(cotangent_at_identity(gl).dimension == m * m);
    CHECK(cotangent_at_identity(sl).dimension == m * m - 1);
    CHECK(cotangent_at_identity(gl).dimension == tangent_dimension_oracle(gl));
    CHECK(cotangent_at_identity(sl).dimension == tangent_dimension_oracle(sl));
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    auto t = make_torus(k);
    CHECK(cotangent_at_identity(t).dimension == k);
    CHECK(tangent_dimension_oracle(t) == k);
  }
}

TEST_CASE("conjugation_substitution examples") {
  auto sl2 = make_sl(2);
  auto r1 = sl2.block_ring(1, 1);
  auto gb = conjugator_gb(sl2, 1);

  auto tr = Polynomial::parse("x1_11 + x1_22", r1);
  auto conj = conjugation_substitution(tr, sl2, 1);
  CHECK(conj.ring().names().front() == "x0_11");
  CHECK(gb.contains(conj - tr.embed_into(conj.ring())));
  CHECK_FALSE(conj == tr.embed_into(conj.ring()));

  auto entry = Polynomial::parse("x1_12", r1);
  CHECK_FALSE(gb.contains(conjugation_substitution(entry, sl2, 1) -
                          entry.embed_into(conj.ring())));

  auto one = Polynomial(r1, 1);
  CHECK(conjugation_substitution(one, sl2, 1) == Polynomial(sl2.block_ring(0, 1), 1));
}

TEST_CASE("property: conjugation is A X A^-1 at rational points") {
  std::mt19937 rng(5);
  for (bool general : {false, true}) {
    auto g = general ? make_gl(2) : make_sl(2);
    auto r2 = g.block_ring(1, 2);
    std::vector<Polynomial> observables{
        Polynomial::parse("x1_12", r2), Polynomial::parse("x1_11*x2_21 - 3*x2_22", r2),
        trace_of_word(FreeWord::parse("x1 x2^-1", 2), g, r2)};
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix a = general ? random_gl2(rng) : random_sl2(rng);
      QMatrix x = general ? random_gl2(rng) : random_sl2(rng);
      QMatrix y = general ? random_gl2(rng) : random_sl2(rng);
      std::vector<Rational> outer;
      for (const auto* m : {&a, &x, &y}) {
        auto c = coords(*m, general);
        outer.insert(outer.end(), c.begin(), c.end());
      }
      std::vector<Rational> inner;
      for (const auto* m : {&x, &y}) {
        auto c = coords(qmul(qmul(a, *m), qinv2(a)), general);
        inner.insert(inner.end(), c.begin(), c.end());
      }
      for (const auto& p : observables)
        CHECK(conjugation_substitution(p, g, 2).evaluate(outer) == p.evaluate(inner));
    }
  }
}

TEST_CASE("property: traces of short words are conjugation invariant on SL(2)") {
  auto sl2 = make_sl(2);
  auto r2 = sl2.block_ring(1, 2);
  auto gb = conjugator_gb(sl2, 2);
  for (const auto& w : test_support::all_words(2, 3)) {
    auto tr = trace_of_word(w, sl2, r2);
    auto conj = conjugation_substitution(tr, sl2, 2);
    INFO(w.to_string());
    CHECK(gb.contains(conj - tr.embed_into(conj.ring())));
  }
}

TEST_CASE("Lie algebra data") {
  auto ab = LieAlgebraData::abelian(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(ab.constant(i, j, k) == 0);

  auto sl2 = make_lie("sl2");
  CHECK(sl2.dimension() == 3);
  const std::vector<Rational> e{1, 0, 0}, f{0, 1, 0}, h{0, 0, 1};
  CHECK(sl2.bracket(h, e) == std::vector<Rational>{2, 0, 0});
  CHECK(sl2.bracket(h, f) == std::vector<Rational>{0, -2, 0});
  CHECK(sl2.bracket(e, f) == std::vector<Rational>{0, 0, 1});
  CHECK(sl2.bracket(e, e) == std::vector<Rational>{0, 0, 0});

  // Oracle: 2x2 matrices e, f, h with the commutator bracket.
  const QMatrix me{{0, 1}, {0, 0}}, mf{{0, 0}, {1, 0}}, mh{{1, 0}, {0, -1}};
  auto comm = [](const QMatrix& a, const QMatrix& b) {
    auto ab = qmul(a, b), ba = qmul(b, a);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) ab[i][j] -= ba[i][j];
    return ab;
  };
  const QMatrix* basis[] = {&me, &mf, &mh};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      QMatrix expected = comm(*basis[i], *basis[j]);
      QMatrix got{{0, 0}, {0, 0}};
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b)
            got[a][b] += sl2.constant(i, j, k) * (*basis[k])[a][b];
      CHECK(got == expected);
    }

  CHECK_THROWS_AS(LieAlgebraData::from_json(
                      R"({"basis": ["a","b"], "constants": [["a","b","a","1"]]})"),
                  ValidationError);
  // [a,b] = a, [a,c] = b: antisymmetric but Jacobi gives b on (a,b,c).
  CHECK_THROWS_AS(LieAlgebraData::from_json(R"({"basis": ["a","b","c"], "constants": [
      ["a","b","a","1"], ["b","a","a","-1"], ["a","c","b","1"], ["c","a","b","-1"]]})"),
                  ValidationError);
  auto heis = LieAlgebraData::from_json(R"({"basis": ["p","q","z"], "constants": [
      ["p","q","z","1"], ["q","p","z","-1"]]})");
  CHECK(heis.bracket(std::vector<Rational>{1, 0, 0}, std::vector<Rational>{0, 1, 0}) ==
        std::vector<Rational>{0, 0, 1});
  CHECK(make_lie("abelian:3").dimension() == 3);
  CHECK_THROWS_AS(make_lie("so3"), Error);
}

TEST_CASE("Lie presentations") {
  std::vector<std::string> names{"a", "b"};
  auto e = LiePresentation::parse_expr("[a, b]", names);
  CHECK(e.to_string(names) == "[a, b]");
  auto e2 = LiePresentation::parse_expr("2*a - [a,[a,b]] + 1/2*(b)", names);
  CHECK(e2.to_string(names) == "2*a - [a, [a, b]] + 1/2*b");
  CHECK_THROWS_AS(LiePresentation::parse_expr("[a b]", names), ParseError);
  CHECK_THROWS_AS(LiePresentation::parse_expr("c", names), ParseError);
  CHECK_THROWS_AS(LiePresentation::parse_expr("[a,", names), ParseError);

  auto p = LiePresentation::from_json(R"({"generators": ["x","y"], "relators": ["[x,y]"]})");
  CHECK(p.rank() == 2);
  CHECK(p.relators.size() == 1);
  CHECK(parse_lie_source("free:2").relators.empty());
  CHECK(parse_lie_source("abelian:3").relators.size() == 3);
  CHECK_THROWS_AS(LiePresentation::from_json(R"({"generators": ["x","x"]})"), ValidationError);

  // Evaluate [X, Y] with X = e, Y = h in sl2: [e, h] = -2e.
  auto sl2 = LieAlgebraData::sl2();
  Ring ring(std::vector<std::string>{"u"});
  auto c = [&](int v) { return Polynomial(ring, v); };
  auto val = e.evaluate({{c(1), c(0), c(0)}, {c(0), c(0), c(1)}}, sl2, ring);
  CHECK(val == std::vector<Polynomial>{c(-2), c(0), c(0)});
}
