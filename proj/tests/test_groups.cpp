#include <random>

#include "doctest.h"
#include "hopfrep/groups.hpp"
#include "test_support.hpp"

using namespace hopfrep;
using namespace hopfrep::groups;

namespace {

// Brute-force oracle: scan every tuple in target^n, in lexicographic order.
std::vector<Homomorphism> all_tuples_killing(const GroupPresentation& src,
                                             const FiniteGroup& g) {
  std::vector<Homomorphism> out;
  Homomorphism t(src.rank(), 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : src.relators)
      ok = ok && evaluate_word(r, g, t) == g.identity();
    if (ok) out.push_back(t);
    std::size_t i = src.rank();
    while (i > 0) {
      --i;
      if (++t[i] < g.order()) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (src.rank() == 0) return out;
  }
}

Element perm_element(const FiniteGroup& g, std::vector<std::uint32_t> p) {
  const auto& perms = *g.permutations();
  auto it = std::find(perms.begin(), perms.end(), p);
  REQUIRE(it != perms.end());
  return static_cast<Element>(it - perms.begin());
}

}  // namespace

TEST_CASE("free reduction and word ops") {
  auto ab = FreeWord::parse("a b", std::vector<std::string>{"a", "b"});
  auto binv = FreeWord::parse("b^-1", std::vector<std::string>{"a", "b"});
  CHECK((ab * binv).to_string(std::vector<std::string>{"a", "b"}) == "a");
  CHECK(ab.inverse().to_string(std::vector<std::string>{"a", "b"}) ==
        "b^-1 a^-1");

  // substitute(x1 x2 x1^-1, (a b, b)) = a b b b^-1 a^-1 = a b a^-1
  auto w = FreeWord::parse("x1 x2 x1^-1", 2);
  std::vector<FreeWord> images{FreeWord::parse("x1 x2", 2),
                               FreeWord::parse("x2", 2)};
  CHECK(w.substitute(images, 2).to_string() == "x1 x2 x1^-1");

  CHECK(FreeWord::parse("x1 x1^-1 x2", 2).to_string() == "x2");
  CHECK(FreeWord::parse("e", 2).is_identity());
  CHECK(FreeWord::parse("x1^3", 1).to_string() == "x1^3");
  CHECK(FreeWord::parse("x1^0", 1).is_identity());
  CHECK(FreeWord::parse("x2^-2 x1", 2).to_string() == "x2^-2 x1");
}

TEST_CASE("word errors") {
  CHECK_THROWS_AS(FreeWord::parse("x3", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("x1^a", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("", 2), ParseError);
  CHECK_THROWS_AS(FreeWord::parse("e x1", 2), ParseError);
  auto w = FreeWord::parse("x1", 1);
  CHECK_THROWS_AS(w * FreeWord::parse("x1", 2), MismatchError);
  std::vector<FreeWord> two{FreeWord(1), FreeWord(1)};
  CHECK_THROWS_AS(w.substitute(two, 1), MismatchError);
  CHECK_THROWS_AS(FreeWord(1, {Letter{3, false}}), MismatchError);
}

TEST_CASE("property: reduction idempotent, identity substitution, functoriality") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = test_support::random_word(rng, 3, 8);
    // Reconstructing from reduced letters changes nothing.
    CHECK(FreeWord(3, w.letters()) == w);
    std::vector<FreeWord> id;
    for (std::uint32_t i = 0; i < 3; ++i) id.push_back(FreeWord::generator(3, i));
    CHECK(w.substitute(id, 3) == w);

    std::vector<FreeWord> t, u;
    for (int i = 0; i < 3; ++i) t.push_back(test_support::random_word(rng, 2, 4));
    for (int i = 0; i < 2; ++i) u.push_back(test_support::random_word(rng, 4, 4));
    std::vector<FreeWord> tu;
    for (const auto& ti : t) tu.push_back(ti.substitute(u, 4));
    CHECK(w.substitute(t, 2).substitute(u, 4) == w.substitute(tu, 4));
    CHECK((w * w.inverse()).is_identity());
  }
}

TEST_CASE("symmetric and cyclic groups") {
  CHECK(make_cyclic(1).order() == 1);
  auto s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label(s3.identity()) == "()");
  CHECK(make_symmetric(4).order() == 24);
  CHECK_THROWS_AS(make_symmetric(7), ValidationError);
  CHECK_THROWS_AS(make_cyclic(0), ValidationError);
  CHECK(parse_finite_group_spec("cyclic:3").order() == 3);
  CHECK(parse_finite_group_spec("sym:3").order() == 6);
  CHECK_THROWS_AS(parse_finite_group_spec("sym:x"), Error);
}

TEST_CASE("explicit tables are validated") {
  // Non-associative: a Latin square with identity 0 that is not a group.
  std::vector<std::vector<Element>> bad{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), ValidationError);
  // 3x3 magma with identity but a missing inverse / associativity failure.
  std::vector<std::vector<Element>> bad3{{0, 1, 2}, {1, 1, 0}, {2, 0, 2}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad3), ValidationError);
  std::vector<std::vector<Element>> z2{{0, 1}, {1, 0}};
  CHECK(FiniteGroup::from_table(z2).order() == 2);
  CHECK_THROWS_AS(finite_group_from_json(R"({"table": [[0,1],[1]]})"),
                  ValidationError);
  CHECK_THROWS_AS(finite_group_from_json(R"({"table": [[0,1],[1,0]})"),
                  ParseError);
}

TEST_CASE("evaluate_word") {
  auto s3 = make_symmetric(3);
  auto t12 = perm_element(s3, {1, 0, 2});
  auto t13 = perm_element(s3, {2, 1, 0});
  CHECK(evaluate_word(FreeWord(1), s3, std::vector<Element>{t12}) ==
        s3.identity());
  CHECK(evaluate_word(FreeWord::parse("x1^2", 1), s3,
                      std::vector<Element>{t12}) == s3.identity());

  // Commutator [(12),(13)] composed left to right by hand: (12)(13) sends
  // 1->2->2, 2->1->3, 3->3->1, i.e. (1,2,3); squared gives (1,3,2).
  auto comm = evaluate_word(FreeWord::parse("x1 x2 x1^-1 x2^-1", 2), s3,
                            std::vector<Element>{t12, t13});
  CHECK(comm != s3.identity());
  CHECK(s3.label(comm) == "(1,3,2)");
  CHECK(s3.label(s3.multiply(t12, t13)) == "(1,2,3)");
  CHECK_THROWS_AS(evaluate_word(FreeWord(2), s3, std::vector<Element>{t12}),
                  MismatchError);
}

TEST_CASE("enumerate_homs matches brute force") {
  auto s3 = make_symmetric(3);
  auto z2 = GroupPresentation::from_json(
      R"({"generators": ["a"], "relators": ["a^2"]})");
  auto z3 = GroupPresentation::from_json(
      R"({"generators": ["a"], "relators": ["a^3"]})");
  auto homs2 = enumerate_homs(z2, s3);
  CHECK(homs2.size() == 4);
  CHECK(homs2 == all_tuples_killing(z2, s3));
  CHECK(enumerate_homs(z3, s3).size() == 3);
  CHECK(enumerate_homs(GroupPresentation::free(2), s3).size() == 36);

  auto s3_pres = GroupPresentation::from_json(
      R"({"generators": ["s","t"], "relators": ["s^2","t^2","s t s t s t"]})");
  for (auto target : {make_symmetric(3), make_cyclic(4), make_symmetric(4)}) {
    CHECK(enumerate_homs(s3_pres, target) == all_tuples_killing(s3_pres, target));
    for (std::size_t n = 0; n <= 3 && n <= (target.order() > 6 ? 2u : 3u); ++n) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= target.order();
      CHECK(enumerate_homs(GroupPresentation::free(n), target).size() == expected);
    }
  }
  // Hom(S_3, S_3): trivial, 3 sign-type maps onto a transposition, 6 automorphisms.
  CHECK(enumerate_homs(s3_pres, make_symmetric(3)).size() == 10);
}

TEST_CASE("presentation JSON") {
  auto z2 = GroupPresentation::from_json(
      R"({"generators": ["a","b"], "relators": ["a b a^-1 b^-1"]})");
  CHECK(z2.rank() == 2);
  CHECK(z2.relators[0].to_string(z2.generators) == "a b a^-1 b^-1");
  CHECK_THROWS_AS(GroupPresentation::from_json(R"({"generators": ["a","a"]})"),
                  ValidationError);
  CHECK_THROWS_AS(GroupPresentation::from_json(
                      R"({"generators": ["a"], "relators": ["b"]})"),
                  ParseError);
  CHECK_THROWS_AS(GroupPresentation::from_json(R"({"gens": ["a"]})"),
                  ValidationError);
}
