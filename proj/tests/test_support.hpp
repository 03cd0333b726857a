#pragma once

#include <random>

#include "hopfrep/groups.hpp"
#include "hopfrep/prop_h.hpp"

namespace test_support {

inline hopfrep::groups::FreeWord random_word(std::mt19937& rng,
                                             std::size_t rank,
                                             std::size_t max_length) {
  using hopfrep::groups::Letter;
  if (rank == 0) return hopfrep::groups::FreeWord(0);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::uint32_t> gen(
      0, static_cast<std::uint32_t>(rank - 1));
  std::bernoulli_distribution inv(0.4);
  std::vector<Letter> letters;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(Letter{gen(rng), inv(rng)});
  return hopfrep::groups::FreeWord(rank, letters);
}

inline hopfrep::prop::HMorphism random_morphism(std::mt19937& rng,
                                                std::size_t dom,
                                                std::size_t cod,
                                                std::size_t max_length) {
  std::vector<hopfrep::groups::FreeWord> words;
  for (std::size_t i = 0; i < cod; ++i)
    words.push_back(random_word(rng, dom, max_length));
  return hopfrep::prop::HMorphism(dom, std::move(words));
}

// Random well-typed term with the requested codomain.
inline hopfrep::prop::GeneratorTerm random_term(std::mt19937& rng,
                                                std::size_t cod, int depth) {
  using hopfrep::prop::Generator;
  using hopfrep::prop::GeneratorTerm;
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth > 0 && coin(rng) != 0) {
    auto outer = random_term(rng, cod, depth - 1);
    if (outer.dom() > 5) return outer;
    auto inner = random_term(rng, outer.dom(), depth - 1);
    return GeneratorTerm::compose(outer, inner);
  }
  // One layer: a tensor row of generators whose codomains sum to `cod`.
  std::vector<GeneratorTerm> pieces;
  std::size_t remaining = cod;
  std::uniform_int_distribution<int> pick(0, 7);
  while (remaining > 0 || pieces.empty()) {
    if (remaining == 0) {
      pieces.push_back(coin(rng) == 0 ? GeneratorTerm::leaf(Generator::epsilon)
                                      : GeneratorTerm::identity(0));
      break;
    }
    switch (pick(rng)) {
      case 0: pieces.push_back(GeneratorTerm::leaf(Generator::mu)); break;
      case 1: pieces.push_back(GeneratorTerm::leaf(Generator::antipode)); break;
      case 2: pieces.push_back(GeneratorTerm::leaf(Generator::eta)); break;
      case 3: pieces.push_back(GeneratorTerm::identity(1)); break;
      case 4: pieces.push_back(GeneratorTerm::leaf(Generator::epsilon)); break;
      case 5:
        if (remaining >= 2) {
          pieces.push_back(GeneratorTerm::leaf(Generator::delta));
        } else {
          pieces.push_back(GeneratorTerm::leaf(Generator::mu));
        }
        break;
      default:
        if (remaining >= 2) {
          pieces.push_back(GeneratorTerm::leaf(Generator::tau));
        } else {
          pieces.push_back(GeneratorTerm::leaf(Generator::antipode));
        }
        break;
    }
    remaining -= pieces.back().cod();
  }
  GeneratorTerm t = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) t = GeneratorTerm::tensor(t, pieces[i]);
  return t;
}

// Independent closed form for the multilinear reduction of one word: keep
// exactly one occurrence of every variable (all choices), sign -1 per kept
// inverted letter. Words missing a variable contribute nothing.
inline hopfrep::prop::LinHom multilinear_by_choice(
    const hopfrep::groups::FreeWord& w) {
  using namespace hopfrep;
  const std::size_t n = w.rank();
  prop::LinHom out(n, 1);
  std::vector<std::vector<std::size_t>> positions(n);
  for (std::size_t p = 0; p < w.length(); ++p)
    positions[w.letters()[p].generator].push_back(p);
  for (const auto& ps : positions)
    if (ps.empty()) return out;
  std::vector<std::size_t> choice(n, 0);
  for (;;) {
    std::vector<bool> keep(w.length(), false);
    for (std::size_t v = 0; v < n; ++v) keep[positions[v][choice[v]]] = true;
    poly::Rational sign = 1;
    std::vector<groups::Letter> letters;
    for (std::size_t p = 0; p < w.length(); ++p) {
      if (!keep[p]) continue;
      if (w.letters()[p].inverse) sign = -sign;
      letters.push_back({w.letters()[p].generator, false});
    }
    out.add(prop::HMorphism(n, {groups::FreeWord(n, letters)}), sign);
    std::size_t v = 0;
    while (v < n && ++choice[v] == positions[v].size()) choice[v++] = 0;
    if (v == n) break;
  }
  return out;
}

// Multilinear component of the tensor-algebra action of <w> on
// (v_1, ..., v_n), re-expressed as permutation words.
inline hopfrep::prop::LinHom multilinear_by_tensor_model(
    const hopfrep::groups::FreeWord& w) {
  using namespace hopfrep;
  const std::size_t n = w.rank();
  prop::TensorAlgebraModel model(n, std::max<std::size_t>(n, 1));
  std::vector<prop::TensorAlgebraModel::Basis> input;
  for (std::uint32_t i = 0; i < n; ++i) input.push_back({i});
  auto image = prop::hopf_action(prop::HMorphism(n, {w}), model, input);
  prop::LinHom out(n, 1);
  for (const auto& [tuple, c] : image) {
    const auto& word = tuple.at(0);
    if (word.size() != n) continue;
    std::vector<bool> seen(n, false);
    bool perm = true;
    for (auto x : word) {
      if (seen[x]) perm = false;
      seen[x] = true;
    }
    if (!perm) continue;
    std::vector<groups::Letter> letters;
    for (auto x : word) letters.push_back({x, false});
    out.add(prop::HMorphism(n, {groups::FreeWord(n, letters)}), c);
  }
  return out;
}

// Every reduced word of length <= max_length in F_rank.
inline std::vector<hopfrep::groups::FreeWord> all_words(std::size_t rank,
                                                        std::size_t max_length) {
  using hopfrep::groups::FreeWord;
  using hopfrep::groups::Letter;
  std::vector<FreeWord> out{FreeWord(rank)};
  std::vector<FreeWord> frontier{FreeWord(rank)};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : frontier) {
      for (std::uint32_t g = 0; g < rank; ++g)
        for (bool inv : {false, true}) {
          if (!w.is_identity() && w.letters().back() == Letter{g, !inv}) continue;
          auto letters = w.letters();
          letters.push_back({g, inv});
          next.emplace_back(rank, letters);
        }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace test_support
