#include <algorithm>
#include <deque>

#include "hopfrep/prop_h.hpp"

namespace hopfrep::prop {

bool is_permutation_word(const FreeWord& w) {
  if (w.length() != w.rank()) return false;
  for (auto count : w.occurrences())
    if (count != 1) return false;
  return std::none_of(w.letters().begin(), w.letters().end(),
                      [](const groups::Letter& l) { return l.inverse; });
}

LinHom multilinear_reduce(const LinHom& element, PolarizationOrder order) {
  if (element.cod() != 1)
    throw MismatchError("multilinear_reduce expects morphisms with codomain [1]");
  const std::size_t n = element.dom();
  LinHom result(n, 1);

  std::deque<std::pair<FreeWord, Rational>> work;
  for (const auto& [f, c] : element.terms()) work.emplace_back(f.words()[0], c);

  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();
    auto counts = w.occurrences();
    // A word that does not use every variable factors through a counit.
    if (std::any_of(counts.begin(), counts.end(),
                    [](std::size_t k) { return k == 0; }))
      continue;

    const auto& letters = w.letters();
    std::optional<std::size_t> split;
    if (order == PolarizationOrder::leftmost_first) {
      for (std::size_t p = 0; p < letters.size() && !split; ++p)
        if (counts[letters[p].generator] > 1) split = p;
    } else {
      for (std::size_t p = letters.size(); p-- > 0 && !split;)
        if (counts[letters[p].generator] > 1) split = p;
    }

    if (split) {
      // Primitivity: the occurrence at `split` and the remaining occurrences
      // of the same variable receive the two legs of 1(x)v + v(x)1.
      const auto var = letters[*split].generator;
      std::vector<groups::Letter> drop_one, keep_one;
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (p != *split) drop_one.push_back(letters[p]);
        if (p == *split || letters[p].generator != var)
          keep_one.push_back(letters[p]);
      }
      work.emplace_back(FreeWord(n, std::move(drop_one)), c);
      work.emplace_back(FreeWord(n, std::move(keep_one)), c);
      continue;
    }

    // Multilinear: each inverted letter contributes S(v) = -v.
    Rational sign = c;
    std::vector<groups::Letter> positive;
    for (auto l : letters) {
      if (l.inverse) sign = -sign;
      positive.push_back({l.generator, false});
    }
    result.add(HMorphism(n, {FreeWord(n, std::move(positive))}), sign);
  }
  return result;
}

}  // namespace hopfrep::prop
