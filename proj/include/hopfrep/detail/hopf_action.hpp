#pragma once

// Template body of prop::hopf_action; included from prop_h.hpp.

namespace hopfrep::prop {

namespace detail {

template <class B>
void accumulate(std::map<B, Rational>& acc, const B& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// Product of the letters of one output word, each letter already assigned
// a basis element (antipode still to be applied to inverted letters).
template <HopfModel M>
std::map<typename M::Basis, Rational> evaluate_output_word(
    const M& model, const FreeWord& word,
    const std::vector<typename M::Basis>& assigned) {
  using B = typename M::Basis;
  std::map<B, Rational> acc;
  acc.emplace(model.unit(), Rational(1));
  for (std::size_t pos = 0; pos < word.length(); ++pos) {
    LinearCombination<B> factor;
    if (word.letters()[pos].inverse) {
      factor = model.antipode(assigned[pos]);
    } else {
      factor = {{assigned[pos], Rational(1)}};
    }
    std::map<B, Rational> next;
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : factor)
        for (const auto& [p, cp] : model.multiply(a, b))
          accumulate(next, p, ca * cb * cp);
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

}  // namespace detail

template <HopfModel M>
ModelTensor<typename M::Basis> hopf_action(
    const HMorphism& f, const M& model,
    const ModelTensor<typename M::Basis>& input) {
  using B = typename M::Basis;
  const std::size_t n = f.dom();
  const std::size_t m = f.cod();

  // Occurrence slots (output word, letter position) per input variable.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> slots(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& letters = f.words()[i].letters();
    for (std::size_t pos = 0; pos < letters.size(); ++pos)
      slots[letters[pos].generator].emplace_back(i, pos);
  }

  ModelTensor<B> out;
  for (const auto& [tuple, coefficient] : input) {
    if (tuple.size() != n)
      throw MismatchError("hopf_action input has " +
                          std::to_string(tuple.size()) + " legs, expected " +
                          std::to_string(n));
    std::vector<std::vector<std::pair<std::vector<B>, Rational>>> legs(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (slots[j].empty()) {
        legs[j] = {{std::vector<B>{}, model.counit(tuple[j])}};
      } else {
        legs[j] = model.coproduct(tuple[j], slots[j].size());
      }
    }

    std::vector<std::vector<B>> assigned(m);
    for (std::size_t i = 0; i < m; ++i)
      assigned[i].assign(f.words()[i].length(), model.unit());

    auto emit = [&](const Rational& c) {
      std::vector<std::map<B, Rational>> per_word;
      per_word.reserve(m);
      for (std::size_t i = 0; i < m; ++i) {
        per_word.push_back(
            detail::evaluate_output_word(model, f.words()[i], assigned[i]));
        if (per_word.back().empty()) return;
      }
      std::vector<B> key;
      auto expand = [&](auto&& self, std::size_t i, const Rational& acc) -> void {
        if (i == m) {
          detail::accumulate(out, key, acc);
          return;
        }
        for (const auto& [b, cb] : per_word[i]) {
          key.push_back(b);
          self(self, i + 1, acc * cb);
          key.pop_back();
        }
      };
      expand(expand, 0, c);
    };

    auto choose = [&](auto&& self, std::size_t j, const Rational& acc) -> void {
      if (acc == 0) return;
      if (j == n) {
        emit(acc);
        return;
      }
      for (const auto& [parts, c] : legs[j]) {
        for (std::size_t k = 0; k < slots[j].size(); ++k)
          assigned[slots[j][k].first][slots[j][k].second] = parts[k];
        self(self, j + 1, acc * c);
      }
    };
    choose(choose, 0, coefficient);
  }
  return out;
}

}  // namespace hopfrep::prop
