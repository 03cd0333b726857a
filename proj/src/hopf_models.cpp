#include <algorithm>

#include "hopfrep/prop_h.hpp"

namespace hopfrep::prop {

TensorAlgebraModel::TensorAlgebraModel(std::size_t generators,
                                       std::size_t truncation)
    : generators_(generators), truncation_(truncation) {
  if (truncation_ < 1) throw ValidationError("truncation degree must be >= 1");
}

LinearCombination<TensorAlgebraModel::Basis> TensorAlgebraModel::multiply(
    const Basis& a, const Basis& b) const {
  if (a.size() + b.size() > truncation_) return {};
  Basis w = a;
  w.insert(w.end(), b.begin(), b.end());
  return {{std::move(w), Rational(1)}};
}

LinearCombination<TensorAlgebraModel::Basis> TensorAlgebraModel::antipode(
    const Basis& w) const {
  // S is an anti-homomorphism with S(v) = -v on generators.
  Basis r(w.rbegin(), w.rend());
  return {{std::move(r), Rational(w.size() % 2 == 0 ? 1 : -1)}};
}

std::vector<std::pair<std::vector<TensorAlgebraModel::Basis>, Rational>>
TensorAlgebraModel::coproduct(const Basis& w, std::size_t parts) const {
  for (auto letter : w)
    if (letter >= generators_)
      throw MismatchError("tensor algebra letter out of range");
  // Each primitive letter goes to exactly one leg; legs keep letter order.
  std::map<std::vector<Basis>, Rational> acc;
  std::vector<std::size_t> leg(w.size(), 0);
  for (;;) {
    std::vector<Basis> split(parts);
    for (std::size_t i = 0; i < w.size(); ++i) split[leg[i]].push_back(w[i]);
    acc[std::move(split)] += 1;
    std::size_t i = 0;
    while (i < leg.size() && ++leg[i] == parts) leg[i++] = 0;
    if (i == leg.size()) break;
  }
  return {acc.begin(), acc.end()};
}

}  // namespace hopfrep::prop
