#include "hopfrep/repvariety.hpp"

namespace hopfrep::rep {

void FiniteRepAlgebra::require_size(const Function& f) const {
  if (f.size() != dimension())
    throw MismatchError("function has " + std::to_string(f.size()) + " values, expected " +
                        std::to_string(dimension()));
}

FiniteRepAlgebra::Function FiniteRepAlgebra::delta(std::size_t point) const {
  if (point >= dimension()) throw MismatchError("point index out of range");
  Function f = zero();
  f[point] = 1;
  return f;
}

FiniteRepAlgebra::Function FiniteRepAlgebra::multiply(const Function& f,
                                                      const Function& g) const {
  require_size(f);
  require_size(g);
  Function out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out[i] = f[i] * g[i];
  return out;
}

FiniteRepAlgebra::Function FiniteRepAlgebra::add(const Function& f, const Function& g) const {
  require_size(f);
  require_size(g);
  Function out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out[i] = f[i] + g[i];
  return out;
}

FiniteRepAlgebra::Function FiniteRepAlgebra::scale(const Function& f, const Rational& c) const {
  require_size(f);
  Function out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out[i] = f[i] * c;
  return out;
}

FiniteRepAlgebra finite_rep_algebra(const GroupPresentation& source, const FiniteGroup& target) {
  return FiniteRepAlgebra(groups::enumerate_homs(source, target));
}

// ---------------------------------------------------------------- naturality

NaturalTransform::NaturalTransform(GroupPresentation source, const FiniteGroup& target,
                                   groups::Homomorphism rho)
    : source_(std::move(source)), target_(&target), rho_(std::move(rho)) {
  if (rho_.size() != source_.rank())
    throw ValidationError("homomorphism gives " + std::to_string(rho_.size()) +
                          " images for " + std::to_string(source_.rank()) + " generators");
  for (auto e : rho_)
    if (e >= target.order()) throw ValidationError("image outside the target group");
  for (std::size_t i = 0; i < source_.relators.size(); ++i)
    if (groups::evaluate_word(source_.relators[i], target, rho_) != target.identity())
      throw ValidationError("relator " + std::to_string(i) + " (" +
                            source_.relators[i].to_string(source_.generators) +
                            ") does not map to the identity");
}

std::vector<groups::Element> NaturalTransform::apply(const std::vector<FreeWord>& tuple) const {
  std::vector<groups::Element> out;
  out.reserve(tuple.size());
  for (const auto& w : tuple) out.push_back(groups::evaluate_word(w, *target_, rho_));
  return out;
}

namespace {

// Reduced words of length <= max_length on `rank` generators.
std::vector<FreeWord> short_words(std::size_t rank, std::size_t max_length) {
  std::vector<FreeWord> out{FreeWord(rank)};
  std::vector<FreeWord> layer{FreeWord(rank)};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : layer)
      for (std::uint32_t g = 0; g < rank; ++g)
        for (bool inv : {false, true}) {
          FreeWord v = w * FreeWord::generator(rank, g, inv);
          if (v.length() == len) next.push_back(v);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

NaturalityReport NaturalTransform::check_naturality(const std::vector<prop::HMorphism>& fs,
                                                    std::size_t max_word_length) const {
  NaturalityReport report;
  const auto words = short_words(source_.rank(), max_word_length);
  prop::GroupAlgebraModel model(*target_);
  for (const auto& f : fs) {
    const std::size_t n = f.dom();
    if (n > 3) throw MismatchError("naturality is checked up to level 3");
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      std::vector<FreeWord> x;
      for (auto i : idx) x.push_back(words[i]);
      // Source side: k[Gamma] acts through word substitution.
      std::vector<FreeWord> fx;
      for (const auto& w : f.words()) fx.push_back(w.substitute(x, source_.rank()));
      prop::ModelTensor<groups::Element> left;
      left.emplace(apply(fx), Rational(1));
      auto right = prop::hopf_action(f, model, apply(x));
      ++report.squares_checked;
      if (left != right) {
        std::string at;
        for (const auto& w : x) at += (at.empty() ? "" : ", ") + w.to_string(source_.generators);
        report.failures.push_back(f.to_string() + " at (" + at + ")");
      }
      std::size_t k = n;
      while (k > 0 && ++idx[k - 1] == words.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return report;
}

NaturalTransform nat_transform_from_hom(const GroupPresentation& source,
                                        const FiniteGroup& target,
                                        const groups::Homomorphism& rho) {
  return NaturalTransform(source, target, rho);
}

}  // namespace hopfrep::rep
