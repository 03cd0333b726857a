#pragma once

// Coordinate rings of representation varieties. For a presented group
// Gamma = <x_1..x_n | r_1..r_k> and a matrix group G, k(rep(Gamma, G)) is
// the ring of n copies of G modulo the entries of r_i(X_1..X_n) - 1. For
// finite targets the variety is the finite set of homomorphisms and its
// ring the functions on it. For Lie algebras the analogous ideal lives on
// the coordinates of the generator images.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfrep/alggroups.hpp"
#include "hopfrep/groups.hpp"
#include "hopfrep/prop_h.hpp"

namespace hopfrep::rep {

using alg::LieAlgebraData;
using alg::LiePresentation;
using alg::PresentedCommHopf;
using groups::FiniteGroup;
using groups::FreeWord;
using groups::GroupPresentation;
using poly::Ideal;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::Rational;
using poly::Ring;

// Where an ideal generator came from: "copy_ideal:<copy>",
// "relator:<i>:entry:<row>,<col>" or "relator:<i>:component:<k>".
struct ProvenanceNote {
  std::size_t generator_index;
  std::string source;
};

struct RepIdealPresentation {
  GroupPresentation group;
  PresentedCommHopf target;
  Ring ring;
  Ideal ideal;
  std::vector<ProvenanceNote> provenance;

  // {"variables": [...], "ideal": [...], "provenance": [...]}
  std::string to_json() const;
};

// Ring: copies 1..n of the target (copy-major). Ideal: the nonzero
// generators of each copy's defining ideal, then for each relator the
// nonzero entries of matrix_word(r) - 1. Throws MismatchError when the
// target has no matrix shape.
RepIdealPresentation rep_ideal(const GroupPresentation& group,
                               const PresentedCommHopf& target,
                               MonomialOrder order = MonomialOrder::grevlex);

// Functions on the finite set rep(Gamma, F), stored densely by point.
class FiniteRepAlgebra {
 public:
  using Function = std::vector<Rational>;

  explicit FiniteRepAlgebra(std::vector<groups::Homomorphism> points)
      : points_(std::move(points)) {}

  std::size_t dimension() const noexcept { return points_.size(); }
  const std::vector<groups::Homomorphism>& points() const noexcept { return points_; }

  Function zero() const { return Function(dimension(), 0); }
  Function one() const { return Function(dimension(), 1); }
  Function delta(std::size_t point) const;
  Function multiply(const Function& f, const Function& g) const;
  Function add(const Function& f, const Function& g) const;
  Function scale(const Function& f, const Rational& c) const;

 private:
  void require_size(const Function& f) const;
  std::vector<groups::Homomorphism> points_;
};

FiniteRepAlgebra finite_rep_algebra(const GroupPresentation& source,
                                    const FiniteGroup& target);

struct NaturalityReport {
  std::size_t squares_checked = 0;
  std::vector<std::string> failures;

  bool natural() const noexcept { return failures.empty(); }
};

// The map k[Gamma]^{(x)n} -> k[F]^{(x)n} induced by a homomorphism rho
// (images of the presentation's generators). Basis elements of k[Gamma]
// are represented by words in its generators.
class NaturalTransform {
 public:
  // Throws ValidationError when some relator does not map to 1.
  NaturalTransform(GroupPresentation source, const FiniteGroup& target,
                   groups::Homomorphism rho);

  const groups::Homomorphism& images() const noexcept { return rho_; }
  std::vector<groups::Element> apply(const std::vector<FreeWord>& tuple) const;

  // For each f : [n] -> [m] with n <= 3, compares rho(f . x) with
  // f . rho(x) (the latter through the group algebra model of the target)
  // for every tuple x of source words of length <= max_word_length.
  NaturalityReport check_naturality(const std::vector<prop::HMorphism>& fs,
                                    std::size_t max_word_length = 2) const;

 private:
  GroupPresentation source_;
  const FiniteGroup* target_;
  groups::Homomorphism rho_;
};

NaturalTransform nat_transform_from_hom(const GroupPresentation& source,
                                        const FiniteGroup& target,
                                        const groups::Homomorphism& rho);

struct LieRepIdealPresentation {
  LiePresentation source;
  LieAlgebraData target;
  Ring ring;
  Ideal ideal;
  std::vector<ProvenanceNote> provenance;

  std::string to_json() const;
};

// Variables y{i}_{k}: coordinate k of the image of generator i (both
// 1-based). Each relator contributes its nonzero target components.
LieRepIdealPresentation lie_rep_ideal(const LiePresentation& source,
                                      const LieAlgebraData& target);

struct InvarianceResult {
  bool invariant = false;
  // Normal form of conj(p) - p modulo the conjugator's ideal plus the
  // representation ideal; zero iff invariant.
  Polynomial residue;
};

// p is a polynomial over copies 1..n of target, n the rank of group.
InvarianceResult check_invariance(const Polynomial& observable,
                                  const GroupPresentation& group,
                                  const PresentedCommHopf& target,
                                  MonomialOrder order = MonomialOrder::grevlex);
InvarianceResult check_trace_invariance(const FreeWord& w,
                                        const GroupPresentation& group,
                                        const PresentedCommHopf& target,
                                        MonomialOrder order = MonomialOrder::grevlex);

}  // namespace hopfrep::rep
