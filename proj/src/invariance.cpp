#include "hopfrep/repvariety.hpp"

namespace hopfrep::rep {

InvarianceResult check_invariance(const Polynomial& observable, const GroupPresentation& group,
                                  const PresentedCommHopf& target, MonomialOrder order) {
  const std::size_t n = group.rank();
  const Ring copies = target.block_ring(1, n);
  if (observable.ring().names() != copies.names())
    throw MismatchError("observable is not over copies 1.." + std::to_string(n));
  auto rep = rep_ideal(group, target);
  Polynomial conj = alg::conjugation_substitution(observable.embed_into(copies), target, n);
  const Ring& full = conj.ring();

  Ideal ideal(full, target.copy_ideal(0, full));
  for (const auto& g : rep.ideal.generators) ideal.generators.push_back(g.embed_into(full));
  auto gb = poly::groebner(ideal, order);
  Polynomial residue = gb.normal_form(conj - observable.embed_into(full));
  return {residue.is_zero(), residue.embed_into(full)};
}

InvarianceResult check_trace_invariance(const FreeWord& w, const GroupPresentation& group,
                                        const PresentedCommHopf& target, MonomialOrder order) {
  if (w.rank() != group.rank())
    throw MismatchError("word has rank " + std::to_string(w.rank()) + " but the group has " +
                        std::to_string(group.rank()) + " generators");
  return check_invariance(alg::trace_of_word(w, target, target.block_ring(1, group.rank())),
                          group, target, order);
}

}  // namespace hopfrep::rep
