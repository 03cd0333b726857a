#include <algorithm>
#include <map>
#include <set>

#include "hopfrep/polyalg.hpp"

namespace hopfrep::poly {

namespace {

struct DescendingOrder {
  const Ring* ring;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ring->compare(a, b) > 0;
  }
};

}  // namespace

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors) {
  const Ring& ring = p.ring();
  for (const auto& d : divisors) {
    if (!(d.ring() == ring)) throw MismatchError("ring mismatch in reduction");
  }
  std::map<Monomial, Rational, DescendingOrder> pending(
      DescendingOrder{&ring});
  for (const auto& t : p.terms()) pending.emplace(t.monomial, t.coefficient);

  std::vector<Term> remainder;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    const Rational& c = node.mapped();
    const Polynomial* divisor = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(m)) {
        divisor = &d;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back({m, c});
      continue;
    }
    Monomial shift = divisor->leading_monomial().quotient_of(m);
    Rational factor = c / divisor->leading_coefficient();
    const auto& dt = divisor->terms();
    for (std::size_t i = 1; i < dt.size(); ++i) {
      Monomial target = dt[i].monomial * shift;
      Rational delta = -factor * dt[i].coefficient;
      auto [it, inserted] = pending.try_emplace(std::move(target), delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  // Remainder terms were emitted in descending order already.
  return Polynomial(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.times_term(f.leading_monomial().quotient_of(l),
                              1 / f.leading_coefficient());
  Polynomial b = g.times_term(g.leading_monomial().quotient_of(l),
                              1 / g.leading_coefficient());
  return a - b;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Minimal, monic, inter-reduced basis sorted by ascending leading monomial.
std::vector<Polynomial> auto_reduce(std::vector<Polynomial> g,
                                    const Ring& ring) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading monomial is irreducible by minimality, so only tails change.
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring.compare(a.leading_monomial(), b.leading_monomial()) <
                     0;
            });
  return reduced;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order) {
  const Ring ring = ideal.ring.with_order(order);
  GroebnerStats stats;

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators) {
    Polynomial p = g.embed_into(ring);
    if (!p.is_zero()) basis.push_back(p.monic());
  }
  if (basis.empty()) return GroebnerBasis(ideal, ring, {}, stats);

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back(
          {i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties broken by indices.
    auto best = std::min_element(
        pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
          auto c = ring.compare(a.lcm, b.lcm);
          if (c != 0) return c < 0;
          return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
    Pair pair = *best;
    pairs.erase(best);
    pending.erase({pair.i, pair.j});
    ++stats.pairs_considered;

    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++stats.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading_monomial().divides(pair.lcm) &&
          !is_pending(pair.i, k) && !is_pending(pair.j, k))
        chain = true;
    }
    if (chain) {
      ++stats.pairs_skipped_chain;
      continue;
    }

    Polynomial h = reduce(s_polynomial(fi, fj), basis);
    if (h.is_zero()) {
      ++stats.reductions_to_zero;
      continue;
    }
    basis.push_back(h.monic());
    if (basis.back().is_constant()) {
      basis = {basis.back()};
      break;
    }
    add_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis(ideal, ring, auto_reduce(std::move(basis), ring),
                       stats);
}

GroebnerBasis::GroebnerBasis(Ideal ideal, Ring ring,
                             std::vector<Polynomial> basis, GroebnerStats stats)
    : ideal_(std::move(ideal)),
      ring_(std::move(ring)),
      basis_(std::move(basis)),
      stats_(stats) {}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_.front().is_constant();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.ring().names() != ring_.names())
    throw MismatchError("ring mismatch in normal form");
  return reduce(p.embed_into(ring_), basis_);
}

bool GroebnerBasis::contains(const Polynomial& p) const {
  return normal_form(p).is_zero();
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
  return gb.contains(p);
}

}  // namespace hopfrep::poly
