#pragma once

// Exact polynomial arithmetic over the rationals: rings with a fixed
// monomial order, sparse polynomials, Buchberger Groebner bases and exact
// linear kernels.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfrep/error.hpp"

namespace hopfrep::poly {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

enum class MonomialOrder { grevlex, lex };

std::string_view to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(std::string_view name);

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  Exponent degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }

  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  // Plain lexicographic comparison of exponent vectors; used for map keys
  // only, never as a term order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  Exponent degree_ = 0;
};

// An ordered list of named variables together with a monomial order.
// Cheap to copy; two rings are equal when names and order agree.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> names,
                MonomialOrder order = MonomialOrder::grevlex);

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& names() const noexcept {
    return data_->names;
  }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  MonomialOrder order() const noexcept { return data_->order; }

  Ring with_order(MonomialOrder order) const;

  // Three-way comparison of monomials under this ring's order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> names;
    MonomialOrder order;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, const Rational& constant);
  // Terms in any order; duplicates are merged and zeros dropped.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial parse(std::string_view text, const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  // Terms sorted in strictly descending monomial order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Exponent total_degree() const;

  // Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const {
    return terms_.front().coefficient;
  }

  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  // Sum of the terms of total degree `degree`.
  Polynomial homogeneous_part(Exponent degree) const;
  Rational coefficient_of(const Monomial& m) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Replaces variable i by images[i]; all images must share one ring,
  // which becomes the ring of the result.
  Polynomial substitute(std::span<const Polynomial> images,
                        const Ring& target) const;
  // Named substitution; every variable of this ring must be mapped.
  Polynomial substitute(const std::map<std::string, Polynomial>& images,
                        const Ring& target) const;
  // Re-expresses this polynomial in `target`, mapping variable names through
  // `rename`; every renamed variable must exist in `target`.
  template <class Rename>
  Polynomial rename_into(const Ring& target, Rename&& rename) const;
  // Same names, different ring (superset of variables and/or other order).
  Polynomial embed_into(const Ring& target) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms, bool /*trusted*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void require_same_ring(const Polynomial& other, const char* op) const;
  std::vector<std::size_t> index_map_into(const Ring& target,
                                          const std::vector<std::string>&
                                              target_names) const;

  Ring ring_;
  std::vector<Term> terms_;
};

template <class Rename>
Polynomial Polynomial::rename_into(const Ring& target, Rename&& rename) const {
  std::vector<std::string> names;
  names.reserve(ring_.size());
  for (const auto& n : ring_.names()) names.push_back(rename(n));
  auto map = index_map_into(target, names);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Exponent> e(target.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) e[map[i]] += t.monomial[i];
    out.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  explicit Ideal(Ring r) : ring(std::move(r)) {}
  Ideal(Ring r, std::vector<Polynomial> gens);
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ideal ideal, Ring ring, std::vector<Polynomial> basis,
                GroebnerStats stats);

  const Ideal& ideal() const noexcept { return ideal_; }
  // Ring of the basis; carries the monomial order used.
  const Ring& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return ring_.order(); }
  // Reduced, monic, sorted by ascending leading monomial.
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const GroebnerStats& stats() const noexcept { return stats_; }

  bool is_unit_ideal() const;
  // Fully reduced normal form; `p` must live in a ring with the same
  // variable names (any order).
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;

 private:
  Ideal ideal_;
  Ring ring_;
  std::vector<Polynomial> basis_;
  GroebnerStats stats_;
};

// Normal form of `p` modulo `divisors` (all in p's ring); every term of the
// result is irreducible with respect to the divisors' leading monomials.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Reduced Groebner basis by Buchberger's algorithm with the coprime and
// chain criteria, normal pair selection and final auto-reduction.
GroebnerBasis groebner(const Ideal& ideal,
                       MonomialOrder order = MonomialOrder::grevlex);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

using RationalMatrix = std::vector<std::vector<Rational>>;

struct KernelResult {
  std::size_t rank = 0;
  std::size_t columns = 0;
  std::vector<std::vector<Rational>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& rows, std::size_t columns);

// Basis of {v : M v = 0}, one vector per free column of the RREF.
KernelResult linear_kernel(const RationalMatrix& rows, std::size_t columns);

}  // namespace hopfrep::poly
