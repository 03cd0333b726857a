#pragma once

// Coordinate Hopf algebras k(G) of affine algebraic groups, given by
// generators and relations, and the Lie algebra data used alongside them.
//
// Copies of G live in one polynomial ring as blocks of renamed variables:
// copy c of the base variable `x_11` is `x{c}_11`, of `t` it is `t{c}`.
// Copy 0 is reserved for a conjugating element.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfrep/groups.hpp"
#include "hopfrep/polyalg.hpp"

namespace hopfrep::alg {

using poly::Ideal;
using poly::MonomialOrder;
using poly::Polynomial;
using poly::Rational;
using poly::Ring;

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Square matrix of polynomial texts over the base variables (usually just
// variable names) plus the optional inverse-determinant variable.
struct MatrixShape {
  std::vector<std::vector<std::string>> entries;
  std::optional<std::string> det_inverse;

  std::size_t size() const noexcept { return entries.size(); }
};

// Unvalidated description, e.g. straight from JSON. Polynomials are text:
// `ideal` and `antipode` over `variables`, `delta` over the doubled set
// `v'`, `v''`.
struct CommHopfSpec {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> ideal;
  std::map<std::string, std::string> delta;
  std::map<std::string, std::string> epsilon;
  std::map<std::string, std::string> antipode;
  std::optional<MatrixShape> matrix;
};

// Name of copy `copy` of base variable `base`: the index goes in front of
// the first '_' or at the end.
std::string copy_name(std::string_view base, std::size_t copy);

class PresentedCommHopf {
 public:
  // Throws ValidationError unless: the counit is a zero of the ideal, S and
  // Delta map the ideal into the ideal, the counit, coassociativity and
  // antipode axioms hold modulo the ideal, and X S(X) = 1 for the matrix.
  explicit PresentedCommHopf(const CommHopfSpec& spec);

  static PresentedCommHopf from_json(std::string_view text);

  const std::string& name() const noexcept { return d_->name; }
  const Ring& ring() const noexcept { return d_->ring; }
  const std::vector<std::string>& variables() const noexcept {
    return d_->ring.names();
  }
  const Ideal& ideal() const noexcept { return d_->ideal; }
  // Identity point, indexed like variables().
  const std::vector<Rational>& counit() const noexcept { return d_->counit; }
  // Ring of v' then v'' for every variable v.
  const Ring& doubled_ring() const noexcept { return d_->doubled; }
  const std::vector<Polynomial>& comultiplication() const noexcept {
    return d_->delta;
  }
  const std::vector<Polynomial>& antipode() const noexcept {
    return d_->antipode;
  }
  const std::optional<MatrixShape>& matrix_shape() const noexcept {
    return d_->matrix;
  }

  // Variables of copies first..last (inclusive), copy-major.
  Ring block_ring(std::size_t first, std::size_t last,
                  MonomialOrder order = MonomialOrder::grevlex) const;
  // Base-ring polynomial moved into copy `copy` inside `target`.
  Polynomial to_copy(const Polynomial& p, std::size_t copy,
                     const Ring& target) const;
  // Nonzero defining-ideal generators of copy `copy`.
  std::vector<Polynomial> copy_ideal(std::size_t copy, const Ring& target) const;

  // Copy `copy`'s variable matrix X and antipode matrix S(X) in `target`.
  // Throw MismatchError without a matrix shape.
  PolyMatrix variable_matrix(std::size_t copy, const Ring& target) const;
  PolyMatrix antipode_matrix(std::size_t copy, const Ring& target) const;

 private:
  struct Data {
    std::string name;
    Ring ring;
    Ideal ideal;
    std::vector<Rational> counit;
    Ring doubled;
    std::vector<Polynomial> delta;
    std::vector<Polynomial> antipode;
    std::optional<MatrixShape> matrix;
    PolyMatrix base_matrix;
  };
  std::shared_ptr<const Data> d_;
};

// `gl:m`, `sl:m` (1 <= m <= 3), `torus:k` (k >= 1), `ga`, or a JSON file.
PresentedCommHopf make_group(std::string_view spec);
PresentedCommHopf make_gl(std::size_t m);
PresentedCommHopf make_sl(std::size_t m);
PresentedCommHopf make_torus(std::size_t k);
PresentedCommHopf make_additive();

PolyMatrix identity_matrix(const Ring& ring, std::size_t m);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

// Product over the letters of w of copy (first_copy + generator)'s matrix,
// or its antipode matrix for inverted letters; the empty word gives 1.
PolyMatrix matrix_word(const groups::FreeWord& w, const PresentedCommHopf& g,
                       const Ring& ring, std::size_t first_copy = 1);
// Same, over block_ring(1, rank).
PolyMatrix matrix_word(const groups::FreeWord& w, const PresentedCommHopf& g);

Polynomial trace_of_word(const groups::FreeWord& w, const PresentedCommHopf& g,
                         const Ring& ring, std::size_t first_copy = 1);
Polynomial trace_of_word(const groups::FreeWord& w, const PresentedCommHopf& g);

struct CotangentResult {
  std::size_t dimension = 0;
  // Linear part of each defining generator after moving the counit to 0,
  // as coefficient rows over variables().
  poly::RationalMatrix linear_parts;
  // Basis of the common kernel of the linear parts: tangent vectors at 1.
  std::vector<std::vector<Rational>> tangent_basis;
};

// dim (I/I^2)^* for I the kernel of the counit.
CotangentResult cotangent_at_identity(const PresentedCommHopf& g);

// p over copies 1..n; result over copies 0..n with each copy's point X
// replaced by A X A^{-1}, A being copy 0. Implemented as the pullback of
// (id (x) Delta) Delta evaluated at (A, X, S(A)), so it also covers the
// inverse-determinant variable.
Polynomial conjugation_substitution(const Polynomial& p,
                                    const PresentedCommHopf& g,
                                    std::size_t copies);

// ---------------------------------------------------------------- Lie

class LieAlgebraData {
 public:
  // constants[i][j][k] = c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
  // Throws ValidationError on shape, antisymmetry or Jacobi failure.
  LieAlgebraData(std::vector<std::string> basis,
                 std::vector<std::vector<std::vector<Rational>>> constants);

  static LieAlgebraData sl2();
  static LieAlgebraData abelian(std::size_t d);
  // {"basis": [...], "constants": [["h","e","e","2"], ...]}; listed
  // entries only, every other constant is 0.
  static LieAlgebraData from_json(std::string_view text);

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[i][j][k];
  }

  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
  std::vector<Polynomial> bracket(const std::vector<Polynomial>& x,
                                  const std::vector<Polynomial>& y) const;

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<std::vector<Rational>>> c_;
};

// `sl2`, `abelian:d`, or a JSON file.
LieAlgebraData make_lie(std::string_view spec);

// Element of a free Lie algebra: generators, brackets and rational linear
// combinations.
class LieExpr {
 public:
  struct Generator {
    std::size_t index;
  };
  struct Bracket {
    std::shared_ptr<const LieExpr> left, right;
  };
  struct Sum {
    std::vector<std::pair<Rational, LieExpr>> terms;
  };
  using Node = std::variant<Generator, Bracket, Sum>;

  static LieExpr generator(std::size_t index);
  static LieExpr bracket(LieExpr left, LieExpr right);
  static LieExpr sum(std::vector<std::pair<Rational, LieExpr>> terms);

  const Node& node() const noexcept { return *node_; }
  std::string to_string(const std::vector<std::string>& names) const;

  // Value with generator i sent to images[i] (d components each).
  std::vector<Polynomial> evaluate(const std::vector<std::vector<Polynomial>>& images,
                                   const LieAlgebraData& target,
                                   const Ring& ring) const;

 private:
  explicit LieExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

struct LiePresentation {
  std::vector<std::string> generators;
  std::vector<LieExpr> relators;

  std::size_t rank() const noexcept { return generators.size(); }

  // expr := ['-'] term (('+'|'-') term)*
  // term := [rational '*'] atom
  // atom := name | '[' expr ',' expr ']' | '(' expr ')'
  static LieExpr parse_expr(std::string_view text,
                            const std::vector<std::string>& generators);
  // {"generators": [...], "relators": ["[a,b]", ...]}
  static LiePresentation from_json(std::string_view text);
  static LiePresentation free(std::size_t n);
  static LiePresentation abelian(std::size_t n);
};

// `free:n`, `abelian:n`, or a JSON file.
LiePresentation parse_lie_source(std::string_view spec);

}  // namespace hopfrep::alg
