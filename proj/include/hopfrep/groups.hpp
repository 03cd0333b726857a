#pragma once

// Free-group words, finitely presented groups and finite groups given by
// multiplication tables.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfrep/error.hpp"

namespace hopfrep::groups {

// One letter x_{generator+1}^{±1}; generators are 0-based internally and
// printed 1-based.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group F_rank.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::size_t rank) : rank_(rank) {}
  // Letters need not be reduced; they are reduced on construction.
  FreeWord(std::size_t rank, std::vector<Letter> letters);

  static FreeWord identity(std::size_t rank) { return FreeWord(rank); }
  static FreeWord generator(std::size_t rank, std::uint32_t index,
                            bool inverse = false);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  // Number of occurrences of each generator (either sign).
  std::vector<std::size_t> occurrences() const;

  FreeWord inverse() const;
  FreeWord pow(long exponent) const;
  // Replaces letter x_i by images[i] (inverted for exponent -1). All images
  // have rank `target_rank`.
  FreeWord substitute(std::span<const FreeWord> images,
                      std::size_t target_rank) const;
  // Same letters viewed in F_{rank + offset} with indices shifted.
  FreeWord shifted(std::size_t offset, std::size_t new_rank) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  // Space separated `x1 x2^-1`, runs collapsed to powers; `e` for identity.
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

  // Parses `name` / `name^k` tokens separated by whitespace; `e` or `1` alone
  // is the identity. Rank = names.size().
  static FreeWord parse(std::string_view text,
                        std::span<const std::string> names);
  // Parses with the default names x1..x_rank.
  static FreeWord parse(std::string_view text, std::size_t rank);

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

std::vector<std::string> default_generator_names(std::size_t rank);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> names,
                    std::vector<FreeWord> relators);

  std::size_t rank() const noexcept { return generators.size(); }

  static GroupPresentation free(std::size_t rank);
  // {"generators": [...], "relators": ["a b a^-1 b^-1", ...]}
  static GroupPresentation from_json(std::string_view json_text);
  static GroupPresentation load(const std::string& path);
};

using Element = std::uint32_t;

class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inverses_.at(a); }
  const std::string& label(Element a) const { return labels_.at(a); }
  std::optional<Element> find(std::string_view label) const;

  // Permutation representation when known: images on {0..degree-1},
  // composed left to right so that matrix(a*b) = matrix(a)*matrix(b).
  const std::optional<std::vector<std::vector<std::uint32_t>>>&
  permutations() const noexcept {
    return permutations_;
  }

 private:
  friend FiniteGroup make_cyclic(std::size_t k);
  friend FiniteGroup make_symmetric(std::size_t k);

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
  std::optional<std::vector<std::vector<std::uint32_t>>> permutations_;
};

FiniteGroup make_cyclic(std::size_t k);
// Elements in lexicographic order of one-line notation (identity first);
// products compose left to right: (p*q)(i) = q(p(i)).
FiniteGroup make_symmetric(std::size_t k);
// {"table": [[...], ...], "labels": [...]}
FiniteGroup finite_group_from_json(std::string_view json_text);
// `cyclic:k`, `sym:k`, or a path to an explicit table JSON file.
FiniteGroup parse_finite_group_spec(std::string_view spec);

Element evaluate_word(const FreeWord& w, const FiniteGroup& g,
                      std::span<const Element> images);

using Homomorphism = std::vector<Element>;

// All tuples of generator images killing every relator, in lexicographic
// order of element indices. Backtracking with relator pruning.
std::vector<Homomorphism> enumerate_homs(const GroupPresentation& source,
                                         const FiniteGroup& target);

bool is_homomorphism(const GroupPresentation& source, const FiniteGroup& target,
                     std::span<const Element> images);

}  // namespace hopfrep::groups
