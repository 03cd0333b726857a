#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hopfrep/groups.hpp"
#include "json_util.hpp"

namespace hopfrep::groups {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().generator == l.generator &&
      out.back().inverse != l.inverse) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeWord::FreeWord(std::size_t rank, std::vector<Letter> letters)
    : rank_(rank) {
  letters_.reserve(letters.size());
  for (auto l : letters) {
    if (l.generator >= rank)
      throw MismatchError("letter x" + std::to_string(l.generator + 1) +
                          " outside F_" + std::to_string(rank));
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::generator(std::size_t rank, std::uint32_t index,
                             bool inverse) {
  return FreeWord(rank, {Letter{index, inverse}});
}

std::vector<std::size_t> FreeWord::occurrences() const {
  std::vector<std::size_t> count(rank_, 0);
  for (auto l : letters_) ++count[l.generator];
  return count;
}

FreeWord FreeWord::inverse() const {
  FreeWord out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverted());
  return out;
}

FreeWord FreeWord::pow(long exponent) const {
  FreeWord base = exponent < 0 ? inverse() : *this;
  FreeWord out(rank_);
  for (long k = 0; k < std::labs(exponent); ++k) out = out * base;
  return out;
}

FreeWord FreeWord::substitute(std::span<const FreeWord> images,
                              std::size_t target_rank) const {
  if (images.size() != rank_)
    throw MismatchError("substitution needs " + std::to_string(rank_) +
                        " words, got " + std::to_string(images.size()));
  for (const auto& img : images)
    if (img.rank_ != target_rank)
      throw MismatchError("substitution images have inconsistent rank");
  FreeWord out(target_rank);
  for (auto l : letters_) {
    const auto& img = images[l.generator].letters_;
    if (l.inverse) {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_reduced(out.letters_, it->inverted());
    } else {
      for (auto x : img) push_reduced(out.letters_, x);
    }
  }
  return out;
}

FreeWord FreeWord::shifted(std::size_t offset, std::size_t new_rank) const {
  if (rank_ + offset > new_rank)
    throw MismatchError("shift exceeds target rank");
  FreeWord out(new_rank);
  out.letters_ = letters_;
  for (auto& l : out.letters_) l.generator += static_cast<std::uint32_t>(offset);
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw MismatchError("concatenating words of different rank");
  FreeWord out = a;
  for (auto l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

std::vector<std::string> default_generator_names(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string FreeWord::to_string() const {
  return to_string(default_generator_names(rank_));
}

std::string FreeWord::to_string(std::span<const std::string> names) const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long power = static_cast<long>(j - i) * (letters_[i].inverse ? -1 : 1);
    if (!first) out << ' ';
    first = false;
    out << names[letters_[i].generator];
    if (power != 1) out << '^' << power;
    i = j;
  }
  return out.str();
}

FreeWord FreeWord::parse(std::string_view text,
                         std::span<const std::string> names) {
  const std::size_t rank = names.size();
  std::vector<Letter> letters;
  std::size_t pos = 0;
  bool saw_identity = false;
  std::size_t tokens = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw ParseError(msg, 1, at + 1);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string_view token = text.substr(start, pos - start);
    ++tokens;
    std::string_view name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      auto digits = token.substr(caret + 1);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size() ||
          digits.empty())
        fail("malformed exponent in '" + std::string(token) + "'", start);
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      if ((name == "e" || name == "1") && power == 1) {
        saw_identity = true;
        continue;
      }
      fail("unknown generator '" + std::string(name) + "'", start);
    }
    auto gen = static_cast<std::uint32_t>(it - names.begin());
    for (long k = 0; k < std::labs(power); ++k)
      letters.push_back(Letter{gen, power < 0});
  }
  if (saw_identity && tokens > 1)
    fail("identity token must stand alone", 0);
  if (tokens == 0) fail("empty word (write 'e' for the identity)", 0);
  return FreeWord(rank, std::move(letters));
}

FreeWord FreeWord::parse(std::string_view text, std::size_t rank) {
  auto names = default_generator_names(rank);
  return parse(text, names);
}

// ------------------------------------------------------ GroupPresentation

GroupPresentation::GroupPresentation(std::vector<std::string> names,
                                     std::vector<FreeWord> rels)
    : generators(std::move(names)), relators(std::move(rels)) {
  std::vector<std::string> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("generator names must be distinct");
  for (const auto& n : generators) {
    if (n.empty() || n == "e" || n == "1" ||
        n.find_first_of(" \t\n^") != std::string::npos)
      throw ValidationError("invalid generator name '" + n + "'");
  }
  for (const auto& r : relators)
    if (r.rank() != generators.size())
      throw MismatchError("relator rank does not match generator count");
}

GroupPresentation GroupPresentation::free(std::size_t rank) {
  return GroupPresentation(default_generator_names(rank), {});
}

GroupPresentation GroupPresentation::from_json(std::string_view json_text) {
  auto j = detail::parse_json(json_text);
  return detail::with_schema("group presentation", [&] {
    auto names = j.at("generators").get<std::vector<std::string>>();
    std::vector<FreeWord> relators;
    if (j.contains("relators")) {
      for (const auto& r : j.at("relators"))
        relators.push_back(FreeWord::parse(r.get<std::string>(), names));
    }
    return GroupPresentation(std::move(names), std::move(relators));
  });
}

GroupPresentation GroupPresentation::load(const std::string& path) {
  return from_json(detail::read_file(path));
}

}  // namespace hopfrep::groups
