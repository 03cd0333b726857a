#include <algorithm>
#include <numeric>

#include "hopfrep/groups.hpp"
#include "json_util.hpp"

namespace hopfrep::groups {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("group table is not square");
    for (auto x : row) {
      if (x >= n) throw ValidationError("group table entry out of range");
      g.table_.push_back(x);
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = g.multiply(e, x) == x && g.multiply(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("group table has no identity");
  g.identity_ = *identity;

  g.inverses_.resize(n);
  for (Element x = 0; x < n; ++x) {
    std::optional<Element> inv;
    for (Element y = 0; y < n && !inv; ++y)
      if (g.multiply(x, y) == g.identity_ && g.multiply(y, x) == g.identity_)
        inv = y;
    if (!inv)
      throw ValidationError("element " + std::to_string(x) + " has no inverse");
    g.inverses_[x] = *inv;
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element ab = g.multiply(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c)))
          throw ValidationError("group table is not associative");
    }

  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    throw ValidationError("label count does not match group order");
  }
  g.labels_ = std::move(labels);
  return g;
}

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

FiniteGroup make_cyclic(std::size_t k) {
  if (k < 1) throw ValidationError("cyclic group order must be >= 1");
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::vector<std::uint32_t>> perms(k, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      table[a][b] = static_cast<Element>((a + b) % k);
      perms[a][b] = static_cast<std::uint32_t>((a + b) % k);
    }
  }
  auto g = FiniteGroup::from_table(std::move(table));
  g.permutations_ = std::move(perms);
  return g;
}

namespace {

std::string cycle_notation(const std::vector<std::uint32_t>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      first = false;
      out += std::to_string(j + 1);
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup make_symmetric(std::size_t k) {
  if (k < 1 || k > 6) throw ValidationError("symmetric group degree must be in 1..6");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::uint32_t> prod(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) prod[i] = perms[b][perms[a][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      table[a][b] = static_cast<Element>(it - perms.begin());
    }
  }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_notation(q));
  auto g = FiniteGroup::from_table(std::move(table), std::move(labels));
  g.permutations_ = std::move(perms);
  return g;
}

FiniteGroup finite_group_from_json(std::string_view json_text) {
  auto j = detail::parse_json(json_text);
  return detail::with_schema("finite group", [&] {
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(labels));
  });
}

FiniteGroup parse_finite_group_spec(std::string_view spec) {
  auto parse_count = [&](std::string_view digits) -> std::size_t {
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("invalid finite group spec '" + std::string(spec) + "'");
    return std::stoul(std::string(digits));
  };
  if (spec.starts_with("cyclic:")) return make_cyclic(parse_count(spec.substr(7)));
  if (spec.starts_with("sym:")) return make_symmetric(parse_count(spec.substr(4)));
  return finite_group_from_json(detail::read_file(std::string(spec)));
}

Element evaluate_word(const FreeWord& w, const FiniteGroup& g,
                      std::span<const Element> images) {
  if (images.size() != w.rank())
    throw MismatchError("word of rank " + std::to_string(w.rank()) +
                        " evaluated on " + std::to_string(images.size()) +
                        " images");
  Element acc = g.identity();
  for (auto l : w.letters()) {
    Element x = images[l.generator];
    acc = g.multiply(acc, l.inverse ? g.inverse(x) : x);
  }
  return acc;
}

bool is_homomorphism(const GroupPresentation& source, const FiniteGroup& target,
                     std::span<const Element> images) {
  if (images.size() != source.rank()) return false;
  for (auto x : images)
    if (x >= target.order()) return false;
  return std::all_of(source.relators.begin(), source.relators.end(),
                     [&](const FreeWord& r) {
                       return evaluate_word(r, target, images) ==
                              target.identity();
                     });
}

std::vector<Homomorphism> enumerate_homs(const GroupPresentation& source,
                                         const FiniteGroup& target) {
  const std::size_t n = source.rank();
  // Relators grouped by the last generator they mention; a relator is
  // checked as soon as all its generators have images.
  std::vector<std::vector<const FreeWord*>> ready(n + 1);
  for (const auto& r : source.relators) {
    std::size_t last = 0;
    for (auto l : r.letters()) last = std::max<std::size_t>(last, l.generator + 1);
    ready[last].push_back(&r);
  }
  std::vector<Homomorphism> out;
  for (const FreeWord* r : ready[0])
    if (!r->is_identity()) return out;

  Homomorphism images(n, target.identity());
  auto holds = [&](std::size_t level) {
    for (const FreeWord* r : ready[level])
      if (evaluate_word(*r, target, images) != target.identity()) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t gen) -> void {
    if (gen == n) {
      out.push_back(images);
      return;
    }
    for (Element x = 0; x < target.order(); ++x) {
      images[gen] = x;
      if (holds(gen + 1)) self(self, gen + 1);
    }
    images[gen] = target.identity();
  };
  search(search, 0);
  return out;
}

}  // namespace hopfrep::groups
