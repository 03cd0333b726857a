#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <numeric>

#include "hopfrep/alggroups.hpp"
#include "json_util.hpp"

namespace hopfrep::alg {

using poly::GroebnerBasis;
using poly::Monomial;

std::string copy_name(std::string_view base, std::size_t copy) {
  const std::string index = std::to_string(copy);
  auto pos = base.find('_');
  if (pos == std::string_view::npos) return std::string(base) + index;
  return std::string(base.substr(0, pos)) + index + std::string(base.substr(pos));
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring primed_ring(const std::vector<std::string>& names, std::size_t legs) {
  std::vector<std::string> out;
  for (std::size_t leg = 1; leg <= legs; ++leg)
    for (const auto& v : names) out.push_back(v + std::string(leg, '\''));
  return Ring(std::move(out));
}

// Images sending every base variable v to the variable v with `leg` primes.
std::vector<Polynomial> leg_variables(const std::vector<std::string>& names,
                                      std::size_t leg, const Ring& target) {
  std::vector<Polynomial> out;
  for (const auto& v : names)
    out.push_back(Polynomial::variable(target, v + std::string(leg, '\'')));
  return out;
}

// Delta images keyed by the doubled ring's variable order.
std::vector<Polynomial> concat(std::vector<Polynomial> a,
                               const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Polynomial parse_in(const std::string& text, const Ring& ring, const std::string& what) {
  try {
    return Polynomial::parse(text, ring);
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.message(), e.line(), e.column());
  }
}

template <class Map>
const std::string& lookup(const Map& m, const std::string& key, const char* what) {
  auto it = m.find(key);
  if (it == m.end())
    throw ValidationError(std::string(what) + " missing for variable '" + key + "'");
  return it->second;
}

template <class Map>
void reject_unknown_keys(const Map& m, const Ring& ring, const char* what) {
  for (const auto& [k, v] : m)
    if (!ring.index_of(k))
      throw ValidationError(std::string(what) + " given for unknown variable '" + k + "'");
}

Ideal copies_of(const Ideal& ideal, const std::vector<std::string>& names,
                const Ring& target, std::size_t legs) {
  Ideal out(target);
  for (std::size_t leg = 1; leg <= legs; ++leg) {
    auto images = leg_variables(names, leg, target);
    for (const auto& g : ideal.generators)
      if (!g.is_zero()) out.generators.push_back(g.substitute(images, target));
  }
  return out;
}

}  // namespace

PresentedCommHopf::PresentedCommHopf(const CommHopfSpec& spec) {
  auto d = std::make_shared<Data>(Data{spec.name, Ring(), Ideal(Ring()), {}, Ring(),
                                       {}, {}, spec.matrix, {}});
  if (spec.variables.empty()) throw ValidationError("group has no variables");
  for (const auto& v : spec.variables)
    if (!is_identifier(v))
      throw ValidationError("invalid variable name '" + v + "'");
  d->ring = Ring(spec.variables);
  const Ring& ring = d->ring;
  const auto& names = ring.names();
  const std::size_t n = names.size();

  d->ideal = Ideal(ring);
  for (std::size_t i = 0; i < spec.ideal.size(); ++i)
    d->ideal.generators.push_back(
        parse_in(spec.ideal[i], ring, "ideal generator " + std::to_string(i)));

  reject_unknown_keys(spec.epsilon, ring, "epsilon");
  reject_unknown_keys(spec.delta, ring, "delta");
  reject_unknown_keys(spec.antipode, ring, "antipode");

  d->doubled = primed_ring(names, 2);
  for (const auto& v : names) {
    d->counit.push_back(poly::parse_rational(lookup(spec.epsilon, v, "epsilon")));
    d->delta.push_back(parse_in(lookup(spec.delta, v, "delta"), d->doubled, "delta(" + v + ")"));
    d->antipode.push_back(
        parse_in(lookup(spec.antipode, v, "antipode"), ring, "antipode(" + v + ")"));
  }

  const auto fail = [&](const std::string& what) {
    throw ValidationError(spec.name.empty() ? what : spec.name + ": " + what);
  };

  for (std::size_t i = 0; i < d->ideal.generators.size(); ++i)
    if (d->ideal.generators[i].evaluate(d->counit) != 0)
      fail("counit is not a zero of ideal generator " + std::to_string(i));

  const GroebnerBasis gb = poly::groebner(d->ideal);
  if (gb.is_unit_ideal()) fail("defining ideal is the unit ideal");

  for (std::size_t i = 0; i < d->ideal.generators.size(); ++i)
    if (!gb.contains(d->ideal.generators[i].substitute(d->antipode, ring)))
      fail("antipode does not preserve ideal generator " + std::to_string(i));

  const GroebnerBasis gb2 = poly::groebner(copies_of(d->ideal, names, d->doubled, 2));
  for (std::size_t i = 0; i < d->ideal.generators.size(); ++i)
    if (!gb2.contains(d->ideal.generators[i].substitute(d->delta, d->doubled)))
      fail("comultiplication does not preserve ideal generator " + std::to_string(i));

  std::vector<Polynomial> ident, eps_const;
  for (std::size_t i = 0; i < n; ++i) {
    ident.push_back(Polynomial::variable(ring, i));
    eps_const.push_back(Polynomial(ring, d->counit[i]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& dv = d->delta[i];
    const Polynomial v = ident[i];
    const Polynomial e(ring, d->counit[i]);
    if (!gb.contains(dv.substitute(concat(eps_const, ident), ring) - v) ||
        !gb.contains(dv.substitute(concat(ident, eps_const), ring) - v))
      fail("counit axiom fails for '" + names[i] + "'");
    if (!gb.contains(dv.substitute(concat(d->antipode, ident), ring) - e) ||
        !gb.contains(dv.substitute(concat(ident, d->antipode), ring) - e))
      fail("antipode axiom fails for '" + names[i] + "'");
  }

  const Ring tripled = primed_ring(names, 3);
  const GroebnerBasis gb3 = poly::groebner(copies_of(d->ideal, names, tripled, 3));
  {
    auto l1 = leg_variables(names, 1, tripled), l2 = leg_variables(names, 2, tripled),
         l3 = leg_variables(names, 3, tripled);
    std::vector<Polynomial> d12, d23;
    for (const auto& dv : d->delta) {
      d12.push_back(dv.substitute(concat(l1, l2), tripled));
      d23.push_back(dv.substitute(concat(l2, l3), tripled));
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto left = d->delta[i].substitute(concat(d12, l3), tripled);
      auto right = d->delta[i].substitute(concat(l1, d23), tripled);
      if (!gb3.contains(left - right))
        fail("coassociativity fails for '" + names[i] + "'");
    }
  }

  if (spec.matrix) {
    const auto& shape = *spec.matrix;
    const std::size_t m = shape.size();
    if (m == 0) fail("matrix shape is empty");
    for (const auto& row : shape.entries)
      if (row.size() != m) fail("matrix shape is not square");
    if (shape.det_inverse && !ring.index_of(*shape.det_inverse))
      fail("unknown inverse-determinant variable '" + *shape.det_inverse + "'");
    for (std::size_t i = 0; i < m; ++i) {
      d->base_matrix.emplace_back();
      for (std::size_t j = 0; j < m; ++j)
        d->base_matrix.back().push_back(parse_in(shape.entries[i][j], ring,
                                                 "matrix entry " + std::to_string(i + 1) +
                                                     "," + std::to_string(j + 1)));
    }
    const auto l1 = leg_variables(names, 1, d->doubled);
    const auto l2 = leg_variables(names, 2, d->doubled);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::string at = std::to_string(i + 1) + "," + std::to_string(j + 1);
        const Rational delta_ij = i == j ? 1 : 0;
        const Polynomial& x = d->base_matrix[i][j];
        if (x.evaluate(d->counit) != delta_ij) fail("counit of matrix entry " + at + " is wrong");
        Polynomial product(d->doubled), right_inv(ring), left_inv(ring);
        for (std::size_t k = 0; k < m; ++k) {
          product += d->base_matrix[i][k].substitute(l1, d->doubled) *
                     d->base_matrix[k][j].substitute(l2, d->doubled);
          right_inv += d->base_matrix[i][k] *
                       d->base_matrix[k][j].substitute(d->antipode, ring);
          left_inv += d->base_matrix[i][k].substitute(d->antipode, ring) *
                      d->base_matrix[k][j];
        }
        if (!gb2.contains(x.substitute(d->delta, d->doubled) - product))
          fail("comultiplication is not matrix multiplication at entry " + at);
        if (!gb.contains(right_inv - Polynomial(ring, delta_ij)) ||
            !gb.contains(left_inv - Polynomial(ring, delta_ij)))
          fail("X S(X) is not the identity at entry " + at);
      }
    }
  }
  d_ = std::move(d);
}

PresentedCommHopf PresentedCommHopf::from_json(std::string_view text) {
  auto j = detail::parse_json(text);
  CommHopfSpec spec = detail::with_schema("group JSON", [&] {
    CommHopfSpec s;
    if (!j.is_object()) throw ValidationError("group JSON must be an object");
    for (const auto& [key, value] : j.items())
      if (key != "name" && key != "variables" && key != "ideal" && key != "delta" &&
          key != "epsilon" && key != "antipode" && key != "matrix")
        throw ValidationError("unknown key '" + key + "' in group JSON");
    s.name = j.value("name", std::string());
    s.variables = j.at("variables").get<std::vector<std::string>>();
    if (j.contains("ideal")) s.ideal = j.at("ideal").get<std::vector<std::string>>();
    s.delta = j.at("delta").get<std::map<std::string, std::string>>();
    s.antipode = j.at("antipode").get<std::map<std::string, std::string>>();
    for (const auto& [k, v] : j.at("epsilon").items())
      s.epsilon[k] = v.is_string() ? v.get<std::string>() : v.dump();
    if (j.contains("matrix")) {
      const auto& mj = j.at("matrix");
      MatrixShape shape;
      shape.entries = mj.at("entries").get<std::vector<std::vector<std::string>>>();
      if (mj.contains("det_inverse")) shape.det_inverse = mj.at("det_inverse").get<std::string>();
      s.matrix = std::move(shape);
    }
    return s;
  });
  return PresentedCommHopf(spec);
}

Ring PresentedCommHopf::block_ring(std::size_t first, std::size_t last,
                                   MonomialOrder order) const {
  std::vector<std::string> names;
  for (std::size_t c = first; c <= last && last != static_cast<std::size_t>(-1); ++c)
    for (const auto& v : variables()) names.push_back(copy_name(v, c));
  return Ring(std::move(names), order);
}

Polynomial PresentedCommHopf::to_copy(const Polynomial& p, std::size_t copy,
                                      const Ring& target) const {
  return p.rename_into(target, [copy](const std::string& v) { return copy_name(v, copy); });
}

std::vector<Polynomial> PresentedCommHopf::copy_ideal(std::size_t copy,
                                                      const Ring& target) const {
  std::vector<Polynomial> out;
  for (const auto& g : ideal().generators)
    if (!g.is_zero()) out.push_back(to_copy(g, copy, target));
  return out;
}

PolyMatrix PresentedCommHopf::variable_matrix(std::size_t copy, const Ring& target) const {
  if (!matrix_shape()) throw MismatchError("group '" + name() + "' has no matrix shape");
  PolyMatrix out;
  for (const auto& row : d_->base_matrix) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(to_copy(x, copy, target));
  }
  return out;
}

PolyMatrix PresentedCommHopf::antipode_matrix(std::size_t copy, const Ring& target) const {
  if (!matrix_shape()) throw MismatchError("group '" + name() + "' has no matrix shape");
  PolyMatrix out;
  for (const auto& row : d_->base_matrix) {
    out.emplace_back();
    for (const auto& x : row)
      out.back().push_back(to_copy(x.substitute(antipode(), ring()), copy, target));
  }
  return out;
}

// ------------------------------------------------------------ shipped groups

namespace {

Polynomial determinant(const PolyMatrix& x, const Ring& ring) {
  const std::size_t m = x.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring);
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) inversions += perm[a] > perm[b];
    Polynomial term(ring, inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < m; ++r) term *= x[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

PolyMatrix adjugate(const PolyMatrix& x, const Ring& ring) {
  const std::size_t m = x.size();
  PolyMatrix adj(m, std::vector<Polynomial>(m, Polynomial(ring)));
  if (m == 1) {
    adj[0][0] = Polynomial(ring, 1);
    return adj;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // adj_ij = (-1)^{i+j} det(minor without row j, column i)
      PolyMatrix minor;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == j) continue;
        minor.emplace_back();
        for (std::size_t c = 0; c < m; ++c)
          if (c != i) minor.back().push_back(x[r][c]);
      }
      Polynomial cof = determinant(minor, ring);
      adj[i][j] = (i + j) % 2 ? -cof : cof;
    }
  }
  return adj;
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "x_" + std::to_string(i + 1) + std::to_string(j + 1);
}

CommHopfSpec matrix_group_spec(std::size_t m, bool general) {
  if (m < 1 || m > 3)
    throw ValidationError("matrix size must be between 1 and 3, got " + std::to_string(m));
  CommHopfSpec spec;
  spec.name = (general ? "gl:" : "sl:") + std::to_string(m);
  MatrixShape shape;
  for (std::size_t i = 0; i < m; ++i) {
    shape.entries.emplace_back();
    for (std::size_t j = 0; j < m; ++j) {
      spec.variables.push_back(entry_name(i, j));
      shape.entries.back().push_back(entry_name(i, j));
    }
  }
  if (general) {
    spec.variables.push_back("t");
    shape.det_inverse = "t";
  }
  const Ring ring(spec.variables);
  PolyMatrix x(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      x[i].push_back(Polynomial::variable(ring, entry_name(i, j)));
  const Polynomial det = determinant(x, ring);
  const PolyMatrix adj = adjugate(x, ring);
  const Polynomial one(ring, 1);
  if (general) {
    const Polynomial t = Polynomial::variable(ring, "t");
    spec.ideal.push_back((t * det - one).to_string());
    spec.delta["t"] = "t' * t''";
    spec.epsilon["t"] = "1";
    spec.antipode["t"] = det.to_string();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        spec.antipode[entry_name(i, j)] = (adj[i][j] * t).to_string();
  } else {
    spec.ideal.push_back((det - one).to_string());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) spec.antipode[entry_name(i, j)] = adj[i][j].to_string();
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::string d;
      for (std::size_t k = 0; k < m; ++k) {
        if (k) d += " + ";
        d += entry_name(i, k) + "' * " + entry_name(k, j) + "''";
      }
      spec.delta[entry_name(i, j)] = d;
      spec.epsilon[entry_name(i, j)] = i == j ? "1" : "0";
    }
  }
  spec.matrix = std::move(shape);
  return spec;
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error("malformed target spec '" + std::string(spec) + "'");
  return value;
}

}  // namespace

PresentedCommHopf make_gl(std::size_t m) { return PresentedCommHopf(matrix_group_spec(m, true)); }
PresentedCommHopf make_sl(std::size_t m) { return PresentedCommHopf(matrix_group_spec(m, false)); }

PresentedCommHopf make_torus(std::size_t k) {
  if (k < 1) throw ValidationError("torus rank must be at least 1");
  CommHopfSpec spec;
  spec.name = "torus:" + std::to_string(k);
  MatrixShape shape;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string suffix = k == 1 ? "" : "_" + std::to_string(i + 1);
    const std::string z = "z" + suffix, t = "t" + suffix;
    spec.variables.push_back(z);
    spec.variables.push_back(t);
    spec.ideal.push_back(z + " * " + t + " - 1");
    spec.delta[z] = z + "' * " + z + "''";
    spec.delta[t] = t + "' * " + t + "''";
    spec.epsilon[z] = "1";
    spec.epsilon[t] = "1";
    spec.antipode[z] = t;
    spec.antipode[t] = z;
    shape.entries.emplace_back(k, "0");
    shape.entries.back()[i] = z;
  }
  spec.matrix = std::move(shape);
  return PresentedCommHopf(spec);
}

PresentedCommHopf make_additive() {
  CommHopfSpec spec;
  spec.name = "ga";
  spec.variables = {"a"};
  spec.delta["a"] = "a' + a''";
  spec.epsilon["a"] = "0";
  spec.antipode["a"] = "-a";
  spec.matrix = MatrixShape{{{"1", "a"}, {"0", "1"}}, std::nullopt};
  return PresentedCommHopf(spec);
}

PresentedCommHopf make_group(std::string_view spec) {
  if (spec == "ga") return make_additive();
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    auto kind = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    if (kind == "gl") return make_gl(parse_size(arg, spec));
    if (kind == "sl") return make_sl(parse_size(arg, spec));
    if (kind == "torus") return make_torus(parse_size(arg, spec));
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(spec), ec))
    return PresentedCommHopf::from_json(detail::read_file(std::string(spec)));
  throw Error("unknown target spec '" + std::string(spec) +
              "' (expected gl:m, sl:m, torus:k, ga or a JSON file)");
}

// ------------------------------------------------------------ matrices

PolyMatrix identity_matrix(const Ring& ring, std::size_t m) {
  PolyMatrix out(m, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t i = 0; i < m; ++i) out[i][i] = Polynomial(ring, 1);
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw MismatchError("matrix size mismatch");
  const Ring& ring = a.at(0).at(0).ring();
  PolyMatrix out(m, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

PolyMatrix matrix_word(const groups::FreeWord& w, const PresentedCommHopf& g,
                       const Ring& ring, std::size_t first_copy) {
  if (!g.matrix_shape()) throw MismatchError("group '" + g.name() + "' has no matrix shape");
  PolyMatrix out = identity_matrix(ring, g.matrix_shape()->size());
  std::map<std::pair<std::uint32_t, bool>, PolyMatrix> cache;
  for (const auto& letter : w.letters()) {
    auto key = std::make_pair(letter.generator, letter.inverse);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const std::size_t copy = first_copy + letter.generator;
      it = cache
               .emplace(key, letter.inverse ? g.antipode_matrix(copy, ring)
                                            : g.variable_matrix(copy, ring))
               .first;
    }
    out = multiply(out, it->second);
  }
  return out;
}

PolyMatrix matrix_word(const groups::FreeWord& w, const PresentedCommHopf& g) {
  return matrix_word(w, g, g.block_ring(1, w.rank()), 1);
}

Polynomial trace_of_word(const groups::FreeWord& w, const PresentedCommHopf& g,
                         const Ring& ring, std::size_t first_copy) {
  auto m = matrix_word(w, g, ring, first_copy);
  Polynomial tr(ring);
  for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
  return tr;
}

Polynomial trace_of_word(const groups::FreeWord& w, const PresentedCommHopf& g) {
  return trace_of_word(w, g, g.block_ring(1, w.rank()), 1);
}

// ------------------------------------------------------------ cotangent

CotangentResult cotangent_at_identity(const PresentedCommHopf& g) {
  const Ring& ring = g.ring();
  const std::size_t n = ring.size();
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.push_back(Polynomial::variable(ring, i) + Polynomial(ring, g.counit()[i]));
  CotangentResult out;
  for (const auto& gen : g.ideal().generators) {
    if (gen.is_zero()) continue;
    Polynomial linear = gen.substitute(shift, ring).homogeneous_part(1);
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i)
      row[i] = linear.coefficient_of(Monomial::variable(n, i));
    out.linear_parts.push_back(std::move(row));
  }
  auto kernel = poly::linear_kernel(out.linear_parts, n);
  out.dimension = kernel.dimension();
  out.tangent_basis = std::move(kernel.basis);
  return out;
}

// ------------------------------------------------------------ conjugation

Polynomial conjugation_substitution(const Polynomial& p, const PresentedCommHopf& g,
                                    std::size_t copies) {
  const Ring source = g.block_ring(1, copies);
  if (p.ring().names() != source.names())
    throw MismatchError("polynomial is not over copies 1.." + std::to_string(copies));
  const Ring target = g.block_ring(0, copies);
  const std::size_t n = g.ring().size();

  std::vector<Polynomial> a_vars, s_a;
  for (std::size_t i = 0; i < n; ++i) {
    a_vars.push_back(g.to_copy(Polynomial::variable(g.ring(), i), 0, target));
    s_a.push_back(g.to_copy(g.antipode()[i], 0, target));
  }
  std::vector<Polynomial> images;
  for (std::size_t c = 1; c <= copies; ++c) {
    std::vector<Polynomial> x_then_sa;
    for (std::size_t i = 0; i < n; ++i)
      x_then_sa.push_back(g.to_copy(Polynomial::variable(g.ring(), i), c, target));
    x_then_sa.insert(x_then_sa.end(), s_a.begin(), s_a.end());
    // Leg images (A, Delta(.)(X, S(A))) for the outer comultiplication.
    std::vector<Polynomial> outer = a_vars;
    for (std::size_t i = 0; i < n; ++i)
      outer.push_back(g.comultiplication()[i].substitute(x_then_sa, target));
    for (std::size_t i = 0; i < n; ++i)
      images.push_back(g.comultiplication()[i].substitute(outer, target));
  }
  return p.embed_into(source).substitute(images, target);
}

}  // namespace hopfrep::alg
