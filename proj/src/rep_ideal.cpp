#include "hopfrep/repvariety.hpp"
#include "json.hpp"

namespace hopfrep::rep {

namespace {

std::string provenance_json(const Ring& ring, const Ideal& ideal,
                            const std::vector<ProvenanceNote>& notes) {
  nlohmann::ordered_json j;
  j["variables"] = ring.names();
  auto& gens = j["ideal"] = nlohmann::ordered_json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  auto& prov = j["provenance"] = nlohmann::ordered_json::array();
  for (const auto& n : notes)
    prov.push_back({{"generator_index", n.generator_index}, {"source", n.source}});
  return j.dump(2);
}

}  // namespace

std::string RepIdealPresentation::to_json() const {
  return provenance_json(ring, ideal, provenance);
}

std::string LieRepIdealPresentation::to_json() const {
  return provenance_json(ring, ideal, provenance);
}

RepIdealPresentation rep_ideal(const GroupPresentation& group,
                               const PresentedCommHopf& target, MonomialOrder order) {
  if (!target.matrix_shape())
    throw MismatchError("target '" + target.name() + "' has no matrix shape");
  const std::size_t n = group.rank();
  RepIdealPresentation out{group, target, target.block_ring(1, n, order), Ideal(Ring()), {}};
  out.ideal = Ideal(out.ring);
  auto push = [&](Polynomial p, std::string source) {
    out.provenance.push_back({out.ideal.generators.size(), std::move(source)});
    out.ideal.generators.push_back(std::move(p));
  };
  for (std::size_t c = 1; c <= n; ++c)
    for (auto& g : target.copy_ideal(c, out.ring)) push(std::move(g), "copy_ideal:" + std::to_string(c));

  const std::size_t m = target.matrix_shape()->size();
  for (std::size_t i = 0; i < group.relators.size(); ++i) {
    auto word = alg::matrix_word(group.relators[i], target, out.ring, 1);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        Polynomial entry = word[r][c];
        if (r == c) entry -= Polynomial(out.ring, 1);
        // Entries that vanish identically impose nothing.
        if (entry.is_zero()) continue;
        push(std::move(entry), "relator:" + std::to_string(i) + ":entry:" +
                                   std::to_string(r + 1) + "," + std::to_string(c + 1));
      }
    }
  }
  return out;
}

LieRepIdealPresentation lie_rep_ideal(const LiePresentation& source,
                                      const LieAlgebraData& target) {
  const std::size_t n = source.rank(), d = target.dimension();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= d; ++k)
      names.push_back("y" + std::to_string(i) + "_" + std::to_string(k));
  Ring ring(std::move(names));
  LieRepIdealPresentation out{source, target, ring, Ideal(ring), {}};

  std::vector<std::vector<Polynomial>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) images[i].push_back(Polynomial::variable(ring, i * d + k));

  for (std::size_t r = 0; r < source.relators.size(); ++r) {
    auto value = source.relators[r].evaluate(images, target, ring);
    for (std::size_t k = 0; k < d; ++k) {
      if (value[k].is_zero()) continue;
      out.provenance.push_back({out.ideal.generators.size(),
                                "relator:" + std::to_string(r) + ":component:" +
                                    std::to_string(k + 1)});
      out.ideal.generators.push_back(std::move(value[k]));
    }
  }
  return out;
}

}  // namespace hopfrep::rep
