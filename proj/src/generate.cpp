#include "maxcms/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "maxcms/errors.hpp"
#include "maxcms/io.hpp"

namespace maxcms {

using nlohmann::json;

json random_instance_document(const RandomInstanceParams& params, std::uint64_t seed) {
  if (params.objects == 0) throw InvalidInput("random instance needs at least one object");
  if (params.labels == 0) throw InvalidInput("random instance needs at least one label");
  if (params.dimension != 1 && params.dimension != 2) throw InvalidInput("dimension must be 1 or 2");
  if (params.coordinates == 0 || params.coordinate_range == 0)
    throw InvalidInput("coordinates and coordinate range must be positive");
  if (params.noise < 0 || params.noise > 1) throw InvalidInput("noise must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t l = 0; l < params.labels; ++l) labels.push_back("L" + std::to_string(l + 1));

  // Chain 0 is the label index order; chain 1 (dimension 2) a random permutation.
  std::vector<std::size_t> chain0(params.labels);
  std::iota(chain0.begin(), chain0.end(), 0);
  std::vector<std::size_t> chain1 = chain0;
  std::shuffle(chain1.begin(), chain1.end(), rng);

  std::uniform_int_distribution<std::size_t> coord(0, params.coordinate_range - 1);
  std::uniform_int_distribution<std::size_t> any_label(0, params.labels - 1);
  std::uniform_int_distribution<int> numerator(1, 9), denominator(1, 4);
  std::bernoulli_distribution flip(params.noise);

  const std::size_t max_score = params.coordinates * (params.coordinate_range - 1);
  json objects = json::array();
  json vectors = json::object();
  for (std::size_t i = 0; i < params.objects; ++i) {
    std::string id = "o" + std::to_string(i + 1);
    json vec = json::array();
    std::size_t score = 0;
    for (std::size_t k = 0; k < params.coordinates; ++k) {
      std::size_t c = coord(rng);
      score += c;
      vec.push_back(std::to_string(c));
    }
    std::size_t label = max_score == 0 ? 0 : score * params.labels / (max_score + 1);
    if (flip(rng)) label = any_label(rng);
    Rational w(numerator(rng), denominator(rng));
    w.canonicalize();
    objects.push_back({{"id", id}, {"weight", to_string(w)}, {"label", labels[label]}});
    vectors[id] = std::move(vec);
  }

  auto names = [&](const std::vector<std::size_t>& chain) {
    json out = json::array();
    for (std::size_t l : chain) out.push_back(labels[l]);
    return out;
  };
  json doc;
  doc["labels"] = labels;
  doc["objects"] = std::move(objects);
  doc["object_order"] = {{"kind", "vectors"}, {"vectors", std::move(vectors)}};
  if (params.dimension == 1)
    doc["label_order"] = {{"kind", "total"}, {"chain", names(chain0)}};
  else
    doc["label_order"] = {{"kind", "realizer2"}, {"chains", json::array({names(chain0), names(chain1)})}};
  return doc;
}

json gadget_document(const Cnf3& f) {
  return instance_to_json(gadget_to_instance(build_gadget(f)));
}

}  // namespace maxcms
