#include "maxcms/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "maxcms/errors.hpp"

namespace maxcms {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Rational read_number(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw ParseError(std::string(what) + " must be a decimal or p/q string");
}

std::vector<std::string> read_string_list(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(require_string(e, what));
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& key,
                   const char* what) {
  auto it = index.find(key);
  if (it == index.end()) throw ParseError(std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      throw ParseError(std::string("duplicate ") + what + " '" + names[i] + "'");
  return index;
}

std::vector<IndexPair> read_pairs(const json& v, const std::map<std::string, std::size_t>& index,
                                  const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " pairs must be an array");
  std::vector<IndexPair> pairs;
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) throw ParseError(std::string(what) + " pair must have two entries");
    pairs.emplace_back(lookup(index, require_string(p[0], what), what),
                       lookup(index, require_string(p[1], what), what));
  }
  return pairs;
}

Preorder read_object_order(const json& node, const std::vector<std::string>& ids) {
  const auto index = index_of(ids, "object id");
  const std::string kind = require_string(require(node, "kind", "object_order"), "object_order.kind");
  if (kind == "pairs") {
    auto pairs = read_pairs(require(node, "pairs", "object_order"), index, "object");
    return transitive_closure(pairs, ids.size());
  }
  if (kind == "vectors") {
    const json& vectors = require(node, "vectors", "object_order");
    if (!vectors.is_object()) throw ParseError("object_order.vectors must map ids to vectors");
    std::vector<std::vector<Rational>> coords(ids.size());
    std::optional<std::size_t> dim;
    for (auto it = vectors.begin(); it != vectors.end(); ++it) {
      std::size_t i = lookup(index, it.key(), "object");
      if (!it.value().is_array()) throw ParseError("object vector must be an array");
      for (const auto& c : it.value()) coords[i].push_back(read_number(c, "vector coordinate"));
      if (dim && *dim != coords[i].size()) throw ParseError("object vectors differ in length");
      dim = coords[i].size();
    }
    if (vectors.size() != ids.size()) throw ParseError("every object needs a vector");
    Relation leq(ids.size());
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = 0; b < ids.size(); ++b) {
        bool below = true;
        for (std::size_t k = 0; k < coords[a].size() && below; ++k) below = coords[a][k] <= coords[b][k];
        leq.set(a, b, below);
      }
    return Preorder::from_relation(std::move(leq));
  }
  throw ParseError("unknown object_order kind '" + kind + "'");
}

std::vector<std::size_t> read_chain(const json& v, const std::map<std::string, std::size_t>& index) {
  std::vector<std::size_t> chain;
  for (const auto& name : read_string_list(v, "chain entry")) chain.push_back(lookup(index, name, "label"));
  return chain;
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Instance parse_instance(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
    const json& objs = require(doc, "objects", "instance");
    if (!objs.is_array()) throw ParseError("\"objects\" must be an array");
    const json& lo = require(doc, "label_order", "instance");
    const std::string kind = require_string(require(lo, "kind", "label_order"), "label_order.kind");

    std::vector<std::string> labels;
    if (doc.contains("labels"))
      labels = read_string_list(doc.at("labels"), "labels");
    else if (kind == "total")
      labels = read_string_list(require(lo, "chain", "label_order"), "chain");
    else if (kind == "realizer2") {
      const json& chains = require(lo, "chains", "label_order");
      if (!chains.is_array() || chains.empty()) throw ParseError("label_order.chains must be a non-empty array");
      labels = read_string_list(chains[0], "chain");
    } else if (kind == "pairs")
      labels = read_string_list(require(lo, "labels", "label_order"), "labels");
    else
      throw ParseError("unknown label_order kind '" + kind + "'");
    const auto label_index = index_of(labels, "label");

    std::optional<TotalOrderRealizer> realizer;
    Poset label_order;
    if (kind == "total") {
      realizer = TotalOrderRealizer::create({read_chain(require(lo, "chain", "label_order"), label_index)});
      label_order = realizer->intersection();
    } else if (kind == "realizer2") {
      const json& chains = require(lo, "chains", "label_order");
      if (!chains.is_array() || chains.size() != 2) throw ParseError("realizer2 needs exactly two chains");
      realizer = TotalOrderRealizer::create(
          {read_chain(chains[0], label_index), read_chain(chains[1], label_index)});
      label_order = realizer->intersection();
    } else {
      auto pairs = read_pairs(require(lo, "pairs", "label_order"), label_index, "label");
      label_order = Poset::from_preorder(transitive_closure(pairs, labels.size()));
    }

    std::vector<Object> objects;
    std::vector<std::string> ids;
    for (const auto& o : objs) {
      Object obj;
      obj.id = require_string(require(o, "id", "object"), "object id");
      obj.weight = read_number(require(o, "weight", "object"), "weight");
      obj.label = lookup(label_index, require_string(require(o, "label", "object"), "object label"), "label");
      ids.push_back(obj.id);
      objects.push_back(std::move(obj));
    }
    Preorder object_order = read_object_order(require(doc, "object_order", "instance"), ids);
    return Instance::create(std::move(objects), std::move(object_order), std::move(labels),
                            std::move(label_order), std::move(realizer));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return parse_instance(doc);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

json instance_to_json(const Instance& inst) {
  json doc;
  doc["labels"] = inst.labels();
  json objs = json::array();
  for (const auto& o : inst.objects())
    objs.push_back({{"id", o.id}, {"weight", rational_json(o.weight)}, {"label", inst.labels()[o.label]}});
  doc["objects"] = std::move(objs);

  // Cover pairs of the preorder: strict pairs not implied through a third element.
  const Preorder& order = inst.object_order();
  json pairs = json::array();
  for (std::size_t a = 0; a < inst.size(); ++a)
    for (std::size_t b = 0; b < inst.size(); ++b) {
      if (a == b || !order.leq(a, b)) continue;
      bool implied = false;
      for (std::size_t c = 0; c < inst.size() && !implied; ++c)
        implied = c != a && c != b && order.leq(a, c) && order.leq(c, b) &&
                  !(order.leq(c, a) || order.leq(b, c));
      if (!implied) pairs.push_back({inst.object(a).id, inst.object(b).id});
    }
  doc["object_order"] = {{"kind", "pairs"}, {"pairs", std::move(pairs)}};

  auto chain_names = [&](const std::vector<std::size_t>& chain) {
    json names = json::array();
    for (std::size_t l : chain) names.push_back(inst.labels()[l]);
    return names;
  };
  const auto& realizer = inst.realizer();
  if (realizer && realizer->dimension() == 1) {
    doc["label_order"] = {{"kind", "total"}, {"chain", chain_names(realizer->chains()[0])}};
  } else if (realizer && realizer->dimension() == 2) {
    doc["label_order"] = {{"kind", "realizer2"},
                          {"chains", json::array({chain_names(realizer->chains()[0]), chain_names(realizer->chains()[1])})}};
  } else {
    json lpairs = json::array();
    for (auto [a, b] : inst.label_order().cover_pairs())
      lpairs.push_back({inst.labels()[a], inst.labels()[b]});
    doc["label_order"] = {{"kind", "pairs"}, {"labels", inst.labels()}, {"pairs", std::move(lpairs)}};
  }
  return doc;
}

std::string dump_document(const json& doc) {
  return doc.dump(2) + "\n";
}

SolutionFile make_solution(const Instance& inst, std::string algorithm,
                           const std::vector<std::size_t>& kept, std::optional<ApproxReport> approx) {
  if (!is_acceptable(inst, kept)) throw NotAcceptable("solver returned a non-acceptable set");
  SolutionFile s;
  s.algorithm = std::move(algorithm);
  std::vector<bool> in(inst.size(), false);
  for (std::size_t i : kept) in[i] = true;
  s.kept_weight = 0;
  s.removed_weight = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (in[i]) {
      s.kept.push_back(inst.object(i).id);
      s.kept_weight += inst.weight(i);
    } else {
      s.removed.push_back(inst.object(i).id);
      s.removed_weight += inst.weight(i);
    }
  }
  s.total_weight = s.kept_weight + s.removed_weight;
  s.approx = std::move(approx);
  return s;
}

json solution_to_json(const SolutionFile& s) {
  json doc;
  doc["algorithm"] = s.algorithm;
  doc["kept"] = s.kept;
  doc["removed"] = s.removed;
  doc["kept_weight"] = rational_json(s.kept_weight);
  doc["removed_weight"] = rational_json(s.removed_weight);
  doc["total_weight"] = rational_json(s.total_weight);
  if (s.approx) {
    const ApproxReport& r = *s.approx;
    json a;
    a["W"] = rational_json(r.total_weight);
    a["alpha"] = rational_json(r.alpha);
    a["epsilon"] = rational_json(r.epsilon);
    a["gap"] = rational_json(r.gap);
    a["bound"] = rational_json(r.bound);
    a["kept_weight"] = rational_json(r.kept_weight);
    a["iterations"] = r.iterations;
    if (r.optimum) {
      a["optimum"] = rational_json(*r.optimum);
      a["alpha_prime"] = rational_json(*r.alpha_prime);
      a["delta"] = rational_json(*r.delta);
      a["within_bound"] = *r.within_bound;
      a["within_quarter"] = *r.within_quarter;
      if (r.within_ratio) a["within_ratio"] = *r.within_ratio;
    }
    doc["approx"] = std::move(a);
  }
  return doc;
}

SolutionFile parse_solution(const json& doc) {
  try {
    SolutionFile s;
    s.algorithm = require_string(require(doc, "algorithm", "solution"), "algorithm");
    s.kept = read_string_list(require(doc, "kept", "solution"), "kept");
    s.removed = read_string_list(require(doc, "removed", "solution"), "removed");
    s.kept_weight = read_number(require(doc, "kept_weight", "solution"), "kept_weight");
    s.removed_weight = read_number(require(doc, "removed_weight", "solution"), "removed_weight");
    s.total_weight = read_number(require(doc, "total_weight", "solution"), "total_weight");
    if (doc.contains("approx")) {
      const json& a = doc.at("approx");
      ApproxReport r;
      r.total_weight = read_number(require(a, "W", "approx"), "W");
      r.alpha = read_number(require(a, "alpha", "approx"), "alpha");
      r.epsilon = read_number(require(a, "epsilon", "approx"), "epsilon");
      r.gap = read_number(require(a, "gap", "approx"), "gap");
      r.bound = read_number(require(a, "bound", "approx"), "bound");
      r.kept_weight = read_number(require(a, "kept_weight", "approx"), "kept_weight");
      r.removed_weight = r.total_weight - r.kept_weight;
      r.iterations = require(a, "iterations", "approx").get<std::size_t>();
      if (a.contains("optimum")) {
        r.optimum = read_number(a.at("optimum"), "optimum");
        r.alpha_prime = read_number(require(a, "alpha_prime", "approx"), "alpha_prime");
        r.delta = read_number(require(a, "delta", "approx"), "delta");
        r.within_bound = require(a, "within_bound", "approx").get<bool>();
        r.within_quarter = require(a, "within_quarter", "approx").get<bool>();
        if (a.contains("within_ratio")) r.within_ratio = a.at("within_ratio").get<bool>();
      }
      s.approx = r;
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace maxcms
