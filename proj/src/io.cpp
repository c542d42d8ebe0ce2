#include "gtensor/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gtensor::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) malformed(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<LabelPair> label_pairs(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of pairs");
  std::vector<LabelPair> out;
  for (const auto& p : j) {
    const auto ends = strings(p, what);
    if (ends.size() != 2) malformed(std::string(what) + " entries must have two endpoints");
    out.emplace_back(ends[0], ends[1]);
  }
  return out;
}

Json pair_array(const Graph& g, const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back({g.label(u), g.label(v)});
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.labels();
  j["edges"] = pair_array(g, g.edges());
  j["loops_allowed"] = g.loops_allowed();
  return j;
}

Graph graph_from_json(const Json& j) {
  const auto vertices = strings(field(j, "vertices"), "vertices");
  const auto edges = j.contains("edges") ? label_pairs(j.at("edges"), "edges") : std::vector<LabelPair>{};
  bool loops = std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
  if (j.contains("loops_allowed")) {
    if (!j.at("loops_allowed").is_boolean()) malformed("loops_allowed must be a boolean");
    loops = j.at("loops_allowed").get<bool>();
  }
  return Graph::make(vertices, edges, loops);
}

Json family_to_json(const GraphFamily& fam) {
  Json j;
  j["index"] = fam.index();
  Json factors = Json::object();
  for (std::size_t i = 0; i < fam.size(); ++i) factors[fam.index_label(i)] = graph_to_json(fam.factor(i));
  j["factors"] = factors;
  if (const auto order = fam.order()) {
    Json o = Json::array();
    for (std::size_t i : *order) o.push_back(fam.index_label(i));
    j["order"] = o;
  }
  if (const auto d = fam.distinguished()) {
    Json o = Json::array();
    for (std::size_t i : d->members()) o.push_back(fam.index_label(i));
    j["D"] = o;
  }
  return j;
}

GraphFamily family_from_json(const Json& j) {
  const auto index = strings(field(j, "index"), "index");
  const Json& factors = field(j, "factors");
  std::vector<Graph> graphs;
  for (const auto& i : index) graphs.push_back(graph_from_json(field(factors, i.c_str())));
  std::optional<std::vector<std::string>> order, d;
  if (j.contains("order")) order = strings(j.at("order"), "order");
  if (j.contains("D")) d = strings(j.at("D"), "D");
  return GraphFamily::make(index, std::move(graphs), order, d);
}

Json congruence_to_json(const Congruence& c) {
  const Congruence canon = c.canonical();
  Json j;
  j["graph"] = graph_to_json(canon.base);
  Json classes = Json::array();
  for (const auto& cls : canon.classes) {
    Json members = Json::array();
    for (std::size_t v : cls) members.push_back(canon.base.label(v));
    classes.push_back(members);
  }
  j["classes"] = classes;
  j["ehat"] = pair_array(canon.base, canon.ehat);
  return j;
}

Congruence congruence_from_json(const Json& j) {
  Congruence c{graph_from_json(field(j, "graph")), {}, {}};
  const Json& classes = field(j, "classes");
  if (!classes.is_array()) malformed("classes must be an array");
  for (const auto& cls : classes) {
    std::vector<std::size_t> members;
    for (const auto& label : strings(cls, "classes")) members.push_back(c.base.index_of(label));
    c.classes.push_back(std::move(members));
  }
  for (const auto& [a, b] : label_pairs(field(j, "ehat"), "ehat")) {
    c.ehat.push_back(make_edge(c.base.index_of(a), c.base.index_of(b)));
  }
  return c;
}

Json hom_family_to_json(const HomFamily& hf) {
  Json j;
  j["index"] = hf.source().index();
  j["G"] = family_to_json(hf.source());
  j["H"] = family_to_json(hf.target());
  Json homs = Json::object();
  for (std::size_t i = 0; i < hf.source().size(); ++i) {
    const VertexMap& m = hf.hom(i);
    Json assignment = Json::object();
    for (std::size_t v = 0; v < m.domain.order(); ++v) assignment[m.domain.label(v)] = m.codomain.label(m.image[v]);
    homs[hf.source().index_label(i)] = assignment;
  }
  j["homs"] = homs;
  return j;
}

HomFamily hom_family_from_json(const Json& j) {
  GraphFamily source = family_from_json(field(j, "G"));
  GraphFamily target = family_from_json(field(j, "H"));
  if (target.index() != source.index() ||
      (j.contains("index") && strings(j.at("index"), "index") != source.index())) {
    malformed("G, H and index must share the index list");
  }
  const Json& homs = field(j, "homs");
  std::vector<VertexMap> maps;
  for (std::size_t i = 0; i < source.size(); ++i) {
    const Json& assignment = field(homs, source.index_label(i).c_str());
    if (!assignment.is_object()) malformed("each hom must be an object of label pairs");
    std::map<std::string, std::string, std::less<>> labels;
    for (const auto& [k, v] : assignment.items()) {
      if (!v.is_string()) malformed("hom images must be strings");
      labels.emplace(k, v.get<std::string>());
    }
    maps.push_back(VertexMap::from_labels(source.factor(i), target.factor(i), labels));
  }
  return HomFamily::make(std::move(source), std::move(target), std::move(maps));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json(text.str());
}

std::string to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (const auto& label : g.labels()) out += "  " + quoted(label) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
  return out + "}\n";
}

}  // namespace gtensor::io
