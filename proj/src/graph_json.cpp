#include "lcaforge/graph_json.hpp"

#include <map>
#include <stdexcept>

namespace lcaforge {

using nlohmann::json;

json dag_to_json(const Dag& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json jv;
    jv["id"] = v;
    if (auto t = g.vertex(v).taxon) jv["label"] = g.universe().label(*t);
    vertices.push_back(std::move(jv));
  }
  json arcs = json::array();
  for (auto [from, to] : g.arcs()) arcs.push_back(json::array({from, to}));
  return json{{"vertices", std::move(vertices)}, {"arcs", std::move(arcs)}};
}

Dag dag_from_json(const json& j, const Universe& universe) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw std::invalid_argument("graph json needs 'vertices' and 'arcs'");

  std::map<long long, VertexId> remap;
  std::vector<DagVertex> verts;
  for (const auto& jv : j.at("vertices")) {
    if (!jv.is_object() || !jv.contains("id") || !jv.at("id").is_number_integer())
      throw std::invalid_argument("vertex needs an integer 'id'");
    long long id = jv.at("id").get<long long>();
    if (remap.count(id)) throw std::invalid_argument("duplicate vertex id");
    remap[id] = static_cast<VertexId>(verts.size());
    DagVertex v;
    if (jv.contains("label")) {
      auto taxon = universe.find(jv.at("label").get<std::string>());
      if (!taxon)
        throw std::invalid_argument("label '" + jv.at("label").get<std::string>() +
                                    "' is not a taxon");
      v.taxon = *taxon;
    }
    verts.push_back(std::move(v));
  }

  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (const auto& ja : j.at("arcs")) {
    if (!ja.is_array() || ja.size() != 2)
      throw std::invalid_argument("arc must be a [from,to] pair");
    auto from = remap.find(ja.at(0).get<long long>());
    auto to = remap.find(ja.at(1).get<long long>());
    if (from == remap.end() || to == remap.end())
      throw std::invalid_argument("arc references an unknown vertex id");
    arcs.push_back({from->second, to->second});
  }
  return Dag::from_parts(universe, std::move(verts), std::move(arcs));
}

}  // namespace lcaforge
