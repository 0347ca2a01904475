#include "lcaforge/dot.hpp"

#include <sstream>

namespace lcaforge {

namespace {

std::string vertex_label(const Dag& g, VertexId v) {
  const DagVertex& dv = g.vertex(v);
  if (dv.taxon) return g.universe().label(*dv.taxon);
  if (dv.added_root) return "rho";
  if (dv.extension_pair) return "ext:" + g.universe().pair_name(*dv.extension_pair);
  if (!dv.class_pairs.empty()) {
    std::string s = "{";
    for (std::size_t i = 0; i < dv.class_pairs.size(); ++i) {
      if (i) s += ",";
      s += g.universe().pair_name(g.universe().pair_at(dv.class_pairs[i]));
    }
    return s + "}";
  }
  return "v" + std::to_string(v);
}

}  // namespace

std::string emit_dot(const Dag& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [";
    if (g.vertex(v).taxon) out << "shape=box, ";
    out << "label=\"" << vertex_label(g, v) << "\"];\n";
  }
  for (auto [from, to] : g.arcs()) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lcaforge
