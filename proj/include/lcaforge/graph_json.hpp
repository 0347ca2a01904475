#pragma once

#include "json.hpp"
#include "lcaforge/dag.hpp"

namespace lcaforge {

// Graph wire format: {"vertices":[{"id":0,"label":"x"},...],"arcs":[[4,0],...]}.
// Labels appear exactly on leaves and name their taxon.
nlohmann::json dag_to_json(const Dag& g);

// Accepts arbitrary unique integer ids. Throws std::invalid_argument on a
// malformed graph (bad ids, cycles, mislabeled leaves, leaf set != X).
Dag dag_from_json(const nlohmann::json& j, const Universe& universe);

}  // namespace lcaforge
