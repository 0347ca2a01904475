#pragma once

#include <string>

#include "lcaforge/dag.hpp"

namespace lcaforge {

// Deterministic DOT rendering: leaves as label-named boxes, canonical-class
// vertices labeled by their sorted members ("{ab,xz}"), extension vertices as
// "ext:xy" and a synthetic root as "rho". Vertices and arcs are emitted in
// sorted order, so output is bit-exact across runs.
std::string emit_dot(const Dag& g);

}  // namespace lcaforge
