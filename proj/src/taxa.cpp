#include "lcaforge/taxa.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcaforge {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.empty()) throw std::invalid_argument("taxon set must be non-empty");
  for (int i = 0; i < size(); ++i) index_[labels_[i]] = i;
  pairs_.reserve(pair_count());
  for (int lo = 0; lo < size(); ++lo)
    for (int hi = lo; hi < size(); ++hi) pairs_.push_back(TaxonPair{lo, hi});
}

std::optional<int> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Universe::pair_name(TaxonPair p) const {
  return label(p.lo) + label(p.hi);
}

std::string Universe::constraint_name(const Constraint& c) const {
  return label(c.lower.lo) + " " + label(c.lower.hi) + " < " + label(c.upper.lo) +
         " " + label(c.upper.hi);
}

}  // namespace lcaforge
