#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcaforge/relation.hpp"

namespace testsupport {

// Universe with one single-letter taxon per character.
inline lcaforge::Universe U(const std::string& letters) {
  std::vector<std::string> labels;
  for (char c : letters) labels.push_back(std::string(1, c));
  return lcaforge::Universe(labels);
}

// Pair from a two-letter string, e.g. "xy" or "aa".
inline lcaforge::TaxonPair P(const lcaforge::Universe& u, const std::string& s) {
  return lcaforge::TaxonPair::of(*u.find(s.substr(0, 1)), *u.find(s.substr(1, 2)));
}

inline lcaforge::Constraint C(const lcaforge::Universe& u, const std::string& lower,
                              const std::string& upper) {
  return lcaforge::Constraint{P(u, lower), P(u, upper)};
}

inline lcaforge::Relation R(const lcaforge::Universe& u,
                            std::initializer_list<std::pair<const char*, const char*>> cs) {
  lcaforge::Relation rel(u);
  for (auto [lo, up] : cs) rel.add(C(u, lo, up));
  return rel;
}

struct RandomInstance {
  lcaforge::Universe universe;
  lcaforge::Relation required;
  lcaforge::Relation forbidden;

  RandomInstance(lcaforge::Universe u, lcaforge::Relation r, lcaforge::Relation f)
      : universe(std::move(u)), required(std::move(r)), forbidden(std::move(f)) {}
};

// Seed-deterministic instance: 1..max_taxa single-letter taxa, up to max_r
// required and max_f forbidden constraints over uniformly random pairs.
inline RandomInstance random_instance(std::uint64_t seed, int max_taxa = 5,
                                      int max_r = 8, int max_f = 8) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  int n = 1 + pick(max_taxa);
  std::string letters;
  for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('a' + i));
  lcaforge::Universe u = U(letters);
  lcaforge::Relation r(u);
  lcaforge::Relation f(u);
  int nr = pick(max_r + 1);
  int nf = pick(max_f + 1);
  for (int i = 0; i < nr; ++i) r.add(pick(u.pair_count()), pick(u.pair_count()));
  for (int i = 0; i < nf; ++i) f.add(pick(u.pair_count()), pick(u.pair_count()));
  return RandomInstance(std::move(u), std::move(r), std::move(f));
}

}  // namespace testsupport
