#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lcaforge {

// Unordered pair {lo,hi} of taxon indices, canonicalized so lo <= hi.
// lo == hi encodes the singleton {a}.
struct TaxonPair {
  int lo = 0;
  int hi = 0;

  static TaxonPair of(int a, int b) {
    return a <= b ? TaxonPair{a, b} : TaxonPair{b, a};
  }
  bool singleton() const { return lo == hi; }
  auto operator<=>(const TaxonPair&) const = default;
};

// An LCA-constraint (lower, upper): lca(lower) lies below lca(upper).
struct Constraint {
  TaxonPair lower;
  TaxonPair upper;
  auto operator<=>(const Constraint&) const = default;
};

// The taxon set X. Labels are unique and ordered lexicographically; the
// position in that order is the taxon index used throughout. Also owns the
// dense index over all 1- and 2-element subsets of X ("pairs"): pairs are
// ordered lexicographically by (lo,hi), so aa < ab < ax < ... < bb < ...
class Universe {
 public:
  Universe() = default;
  // Sorts and deduplicates; throws std::invalid_argument if empty.
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int pair_count() const { return size() * (size() + 1) / 2; }

  const std::string& label(int taxon) const { return labels_[taxon]; }
  std::optional<int> find(std::string_view label) const;

  int pair_index(TaxonPair p) const {
    int n = size();
    return p.lo * n - p.lo * (p.lo - 1) / 2 + (p.hi - p.lo);
  }
  TaxonPair pair_at(int idx) const { return pairs_[idx]; }

  // Display form of a pair, e.g. "xy" or "aa".
  std::string pair_name(TaxonPair p) const;
  // Display form of a constraint in the problem-file syntax, "x y < a b".
  std::string constraint_name(const Constraint& c) const;

  bool operator==(const Universe& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<TaxonPair> pairs_;
};

}  // namespace lcaforge
