#include "lcaforge/closure_oracle.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

namespace lcaforge {

namespace {

// Relation on at most 32 local pairs, one uint32 row per lower pair.
using Small = std::vector<std::uint32_t>;

struct Context {
  int k = 0;
  std::vector<TaxonPair> pair_of;  // local index -> taxa
  Small base;                      // r restricted to supp_plus, plus the diagonal
  Small forbidden;                 // f restricted to supp_plus
};

bool is_transitive(const Small& s, int k) {
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if ((s[p] >> q) & 1u)
        if (s[q] & ~s[p]) return false;
  return true;
}

// Direct reading of the cross-consistency rule: for every upper u, collect
// the taxa occurring in some lower of u; every support pair whose two taxa
// are both collected must itself be a lower of u.
bool is_cross_consistent(const Context& ctx, const Small& s) {
  std::uint32_t supp = 0;
  for (int p = 0; p < ctx.k; ++p) {
    if (s[p]) supp |= 1u << p;
    supp |= s[p];
  }
  for (int u = 0; u < ctx.k; ++u) {
    std::uint64_t covered = 0;
    for (int p = 0; p < ctx.k; ++p)
      if ((s[p] >> u) & 1u)
        covered |= (1ull << ctx.pair_of[p].lo) | (1ull << ctx.pair_of[p].hi);
    if (!covered) continue;
    for (int ab = 0; ab < ctx.k; ++ab) {
      if (!((supp >> ab) & 1u)) continue;
      TaxonPair t = ctx.pair_of[ab];
      if (((covered >> t.lo) & 1u) && ((covered >> t.hi) & 1u))
        if (!((s[ab] >> u) & 1u)) return false;
    }
  }
  return true;
}

bool is_fcsym(const Context& ctx, const Small& s) {
  for (int p = 0; p < ctx.k; ++p)
    for (int q = 0; q < ctx.k; ++q)
      if (((ctx.forbidden[p] >> q) & 1u) && ((s[p] >> q) & 1u))
        if (!((s[q] >> p) & 1u)) return false;
  return true;
}

bool is_member(const Context& ctx, const Small& s) {
  for (int p = 0; p < ctx.k; ++p)
    if (ctx.base[p] & ~s[p]) return false;  // must contain r and the diagonal
  return is_transitive(s, ctx.k) && is_cross_consistent(ctx, s) && is_fcsym(ctx, s);
}

// Rescan-based fixpoint of the rules, used only to prune the enumeration.
Small close_naive(const Context& ctx, Small s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < ctx.k; ++p)
      for (int q = 0; q < ctx.k; ++q)
        if ((s[p] >> q) & 1u) {
          std::uint32_t more = s[q] & ~s[p];
          if (more) {
            s[p] |= more;
            changed = true;
          }
        }
    std::uint32_t supp = 0;
    for (int p = 0; p < ctx.k; ++p) {
      if (s[p]) supp |= 1u << p;
      supp |= s[p];
    }
    for (int u = 0; u < ctx.k; ++u) {
      std::uint64_t covered = 0;
      for (int p = 0; p < ctx.k; ++p)
        if ((s[p] >> u) & 1u)
          covered |= (1ull << ctx.pair_of[p].lo) | (1ull << ctx.pair_of[p].hi);
      if (!covered) continue;
      for (int ab = 0; ab < ctx.k; ++ab) {
        if (!((supp >> ab) & 1u) || ((s[ab] >> u) & 1u)) continue;
        TaxonPair t = ctx.pair_of[ab];
        if (((covered >> t.lo) & 1u) && ((covered >> t.hi) & 1u)) {
          s[ab] |= 1u << u;
          changed = true;
        }
      }
    }
    for (int p = 0; p < ctx.k; ++p) {
      std::uint32_t hits = ctx.forbidden[p] & s[p];
      while (hits) {
        int q = __builtin_ctz(hits);
        hits &= hits - 1;
        if (!((s[q] >> p) & 1u)) {
          s[q] |= 1u << p;
          changed = true;
        }
      }
    }
  }
  return s;
}

bool hits(const Small& a, const Small& b, int k) {
  for (int p = 0; p < k; ++p)
    if (a[p] & b[p]) return true;
  return false;
}

// Enumerates every closed superset of `in` avoiding `out`, intersecting each
// into `inter`. Each closed relation is reached exactly once.
void enumerate_closed(const Context& ctx, const Small& in, Small out, Small& inter,
                      long& found) {
  Small cl = close_naive(ctx, in);
  if (hits(cl, out, ctx.k)) return;
  std::uint32_t full_row = ctx.k == 32 ? ~0u : ((1u << ctx.k) - 1u);
  int cell_p = -1, cell_q = -1;
  for (int p = 0; p < ctx.k && cell_p < 0; ++p) {
    std::uint32_t undecided = full_row & ~cl[p] & ~out[p];
    if (undecided) {
      cell_p = p;
      cell_q = __builtin_ctz(undecided);
    }
  }
  if (cell_p < 0) {
    for (int p = 0; p < ctx.k; ++p) inter[p] &= cl[p];
    ++found;
    return;
  }
  Small with = cl;
  with[cell_p] |= 1u << cell_q;
  enumerate_closed(ctx, with, out, inter, found);
  out[cell_p] |= 1u << cell_q;
  enumerate_closed(ctx, cl, out, inter, found);
}

}  // namespace

std::optional<Relation> oracle_cl_f(const Relation& r, const Relation& f,
                                    int max_support) {
  const Universe& u = r.universe();
  Bitset supp_plus = r.support_plus_bits();
  int k = supp_plus.count();
  if (k > max_support || k > 32 || u.size() > 64) return std::nullopt;

  Context ctx;
  ctx.k = k;
  std::vector<int> local_of(u.pair_count(), -1);
  std::vector<int> global_of;
  supp_plus.for_each([&](int idx) {
    local_of[idx] = static_cast<int>(global_of.size());
    global_of.push_back(idx);
    ctx.pair_of.push_back(u.pair_at(idx));
  });

  ctx.base.assign(k, 0);
  ctx.forbidden.assign(k, 0);
  for (int i = 0; i < k; ++i) ctx.base[i] |= 1u << i;
  r.for_each([&](int p, int q) {
    assert(local_of[p] >= 0 && local_of[q] >= 0);
    ctx.base[local_of[p]] |= 1u << local_of[q];
  });
  f.for_each([&](int p, int q) {
    if (local_of[p] >= 0 && local_of[q] >= 0)
      ctx.forbidden[local_of[p]] |= 1u << local_of[q];
  });

  std::vector<std::pair<int, int>> free_cells;
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (!((ctx.base[p] >> q) & 1u)) free_cells.push_back({p, q});

  Small inter(k, 0);
  std::uint32_t full_row = k == 32 ? ~0u : ((1u << k) - 1u);
  for (int p = 0; p < k; ++p) inter[p] = full_row;
  long found = 0;

  if (free_cells.size() <= 18) {
    // Exhaustive generate-and-test over every candidate subset.
    for (std::uint32_t mask = 0; mask < (1u << free_cells.size()); ++mask) {
      Small s = ctx.base;
      for (std::size_t i = 0; i < free_cells.size(); ++i)
        if ((mask >> i) & 1u) s[free_cells[i].first] |= 1u << free_cells[i].second;
      if (!is_member(ctx, s)) continue;
      for (int p = 0; p < k; ++p) inter[p] &= s[p];
      ++found;
    }
  } else {
    Small out(k, 0);
    enumerate_closed(ctx, ctx.base, out, inter, found);
  }
  assert(found > 0);  // the full relation is always a member

  Relation result(u);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if ((inter[p] >> q) & 1u) result.add(global_of[p], global_of[q]);
  return result;
}

}  // namespace lcaforge
