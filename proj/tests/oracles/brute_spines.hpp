#pragma once

// Exhaustive reference procedures for small triangulations. They share no
// code with the library beyond the data types.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "spinetorsion/spine.hpp"

namespace oracle {

using namespace spinetorsion;

inline std::vector<Perm4> all_perms() {
  std::vector<Perm4> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do out.emplace_back(p[0], p[1], p[2], p[3]);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every gluing table on n tetrahedra (all face matchings, all face maps).
inline void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& fn) {
  const int slots = 4 * n;
  std::vector<std::array<Gluing, 4>> table(n);
  std::vector<bool> used(slots, false);
  const auto perms = all_perms();
  std::function<void()> rec = [&]() {
    int s = 0;
    while (s < slots && used[s]) ++s;
    if (s == slots) {
      fn(Triangulation(table));
      return;
    }
    used[s] = true;
    for (int r = s + 1; r < slots; ++r) {
      if (used[r]) continue;
      used[r] = true;
      for (const Perm4& p : perms) {
        if (p[s % 4] != r % 4) continue;
        table[s / 4][s % 4] = Gluing{r / 4, r % 4, p};
        table[r / 4][r % 4] = Gluing{s / 4, s % 4, p.inverse()};
        rec();
      }
      used[r] = false;
    }
    used[s] = false;
  };
  rec();
}

/// Edge direction of tet edge (a,b) as "a -> b" under a per-class choice.
inline bool points(const Skeleton& sk, const Branching& br, int t, int a, int b) {
  const int cls = sk.edge_class[t][tet_edge_index(a, b)];
  for (const EdgeInstance& e : sk.edges[cls])
    if (e.tet == t && ((e.a == a && e.b == b) || (e.a == b && e.b == a)))
      return (e.a == a) == br[cls];
  return false;
}

/// All 2^E edge orientations with no cyclic triangle.
inline std::vector<Branching> brute_branchings(const ValidTriangulation& vt) {
  const Skeleton& sk = vt.skeleton();
  const int E = sk.num_edges();
  std::vector<Branching> out;
  for (long mask = 0; mask < (1L << E); ++mask) {
    Branching br(E);
    for (int c = 0; c < E; ++c) br[c] = !((mask >> (E - 1 - c)) & 1);
    bool ok = true;
    for (int t = 0; t < vt.size() && ok; ++t)
      for (int f = 0; f < 4 && ok; ++f) {
        std::array<int, 3> c{};
        int k = 0;
        for (int v = 0; v < 4; ++v)
          if (v != f) c[k++] = v;
        int outdeg[3] = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (i != j && points(sk, br, t, c[i], c[j])) ++outdeg[i];
        std::sort(outdeg, outdeg + 3);
        ok = outdeg[0] == 0 && outdeg[1] == 1 && outdeg[2] == 2;
      }
    if (ok) out.push_back(br);
  }
  return out;
}

/// Isomorphism by trying every tetrahedron bijection and corner relabelling.
inline bool brute_isomorphic(const BranchedSpine& x, const BranchedSpine& y) {
  const int n = x.num_tets();
  if (n != y.num_tets()) return false;
  const auto perms = all_perms();
  std::vector<int> tmap(n);
  std::iota(tmap.begin(), tmap.end(), 0);
  do {
    std::vector<int> choice(n, 0);
    std::function<bool(int)> rec = [&](int t) -> bool {
      if (t == n) {
        for (int s = 0; s < n; ++s) {
          const Perm4& p = perms[choice[s]];
          if (x.orientation(s) * p.sign() != y.orientation(tmap[s])) return false;
          for (int f = 0; f < 4; ++f) {
            const Gluing& g = x.triangulation().gluing(s, f);
            const Gluing& h = y.triangulation().gluing(tmap[s], p[f]);
            if (h.tet != tmap[g.tet]) return false;
            const Perm4& q = perms[choice[g.tet]];
            for (int v = 0; v < 4; ++v)
              if (h.perm[p[v]] != q[g.perm[v]]) return false;
          }
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              if (a != b && x.edge_points(s, a, b) != y.edge_points(tmap[s], p[a], p[b]))
                return false;
        }
        return true;
      }
      for (int k = 0; k < 24; ++k) {
        choice[t] = k;
        if (rec(t + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return true;
  } while (std::next_permutation(tmap.begin(), tmap.end()));
  return false;
}

/// The same spine with tetrahedra renumbered by `tmap` and corners of
/// tetrahedron t relabelled by `corner[t]`.
inline BranchedSpine relabel(const BranchedSpine& sp, const std::vector<int>& tmap,
                             const std::vector<Perm4>& corner) {
  const int n = sp.num_tets();
  std::vector<std::array<Gluing, 4>> table(n);
  std::vector<int> orient(n);
  std::vector<std::array<int, 4>> ranks(n);
  for (int t = 0; t < n; ++t) {
    const Perm4& p = corner[t];
    orient[tmap[t]] = sp.orientation(t) * p.sign();
    for (int v = 0; v < 4; ++v) ranks[tmap[t]][p[v]] = sp.rank(t, v);
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = sp.triangulation().gluing(t, f);
      const Perm4& q = corner[g.tet];
      table[tmap[t]][p[f]] = Gluing{tmap[g.tet], q[g.face], q * g.perm * p.inverse()};
    }
  }
  return spine_from_ranks(Triangulation(std::move(table)), orient, ranks);
}

}  // namespace oracle
