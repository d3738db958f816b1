#include "spinetorsion/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "spinetorsion/spider.hpp"

namespace spinetorsion {

namespace {

using Vec3 = std::array<long, 3>;
constexpr std::array<Vec3, 5> kCoords{{{3, 0, 0}, {0, 3, 0}, {0, 0, 0}, {1, 1, 3}, {1, 1, -3}}};

int chirality(const std::array<int, 4>& v) {
  auto d = [&](int i, int k) { return kCoords[v[i]][k] - kCoords[v[0]][k]; };
  long det = d(1, 0) * (d(2, 1) * d(3, 2) - d(2, 2) * d(3, 1)) - d(1, 1) * (d(2, 0) * d(3, 2) - d(2, 2) * d(3, 0)) +
             d(1, 2) * (d(2, 0) * d(3, 1) - d(2, 1) * d(3, 0));
  return det > 0 ? 1 : -1;
}

struct SiteTet {
  int tet;
  std::array<int, 5> label;  // bipyramid vertex -> corner label, -1 if absent
};

std::array<int, 4> vertices_by_label(const SiteTet& s) {
  std::array<int, 4> v{};
  for (int b = 0; b < 5; ++b)
    if (s.label[b] >= 0) v[s.label[b]] = b;
  return v;
}

Perm4 perm_of(const std::array<int, 4>& a) { return Perm4(a[0], a[1], a[2], a[3]); }

struct Replaced {
  Triangulation tri;
  std::vector<int> orientation;
  std::vector<std::array<int, 4>> ranks;
  std::vector<int> kept_map;  // old tet -> new tet, -1 for removed
  std::vector<SiteTet> added;
};

// Swaps the removed site tetrahedra for `added` (vertex tuples in label
// order). `central` orients XY when no removed tetrahedron contains it.
// Returns nothing when some new tetrahedron would carry a cyclic triangle.
std::optional<Replaced> replace_site(const BranchedSpine& sp, const std::vector<SiteTet>& removed,
                                     const std::vector<std::array<int, 4>>& added, int central) {
  const Triangulation& tri = sp.triangulation();
  const int n = sp.num_tets();
  std::vector<int> site_of(n, -1);
  for (std::size_t r = 0; r < removed.size(); ++r) site_of[removed[r].tet] = static_cast<int>(r);

  auto points = [&](int u, int v) {
    for (const SiteTet& s : removed)
      if (s.label[u] >= 0 && s.label[v] >= 0) return sp.rank(s.tet, s.label[u]) < sp.rank(s.tet, s.label[v]);
    const bool forward = central > 0;
    return (u == kX && v == kY) ? forward : !forward;
  };

  Replaced out;
  out.kept_map.assign(n, -1);
  int next = 0;
  for (int t = 0; t < n; ++t)
    if (site_of[t] < 0) out.kept_map[t] = next++;
  const int total = next + static_cast<int>(added.size());

  for (std::size_t w = 0; w < added.size(); ++w) {
    SiteTet s{next + static_cast<int>(w), {-1, -1, -1, -1, -1}};
    for (int k = 0; k < 4; ++k) s.label[added[w][k]] = k;
    out.added.push_back(s);
  }

  // Added tetrahedron holding the three bipyramid vertices other than `skip`
  // among those of `verts`, and the label of its remaining vertex.
  auto find_added = [&](const std::array<int, 4>& verts, int skip, int exclude) -> std::pair<int, int> {
    for (std::size_t w = 0; w < out.added.size(); ++w) {
      if (static_cast<int>(w) == exclude) continue;
      bool ok = true;
      for (int k = 0; k < 4; ++k)
        if (k != skip && out.added[w].label[verts[k]] < 0) ok = false;
      if (!ok) continue;
      for (int b = 0; b < 5; ++b)
        if (out.added[w].label[b] >= 0) {
          bool in = false;
          for (int k = 0; k < 4; ++k)
            if (k != skip && verts[k] == b) in = true;
          if (!in) return {static_cast<int>(w), out.added[w].label[b]};
        }
    }
    return {-1, -1};
  };

  // Target of face `face` of removed tetrahedron r, reached through a map
  // `alpha` from some source labels to r's labels.
  auto redirect = [&](int r, int face, const Perm4& alpha) -> Gluing {
    const SiteTet& s = removed[r];
    auto verts = vertices_by_label(s);
    auto [w, opp] = find_added(verts, face, -1);
    if (w < 0) throw SpineError(ErrorCode::InvalidArgument, "move site face has no replacement");
    std::array<int, 4> beta{};
    for (int l = 0; l < 4; ++l) beta[l] = l == face ? opp : out.added[w].label[verts[l]];
    return Gluing{out.added[w].tet, opp, perm_of(beta) * alpha};
  };

  std::vector<std::array<Gluing, 4>> g(total);
  for (int t = 0; t < n; ++t) {
    if (site_of[t] >= 0) continue;
    for (int k = 0; k < 4; ++k) {
      const Gluing& old = tri.gluing(t, k);
      g[out.kept_map[t]][k] = site_of[old.tet] < 0 ? Gluing{out.kept_map[old.tet], old.face, old.perm}
                                                   : redirect(site_of[old.tet], old.face, old.perm);
    }
  }
  for (std::size_t w = 0; w < added.size(); ++w) {
    const auto& verts = added[w];
    for (int k = 0; k < 4; ++k) {
      auto [w2, opp] = find_added(verts, k, static_cast<int>(w));
      if (w2 >= 0) {
        std::array<int, 4> p{};
        for (int l = 0; l < 4; ++l) p[l] = l == k ? opp : out.added[w2].label[verts[l]];
        g[out.added[w].tet][k] = Gluing{out.added[w2].tet, opp, perm_of(p)};
        continue;
      }
      int r = -1, kr = -1;
      for (std::size_t i = 0; i < removed.size() && r < 0; ++i) {
        bool ok = true;
        for (int l = 0; l < 4; ++l)
          if (l != k && removed[i].label[verts[l]] < 0) ok = false;
        if (!ok) continue;
        r = static_cast<int>(i);
        for (int b = 0; b < 5; ++b) {
          if (removed[i].label[b] < 0) continue;
          bool in = false;
          for (int l = 0; l < 4; ++l)
            if (l != k && verts[l] == b) in = true;
          if (!in) kr = removed[i].label[b];
        }
      }
      if (r < 0) throw SpineError(ErrorCode::InvalidArgument, "move site face has no counterpart");
      std::array<int, 4> gamma{};
      for (int l = 0; l < 4; ++l) gamma[l] = l == k ? kr : removed[r].label[verts[l]];
      const Gluing& old = tri.gluing(removed[r].tet, kr);
      Perm4 alpha = old.perm * perm_of(gamma);
      g[out.added[w].tet][k] = site_of[old.tet] < 0 ? Gluing{out.kept_map[old.tet], old.face, alpha}
                                                    : redirect(site_of[old.tet], old.face, alpha);
    }
  }
  out.tri = Triangulation(std::move(g));

  int chir = 0;
  for (const SiteTet& s : removed) {
    int c = sp.orientation(s.tet) * chirality(vertices_by_label(s));
    if (chir != 0 && c != chir) throw SpineError(ErrorCode::InvalidArgument, "move site orientations disagree");
    chir = c;
  }
  out.orientation.assign(total, 1);
  out.ranks.assign(total, {});
  for (int t = 0; t < n; ++t)
    if (site_of[t] < 0) {
      out.orientation[out.kept_map[t]] = sp.orientation(t);
      for (int v = 0; v < 4; ++v) out.ranks[out.kept_map[t]][v] = sp.rank(t, v);
    }
  for (std::size_t w = 0; w < added.size(); ++w) {
    const int t = out.added[w].tet;
    out.orientation[t] = chir * chirality(added[w]);
    std::array<bool, 4> seen{};
    for (int k = 0; k < 4; ++k) {
      int in = 0;
      for (int l = 0; l < 4; ++l)
        if (l != k && points(added[w][l], added[w][k])) ++in;
      if (seen[in]) return std::nullopt;
      seen[in] = true;
      out.ranks[t][k] = in;
    }
  }
  return out;
}

BranchedSpine build_result(const Replaced& r) {
  try {
    return spine_from_ranks(r.tri, r.orientation, r.ranks);
  } catch (const SpineError& e) {
    if (is_validation_error(e.code())) throw SpineError(ErrorCode::ResultNonStandard, e.what());
    throw;
  }
}

const std::vector<std::array<int, 4>> kThreeSide{{kX, kY, kQ, kR}, {kX, kY, kR, kP}, {kX, kY, kP, kQ}};
const std::vector<std::array<int, 4>> kTwoSide{{kP, kQ, kR, kX}, {kP, kQ, kR, kY}};

// Indegree of each bipyramid vertex in the tournament of edge directions,
// read from the 3-side tetrahedra (which contain every pair).
std::array<int, 5> global_order(const BranchedSpine& three, const Bipyramid& b) {
  std::array<int, 5> in{};
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) {
      if (u == v) continue;
      for (int k = 0; k < 3; ++k) {
        const auto& lab = b.three_labels[k];
        if (lab[u] < 0 || lab[v] < 0) continue;
        if (three.rank(b.three_tets[k], lab[u]) < three.rank(b.three_tets[k], lab[v])) ++in[v];
        break;
      }
    }
  return in;
}

void assign_letters(Bipyramid& b, const BranchedSpine& three) {
  auto order = global_order(three, b);
  const bool forward = order[kX] < order[kY];
  b.letters[forward ? kX : kY] = 'a';
  b.letters[forward ? kY : kX] = 'c';
  std::array<int, 3> eq{kP, kQ, kR};
  std::sort(eq.begin(), eq.end(), [&](int u, int v) { return order[u] < order[v]; });
  b.letters[eq[0]] = 'b';
  b.letters[eq[1]] = 'e';
  b.letters[eq[2]] = 'd';
}

}  // namespace

std::vector<MoveInstance> apply_positive(const BranchedSpine& spine, int face_class) {
  if (face_class < 0 || face_class >= spine.num_faces())
    throw SpineError(ErrorCode::InvalidArgument, "face class " + std::to_string(face_class) + " out of range");
  const auto sides = spine.skeleton().faces[face_class];
  const int t1 = sides[0].tet, f1 = sides[0].face;
  const Gluing& gl = spine.triangulation().gluing(t1, f1);
  if (gl.tet == t1)
    throw SpineError(ErrorCode::SelfAdjacentFace,
                     "face class " + std::to_string(face_class) + " joins tetrahedron " + std::to_string(t1) + " to itself");
  auto [c0, c1, c2] = face_corners(f1);
  SiteTet s1{t1, {c0, c1, c2, f1, -1}};
  SiteTet s2{gl.tet, {gl.perm[c0], gl.perm[c1], gl.perm[c2], -1, gl.face}};
  std::vector<MoveInstance> out;
  for (int variant = 0; variant < 2; ++variant) {
    auto rep = replace_site(spine, {s1, s2}, kThreeSide, variant == 0 ? 1 : -1);
    if (!rep) continue;
    BranchedSpine after = build_result(*rep);
    Bipyramid b;
    b.two_tets = {s1.tet, s2.tet};
    b.two_labels = {s1.label, s2.label};
    for (int k = 0; k < 3; ++k) {
      b.three_tets[k] = rep->added[k].tet;
      b.three_labels[k] = rep->added[k].label;
    }
    b.tet_map = rep->kept_map;
    assign_letters(b, after);
    out.push_back(MoveInstance{true, face_class, variant, spine, std::move(after), b});
  }
  return out;
}

MoveInstance apply_negative(const BranchedSpine& spine, int edge_class) {
  if (edge_class < 0 || edge_class >= spine.num_edges())
    throw SpineError(ErrorCode::InvalidArgument, "edge class " + std::to_string(edge_class) + " out of range");
  const auto& inst = spine.skeleton().edges[edge_class];
  auto not_applicable = [&](const std::string& why) {
    return SpineError(ErrorCode::NotApplicable, "edge class " + std::to_string(edge_class) + ": " + why);
  };
  if (inst.size() != 3) throw not_applicable("valence " + std::to_string(inst.size()) + ", not 3");
  const Triangulation& tri = spine.triangulation();
  const int ta = inst[0].tet;
  int x = inst[0].a, y = inst[0].b;
  if (spine.rank(ta, x) > spine.rank(ta, y)) std::swap(x, y);
  int u = -1, v = -1;
  for (int l = 0; l < 4; ++l)
    if (l != x && l != y) (u < 0 ? u : v) = l;
  SiteTet a{ta, {-1, u, v, x, y}};
  const Gluing& gb = tri.gluing(ta, u);
  SiteTet b{gb.tet, {gb.perm[u], -1, gb.perm[v], gb.perm[x], gb.perm[y]}};
  const Gluing& gc = tri.gluing(ta, v);
  SiteTet c{gc.tet, {gc.perm[v], gc.perm[u], -1, gc.perm[x], gc.perm[y]}};
  if (a.tet == b.tet || b.tet == c.tet || a.tet == c.tet) throw not_applicable("the three tetrahedra are not distinct");
  const Gluing& gbc = tri.gluing(b.tet, b.label[kR]);
  if (gbc.tet != c.tet || gbc.face != c.label[kQ] || gbc.perm[b.label[kX]] != c.label[kX] ||
      gbc.perm[b.label[kY]] != c.label[kY] || gbc.perm[b.label[kP]] != c.label[kP])
    throw not_applicable("the tetrahedra around the edge do not close up");
  auto rep = replace_site(spine, {a, b, c}, kTwoSide, 0);
  if (!rep) throw SpineError(ErrorCode::ResultNonStandard, "restricted branching is not valid");
  BranchedSpine after = build_result(*rep);
  Bipyramid bp;
  for (int k = 0; k < 2; ++k) {
    bp.two_tets[k] = rep->added[k].tet;
    bp.two_labels[k] = rep->added[k].label;
  }
  const std::array<SiteTet, 3> three{a, b, c};
  for (int k = 0; k < 3; ++k) {
    bp.three_tets[k] = three[k].tet;
    bp.three_labels[k] = three[k].label;
  }
  bp.tet_map.assign(after.num_tets(), -1);
  for (int t = 0; t < spine.num_tets(); ++t)
    if (rep->kept_map[t] >= 0) bp.tet_map[rep->kept_map[t]] = t;
  assign_letters(bp, spine);
  return MoveInstance{false, edge_class, 0, spine, std::move(after), bp};
}

MoveInstance apply_record(const BranchedSpine& spine, const MoveRecord& rec) {
  if (!rec.positive) return apply_negative(spine, rec.site);
  for (auto& m : apply_positive(spine, rec.site))
    if (m.variant == rec.variant) return m;
  throw SpineError(ErrorCode::NotApplicable, "variant " + std::to_string(rec.variant) + " is not a valid branching at face class " +
                                                 std::to_string(rec.site));
}

HCycleReport h_cycle_check(const MoveInstance& m) {
  static const std::vector<std::string> kRows{"v",    "va",   "vb",   "vc",   "vd",   "ve",   "vab",
                                              "vad",  "vae",  "vcb",  "vcd",  "vce",  "vbe",  "ved",
                                              "vdb",  "vabe", "vaed", "vadb", "vcbe", "vced", "vcdb"};
  const Bipyramid& b = m.bipyramid;
  const auto order = global_order(m.three_side(), b);
  std::map<char, int> rank_of;
  for (int v = 0; v < 5; ++v) rank_of[b.letters[v]] = order[v];
  const std::string two_carrier = "bde", three_carrier = "ac";
  const std::string& before_k = m.positive ? two_carrier : three_carrier;
  const std::string& after_k = m.positive ? three_carrier : two_carrier;
  auto sink = [&](const std::string& s) {
    char best = s[0];
    for (char c : s)
      if (rank_of[c] > rank_of[best]) best = c;
    return best;
  };

  // Positions of the bipyramid vertices in a lifted copy, as integer
  // 1-chains of the before-spine: pos(tail) = pos(head) - edge.
  const BranchedSpine& before = m.before;
  std::vector<std::pair<int, std::array<int, 5>>> site;
  if (m.positive)
    for (int k = 0; k < 2; ++k) site.push_back({b.two_tets[k], b.two_labels[k]});
  else
    for (int k = 0; k < 3; ++k) site.push_back({b.three_tets[k], b.three_labels[k]});
  const int E = before.num_edges();
  std::array<std::vector<long>, 5> pos;
  std::array<bool, 5> known{};
  pos[0].assign(E, 0);
  known[0] = true;
  for (int round = 0; round < 5; ++round)
    for (const auto& [t, lab] : site)
      for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
          if (u == v || lab[u] < 0 || lab[v] < 0 || !known[u] || known[v]) continue;
          const int e = before.edge_class(t, lab[u], lab[v]);
          pos[v] = pos[u];
          pos[v][e] += before.rank(t, lab[u]) < before.rank(t, lab[v]) ? 1 : -1;
          known[v] = true;
        }
  std::map<char, int> vertex_of;
  for (int v = 0; v < 5; ++v) vertex_of[b.letters[v]] = v;

  HCycleReport rep;
  std::vector<long> chain(E, 0);
  for (const std::string& name : kRows) {
    HCycleRow row;
    row.simplex = name;
    const int dim = static_cast<int>(name.size()) - 1;
    row.epsilon = dim % 2 == 0 ? 1 : -1;
    const std::string s = name.substr(1);
    row.end0 = sink(s + before_k);
    row.end1 = sink(s + after_k);
    if (row.end0 == row.end1) {
      row.boundary = "0";
    } else {
      const char plus = row.epsilon > 0 ? row.end0 : row.end1, minus = row.epsilon > 0 ? row.end1 : row.end0;
      row.boundary = std::string(1, plus) + "-" + std::string(1, minus);
      rep.total[row.end0] += row.epsilon;
      rep.total[row.end1] -= row.epsilon;
      for (int e = 0; e < E; ++e)
        chain[e] += row.epsilon * (pos[vertex_of[row.end0]][e] - pos[vertex_of[row.end1]][e]);
    }
    rep.rows.push_back(row);
  }
  for (auto it = rep.total.begin(); it != rep.total.end();)
    it = it->second == 0 ? rep.total.erase(it) : std::next(it);
  rep.is_null = rep.total.empty();
  CellComplexX x = build_complex(before);
  GroupData g = presentation(x, before);
  auto [fc, tc] = h1_class(g, chain);
  rep.h_free = fc;
  rep.h_torsion = tc;
  return rep;
}

bool is_rigid(const BranchedSpine& spine) {
  for (int f = 0; f < spine.num_faces(); ++f) {
    try {
      if (!apply_positive(spine, f).empty()) return false;
    } catch (const SpineError& e) {
      if (e.code() != ErrorCode::SelfAdjacentFace && e.code() != ErrorCode::ResultNonStandard) throw;
    }
  }
  return true;
}

std::vector<MoveInstance> random_walk(const BranchedSpine& spine, int steps, std::uint64_t seed, bool h_null_only,
                                      int max_tets) {
  std::mt19937_64 rng(seed);
  std::vector<MoveInstance> walk;
  BranchedSpine cur = spine;
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveInstance> cand;
    if (cur.num_tets() < max_tets)
      for (int f = 0; f < cur.num_faces(); ++f) {
        try {
          for (auto& m : apply_positive(cur, f)) cand.push_back(std::move(m));
        } catch (const SpineError& e) {
          if (e.code() != ErrorCode::SelfAdjacentFace && e.code() != ErrorCode::ResultNonStandard) throw;
        }
      }
    for (int e = 0; e < cur.num_edges(); ++e) {
      try {
        cand.push_back(apply_negative(cur, e));
      } catch (const SpineError& err) {
        if (err.code() != ErrorCode::NotApplicable && err.code() != ErrorCode::ResultNonStandard) throw;
      }
    }
    if (h_null_only)
      cand.erase(std::remove_if(cand.begin(), cand.end(), [](const MoveInstance& m) { return !h_cycle_check(m).is_null; }),
                 cand.end());
    if (cand.empty())
      throw SpineError(ErrorCode::Stuck, "no admissible move at step " + std::to_string(step) + " (" +
                                             std::to_string(cur.num_tets()) + " tetrahedra)");
    MoveInstance m = std::move(cand[rng() % cand.size()]);
    cur = m.after;
    walk.push_back(std::move(m));
  }
  return walk;
}

}  // namespace spinetorsion
