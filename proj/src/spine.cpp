#include "spinetorsion/spine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace spinetorsion {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw SpineError(code, msg); }

std::string where(int t, int f) {
  std::ostringstream os;
  os << t << "." << f;
  return os.str();
}

void check_connected(const Triangulation& tri) {
  const int n = tri.size();
  if (n == 0) fail(ErrorCode::Disconnected, "triangulation has no tetrahedra");
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int f = 0; f < 4; ++f) {
      int u = tri.gluing(t, f).tet;
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        queue.push_back(u);
      }
    }
  }
  if (count != n) fail(ErrorCode::Disconnected, "tetrahedron graph has more than one component");
}

Skeleton compute_skeleton(const Triangulation& tri) {
  const int n = tri.size();
  Skeleton sk;
  sk.edge_class.assign(n, {-1, -1, -1, -1, -1, -1});
  sk.edge_agrees.assign(n, {});
  for (int t = 0; t < n; ++t) {
    for (int e = 0; e < 6; ++e) {
      if (sk.edge_class[t][e] >= 0) continue;
      const int cls = sk.num_edges();
      sk.edges.emplace_back();
      std::deque<EdgeInstance> queue{{t, kTetEdges[e][0], kTetEdges[e][1]}};
      sk.edge_class[t][e] = cls;
      sk.edge_agrees[t][e] = true;
      while (!queue.empty()) {
        EdgeInstance inst = queue.front();
        queue.pop_front();
        sk.edges[cls].push_back(inst);
        for (int c = 0; c < 4; ++c) {
          if (c == inst.a || c == inst.b) continue;
          const Gluing& g = tri.gluing(inst.tet, c);
          EdgeInstance next{g.tet, g.perm[inst.a], g.perm[inst.b]};
          int idx = tet_edge_index(next.a, next.b);
          bool agrees = next.a < next.b;
          if (sk.edge_class[next.tet][idx] >= 0) {
            if (sk.edge_agrees[next.tet][idx] != agrees)
              fail(ErrorCode::NonStandardDual,
                   "an edge is identified with itself in reverse (tetrahedron " +
                       std::to_string(next.tet) + ")");
            continue;
          }
          sk.edge_class[next.tet][idx] = cls;
          sk.edge_agrees[next.tet][idx] = agrees;
          queue.push_back(next);
        }
      }
    }
  }

  sk.face_class.assign(n, {-1, -1, -1, -1});
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (sk.face_class[t][f] >= 0) continue;
      const Gluing& g = tri.gluing(t, f);
      const int cls = sk.num_faces();
      sk.faces.push_back({FaceSide{t, f}, FaceSide{g.tet, g.face}});
      sk.face_class[t][f] = cls;
      sk.face_class[g.tet][g.face] = cls;
    }
  }

  // Vertex classes by union-find over corners.
  std::vector<int> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = tri.gluing(t, f);
      for (int v : face_corners(f)) {
        int a = find(4 * t + v), b = find(4 * g.tet + g.perm[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  sk.vertex_class.assign(n, {-1, -1, -1, -1});
  std::vector<int> root_class(4 * n, -1);
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) {
      int r = find(4 * t + v);
      if (root_class[r] < 0) {
        root_class[r] = sk.num_vertices();
        sk.vertices.emplace_back();
      }
      sk.vertex_class[t][v] = root_class[r];
      sk.vertices[root_class[r]].push_back({t, v});
    }
  return sk;
}

std::vector<int> check_orientation(const Triangulation& tri,
                                   const std::optional<std::vector<int>>& given) {
  const int n = tri.size();
  std::vector<int> orient;
  if (given) {
    orient = *given;
    if (static_cast<int>(orient.size()) != n)
      fail(ErrorCode::NonOrientable, "orientation list has wrong length");
    for (int o : orient)
      if (o != 1 && o != -1) fail(ErrorCode::NonOrientable, "orientation bits must be + or -");
  } else {
    orient.assign(n, 0);
    orient[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = tri.gluing(t, f);
        if (orient[g.tet] == 0) {
          orient[g.tet] = -orient[t] * g.perm.sign();
          queue.push_back(g.tet);
        }
      }
    }
  }
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = tri.gluing(t, f);
      if (orient[t] * orient[g.tet] * g.perm.sign() != -1)
        fail(ErrorCode::NonOrientable,
             "gluing " + where(t, f) + " -> " + where(g.tet, g.face) +
                 " is not orientation-reversing");
    }
  return orient;
}

// Each region is assembled from the corner strips around its edge class; it
// is a disc when the strips close up into a single untwisted cycle.
void check_regions(const Triangulation& tri, const Skeleton& sk) {
  for (int cls = 0; cls < sk.num_edges(); ++cls) {
    const auto& inst = sk.edges[cls];
    const EdgeInstance s = inst.front();
    int c0 = -1, d0 = -1;
    for (int v = 0; v < 4; ++v)
      if (v != s.a && v != s.b) (c0 < 0 ? c0 : d0) = v;
    int t = s.tet, a = s.a, b = s.b, c = c0, d = d0;
    std::vector<int> visits(inst.size(), 0);
    std::size_t steps = 0;
    do {
      auto it = std::find_if(inst.begin(), inst.end(), [&](const EdgeInstance& e) {
        return e.tet == t && ((e.a == a && e.b == b) || (e.a == b && e.b == a));
      });
      if (it == inst.end())
        fail(ErrorCode::NonStandardDual, "region walk left its edge class");
      ++visits[it - inst.begin()];
      const Gluing& g = tri.gluing(t, d);
      int na = g.perm[a], nb = g.perm[b], nd = g.perm[c], nc = g.perm[d];
      t = g.tet;
      a = na;
      b = nb;
      c = nc;
      d = nd;
      if (++steps > inst.size())
        fail(ErrorCode::NonStandardDual, "region " + std::to_string(cls) + " is not a disc");
    } while (!(t == s.tet && a == s.a && b == s.b && (c == c0 || c == d0)));
    if (c != c0)
      fail(ErrorCode::NonStandardDual, "region " + std::to_string(cls) + " closes with a twist");
    for (int v : visits)
      if (v != 1)
        fail(ErrorCode::NonStandardDual,
             "region " + std::to_string(cls) + " boundary is not a single circle");
  }
}

bool cyclic(bool xy, bool yz, bool xz) { return xy == yz && xz != xy; }

}  // namespace

// --- ValidTriangulation ---------------------------------------------------

ValidTriangulation::ValidTriangulation(Triangulation tri,
                                       std::optional<std::vector<int>> orientation)
    : tri_(std::move(tri)) {
  check_connected(tri_);
  skel_ = compute_skeleton(tri_);
  orientation_ = check_orientation(tri_, orientation);
  check_regions(tri_, skel_);
}

bool ValidTriangulation::edge_points(const Branching& br, int tet, int a, int b) const {
  int idx = tet_edge_index(a, b);
  bool low_to_high = skel_.edge_agrees[tet][idx] == br[skel_.edge_class[tet][idx]];
  return a < b ? low_to_high : !low_to_high;
}

bool ValidTriangulation::is_branching(const Branching& br) const {
  for (int t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      auto [x, y, z] = face_corners(f);
      if (cyclic(edge_points(br, t, x, y), edge_points(br, t, y, z), edge_points(br, t, x, z)))
        return false;
    }
  return true;
}

// --- BranchedSpine ----------------------------------------------------------

BranchedSpine::BranchedSpine(ValidTriangulation tri, Branching branching)
    : tri_(std::move(tri)), branching_(std::move(branching)) {
  if (static_cast<int>(branching_.size()) != tri_.skeleton().num_edges())
    fail(ErrorCode::MalformedBranching, "branching does not cover every edge class");
  for (int t = 0; t < tri_.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      auto [x, y, z] = face_corners(f);
      if (cyclic(tri_.edge_points(branching_, t, x, y), tri_.edge_points(branching_, t, y, z),
                 tri_.edge_points(branching_, t, x, z)))
        fail(ErrorCode::CyclicTriangle,
             "face " + where(t, f) + " has a cyclic orientation of its edges");
    }
  const int n = tri_.size();
  rank_.resize(n);
  by_rank_.resize(n);
  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) {
      int out = 0;
      for (int w = 0; w < 4; ++w)
        if (w != v && tri_.edge_points(branching_, t, v, w)) ++out;
      rank_[t][v] = 3 - out;
    }
    for (int v = 0; v < 4; ++v) by_rank_[t][rank_[t][v]] = v;
  }
}

int BranchedSpine::ranked_orientation(int t) const {
  return orientation(t) * permutation_sign(by_rank_[t]);
}

std::array<int, 3> BranchedSpine::face_corners_ranked(int fc) const {
  const FaceSide side = skeleton().faces[fc][0];
  auto c = face_corners(side.face);
  std::sort(c.begin(), c.end(),
            [&](int u, int v) { return rank_[side.tet][u] < rank_[side.tet][v]; });
  return c;
}

std::array<int, 3> BranchedSpine::face_edges(int fc) const {
  const int t = skeleton().faces[fc][0].tet;
  auto [w0, w1, w2] = face_corners_ranked(fc);
  return {edge_class(t, w0, w1), edge_class(t, w1, w2), edge_class(t, w0, w2)};
}

RawSpine BranchedSpine::to_raw() const {
  RawSpine raw;
  raw.tets = num_tets();
  const auto& tri = triangulation();
  for (int t = 0; t < raw.tets; ++t)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = tri.gluing(t, f);
      if (g.tet < t || (g.tet == t && g.face < f)) continue;
      raw.gluings.push_back({t, f, g.tet, g.face, g.perm, 0});
    }
  for (const auto& inst : skeleton().edges) {
    const EdgeInstance& e = inst.front();
    if (edge_points(e.tet, e.a, e.b))
      raw.branching.push_back({e.tet, e.a, e.b});
    else
      raw.branching.push_back({e.tet, e.b, e.a});
  }
  raw.orientation = tri_.orientation();
  return raw;
}

// --- construction ---------------------------------------------------------

Triangulation build_triangulation(const RawSpine& raw) {
  if (raw.tets <= 0) fail(ErrorCode::Syntax, "tetrahedron count must be positive");
  const int n = raw.tets;
  std::vector<std::array<Gluing, 4>> table(n);
  auto set = [&](int t, int f, Gluing g, int line) {
    if (table[t][f].tet >= 0)
      fail(ErrorCode::UnpairedFace,
           "face " + where(t, f) + " glued twice (line " + std::to_string(line) + ")");
    table[t][f] = g;
  };
  for (const auto& gl : raw.gluings) {
    const std::string at = " (line " + std::to_string(gl.line) + ")";
    if (gl.tet < 0 || gl.tet >= n || gl.other_tet < 0 || gl.other_tet >= n || gl.face < 0 ||
        gl.face > 3 || gl.other_face < 0 || gl.other_face > 3)
      fail(ErrorCode::Syntax, "gluing index out of range" + at);
    if (!gl.perm.is_valid() || gl.perm[gl.face] != gl.other_face)
      fail(ErrorCode::Syntax, "gluing permutation does not match faces" + at);
    if (gl.tet == gl.other_tet && gl.face == gl.other_face)
      fail(ErrorCode::UnpairedFace, "face " + where(gl.tet, gl.face) + " glued to itself" + at);
    set(gl.tet, gl.face, Gluing{gl.other_tet, gl.other_face, gl.perm}, gl.line);
    set(gl.other_tet, gl.other_face, Gluing{gl.tet, gl.face, gl.perm.inverse()}, gl.line);
  }
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f)
      if (table[t][f].tet < 0) fail(ErrorCode::UnpairedFace, "face " + where(t, f) + " is unglued");
  return Triangulation(std::move(table));
}

BranchedSpine validate(const RawSpine& raw) {
  ValidTriangulation vt(build_triangulation(raw), raw.orientation);
  const Skeleton& sk = vt.skeleton();
  Branching br(sk.num_edges(), false);
  std::vector<bool> given(sk.num_edges(), false);
  for (const auto& [t, a, b] : raw.branching) {
    if (t < 0 || t >= vt.size() || a < 0 || a > 3 || b < 0 || b > 3 || a == b)
      fail(ErrorCode::MalformedBranching, "branching token out of range");
    int idx = tet_edge_index(a, b);
    int cls = sk.edge_class[t][idx];
    if (given[cls])
      fail(ErrorCode::MalformedBranching,
           "edge class " + std::to_string(cls) + " is given two directions");
    given[cls] = true;
    bool agrees = sk.edge_agrees[t][idx];
    br[cls] = (a < b) ? agrees : !agrees;
  }
  for (int c = 0; c < sk.num_edges(); ++c)
    if (!given[c])
      fail(ErrorCode::MalformedBranching, "edge class " + std::to_string(c) + " has no direction");
  return BranchedSpine(std::move(vt), std::move(br));
}

BranchedSpine spine_from_ranks(const Triangulation& tri, const std::vector<int>& orientation,
                               const std::vector<std::array<int, 4>>& ranks) {
  ValidTriangulation vt(tri, orientation);
  const Skeleton& sk = vt.skeleton();
  Branching br(sk.num_edges());
  for (int c = 0; c < sk.num_edges(); ++c) {
    const EdgeInstance& rep = sk.edges[c].front();
    br[c] = ranks[rep.tet][rep.a] < ranks[rep.tet][rep.b];
    for (const EdgeInstance& e : sk.edges[c])
      if ((ranks[e.tet][e.a] < ranks[e.tet][e.b]) != br[c])
        fail(ErrorCode::CyclicTriangle, "vertex rankings disagree along edge class " +
                                            std::to_string(c));
  }
  return BranchedSpine(std::move(vt), std::move(br));
}

std::vector<Branching> enumerate_branchings(const ValidTriangulation& tri) {
  const Skeleton& sk = tri.skeleton();
  const int E = sk.num_edges();
  // Faces to test once their last edge class is assigned.
  std::vector<std::vector<std::pair<int, int>>> check_at(E);
  for (int t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      auto [x, y, z] = face_corners(f);
      int last = std::max({sk.edge_class[t][tet_edge_index(x, y)],
                           sk.edge_class[t][tet_edge_index(y, z)],
                           sk.edge_class[t][tet_edge_index(x, z)]});
      check_at[last].push_back({t, f});
    }
  std::vector<Branching> out;
  Branching br(E, true);
  std::function<void(int)> rec = [&](int c) {
    if (c == E) {
      out.push_back(br);
      return;
    }
    for (bool choice : {true, false}) {
      br[c] = choice;
      bool ok = true;
      for (auto [t, f] : check_at[c]) {
        auto [x, y, z] = face_corners(f);
        if (cyclic(tri.edge_points(br, t, x, y), tri.edge_points(br, t, y, z),
                   tri.edge_points(br, t, x, z))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(c + 1);
    }
  };
  rec(0);
  return out;
}

SourceSink sink_source_tet(const BranchedSpine& spine, int tet) {
  return {spine.vertex_of_rank(tet, 0), spine.vertex_of_rank(tet, 3)};
}

SourceSink sink_source_face(const BranchedSpine& spine, int tet, int face) {
  auto c = face_corners(face);
  std::sort(c.begin(), c.end(),
            [&](int u, int v) { return spine.rank(tet, u) < spine.rank(tet, v); });
  return {c[0], c[2]};
}

int BoundaryReport::total_euler_characteristic() const {
  int s = 0;
  for (const auto& c : components) s += c.euler_characteristic;
  return s;
}

BoundaryReport boundary_components(const BranchedSpine& spine) {
  const Skeleton& sk = spine.skeleton();
  std::vector<int> link_vertices(sk.num_vertices(), 0);
  for (const auto& inst : sk.edges) {
    const EdgeInstance& e = inst.front();
    ++link_vertices[sk.vertex_class[e.tet][e.a]];
    ++link_vertices[sk.vertex_class[e.tet][e.b]];
  }
  BoundaryReport rep;
  for (int v = 0; v < sk.num_vertices(); ++v) {
    const int triangles = static_cast<int>(sk.vertices[v].size());
    const int chi = link_vertices[v] - triangles / 2;  // V - 3F/2 + F
    rep.components.push_back({v, chi, (2 - chi) / 2});
  }
  return rep;
}

EulerCharacteristics euler_characteristics(const BranchedSpine& spine) {
  const int chi_p = spine.num_edges() - spine.num_faces() + spine.num_tets();
  return {chi_p, 1 - chi_p};
}

std::vector<int> canonical_form(const BranchedSpine& spine) {
  const int n = spine.num_tets();
  const auto& tri = spine.triangulation();
  std::vector<int> best;
  std::vector<int> order, newidx(n);
  for (int start = 0; start < n; ++start) {
    std::fill(newidx.begin(), newidx.end(), -1);
    order.assign(1, start);
    newidx[start] = 0;
    std::vector<int> code{n};
    bool worse = false, better = best.empty();
    for (std::size_t head = 0; head < order.size() && !worse; ++head) {
      const int t = order[head];
      auto emit = [&](int value) {
        if (!better) {
          int pos = static_cast<int>(code.size());
          if (value < best[pos]) better = true;
          else if (value > best[pos]) worse = true;
        }
        code.push_back(value);
      };
      emit(spine.ranked_orientation(t) > 0 ? 1 : 0);
      for (int k = 0; k < 4 && !worse; ++k) {
        const Gluing& g = tri.gluing(t, spine.vertex_of_rank(t, k));
        if (newidx[g.tet] < 0) {
          newidx[g.tet] = static_cast<int>(order.size());
          order.push_back(g.tet);
        }
        emit(newidx[g.tet]);
        emit(spine.rank(g.tet, g.face));
      }
    }
    if (!worse && (better || code < best)) best = std::move(code);
  }
  return best;
}

}  // namespace spinetorsion
