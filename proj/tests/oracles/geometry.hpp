#pragma once

// Cellular boundaries of X recomputed from coordinates: every tetrahedron is
// placed as the standard simplex (mirrored when its orientation bit is -1)
// and faces receive the outward-normal-first boundary orientation.

#include <array>
#include <vector>

#include "spinetorsion/spine.hpp"

namespace oracle {

using namespace spinetorsion;
using Vec3 = std::array<long, 3>;

inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline long det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline std::array<Vec3, 4> corner_coords(int orientation) {
  std::array<Vec3, 4> p{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  if (orientation < 0)
    for (auto& v : p) v[2] = -v[2];
  return p;
}

/// Rank-ordered corner labels of face `face` of tetrahedron t.
inline std::array<int, 3> ranked_face(const BranchedSpine& sp, int t, int face) {
  std::array<int, 3> c{};
  int k = 0;
  for (int r = 0; r < 4; ++r)
    if (sp.vertex_of_rank(t, r) != face) c[k++] = sp.vertex_of_rank(t, r);
  return c;
}

/// F x V integer matrix of the boundary of the 3-cells.
inline std::vector<std::vector<long>> geometric_d3(const BranchedSpine& sp) {
  std::vector<std::vector<long>> d(sp.num_faces(), std::vector<long>(sp.num_tets(), 0));
  for (int t = 0; t < sp.num_tets(); ++t) {
    auto p = corner_coords(sp.orientation(t));
    for (int face = 0; face < 4; ++face) {
      auto c = ranked_face(sp, t, face);
      long s = det3(sub(p[c[0]], p[face]), sub(p[c[1]], p[c[0]]), sub(p[c[2]], p[c[0]]));
      d[sp.face_class(t, face)][t] += s > 0 ? 1 : -1;
    }
  }
  return d;
}

/// E x F integer matrix of the boundary of the 2-cells, read on the second
/// side of every face class.
inline std::vector<std::vector<long>> geometric_d2(const BranchedSpine& sp) {
  std::vector<std::vector<long>> d(sp.num_edges(), std::vector<long>(sp.num_faces(), 0));
  for (int f = 0; f < sp.num_faces(); ++f) {
    FaceSide side = sp.skeleton().faces[f][1];
    auto c = ranked_face(sp, side.tet, side.face);
    const int sign[3] = {1, -1, 1};  // edge opposite c[i]
    for (int i = 0; i < 3; ++i) {
      int a = c[i == 0 ? 1 : 0], b = c[i == 2 ? 1 : 2];
      d[sp.edge_class(side.tet, a, b)][f] += sign[i];
    }
  }
  return d;
}

}  // namespace oracle
