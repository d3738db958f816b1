#pragma once

// Transport of cells, representations and homology bases along a branched
// move, and the torsion invariance check along a walk.
//
// The chain map always runs from the 2-side to the 3-side. Off the site it is
// the identity; the equatorial face goes to the cone on it from X, the
// tetrahedron PQRX goes to zero and PQRY to the whole 3-side.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinetorsion/moves.hpp"
#include "spinetorsion/torsion.hpp"

namespace spinetorsion {

struct CellCorrespondence {
  // Cell classes of the 2-side -> 3-side, -1 for cells inside the site.
  std::vector<int> edges, faces, tets;
  int inner_face = -1;    // PQR on the 2-side
  int central_edge = -1;  // XY on the 3-side
};

CellCorrespondence cell_correspondence(const MoveInstance& m);

/// Coefficient of the face of tetrahedron t opposite `label` in the twisted D3.
template <class F>
F tet_face_coefficient(const BranchedSpine& spine, const SpiderAnchors& anchors, const std::vector<F>& images, int t,
                       int label) {
  const int i = spine.rank(t, label);
  F c = word_image(anchors.tet_corners[t][i == 3 ? 2 : 3], images);
  return (i % 2 == 0) == (spine.ranked_orientation(t) > 0) ? c : -c;
}

/// Holonomy of each bipyramid vertex in a lift of the site, P at the base
/// point, from generator images on the 2-side.
template <class F>
std::array<F, 5> bipyramid_positions(const MoveInstance& m, const std::vector<F>& two_images) {
  const BranchedSpine& two = m.two_side();
  const Bipyramid& b = m.bipyramid;
  std::array<std::optional<F>, 5> pos;
  pos[kP] = F(1);
  for (int round = 0; round < 3; ++round)
    for (int k = 0; k < 2; ++k)
      for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
          const auto& lab = b.two_labels[k];
          if (u == v || lab[u] < 0 || lab[v] < 0 || !pos[u] || pos[v]) continue;
          const F g = two_images[two.edge_class(b.two_tets[k], lab[u], lab[v])];
          pos[v] = two.rank(b.two_tets[k], lab[u]) < two.rank(b.two_tets[k], lab[v]) ? *pos[u] * g : *pos[u] / g;
        }
  std::array<F, 5> out;
  for (int v = 0; v < 5; ++v) out[v] = *pos[v];
  return out;
}

/// Generator images on the after-spine induced by those on the before-spine.
/// The new central edge of a positive move gets the holonomy of the path
/// X -> Y through the 2-side.
template <class F>
std::vector<F> transport_images(const MoveInstance& m, const CellCorrespondence& c, const std::vector<F>& before) {
  const BranchedSpine& two = m.two_side();
  if (!m.positive) {
    std::vector<F> out(two.num_edges(), F(1));
    for (int e = 0; e < two.num_edges(); ++e) out[e] = before[c.edges[e]];
    return out;
  }
  const auto pos = bipyramid_positions(m, before);
  std::vector<F> out(m.after.num_edges(), F(1));
  for (int e = 0; e < two.num_edges(); ++e) out[c.edges[e]] = before[e];
  out[c.central_edge] = m.variant == 0 ? pos[kY] / pos[kX] : pos[kX] / pos[kY];
  return out;
}

/// f[i] : C_i(2-side) -> C_i(3-side).
template <class F>
struct ChainMap {
  std::array<Matrix<F>, 4> f;
};

/// Throws TransportFailure when the map does not commute with the boundaries.
template <class F>
ChainMap<F> chain_map(const MoveInstance& m, const CellCorrespondence& c, const SpiderAnchors& two_anchors,
                      const std::vector<F>& two_images, const TwistedComplex<F>& two, const TwistedComplex<F>& three) {
  const Bipyramid& b = m.bipyramid;
  const BranchedSpine& s2 = m.two_side();
  ChainMap<F> map;
  map.f[0] = Matrix<F>::identity(1);
  map.f[1] = Matrix<F>(three.dim(1), two.dim(1));
  for (int e = 0; e < two.dim(1); ++e) map.f[1](c.edges[e], e) = F(1);
  map.f[2] = Matrix<F>(three.dim(2), two.dim(2));
  for (int f = 0; f < two.dim(2); ++f)
    if (c.faces[f] >= 0) map.f[2](c.faces[f], f) = F(1);
  const int t1 = b.two_tets[0];
  const F inner = tet_face_coefficient(s2, two_anchors, two_images, t1, b.two_labels[0][kX]);
  for (int k = 0; k < 4; ++k) {
    if (k == b.two_labels[0][kX]) continue;
    const F ck = tet_face_coefficient(s2, two_anchors, two_images, t1, k);
    map.f[2](c.faces[s2.face_class(t1, k)], c.inner_face) -= ck / inner;
  }
  map.f[3] = Matrix<F>(three.dim(3), two.dim(3));
  for (int t = 0; t < two.dim(3); ++t)
    if (c.tets[t] >= 0) map.f[3](c.tets[t], t) = F(1);
  // PQRY goes to the lifted 3-side, each tetrahedron placed by its sink.
  const int t2 = b.two_tets[1];
  const auto pos = bipyramid_positions(m, two_images);
  auto sink_pos = [&](const BranchedSpine& sp, int t, const std::array<int, 5>& lab) {
    const int top = sp.vertex_of_rank(t, 3);
    for (int v = 0; v < 5; ++v)
      if (lab[v] == top) return pos[v];
    return F(1);
  };
  const F base = sink_pos(s2, t2, b.two_labels[1]);
  for (int k = 0; k < 3; ++k)
    map.f[3](b.three_tets[k], t2) = sink_pos(m.three_side(), b.three_tets[k], b.three_labels[k]) / base;
  for (int i = 1; i <= 3; ++i)
    if (!(map.f[i - 1] * two.boundary(i) == three.boundary(i) * map.f[i]))
      throw SpineError(ErrorCode::TransportFailure, "move chain map does not commute in degree " + std::to_string(i));
  return map;
}

/// Homology bases of the after-spine matching `h` on the before-spine, or
/// nothing when some class cannot be carried over.
template <class F>
std::optional<HomologyBases<F>> transport_bases(const MoveInstance& m, const ChainMap<F>& map,
                                                const TwistedComplex<F>& before, const TwistedComplex<F>& after,
                                                const HomologyBases<F>& h) {
  HomologyBases<F> out;
  for (int i = 0; i < 4; ++i) {
    for (const auto& v : h.basis[i]) {
      if (m.positive) {
        out.basis[i].push_back(map.f[i].apply(v));
        continue;
      }
      // Solve F x + D y = v with D x = 0, x on the 2-side (after).
      const Matrix<F> up = boundary_or_zero(before, i + 1), down = boundary_or_zero(after, i);
      const int nx = after.dim(i), ny = up.cols();
      Matrix<F> a(before.dim(i) + down.rows(), nx + ny);
      for (int r = 0; r < before.dim(i); ++r) {
        for (int k = 0; k < nx; ++k) a(r, k) = map.f[i](r, k);
        for (int k = 0; k < ny; ++k) a(r, nx + k) = up(r, k);
      }
      for (int r = 0; r < down.rows(); ++r)
        for (int k = 0; k < nx; ++k) a(before.dim(i) + r, k) = down(r, k);
      std::vector<F> rhs(a.rows(), F(0));
      for (int r = 0; r < before.dim(i); ++r) rhs[r] = v[r];
      auto x = solve(a, rhs);
      if (!x) return std::nullopt;
      out.basis[i].emplace_back(x->begin(), x->begin() + nx);
    }
    Matrix<F> stack = hstack<F>({boundary_or_zero(after, i + 1)}, after.dim(i));
    for (const auto& v : out.basis[i]) {
      Matrix<F> col(after.dim(i), 1);
      col.set_col(0, v);
      stack = hstack<F>({stack, col}, after.dim(i));
    }
    if (rank(stack) != rank(boundary_or_zero(after, i + 1)) + static_cast<int>(out.basis[i].size())) return std::nullopt;
  }
  return out;
}

struct InvarianceStep {
  MoveRecord move{true, 0, 0};
  std::string value;         // torsion up to sign after the move
  std::string sign_refined;  // empty when not checked
  bool acyclic = false;
  bool equal_up_to_sign = false;
  bool sign_refined_checked = false;
  bool sign_refined_equal = false;
  int chi_spine = 0;
  std::string note;  // transport problems
};

struct InvarianceReport {
  std::string representation;
  std::string field;
  std::string initial_value;
  std::string initial_sign_refined;
  bool initial_acyclic = false;
  int initial_chi_spine = 0;
  std::vector<InvarianceStep> steps;
  bool all_equal = true;
  int first_violation = -1;
  int sign_refined_checked = 0;
  bool sign_refined_all_equal = true;
  int transport_failures = 0;
};

/// Torsion at every step of `walk` under the representation named by `rep`
/// on `spine`, carried along the moves. Every move must have a null h-table.
InvarianceReport invariance_suite(const BranchedSpine& spine, const std::vector<MoveInstance>& walk,
                                  const RepSpec& rep);

}  // namespace spinetorsion
