#pragma once

// Ideal triangulations with branchings, viewed as branched standard spines.
//
// Duality used throughout: spine vertices are tetrahedra, spine edges are
// face classes and spine regions are edge classes of the triangulation.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinetorsion/errors.hpp"
#include "spinetorsion/perm.hpp"

namespace spinetorsion {

/// Face f of tetrahedron `tet` is glued to face `face` of tetrahedron `tet`
/// through `perm`, which sends corner labels of the source tetrahedron to
/// corner labels of the target (perm[f] == face).
struct Gluing {
  int tet = -1;
  int face = -1;
  Perm4 perm;

  bool operator==(const Gluing&) const = default;
};

class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings)
      : gluings_(std::move(gluings)) {}

  int size() const { return static_cast<int>(gluings_.size()); }
  const Gluing& gluing(int tet, int face) const { return gluings_[tet][face]; }
  const std::vector<std::array<Gluing, 4>>& gluings() const { return gluings_; }

  bool operator==(const Triangulation&) const = default;

 private:
  std::vector<std::array<Gluing, 4>> gluings_;
};

/// One occurrence of an edge class inside a tetrahedron; `a`,`b` are corner
/// labels listed in the orientation of the class representative.
struct EdgeInstance {
  int tet;
  int a;
  int b;
};

struct FaceSide {
  int tet;
  int face;
};

/// Class tables derived from the gluings.
struct Skeleton {
  // edge_class[t][e] for e indexing kTetEdges
  std::vector<std::array<int, 6>> edge_class;
  // true when the tet edge (lower label -> higher label) agrees with the class representative
  std::vector<std::array<bool, 6>> edge_agrees;
  std::vector<std::vector<EdgeInstance>> edges;

  std::vector<std::array<int, 4>> face_class;
  std::vector<std::array<FaceSide, 2>> faces;

  std::vector<std::array<int, 4>> vertex_class;
  std::vector<std::vector<FaceSide>> vertices;  // (tet, corner) pairs

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
};

/// Unvalidated spine data, as read from a file or produced by a construction.
struct RawSpine {
  struct GluingLine {
    int tet, face, other_tet, other_face;
    Perm4 perm;
    int line = 0;
  };
  int tets = 0;
  std::vector<GluingLine> gluings;  // each glued pair listed once
  // Branching as one directed tetrahedron edge (tet, from, to) per edge class.
  std::vector<std::array<int, 3>> branching;
  std::optional<std::vector<int>> orientation;  // +1 / -1 per tetrahedron
};

/// Per edge class: true when the branching direction agrees with the
/// representative instance of the class.
using Branching = std::vector<bool>;

/// A triangulation that passed the gluing, connectivity, orientability and
/// standardness checks, but carries no branching yet.
class ValidTriangulation {
 public:
  ValidTriangulation(Triangulation tri, std::optional<std::vector<int>> orientation);

  const Triangulation& triangulation() const { return tri_; }
  const Skeleton& skeleton() const { return skel_; }
  const std::vector<int>& orientation() const { return orientation_; }
  int size() const { return tri_.size(); }

  /// Direction of the tet edge a->b under a branching.
  bool edge_points(const Branching& br, int tet, int a, int b) const;

  /// True when no triangle is cyclically oriented under `br`.
  bool is_branching(const Branching& br) const;

 private:
  Triangulation tri_;
  Skeleton skel_;
  std::vector<int> orientation_;
};

class BranchedSpine {
 public:
  BranchedSpine(ValidTriangulation tri, Branching branching);

  const ValidTriangulation& valid() const { return tri_; }
  const Triangulation& triangulation() const { return tri_.triangulation(); }
  const Skeleton& skeleton() const { return tri_.skeleton(); }
  const Branching& branching() const { return branching_; }

  int num_tets() const { return tri_.size(); }        // V
  int num_faces() const { return skeleton().num_faces(); }   // F = 2V
  int num_edges() const { return skeleton().num_edges(); }   // E

  /// Orientation bit of tetrahedron t relative to its corner labelling.
  int orientation(int t) const { return tri_.orientation()[t]; }

  /// Position of corner v in the branching order of tetrahedron t (0 = source, 3 = sink).
  int rank(int t, int v) const { return rank_[t][v]; }
  int vertex_of_rank(int t, int k) const { return by_rank_[t][k]; }

  /// +1 when the rank-ordered corner tuple is positively oriented.
  int ranked_orientation(int t) const;

  bool edge_points(int tet, int a, int b) const { return rank_[tet][a] < rank_[tet][b]; }
  int edge_class(int tet, int a, int b) const {
    return skeleton().edge_class[tet][tet_edge_index(a, b)];
  }
  int face_class(int tet, int face) const { return skeleton().face_class[tet][face]; }

  /// Corner labels of face class f in branching order (tail .. sink), read in
  /// the first side of the class.
  std::array<int, 3> face_corners_ranked(int face_class) const;

  /// Edge classes of face class f as (w0w1, w1w2, w0w2).
  std::array<int, 3> face_edges(int face_class) const;

  RawSpine to_raw() const;

 private:
  ValidTriangulation tri_;
  Branching branching_;
  std::vector<std::array<int, 4>> rank_;
  std::vector<std::array<int, 4>> by_rank_;
};

// --- operations ---------------------------------------------------------

/// Builds the gluing table from raw lines; throws UnpairedFace on bad pairings.
Triangulation build_triangulation(const RawSpine& raw);

/// Full validation of a raw description.
BranchedSpine validate(const RawSpine& raw);

/// Constructs a spine from per-tetrahedron branching ranks (rank[t][v]).
BranchedSpine spine_from_ranks(const Triangulation& tri, const std::vector<int>& orientation,
                               const std::vector<std::array<int, 4>>& ranks);

/// All branchings of a triangulation, in lexicographic order of the per-class
/// choice (forward before backward).
std::vector<Branching> enumerate_branchings(const ValidTriangulation& tri);

struct SourceSink {
  int source;
  int sink;
};

/// Source and sink corners of tetrahedron t.
SourceSink sink_source_tet(const BranchedSpine& spine, int tet);
/// Source and sink corners (labels of `tet`) of face `face` of tetrahedron `tet`.
SourceSink sink_source_face(const BranchedSpine& spine, int tet, int face);

struct BoundaryComponent {
  int vertex_class;
  int euler_characteristic;
  int genus;
};

struct BoundaryReport {
  std::vector<BoundaryComponent> components;
  int total_euler_characteristic() const;
};

BoundaryReport boundary_components(const BranchedSpine& spine);

struct EulerCharacteristics {
  int spine;    // chi(P) = E - V
  int complex;  // chi(X(P)) = 1 - chi(P)
};

EulerCharacteristics euler_characteristics(const BranchedSpine& spine);

/// Isomorphism invariant: lexicographically least breadth-first encoding over
/// all start tetrahedra, with corners labelled by branching rank.
std::vector<int> canonical_form(const BranchedSpine& spine);

inline bool isomorphic(const BranchedSpine& a, const BranchedSpine& b) {
  return a.num_tets() == b.num_tets() && canonical_form(a) == canonical_form(b);
}

}  // namespace spinetorsion
