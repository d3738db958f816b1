#pragma once

// Branched 2-3 and 3-2 moves, the h-cycle certificate, rigidity and seeded
// random walks.
//
// A move site is a bipyramid with equatorial corners P, Q, R and apexes X, Y.
// The 2-side holds the tetrahedra PQRX and PQRY, the 3-side holds XYQR, XYRP
// and XYPQ around the central edge XY.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinetorsion/io.hpp"
#include "spinetorsion/spine.hpp"

namespace spinetorsion {

enum BipyramidVertex { kP = 0, kQ = 1, kR = 2, kX = 3, kY = 4 };

struct Bipyramid {
  // Tetrahedron indices and, per tetrahedron, the corner label carrying each
  // bipyramid vertex (-1 when absent).
  std::array<int, 2> two_tets{};
  std::array<std::array<int, 5>, 2> two_labels{};
  std::array<int, 3> three_tets{};
  std::array<std::array<int, 5>, 3> three_labels{};
  // 2-side tetrahedron index -> 3-side index for tetrahedra off the site.
  std::vector<int> tet_map;
  // Names a..e: a/c tail/head of the central edge, b/e/d source/middle/sink
  // of the equatorial triangle.
  std::array<char, 5> letters{};
};

struct MoveInstance {
  bool positive = true;
  int site = 0;     // face class (positive) or edge class (negative) of `before`
  int variant = 0;  // positive: 0 for X -> Y, 1 for Y -> X
  BranchedSpine before;
  BranchedSpine after;
  Bipyramid bipyramid;

  const BranchedSpine& two_side() const { return positive ? before : after; }
  const BranchedSpine& three_side() const { return positive ? after : before; }
  MoveRecord record() const { return {positive, site, variant}; }
};

/// Every valid branched 2-3 move at a face class (zero, one or two results,
/// ordered by variant). Throws SelfAdjacentFace or ResultNonStandard.
std::vector<MoveInstance> apply_positive(const BranchedSpine& spine, int face_class);

/// The 3-2 move removing an edge class of valence three. Throws
/// NotApplicable or ResultNonStandard.
MoveInstance apply_negative(const BranchedSpine& spine, int edge_class);

/// Replays one logged move.
MoveInstance apply_record(const BranchedSpine& spine, const MoveRecord& rec);

struct HCycleRow {
  std::string simplex;  // "v", "va", ..., "vcdb"
  int epsilon = 1;      // (-1)^dim
  char end0 = 0;        // flow target before the move
  char end1 = 0;        // flow target after the move
  std::string boundary; // epsilon * (end0 - end1), "0" when they agree
};

struct HCycleReport {
  std::vector<HCycleRow> rows;     // 21 rows
  std::map<char, int> total;       // formal sum over a..e, zero entries dropped
  bool is_null = true;
  // H1 class of the lifted cycle in the coordinates of the before-spine.
  std::vector<mpz_class> h_free;
  std::vector<mpz_class> h_torsion;
};

HCycleReport h_cycle_check(const MoveInstance& m);

/// True when no branched 2-3 move applies anywhere.
bool is_rigid(const BranchedSpine& spine);

/// Seeded walk of `steps` moves. Positive moves are skipped once the spine
/// has `max_tets` tetrahedra. Throws Stuck when no admissible move remains.
std::vector<MoveInstance> random_walk(const BranchedSpine& spine, int steps, std::uint64_t seed, bool h_null_only,
                                      int max_tets = 6);

}  // namespace spinetorsion
