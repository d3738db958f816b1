#pragma once

// The one-vertex CW complex X(P), its fundamental group presentation, the
// spider anchors and twisted chain complexes.
//
// Cells: one 1-cell per edge class (oriented by the branching), one 2-cell
// per face class (oriented by the rank order of its corners), one 3-cell per
// tetrahedron (oriented by the ambient orientation).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinetorsion/cyclotomic.hpp"
#include "spinetorsion/matrix.hpp"
#include "spinetorsion/rational.hpp"
#include "spinetorsion/ratfunc.hpp"
#include "spinetorsion/smith.hpp"
#include "spinetorsion/spine.hpp"

namespace spinetorsion {

/// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);
/// Exponent sum per generator.
std::vector<long> abelianize(const Word& w, int generators);
std::string word_string(const Word& w);

struct CellComplexX {
  int edges = 0;  // E
  int faces = 0;  // F = 2V
  int tets = 0;   // V
  IntMatrix d1;   // 1 x E
  IntMatrix d2;   // E x F
  IntMatrix d3;   // F x V
};

CellComplexX build_complex(const BranchedSpine& spine);

/// Ranks of H_0..H_3 of X with rational coefficients.
std::array<int, 4> rational_betti(const CellComplexX& x);

struct GroupData {
  int generators = 0;
  std::vector<Word> relators;  // one per face class
  SmithForm smith;             // of d2
  AbelianGroup h1;
  // Coordinates of each generator in H1 = Z^r + sum Z/d_i.
  std::vector<std::vector<mpz_class>> free_coords;     // [gen][0..r)
  std::vector<std::vector<mpz_class>> torsion_coords;  // [gen][i], reduced mod d_i
  std::vector<int> torsion_rows;                       // Smith rows carrying torsion
};

GroupData presentation(const CellComplexX& x, const BranchedSpine& spine);

/// H1 coordinates (free part, torsion part) of an integer 1-chain.
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> h1_class(const GroupData& g,
                                                                   const std::vector<long>& chain);

struct SpiderAnchors {
  // Anchor words of the preferred lifts. With sink anchoring they are all
  // empty; kept explicit so the data can be inspected.
  Word vertex;
  std::vector<Word> edges, faces, tets;
  // Corner words: lift of a corner = word * base lift, for the preferred lift
  // of the simplex. Indexed by rank.
  std::vector<std::array<Word, 3>> face_corners;
  std::vector<std::array<Word, 4>> tet_corners;
  // epsilon(c) = (-1)^dim of the dual cell of P, indexed by dimension of the
  // X-cell: edges of X are regions (+1), faces are spine edges (-1), tets
  // are spine vertices (+1).
  std::array<int, 4> epsilon{0, 1, -1, 1};
  int num_edges = 0, num_faces = 0, num_tets = 0;

  /// Coefficient of x0 in the boundary of the signed spider; equals 1 - chi(X).
  int spider_boundary_coefficient() const;
};

/// Throws InconsistentAnchor when two edge paths inside a simplex disagree.
SpiderAnchors spider_anchors(const BranchedSpine& spine, const CellComplexX& x, const GroupData& g);

/// Word of the edge path through the given (increasing) ranks of tetrahedron t.
Word tet_path_word(const BranchedSpine& spine, int tet, const std::vector<int>& ranks);

/// Shortens a monotone rank path inside tetrahedron t to its endpoints using
/// the relators of the face classes met on the way; throws InconsistentAnchor
/// if a face of t does not carry the relation g_xy g_yz = g_xz.
std::vector<int> reduce_tet_path(const BranchedSpine& spine, const GroupData& g, int tet,
                                 std::vector<int> ranks);

struct Representation {
  enum class Kind { Trivial, FreeAbelian, Cyclic };
  Kind kind = Kind::Trivial;
  int variables = 0;                       // free-abelian: rank of H1
  int order = 1;                           // cyclic: n
  std::vector<std::vector<int>> exponents; // free-abelian: per generator
  std::vector<long> powers;                // cyclic: per generator, mod n
  bool surjective = true;
  bool factors_through = true;

  std::string describe() const;
};

Representation trivial_representation(const GroupData& g);
Representation free_abelian_representation(const GroupData& g);
/// Cyclic representation; without `character` a character through H1 is
/// chosen (free part first, then the torsion factor sharing most with n).
Representation cyclic_representation(const GroupData& g, int n,
                                     const std::optional<std::vector<long>>& character = std::nullopt);

template <class F>
std::vector<F> generator_images(const Representation& rep, int generators) {
  std::vector<F> out;
  out.reserve(generators);
  for (int e = 0; e < generators; ++e) {
    if constexpr (std::is_same_v<F, RatFunc>) {
      out.push_back(rep.kind == Representation::Kind::FreeAbelian
                        ? RatFunc::laurent_monomial(rep.exponents[e])
                        : RatFunc(1));
    } else if constexpr (std::is_same_v<F, Cyclotomic>) {
      out.push_back(rep.kind == Representation::Kind::Cyclic ? Cyclotomic::zeta_power(rep.order, rep.powers[e])
                                                             : Cyclotomic(1));
    } else {
      out.push_back(F(1));
    }
  }
  return out;
}

template <class F>
F word_image(const Word& w, const std::vector<F>& images) {
  F r(1);
  for (int l : w) r = l > 0 ? r * images[l - 1] : r / images[-l - 1];
  return r;
}

template <class F>
struct TwistedComplex {
  Matrix<F> d1;  // 1 x E
  Matrix<F> d2;  // E x F
  Matrix<F> d3;  // F x V

  const Matrix<F>& boundary(int i) const { return i == 1 ? d1 : i == 2 ? d2 : d3; }
  int dim(int i) const { return i == 0 ? 1 : i == 1 ? d1.cols() : i == 2 ? d2.cols() : d3.cols(); }
};

template <class F>
TwistedComplex<F> twisted_complex(const BranchedSpine& spine, const SpiderAnchors& anchors,
                                  const std::vector<F>& images) {
  const int E = spine.num_edges(), Fc = spine.num_faces(), V = spine.num_tets();
  TwistedComplex<F> tc{Matrix<F>(1, E), Matrix<F>(E, Fc), Matrix<F>(Fc, V)};
  for (int e = 0; e < E; ++e) tc.d1(0, e) = F(1) - F(1) / images[e];
  for (int f = 0; f < Fc; ++f) {
    auto [e01, e12, e02] = spine.face_edges(f);
    tc.d2(e12, f) += F(1);
    tc.d2(e02, f) -= F(1);
    tc.d2(e01, f) += word_image(anchors.face_corners[f][1], images);
  }
  for (int t = 0; t < V; ++t) {
    const int s = spine.ranked_orientation(t);
    for (int i = 0; i < 4; ++i) {
      const int face = spine.face_class(t, spine.vertex_of_rank(t, i));
      const int sink_rank = i == 3 ? 2 : 3;
      F coeff = word_image(anchors.tet_corners[t][sink_rank], images);
      if ((i % 2 == 0) == (s > 0)) tc.d3(face, t) += coeff;
      else tc.d3(face, t) -= coeff;
    }
  }
  return tc;
}

template <class F>
Matrix<F> to_field(const IntMatrix& m, int rows, int cols) {
  Matrix<F> r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (m[i][j] != 0) r(i, j) = F(m[i][j].get_si());
  return r;
}

/// Reorders cells: new cell k of dimension i is old cell order[i][k].
template <class F>
TwistedComplex<F> permute_cells(const TwistedComplex<F>& tc, const std::array<std::vector<int>, 4>& order) {
  auto perm = [](const Matrix<F>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix<F> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = m(rows[i], cols[j]);
    return r;
  };
  return {perm(tc.d1, order[0], order[1]), perm(tc.d2, order[1], order[2]), perm(tc.d3, order[2], order[3])};
}

}  // namespace spinetorsion
